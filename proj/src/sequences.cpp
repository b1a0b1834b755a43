#include "samuel/sequences.hpp"

#include <map>
#include <random>

#include "samuel/errors.hpp"

namespace samuel {

namespace {

std::vector<std::string> element_strings(const std::vector<RingElement>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

QuotientIdeal prefix_ideal(const LocalRingPtr& ring, const std::vector<RingElement>& xs, std::size_t count) {
  return ring->ideal(std::span<const RingElement>(xs.data(), count));
}

void record(SequenceReport& report, ConditionCheck check, int index) {
  if (!check.passed && !report.failing_index) report.failing_index = index;
  report.conditions.push_back(std::move(check));
}

void finish(SequenceReport& report) {
  report.verdict = true;
  for (const auto& c : report.conditions) report.verdict = report.verdict && c.passed;
}

}  // namespace

const ConditionCheck* SequenceReport::first_failure() const {
  for (const auto& c : conditions)
    if (!c.passed) return &c;
  return nullptr;
}

nlohmann::ordered_json SequenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["elements"] = elements;
  j["verdict"] = verdict;
  j["failing_index"] = failing_index ? nlohmann::ordered_json(*failing_index) : nlohmann::ordered_json(nullptr);
  if (certificate_c || c_window > 0) {
    j["certificate_c"] = certificate_c ? nlohmann::ordered_json(*certificate_c) : nlohmann::ordered_json(nullptr);
    j["c_window"] = c_window;
    j["n_max"] = n_max;
  }
  auto& conds = j["conditions"] = nlohmann::ordered_json::array();
  for (const auto& c : conditions) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.passed && !c.witness.empty()) cj["witness"] = c.witness;
    conds.push_back(std::move(cj));
  }
  return j;
}

SequenceReport is_regular_sequence(const std::vector<RingElement>& xs) {
  SequenceReport report;
  report.elements = element_strings(xs);
  if (xs.empty()) {
    report.verdict = true;
    return report;
  }
  const LocalRingPtr& ring = xs.front().ring();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QuotientIdeal previous = prefix_ideal(ring, xs, i);
    std::string name = "regular " + std::to_string(i + 1);
    if (xs[i].is_zero()) {
      record(report, {name, false, {"element is zero"}}, static_cast<int>(i) + 1);
      continue;
    }
    QuotientIdeal colon = ideal_colon(previous, xs[i]);
    bool ok = ideal_equal(colon, previous);
    record(report, {name, ok, {colon.to_string(), previous.to_string()}}, static_cast<int>(i) + 1);
  }
  QuotientIdeal all = prefix_ideal(ring, xs, xs.size());
  record(report, {"proper", !all.is_unit(), {all.to_string()}}, static_cast<int>(xs.size()));
  finish(report);
  return report;
}

SequenceReport is_d_sequence(const std::vector<RingElement>& xs) {
  SequenceReport report;
  report.elements = element_strings(xs);
  if (xs.empty()) throw InvalidArgument("d-sequence test needs at least one element");
  const LocalRingPtr& ring = xs.front().ring();
  const std::size_t r = xs.size();

  for (std::size_t i = 0; i < r; ++i) {
    std::vector<RingElement> others;
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others.push_back(xs[j]);
    QuotientIdeal rest = ring->ideal(std::span<const RingElement>(others));
    bool ok = !rest.contains(xs[i]);
    record(report, {"(i) x" + std::to_string(i + 1) + " not in the others", ok, {xs[i].to_string(), rest.to_string()}},
           static_cast<int>(i) + 1);
  }

  // Colons (x_1..x_i : f) for the same base are reused across j.
  for (std::size_t i = 0; i < r; ++i) {
    QuotientIdeal base = prefix_ideal(ring, xs, i);
    for (std::size_t j = i + 1; j <= r; ++j) {
      const RingElement& xj = xs[j - 1];
      QuotientIdeal lhs = ideal_colon(base, xs[i] * xj);
      QuotientIdeal rhs = ideal_colon(base, xj);
      bool ok = ideal_equal(lhs, rhs);
      std::string name = "(ii) i=" + std::to_string(i) + " j=" + std::to_string(j);
      record(report, {name, ok, {lhs.to_string(), rhs.to_string()}}, static_cast<int>(j));
    }
  }
  finish(report);
  return report;
}

SequenceReport is_superficial(const QuotientIdeal& Q, const RingElement& x, SuperficialOptions options) {
  SequenceReport report;
  report.elements = {x.to_string()};
  report.c_window = options.c_window;
  report.n_max = options.n_max;
  if (!Q.contains(x)) {
    record(report, {"x in Q", false, {x.to_string(), Q.to_string()}}, 1);
    finish(report);
    return report;
  }

  QuotientPowerCache powers(Q);
  std::map<int, QuotientIdeal> colons;
  auto colon = [&](int n) -> const QuotientIdeal& {
    auto it = colons.find(n);
    if (it == colons.end()) it = colons.emplace(n, ideal_colon(powers.power(n + 1), x)).first;
    return it->second;
  };

  // Q^n is always inside (Q^{n+1} : x) meet Q^c for n >= c, so only the
  // reverse inclusion needs checking.
  ConditionCheck last_failure;
  for (int c = 1; c <= options.c_window && !report.certificate_c; ++c) {
    bool ok = true;
    for (int n = c; n <= options.n_max && ok; ++n) {
      QuotientIdeal meet = ideal_intersection(colon(n), powers.power(c));
      if (!powers.power(n).contains(meet)) {
        ok = false;
        last_failure = {"window c=" + std::to_string(c) + " fails at n=" + std::to_string(n), false,
                        {meet.to_string(), powers.power(n).to_string()}};
      }
    }
    if (ok) report.certificate_c = c;
  }
  if (report.certificate_c)
    record(report, {"window c=" + std::to_string(*report.certificate_c), true, {}}, 1);
  else
    record(report, last_failure, 1);
  finish(report);
  return report;
}

std::vector<RingElement> superficial_sequence_search(const QuotientIdeal& Q, int k, int attempts, std::uint64_t seed,
                                                     SuperficialOptions options) {
  const LocalRingPtr& ring = Q.ring();
  if (k < 0 || k > ring->dimension())
    throw InvalidArgument("k = " + std::to_string(k) + " must lie in [0, dim R]");
  std::vector<RingElement> chosen;
  if (k == 0) return chosen;
  const auto& gens = Q.generators();
  if (gens.empty()) throw InvalidArgument("Q has no generators");

  std::mt19937_64 rng(seed);
  const RingPtr& S = ring->ambient();
  for (int step = 0; step < k; ++step) {
    LocalRingPtr quotient = ring->quotient(chosen);
    QuotientIdeal Qbar = quotient->ideal(gens);
    bool found = false;
    for (int attempt = 0; attempt < attempts && !found; ++attempt) {
      const std::uint64_t width = attempt < (attempts + 1) / 2 ? 11 : 101;
      const long offset = static_cast<long>(width / 2);
      Polynomial combo(S);
      for (const auto& g : gens) {
        long a = static_cast<long>(rng() % width) - offset;
        if (a != 0) combo = combo + g.scale(S->field().from_int(a));
      }
      if (combo.is_zero()) continue;
      if (is_superficial(Qbar, quotient->element(combo), options).verdict) {
        chosen.push_back(ring->element(combo));
        found = true;
      }
    }
    if (!found)
      throw SearchExhausted("no superficial element found for position " + std::to_string(step + 1) + " after " +
                            std::to_string(attempts) + " attempts");
  }
  return chosen;
}

}  // namespace samuel
