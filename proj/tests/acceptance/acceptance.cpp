// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "samuel/errors.hpp"
#include "samuel/theorem_lab.hpp"

using namespace samuel;

namespace {

LocalRingPtr make_ring(std::vector<std::string> vars, std::vector<std::string> relations) {
  auto ambient = PolyRing::make(std::move(vars));
  std::vector<Polynomial> rel;
  for (const auto& r : relations) rel.push_back(parse_polynomial(r, ambient));
  return LocalRing::make(ambient, std::move(rel));
}

std::vector<RingElement> elems(const LocalRingPtr& R, std::vector<std::string> gens) {
  std::vector<RingElement> out;
  for (const auto& s : gens) out.push_back(R->parse_element(s));
  return out;
}

QuotientIdeal ideal_of(const LocalRingPtr& R, const std::vector<RingElement>& gens) {
  return R->ideal(std::span<const RingElement>(gens));
}

long choose(long a, long m) {
  if (m < 0 || a < m) return 0;
  long r = 1;
  for (long i = 1; i <= m; ++i) r = r * (a - m + i) / i;
  return r;
}

std::string list(const std::vector<long>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  return "(" + s.str() + ")";
}

struct Result {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

// ---------------------------------------------------------------------------

Result regular_ring() {
  Result r;
  auto R = make_ring({"x", "y", "z"}, {});
  auto table = hilbert_samuel_table(R->maximal_ideal(), 12);
  for (int n = 0; n <= 12; ++n)
    r.require(table.values[static_cast<std::size_t>(n)] == choose(n + 2, 3), "H(" + std::to_string(n) + ")");
  auto c = fit_coefficients(table, 3);
  r.require(c.e == std::vector<long>{1, 0, 0, 0}, "e = " + list(c.e));
  r.require(c.eta < 0, "eta = " + std::to_string(c.eta));
  if (r.pass) r.detail = "e = " + list(c.e) + ", eta = " + std::to_string(c.eta);
  return r;
}

Result depth_one_example() {
  Result r;
  auto R = make_ring({"x", "y", "z", "w"}, {"x*y^3", "x*z", "x*w"});
  auto Q = ideal_of(R, elems(R, {"x - y", "x - z", "x - w"}));
  auto c = fit_coefficients(hilbert_samuel_table(Q, 10, {40}), 3);
  r.require(c.e == std::vector<long>{1, 0, 3, 3}, "e = " + list(c.e));
  if (r.pass) r.detail = "e = " + list(c.e);
  return r;
}

Result cubic_series() {
  Result r;
  auto R = make_ring({"x", "y"}, {"y^3"});
  auto table = hilbert_samuel_table(R->maximal_ideal(), 12);
  auto s = graded_series(table);
  auto c = fit_coefficients(table, 1);
  r.require(s.closed_form() == "(1 + t + t^2)/(1 - t)", "series = " + s.closed_form());
  r.require(c.e == std::vector<long>{3, 3}, "e = " + list(c.e));
  if (r.pass) r.detail = s.closed_form() + ", e = " + list(c.e);
  return r;
}

Result idealization() {
  Result r;
  for (auto [d, t] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}}) {
    std::vector<std::string> vars;
    for (int i = 1; i <= d; ++i) vars.push_back("x" + std::to_string(i));
    auto R = make_ring(vars, {});
    std::vector<Polynomial> p, q;
    for (int i = 0; i < d; ++i) {
      auto g = parse_polynomial(vars[static_cast<std::size_t>(i)], R->ambient());
      q.push_back(g);
      if (i < d - t) p.push_back(g);
    }
    auto report = idealization_cross_check(R, p, q, 2 * d + 4);
    const Claim& c = report.claims.at(0);
    const auto& e = report.coefficients->e;
    std::string tag = "d=" + std::to_string(d) + " t=" + std::to_string(t);
    r.require(c.verdict == Verdict::Verified, tag + " fit differs from closed form");
    if (d == 4) r.require(e[2] == 1, tag + " e_2 = " + std::to_string(e[2]));
    if (d == 5) {
      r.require(e[3] == -1, tag + " e_3 = " + std::to_string(e[3]));
      r.require(c.values["lower_bound"] == 0, tag + " lower bound not 0");
    }
    r.detail += (r.detail.empty() ? "" : "; ") + tag + " e = " + list(e);
  }
  return r;
}

Result colon_cross_validation() {
  Result r;
  struct Case {
    std::string name;
    LocalRingPtr R;
    std::vector<std::string> ys;
  };
  std::vector<Case> cases{
      {"two_planes", make_ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"}), {"x - u", "y - v"}},
      {"regular3", make_ring({"x", "y", "z"}, {}), {"x", "y", "z"}},
      {"quadric", make_ring({"x", "y", "z"}, {"x*y - z^2"}), {"x", "y"}},
  };
  for (const auto& c : cases) {
    auto ys = elems(c.R, c.ys);
    auto Q = ideal_of(c.R, ys);
    const int d = c.R->dimension();
    auto fit = fit_coefficients(hilbert_samuel_table(Q, 12), d);
    auto formula = ed_colon_formula(Q, ys);
    r.require(formula.unmet.empty(), c.name + " hypotheses unmet");
    r.require(formula.value == fit.e[static_cast<std::size_t>(d)],
              c.name + " formula " + std::to_string(formula.value) + " vs e_d " +
                  std::to_string(fit.e[static_cast<std::size_t>(d)]));
    if (c.name == "two_planes") {
      long surrogate = lower_bound_surrogate(c.R, ys);
      r.require(surrogate == -1, "surrogate = " + std::to_string(surrogate));
      r.require(fit.e[2] >= -1 && fit.e[2] <= 0, "e_2 = " + std::to_string(fit.e[2]));
      r.detail += "two_planes e_2 = " + std::to_string(fit.e[2]) + " = formula, surrogate -1";
    } else {
      r.require(formula.value == 0, c.name + " nonzero");
    }
  }
  if (r.pass) r.detail += "; CM instances 0";
  return r;
}

Result e2_matrix(const CorpusReport& corpus) {
  Result r;
  int checked = 0;
  for (const auto& inst : corpus.instances) {
    r.require(!inst.error_kind, inst.name + " errored");
    for (const char* id : {"e2-equivalence", "e2-vanishing-chain"}) {
      const Claim* c = inst.find(id);
      if (!c || c->verdict == Verdict::Skipped) continue;
      if (std::string(id) == "e2-equivalence") ++checked;
      r.require(c->verdict != Verdict::Failure, inst.name + " " + id);
    }
  }
  r.require(checked >= 3, "only " + std::to_string(checked) + " instances had certified hypotheses");
  if (r.pass) r.detail = std::to_string(checked) + " certified instances, 0 disagreements";
  return r;
}

Result bound_suite(const CorpusReport& corpus) {
  Result r;
  int asserted = 0;
  for (const auto& inst : corpus.instances) {
    const bool declared = inst.depth_class && *inst.depth_class != DepthClass::Lower;
    for (const char* id : {"e1-nonpositive", "e2-nonpositive", "e3-nonpositive"}) {
      const Claim* c = inst.find(id);
      if (!c) continue;
      if (declared) {
        r.require(c->verdict == Verdict::Verified, inst.name + " " + id + " " + to_string(c->verdict));
        ++asserted;
      } else {
        r.require(c->verdict == Verdict::Skipped, inst.name + " " + id + " not skipped");
      }
    }
    if (inst.name == "example_depth1") {
      const Claim* e3 = inst.find("e3-nonpositive");
      r.require(e3 && e3->verdict == Verdict::Skipped && e3->values["e3"] == 3, "depth-one e_3 not recorded as 3");
    }
  }
  if (r.pass) r.detail = std::to_string(asserted) + " bounds asserted, depth-one ring skipped with e_3 = 3";
  return r;
}

// Counts exponent vectors below the pure-power box that no generator divides.
std::size_t lattice_count(const std::vector<std::vector<unsigned>>& gens, const std::vector<unsigned>& box) {
  std::size_t count = 0;
  std::vector<unsigned> a(box.size(), 0);
  while (true) {
    bool outside = true;
    for (const auto& g : gens) {
      bool divides = true;
      for (std::size_t i = 0; i < a.size(); ++i) divides = divides && g[i] <= a[i];
      if (divides) {
        outside = false;
        break;
      }
    }
    if (outside) ++count;
    std::size_t i = 0;
    while (i < a.size() && ++a[i] == box[i]) a[i++] = 0;
    if (i == a.size()) break;
  }
  return count;
}

Result engine_oracles() {
  Result r;
  std::mt19937_64 rng(20261015);
  int agree = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
    auto S = PolyRing::make(names);
    std::vector<std::vector<unsigned>> exps;
    std::vector<unsigned> box(n);
    for (std::size_t i = 0; i < n; ++i) {
      box[i] = 1 + static_cast<unsigned>(rng() % 6);
      std::vector<unsigned> e(n, 0);
      e[i] = box[i];
      exps.push_back(e);
    }
    const int extra = static_cast<int>(rng() % 5);
    for (int k = 0; k < extra; ++k) {
      std::vector<unsigned> e(n);
      for (auto& v : e) v = static_cast<unsigned>(rng() % 4);
      exps.push_back(e);
    }
    std::vector<Polynomial> gens;
    for (const auto& e : exps) {
      std::string s = "1";
      for (std::size_t i = 0; i < n; ++i)
        if (e[i]) s += "*" + names[i] + "^" + std::to_string(e[i]);
      gens.push_back(parse_polynomial(s, S));
    }
    if (colength(Ideal(S, gens)) == lattice_count(exps, box)) ++agree;
  }
  r.require(agree == 50, std::to_string(agree) + "/50 colengths agree");

  auto R = make_ring({"x", "y", "z", "w"}, {"x*y^3", "x*z", "x*w"});
  std::vector<Polynomial> gens;
  for (const char* g : {"x^2 - y*z + 3*w", "y^2*z - x*w^2", "x*y*z - w^3 + y"})
    gens.push_back(parse_polynomial(g, R->ambient()));
  auto dump = [&] {
    std::string s;
    for (const auto& g : buchberger(gens)) s += g.to_string() + "\n";
    return s;
  };
  r.require(dump() == dump(), "Groebner basis differs between runs");

  auto S3 = make_ring({"x", "y", "z"}, {});
  auto I = ideal_power(S3->maximal_ideal(), 2);
  auto J = ideal_of(S3, elems(S3, {"x^2", "y^2", "z^2"}));
  r.require(ideal_equal(ideal_power(I, 3), ideal_product(J, ideal_power(I, 2))), "I^3 != J I^2");
  // every degree-4 monomial in three variables has a square factor, so I^2 = J I already
  r.require(ideal_equal(ideal_power(I, 2), ideal_product(J, I)), "I^2 != J I");
  r.require(reduction_number(I, J, 6) == 1, "reduction number != 1");
  if (r.pass) r.detail = "50/50 colengths, deterministic GB, I^3 = J I^2 with r_J(I) = 1";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Result()> run;
  };

  std::optional<CorpusReport> corpus;
  // Shared by criteria 6 and 7; its time is charged to criterion 6.
  auto builtin = [&]() -> const CorpusReport& {
    if (!corpus) corpus = run_corpus(builtin_corpus());
    return *corpus;
  };

  std::vector<Criterion> criteria{
      {1, "regular-ring oracle", 10, regular_ring},
      {2, "depth-one example e = (1,0,3,3)", 300, depth_one_example},
      {3, "cubic Hilbert series", 10, cubic_series},
      {4, "idealization formula", 600, idealization},
      {5, "colon formula cross-validation", 300, colon_cross_validation},
      {6, "e_2 equivalence matrix", 600, [&] { return e2_matrix(builtin()); }},
      {7, "bound suite", 600, [&] { return bound_suite(builtin()); }},
      {8, "engine oracles", 120, engine_oracles},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) {
      r.pass = false;
      r.detail += "; over budget";
    }
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.title << "  (" << std::fixed
              << std::setprecision(2) << s << " s)  " << r.detail << "\n";
  }
  return failed ? 1 : 0;
}
