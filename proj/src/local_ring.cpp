#include "samuel/local_ring.hpp"

#include <algorithm>

#include "samuel/errors.hpp"

namespace samuel {

namespace {

void check_same_ring(const LocalRingPtr& a, const LocalRingPtr& b) {
  if (a != b) throw InvalidArgument("ideals or elements of different local rings");
}

std::vector<Polynomial> normalize_generators(const Ideal& defining, const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    Polynomial r = defining.normal_form(g);
    if (r.is_zero()) continue;
    r = r.monic();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

LocalRingPtr LocalRing::make(RingPtr ambient, std::vector<Polynomial> relations) {
  for (const auto& r : relations) {
    if (r.ring() != ambient && !r.ring()->same_as(*ambient)) throw ArityMismatch("relation not in the ambient ring");
    if (r.constant_term() != 0)
      throw InvalidArgument("relation " + r.to_string() + " does not vanish at the origin");
  }
  Ideal defining(ambient, std::move(relations));
  int dim = krull_dimension(defining);
  return LocalRingPtr(new LocalRing(std::move(ambient), std::move(defining), dim));
}

RingElement LocalRing::element(const Polynomial& f) const { return RingElement(shared_from_this(), f); }

RingElement LocalRing::parse_element(std::string_view text) const { return element(parse_polynomial(text, ambient_)); }

QuotientIdeal LocalRing::ideal(std::vector<Polynomial> generators) const {
  return QuotientIdeal(shared_from_this(), std::move(generators));
}

QuotientIdeal LocalRing::ideal(std::span<const RingElement> generators) const {
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    check_same_ring(g.ring(), shared_from_this());
    gens.push_back(g.representative());
  }
  return ideal(std::move(gens));
}

QuotientIdeal LocalRing::zero_ideal() const { return ideal(std::vector<Polynomial>{}); }

QuotientIdeal LocalRing::unit_ideal() const {
  return ideal(std::vector<Polynomial>{Polynomial::constant(ambient_, FieldElem(1))});
}

QuotientIdeal LocalRing::maximal_ideal() const { return ideal(Ideal::maximal(ambient_).generators()); }

LocalRingPtr LocalRing::quotient(std::span<const RingElement> extra) const {
  std::vector<Polynomial> rel = defining_.groebner_basis();
  for (const auto& e : extra) {
    check_same_ring(e.ring(), shared_from_this());
    if (!e.is_zero()) rel.push_back(e.representative());
  }
  return make(ambient_, std::move(rel));
}

// ---------------------------------------------------------------------------

RingElement::RingElement(LocalRingPtr ring, const Polynomial& f)
    : ring_(std::move(ring)), rep_(ring_->defining_ideal().normal_form(f)) {}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, rep_ + o.rep_);
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, rep_ - o.rep_);
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same_ring(ring_, o.ring_);
  return RingElement(ring_, rep_ * o.rep_);
}

RingElement RingElement::pow(unsigned n) const {
  RingElement result(ring_, Polynomial::constant(rep_.ring(), FieldElem(1)));
  for (unsigned k = 0; k < n; ++k) result = result * *this;
  return result;
}

RingElement RingElement::scale(const FieldElem& c) const { return RingElement(ring_, rep_.scale(c)); }

// ---------------------------------------------------------------------------

QuotientIdeal::QuotientIdeal(LocalRingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)),
      gens_(normalize_generators(ring_->defining_ideal(), generators)),
      lift_(Ideal::zero(ring_->ambient())) {
  std::vector<Polynomial> lifted = gens_;
  for (const auto& j : ring_->defining_ideal().groebner_basis()) lifted.push_back(j);
  lift_ = Ideal(ring_->ambient(), std::move(lifted));
}

std::string QuotientIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

bool ideal_equal(const QuotientIdeal& a, const QuotientIdeal& b) {
  check_same_ring(a.ring(), b.ring());
  return ideal_equal(a.lift(), b.lift());
}

QuotientIdeal ideal_sum(const QuotientIdeal& a, const QuotientIdeal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return QuotientIdeal(a.ring(), std::move(gens));
}

QuotientIdeal ideal_product(const QuotientIdeal& a, const QuotientIdeal& b) {
  check_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return QuotientIdeal(a.ring(), std::move(gens));
}

QuotientIdeal ideal_power(const QuotientIdeal& a, int n) {
  QuotientPowerCache cache(a);
  return cache.power(n);
}

QuotientIdeal ideal_intersection(const QuotientIdeal& a, const QuotientIdeal& b) {
  check_same_ring(a.ring(), b.ring());
  return QuotientIdeal(a.ring(), ideal_intersection(a.lift(), b.lift()).generators());
}

QuotientIdeal ideal_colon(const QuotientIdeal& a, const RingElement& f) {
  check_same_ring(a.ring(), f.ring());
  if (f.is_zero()) return a.ring()->unit_ideal();
  return QuotientIdeal(a.ring(), ideal_colon(a.lift(), f.representative()).generators());
}

QuotientIdeal ideal_colon(const QuotientIdeal& a, const QuotientIdeal& b) {
  check_same_ring(a.ring(), b.ring());
  if (b.generators().empty()) return a.ring()->unit_ideal();
  std::vector<Polynomial> gens;
  Ideal result = ideal_colon(a.lift(), b.generators()[0]);
  for (std::size_t i = 1; i < b.generators().size(); ++i)
    result = ideal_intersection(result, ideal_colon(a.lift(), b.generators()[i]));
  return QuotientIdeal(a.ring(), result.generators());
}

QuotientPowerCache::QuotientPowerCache(QuotientIdeal base) {
  powers_.push_back(base.ring()->unit_ideal());
  powers_.push_back(std::move(base));
}

const QuotientIdeal& QuotientPowerCache::power(int n) {
  if (n < 0) throw InvalidArgument("negative ideal power");
  while (static_cast<int>(powers_.size()) <= n) powers_.push_back(ideal_product(powers_.back(), powers_[1]));
  return powers_[static_cast<std::size_t>(n)];
}

// ---------------------------------------------------------------------------

namespace {

int starting_degree(const QuotientIdeal& a) {
  int start = -1;
  for (const auto& g : a.generators()) {
    int o = g.order();
    if (start < 0 || o < start) start = o;
  }
  return std::max(1, start);
}

}  // namespace

std::size_t local_colength(const QuotientIdeal& a, LengthOptions options) {
  int n = starting_degree(a);
  std::size_t prev = 0;
  int run = 0;
  for (; n <= options.n_cap; ++n) {
    std::size_t v = truncated_colength(a.lift(), static_cast<unsigned>(n));
    run = (run > 0 && v == prev) ? run + 1 : 1;
    prev = v;
    if (run == 3) return v;
  }
  throw NoStabilization("local colength of " + a.to_string() + " did not stabilize below N = " +
                        std::to_string(options.n_cap));
}

std::size_t subquotient_length(const QuotientIdeal& a, const QuotientIdeal& c, LengthOptions options) {
  check_same_ring(a.ring(), c.ring());
  QuotientIdeal big = ideal_sum(a, c);
  long prev = 0;
  int run = 0;
  for (int n = 1; n <= options.n_cap; ++n) {
    auto small_colength = static_cast<long>(truncated_colength(c.lift(), static_cast<unsigned>(n)));
    auto big_colength = static_cast<long>(truncated_colength(big.lift(), static_cast<unsigned>(n)));
    long diff = small_colength - big_colength;
    run = (run > 0 && diff == prev) ? run + 1 : 1;
    prev = diff;
    if (run == 3) return static_cast<std::size_t>(diff);
  }
  throw NoStabilization("length of " + big.to_string() + " / " + c.to_string() + " did not stabilize below N = " +
                        std::to_string(options.n_cap));
}

std::size_t h0_length(const QuotientIdeal& c, LengthOptions options) {
  const LocalRingPtr& ring = c.ring();
  Ideal sat = saturation(c.lift(), Ideal::maximal(ring->ambient()));
  return subquotient_length(QuotientIdeal(ring, sat.generators()), c, options);
}

bool is_parameter_ideal(const LocalRing& ring, std::span<const RingElement> generators, LengthOptions options) {
  if (static_cast<int>(generators.size()) != ring.dimension()) return false;
  try {
    local_colength(ring.ideal(generators), options);
    return true;
  } catch (const NoStabilization&) {
    return false;
  }
}

}  // namespace samuel
