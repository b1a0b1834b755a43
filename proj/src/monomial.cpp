#include "samuel/monomial.hpp"

#include <algorithm>

#include "samuel/errors.hpp"

namespace samuel {

Monomial::Monomial(std::size_t arity) {
  if (arity > kMaxVars)
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables are supported");
  arity_ = static_cast<std::uint8_t>(arity);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) exps_[i++] = static_cast<std::uint16_t>(e);
  refresh();
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0xFFFF) throw InvalidArgument("exponent too large");
    m.exps_[i] = static_cast<std::uint16_t>(exponents[i]);
  }
  m.refresh();
  return m;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, unsigned power) {
  Monomial m(arity);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= arity_) throw ArityMismatch("variable index out of range");
  if (e > 0xFFFF) throw InvalidArgument("exponent too large");
  exps_[i] = static_cast<std::uint16_t>(e);
  refresh();
}

void Monomial::refresh() noexcept {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) support_ |= (1u << i);
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
  r.degree_ = a.degree_ + b.degree_;
  r.support_ = a.support_ | b.support_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  r.refresh();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < arity_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// degrevlex on the index range [lo, hi).
std::strong_ordering degrevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::DegRevLex: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = a.arity(); i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case Kind::Lex: {
      for (std::size_t i = 0; i < a.arity(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    }
    case Kind::Elimination: {
      std::size_t k = std::min(block_, a.arity());
      auto c = degrevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return degrevlex_range(a, b, k, a.arity());
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.arity() != b.arity()) throw ArityMismatch("monomials of different arity compared");
  return compare_unchecked(a, b);
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace samuel
