#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <deque>
#include <vector>

#include "samuel/groebner.hpp"
#include "samuel/polynomial.hpp"

namespace samuel {

/// An ideal of the ambient polynomial ring given by generators, with a
/// lazily computed, thread-safe cached reduced Groebner basis (in the ring's
/// order). Values are immutable; every operation returns a new ideal.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  /// The ideal generated by all variables.
  static Ideal maximal(RingPtr ring);
  static Ideal parse(const RingPtr& ring, std::span<const std::string> generators);

  const RingPtr& ring() const noexcept { return state_->ring; }
  const std::vector<Polynomial>& generators() const noexcept { return state_->gens; }
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_unit() const;
  bool is_zero_ideal() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  Polynomial normal_form(const Polynomial& f) const;

  std::string to_string() const;

 private:
  struct State {
    RingPtr ring;
    std::vector<Polynomial> gens;
    std::once_flag once;
    std::vector<Polynomial> gb;
  };
  std::shared_ptr<State> state_;
};

/// Equality via reduced Groebner bases.
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// a^0 is the unit ideal. Generators are the distinct products of n
/// generators of a.
Ideal ideal_power(const Ideal& a, int n);

/// Incrementally cached powers a^n = a^(n-1) * a.
class PowerCache {
 public:
  explicit PowerCache(Ideal base);
  const Ideal& power(int n);
  const Ideal& base() const noexcept { return powers_[1]; }

 private:
  std::deque<Ideal> powers_;  // stable references across growth
};

/// Generators of a ∩ k[x_{k+1}, ...], returned as an ideal of the ring
/// without the first k variables (degrevlex). k = 0 returns a itself.
Ideal elimination(const Ideal& a, std::size_t k);

/// a ∩ b via t*a + (1-t)*b and elimination of t.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// (a : f) = (a ∩ (f)) / f. Rejects f = 0.
Ideal ideal_colon(const Ideal& a, const Polynomial& f);
/// (a : b) as the intersection of (a : g) over the generators g of b.
Ideal ideal_colon_ideal(const Ideal& a, const Ideal& b);
/// (a : b^∞) by iterating colons until two consecutive results agree.
Ideal saturation(const Ideal& a, const Ideal& b);

/// dim_k S/a. Throws NotZeroDimensional unless the leading monomials
/// include a pure power of every variable.
std::size_t colength(const Ideal& a);
/// dim_k S/(a + m^n), m the ideal of variables. Uses a truncated basis.
std::size_t truncated_colength(const Ideal& a, unsigned n);
/// Krull dimension of S/a from the leading-term ideal; -1 for the unit ideal.
int krull_dimension(const Ideal& a);

}  // namespace samuel
