#pragma once

#include <memory>
#include <span>
#include <string>
#include <deque>
#include <vector>

#include "samuel/ideal.hpp"

namespace samuel {

class LocalRing;
using LocalRingPtr = std::shared_ptr<const LocalRing>;
class QuotientIdeal;
class RingElement;

/// R = (S/J) localized at the origin, S = k[vars].
class LocalRing : public std::enable_shared_from_this<LocalRing> {
 public:
  /// Throws InvalidArgument when a relation does not vanish at the origin.
  static LocalRingPtr make(RingPtr ambient, std::vector<Polynomial> relations);

  const RingPtr& ambient() const noexcept { return ambient_; }
  const Ideal& defining_ideal() const noexcept { return defining_; }
  /// Krull dimension of S/J.
  int dimension() const noexcept { return dim_; }

  RingElement element(const Polynomial& f) const;
  RingElement parse_element(std::string_view text) const;
  QuotientIdeal ideal(std::vector<Polynomial> generators) const;
  QuotientIdeal ideal(std::span<const RingElement> generators) const;
  QuotientIdeal zero_ideal() const;
  QuotientIdeal unit_ideal() const;
  QuotientIdeal maximal_ideal() const;

  /// Same ambient ring with extra relations: R / (extra).
  LocalRingPtr quotient(std::span<const RingElement> extra) const;

 private:
  LocalRing(RingPtr ambient, Ideal defining, int dim)
      : ambient_(std::move(ambient)), defining_(std::move(defining)), dim_(dim) {}

  RingPtr ambient_;
  Ideal defining_;
  int dim_;
};

/// Element of R, stored as its normal form modulo J.
class RingElement {
 public:
  RingElement(LocalRingPtr ring, const Polynomial& f);

  const LocalRingPtr& ring() const noexcept { return ring_; }
  const Polynomial& representative() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement pow(unsigned n) const;
  RingElement scale(const FieldElem& c) const;

  std::string to_string() const { return rep_.to_string(); }
  friend bool operator==(const RingElement& a, const RingElement& b) { return a.rep_ == b.rep_; }

 private:
  LocalRingPtr ring_;
  Polynomial rep_;
};

/// Ideal of R represented by its lift to S; the lift always contains J.
class QuotientIdeal {
 public:
  QuotientIdeal(LocalRingPtr ring, std::vector<Polynomial> generators);

  const LocalRingPtr& ring() const noexcept { return ring_; }
  /// Generators in R (normal forms modulo J, zeros dropped).
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  /// The ideal (generators) + J of S.
  const Ideal& lift() const noexcept { return lift_; }

  bool contains(const RingElement& f) const { return lift_.contains(f.representative()); }
  bool contains(const QuotientIdeal& other) const { return lift_.contains(other.lift_); }
  bool is_unit() const { return lift_.is_unit(); }

  std::string to_string() const;

 private:
  LocalRingPtr ring_;
  std::vector<Polynomial> gens_;
  Ideal lift_;
};

bool ideal_equal(const QuotientIdeal& a, const QuotientIdeal& b);
QuotientIdeal ideal_sum(const QuotientIdeal& a, const QuotientIdeal& b);
QuotientIdeal ideal_product(const QuotientIdeal& a, const QuotientIdeal& b);
QuotientIdeal ideal_power(const QuotientIdeal& a, int n);
QuotientIdeal ideal_intersection(const QuotientIdeal& a, const QuotientIdeal& b);
/// (a : f) in R, computed as ((lift(a)) : f) in S.
QuotientIdeal ideal_colon(const QuotientIdeal& a, const RingElement& f);
QuotientIdeal ideal_colon(const QuotientIdeal& a, const QuotientIdeal& b);

/// Incrementally cached powers of an ideal of R.
class QuotientPowerCache {
 public:
  explicit QuotientPowerCache(QuotientIdeal base);
  const QuotientIdeal& power(int n);

 private:
  std::deque<QuotientIdeal> powers_;  // stable references across growth
};

struct LengthOptions {
  /// Largest truncation degree N tried before giving up.
  int n_cap = 40;
};

/// Length of R/a, via dim_k S/(lift(a) + m^N) once three consecutive
/// truncation degrees give the same value. Throws NoStabilization past the cap.
std::size_t local_colength(const QuotientIdeal& a, LengthOptions options = {});

/// Length of the R-module (a + c)/c, assumed finite: the difference of
/// truncated colengths of c and a + c, once it repeats on three consecutive
/// truncation degrees.
std::size_t subquotient_length(const QuotientIdeal& a, const QuotientIdeal& c, LengthOptions options = {});

/// Length of H^0_m(R/c) = (c : m^∞)/c.
std::size_t h0_length(const QuotientIdeal& c, LengthOptions options = {});

/// d = dim R elements generating an m-primary ideal.
bool is_parameter_ideal(const LocalRing& ring, std::span<const RingElement> generators, LengthOptions options = {});

}  // namespace samuel
