#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace samuel {

/// Coefficients are GMP rationals. Over a prime field the value is kept as
/// an integer representative in [0, p); over Q it is in lowest terms with a
/// positive denominator (mpq canonical form).
using FieldElem = mpq_class;

class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Z/p for a prime p >= 32003.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  FieldElem from_int(long v) const;
  /// Maps a rational into the field; over Z/p the denominator must be a unit.
  FieldElem from_rational(const mpq_class& q) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem inv(const FieldElem& a) const;

  /// a -= b * c, in place.
  void sub_mul(FieldElem& a, const FieldElem& b, const FieldElem& c) const;

  std::string to_string(const FieldElem& a) const;
  /// "Q" or "Fp <p>", matching the ring file syntax.
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  void reduce(FieldElem& a) const;

  std::uint32_t p_ = 0;
};

}  // namespace samuel
