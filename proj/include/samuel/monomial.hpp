#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace samuel {

/// Hard upper bound on ambient variables, including the auxiliary variable
/// added by intersections and colons.
inline constexpr std::size_t kMaxVars = 12;

/// Dense exponent vector with cached total degree and a support bitmask used
/// as a divisibility prefilter.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

  std::size_t arity() const noexcept { return arity_; }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// Sets one exponent and refreshes the cached degree and support.
  void set(std::size_t i, unsigned e);

  /// true iff *this divides other. Arity must match.
  bool divides(const Monomial& other) const noexcept {
    if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.arity_ == b.arity_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  void refresh() noexcept;

  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint8_t arity_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Global monomial orders. `elimination(k)` is the block order that compares
/// the first k variables by degrevlex, then the remaining ones by degrevlex;
/// any monomial involving the first block is larger than every monomial
/// free of it.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Elimination };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder elimination(std::size_t k) { return MonomialOrder(Kind::Elimination, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return block_; }
  bool degree_compatible() const noexcept { return kind_ == Kind::DegRevLex; }

  /// Throws ArityMismatch on differing arities.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// Unchecked variant for inner loops.
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const noexcept;

  std::string describe() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_ = Kind::DegRevLex;
  std::size_t block_ = 0;
};

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  return order.compare(a, b);
}

}  // namespace samuel
