#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "samuel/field.hpp"
#include "samuel/monomial.hpp"

namespace samuel {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ambient polynomial ring k[vars] with a fixed monomial order.
class PolyRing {
 public:
  static RingPtr make(std::vector<std::string> names, Field field = Field::rationals(),
                      MonomialOrder order = MonomialOrder::degrevlex());

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  /// Same variables and field, different order.
  RingPtr with_order(MonomialOrder order) const;

  /// Structural equality: same names, field and order.
  bool same_as(const PolyRing& other) const {
    return names_ == other.names_ && field_ == other.field_ && order_ == other.order_;
  }

 private:
  PolyRing(std::vector<std::string> names, Field field, MonomialOrder order)
      : names_(std::move(names)), field_(field), order_(order) {}

  std::vector<std::string> names_;
  Field field_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  FieldElem coeff;
};

/// Canonical sparse polynomial: terms strictly descending under the ring's
/// order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts the caller: terms already strictly descending, reduced, nonzero.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
    return Polynomial(std::move(ring), std::move(terms));
  }
  static Polynomial constant(RingPtr ring, const FieldElem& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const FieldElem& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Requires a nonzero polynomial.
  const Term& leading() const;
  const Monomial& lead_monomial() const { return leading().mono; }
  const FieldElem& lead_coeff() const { return leading().coeff; }

  /// Largest total degree of a term (-1 for zero).
  int total_degree() const noexcept;
  /// Smallest total degree of a term (-1 for zero).
  int order() const noexcept;
  bool is_homogeneous() const noexcept;
  FieldElem constant_term() const;
  /// true iff no term involves variables outside `mask`.
  bool supported_in(std::uint32_t mask) const noexcept;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  Polynomial scale(const FieldElem& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElem& c) const;
  Polynomial pow(unsigned n) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;
  /// Drops every term of total degree >= n.
  Polynomial truncated(unsigned n) const;

  /// Exact quotient f / g; throws InvalidArgument when g does not divide f.
  Polynomial divide_exact(const Polynomial& g) const;

  FieldElem evaluate(std::span<const FieldElem> point) const;

  /// Re-expresses the polynomial in `target`; variable i goes to var_map[i].
  Polynomial map_into(const RingPtr& target, std::span<const std::size_t> var_map) const;
  /// Same variables, possibly different order: re-sorts terms.
  Polynomial reorder(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  void check_compatible(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses the polynomial text syntax: `+`/`-` between terms, `*`, `^`,
/// integer or `a/b` coefficients, parentheses, declared variable names.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Lexicographic comparison of canonical term lists; a deterministic total
/// order on polynomials of one ring, used for sorting generator lists.
bool canonical_less(const Polynomial& f, const Polynomial& g);

}  // namespace samuel
