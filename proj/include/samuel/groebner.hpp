#pragma once

#include <span>
#include <vector>

#include "samuel/polynomial.hpp"

namespace samuel {

/// Options for the Buchberger engine.
///
/// `truncation_degree = N > 0` computes a Groebner basis of
/// (gens) + m^N, where m is the ideal of all variables, without listing the
/// monomials of degree N: every term of degree >= N is discarded during
/// reduction and S-pairs against those implicit monomials are generated
/// explicitly. Requires a degree-compatible order.
struct GroebnerOptions {
  unsigned truncation_degree = 0;
};

/// Full multivariate division: returns r with f - r in (basis) and no term
/// of r divisible by a leading monomial of basis. Terms of degree >= the
/// truncation degree (when nonzero) are dropped.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, unsigned truncation_degree = 0);

/// Reduced Groebner basis of (gens) under the order of the generators'
/// ring: monic, interreduced, sorted ascending by leading monomial.
/// Deterministic for a fixed input. The zero ideal yields an empty basis.
/// With truncation the implicit degree-N monomials are not listed.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, GroebnerOptions options = {});

/// Counts monomials in `nvars` variables of total degree < `below_degree`
/// that are not divisible by any of `leads`.
std::size_t count_standard_monomials(std::span<const Monomial> leads, std::size_t nvars, unsigned below_degree);

/// Counts monomials with exponent i below bounds[i] not divisible by any of
/// `leads`.
std::size_t count_standard_monomials_in_box(std::span<const Monomial> leads, std::span<const unsigned> bounds);

}  // namespace samuel
