#pragma once

#include <optional>
#include <string>
#include <vector>

#include "samuel/local_ring.hpp"

namespace samuel {

/// H(Q, n) = length of R/Q^n for n = 0..n_max.
struct HilbertTable {
  LocalRingPtr ring;
  QuotientIdeal Q;
  std::vector<long> values;
  int n_max = 0;
};

/// Hilbert-Samuel polynomial in the alternating binomial basis:
/// P(x) = sum_i (-1)^i e_i C(x + d - 1 - i, d - i).
struct HilbertCoefficients {
  int d = 0;
  std::vector<long> e;
  /// Table indices used for the fit (inclusive).
  int fit_lo = 0;
  int fit_hi = 0;
  /// Postulation number: largest n with H(n) != P(n), with H(n) = 0 for n <= 0.
  int eta = 0;

  /// P(n), exact.
  long evaluate(long n) const;
};

struct GradedSeries {
  /// length of Q^n / Q^{n+1} for n = 0..n_max-1.
  std::vector<long> h_values;
  int d = 0;
  /// Coefficients of the numerator of sum h_n t^n = numerator / (1 - t)^d,
  /// present when the trailing coefficients vanish.
  std::optional<std::vector<long>> numerator;

  /// "(1 + t + t^2)/(1 - t)", or empty when there is no closed form.
  std::string closed_form() const;
};

struct VVBound {
  /// Largest k such that x_1..x_k is regular in R and
  /// (x_1..x_j) meet Q^n = (x_1..x_j) Q^{n-1} for j <= k, n <= n_max.
  int k = 0;
  int n_max = 0;
  /// Q^n = (xs) Q^{n-1} for some n <= n_max.
  bool reduction_reached = false;
};

/// Generalized binomial C(a, m) for integer a and m >= 0; zero for m < 0.
mpq_class binomial(long a, long m);

/// Rejects n_max < dim R + 3. Entries for distinct n are computed concurrently.
HilbertTable hilbert_samuel_table(const QuotientIdeal& Q, int n_max, LengthOptions options = {});

/// Fits P on the last d + 1 points once the (d+1)-st differences vanish on a
/// trailing window of width d + 2. Throws NoPolynomialWindow or
/// NonIntegerCoefficient.
HilbertCoefficients fit_coefficients(const std::vector<long>& values, int d);
inline HilbertCoefficients fit_coefficients(const HilbertTable& table, int d) { return fit_coefficients(table.values, d); }

/// Series of the associated graded ring; d is the dimension used for the denominator.
GradedSeries graded_series(const std::vector<long>& values, int d);
inline GradedSeries graded_series(const HilbertTable& table) {
  return graded_series(table.values, table.ring->dimension());
}

/// Least n <= cap with I^{n+1} = J I^n. Throws InvalidArgument unless J is
/// inside I, NotAReduction past the cap.
int reduction_number(const QuotientIdeal& I, const QuotientIdeal& J, int cap);

/// Valabrega-Valla test of x_1*, ..., x_k* on the window n <= n_max.
VVBound vv_depth_bound(const QuotientIdeal& Q, const std::vector<RingElement>& xs, int n_max);

}  // namespace samuel
