#include "samuel/hilbert.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <thread>

#include "samuel/errors.hpp"

namespace samuel {

namespace {

long to_long(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw NonIntegerCoefficient(std::string(what) + " " + q.get_str() + " is not an integer");
  if (!q.get_num().fits_slong_p()) throw InvalidArgument(std::string(what) + " out of range");
  return q.get_num().get_si();
}

// Runs body(i) for i in [0, count) on a small worker pool. The first failing
// index (lowest i) determines the rethrown exception.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string series_term(long c, int power, bool first) {
  std::string s;
  long mag = c < 0 ? -c : c;
  if (first)
    s = c < 0 ? "-" : "";
  else
    s = c < 0 ? " - " : " + ";
  if (power == 0) return s + std::to_string(mag);
  if (mag != 1) s += std::to_string(mag) + "*";
  s += "t";
  if (power > 1) s += "^" + std::to_string(power);
  return s;
}

}  // namespace

mpq_class binomial(long a, long m) {
  if (m < 0) return 0;
  mpq_class r = 1;
  for (long k = 0; k < m; ++k) {
    r *= a - k;
    r /= k + 1;
  }
  return r;
}

long HilbertCoefficients::evaluate(long n) const {
  mpq_class sum = 0;
  for (int i = 0; i <= d; ++i) {
    mpq_class term = binomial(n + d - 1 - i, d - i) * e[static_cast<std::size_t>(i)];
    if (i % 2) sum -= term;
    else sum += term;
  }
  return to_long(sum, "P(n)");
}

HilbertTable hilbert_samuel_table(const QuotientIdeal& Q, int n_max, LengthOptions options) {
  const LocalRingPtr& ring = Q.ring();
  if (n_max < ring->dimension() + 3)
    throw InvalidArgument("n_max = " + std::to_string(n_max) + " is too short for d = " +
                          std::to_string(ring->dimension()) + "; need at least d + 3");
  QuotientPowerCache cache(Q);
  std::vector<QuotientIdeal> powers;
  for (int n = 0; n <= n_max; ++n) powers.push_back(cache.power(n));

  HilbertTable table{ring, Q, std::vector<long>(static_cast<std::size_t>(n_max) + 1, 0), n_max};
  parallel_for(powers.size() - 1, [&](std::size_t i) {
    table.values[i + 1] = static_cast<long>(local_colength(powers[i + 1], options));
  });
  return table;
}

HilbertCoefficients fit_coefficients(const std::vector<long>& values, int d) {
  if (d < 0) throw InvalidArgument("negative dimension");
  const int n_max = static_cast<int>(values.size()) - 1;
  // Forward difference of order d+1 at n uses H(n..n+d+1); check the last d+2 such n.
  const int last = n_max - d - 1;
  const int first = last - (d + 1);
  if (first < 0)
    throw NoPolynomialWindow("table up to n = " + std::to_string(n_max) + " is too short to certify a degree " +
                             std::to_string(d) + " polynomial; increase n_max to at least " +
                             std::to_string(2 * d + 2));
  for (int n = first; n <= last; ++n) {
    mpq_class diff = 0;
    for (int j = 0; j <= d + 1; ++j) {
      mpq_class term = binomial(d + 1, j) * values[static_cast<std::size_t>(n + j)];
      if ((d + 1 - j) % 2) diff -= term;
      else diff += term;
    }
    if (diff != 0)
      throw NoPolynomialWindow("difference of order " + std::to_string(d + 1) + " is nonzero at n = " +
                               std::to_string(n) + "; increase n_max");
  }

  // Solve sum_i c_i C(n + d - 1 - i, d - i) = H(n) on the last d + 1 points, e_i = (-1)^i c_i.
  const int size = d + 1;
  std::vector<std::vector<mpq_class>> a(static_cast<std::size_t>(size),
                                        std::vector<mpq_class>(static_cast<std::size_t>(size) + 1));
  for (int r = 0; r < size; ++r) {
    long n = n_max - d + r;
    for (int i = 0; i < size; ++i) a[r][i] = binomial(n + d - 1 - i, d - i);
    a[r][size] = values[static_cast<std::size_t>(n)];
  }
  for (int col = 0; col < size; ++col) {
    int piv = col;
    while (piv < size && a[piv][col] == 0) ++piv;
    if (piv == size) throw InvalidArgument("singular interpolation system");
    std::swap(a[col], a[piv]);
    for (int r = 0; r < size; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col] / a[col][col];
      for (int k = col; k <= size; ++k) a[r][k] -= f * a[col][k];
    }
  }

  HilbertCoefficients out;
  out.d = d;
  out.fit_lo = n_max - d;
  out.fit_hi = n_max;
  for (int i = 0; i < size; ++i) {
    mpq_class c = a[i][size] / a[i][i];
    if (i % 2) c = -c;
    out.e.push_back(to_long(c, "Hilbert coefficient"));
  }

  // A nonzero P of degree <= d cannot vanish at d + 1 consecutive integers, so
  // the scan stops within d + 1 steps below zero.
  out.eta = -(d + 2);
  for (long n = n_max; n >= -(d + 1); --n) {
    long h = n > 0 ? values[static_cast<std::size_t>(n)] : 0;
    if (h != out.evaluate(n)) {
      out.eta = static_cast<int>(n);
      break;
    }
  }
  return out;
}

GradedSeries graded_series(const std::vector<long>& values, int d) {
  GradedSeries s;
  s.d = d;
  for (std::size_t n = 0; n + 1 < values.size(); ++n) s.h_values.push_back(values[n + 1] - values[n]);

  // Coefficients of (1 - t)^d * sum h_n t^n, exact below t^(n_max).
  const long len = static_cast<long>(s.h_values.size());
  std::vector<long> num(static_cast<std::size_t>(len), 0);
  for (long k = 0; k < len; ++k) {
    mpq_class c = 0;
    for (long j = 0; j <= std::min<long>(d, k); ++j) {
      mpq_class term = binomial(d, j) * s.h_values[static_cast<std::size_t>(k - j)];
      if (j % 2) c -= term;
      else c += term;
    }
    num[static_cast<std::size_t>(k)] = to_long(c, "series coefficient");
  }
  const long window = d + 1;
  if (len < window + 1) return s;
  for (long k = len - window; k < len; ++k)
    if (num[static_cast<std::size_t>(k)] != 0) return s;
  while (!num.empty() && num.back() == 0) num.pop_back();
  s.numerator = std::move(num);
  return s;
}

std::string GradedSeries::closed_form() const {
  if (!numerator) return "";
  std::string top;
  int terms = 0;
  for (std::size_t k = 0; k < numerator->size(); ++k) {
    long c = (*numerator)[k];
    if (c == 0) continue;
    top += series_term(c, static_cast<int>(k), terms == 0);
    ++terms;
  }
  if (terms == 0) return "0";
  if (d == 0) return top;
  if (terms > 1 || top.front() == '-') top = "(" + top + ")";
  std::string bottom = d == 1 ? "(1 - t)" : "(1 - t)^" + std::to_string(d);
  return top + "/" + bottom;
}

int reduction_number(const QuotientIdeal& I, const QuotientIdeal& J, int cap) {
  if (!I.contains(J)) throw InvalidArgument("J = " + J.to_string() + " is not contained in I = " + I.to_string());
  QuotientPowerCache powers(I);
  for (int n = 0; n <= cap; ++n)
    if (ideal_equal(powers.power(n + 1), ideal_product(J, powers.power(n)))) return n;
  throw NotAReduction(J.to_string() + " is not a reduction of " + I.to_string() + " with reduction number <= " +
                      std::to_string(cap));
}

VVBound vv_depth_bound(const QuotientIdeal& Q, const std::vector<RingElement>& xs, int n_max) {
  VVBound out;
  out.n_max = n_max;
  QuotientPowerCache powers(Q);
  const LocalRingPtr& ring = Q.ring();
  for (std::size_t j = 1; j <= xs.size(); ++j) {
    QuotientIdeal partial = ring->ideal(std::span<const RingElement>(xs.data(), j));
    // The criterion presupposes x_1..x_k regular in R.
    QuotientIdeal previous = ring->ideal(std::span<const RingElement>(xs.data(), j - 1));
    bool ok = !xs[j - 1].is_zero() && ideal_equal(ideal_colon(previous, xs[j - 1]), previous);
    for (int n = 1; n <= n_max && ok; ++n) {
      QuotientIdeal meet = ideal_intersection(partial, powers.power(n));
      ok = ideal_product(partial, powers.power(n - 1)).contains(meet);
    }
    if (!ok) break;
    out.k = static_cast<int>(j);
  }
  if (!xs.empty() && n_max >= 1) {
    try {
      reduction_number(Q, ring->ideal(std::span<const RingElement>(xs)), n_max - 1);
      out.reduction_reached = true;
    } catch (const NotAReduction&) {
    } catch (const InvalidArgument&) {
    }
  }
  return out;
}

}  // namespace samuel
