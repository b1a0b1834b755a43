#pragma once

// Independent length oracle: dim_Q S/(I + m^N) by Gaussian elimination on
// the span of {monomial * generator} truncated below degree N. Shares no
// code with the Groebner engine beyond the polynomial container.

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

#include "samuel/polynomial.hpp"

namespace samuel::testing {

inline std::vector<Monomial> monomials_below(std::size_t nvars, unsigned n) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned used) {
    if (var == nvars) {
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; used + e < n; ++e) {
      m.set(var, e);
      rec(var + 1, used + e);
    }
    m.set(var, 0);
  };
  rec(0, 0);
  return out;
}

inline std::size_t linear_algebra_colength(const std::vector<Polynomial>& gens, std::size_t nvars, unsigned n) {
  std::vector<Monomial> basis = monomials_below(nvars, n);
  std::map<std::vector<unsigned>, std::size_t> column;
  auto key = [&](const Monomial& m) {
    std::vector<unsigned> k(nvars);
    for (std::size_t i = 0; i < nvars; ++i) k[i] = m[i];
    return k;
  };
  for (std::size_t i = 0; i < basis.size(); ++i) column[key(basis[i])] = i;

  // pivots[c] = row with leading column c (rows kept in reduced form).
  std::map<std::size_t, std::vector<mpq_class>> pivots;
  const std::size_t ncols = basis.size();
  for (const auto& g : gens) {
    for (const auto& shift : basis) {
      std::vector<mpq_class> row(ncols);
      bool nonzero = false;
      for (const auto& t : g.terms()) {
        Monomial m = t.mono * shift;
        if (m.degree() >= n) continue;
        row[column[key(m)]] += t.coeff;
        nonzero = true;
      }
      if (!nonzero) continue;
      for (std::size_t c = 0; c < ncols; ++c) {
        if (row[c] == 0) continue;
        auto it = pivots.find(c);
        if (it == pivots.end()) {
          mpq_class inv = 1 / row[c];
          for (auto& v : row) v *= inv;
          pivots.emplace(c, std::move(row));
          break;
        }
        mpq_class f = row[c];
        for (std::size_t k = c; k < ncols; ++k)
          if (it->second[k] != 0) row[k] -= f * it->second[k];
      }
    }
  }
  return ncols - pivots.size();
}

}  // namespace samuel::testing
