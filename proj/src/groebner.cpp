#include "samuel/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "samuel/errors.hpp"

namespace samuel {

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare_unchecked(a, b) > 0; }
};

using Accumulator = std::map<Monomial, FieldElem, Descending>;

// Index of the first basis element whose leading monomial divides m.
class DivisorTable {
 public:
  void add(const Monomial& lead, std::size_t index) { entries_.push_back({lead, index}); }
  void clear() { entries_.clear(); }

  const std::size_t* find(const Monomial& m) const {
    for (const auto& e : entries_)
      if (e.lead.divides(m)) return &e.index;
    return nullptr;
  }

 private:
  struct Entry {
    Monomial lead;
    std::size_t index;
  };
  std::vector<Entry> entries_;
};

// Reduces f against basis[...] registered in `table`.
Polynomial reduce_with(const Polynomial& f, const std::vector<Polynomial>& basis, const DivisorTable& table,
                       unsigned trunc) {
  const RingPtr& ring = f.ring();
  const Field& field = ring->field();
  Accumulator acc(Descending{&ring->order()});
  for (const auto& t : f.terms())
    if (trunc == 0 || t.mono.degree() < trunc) acc.emplace_hint(acc.end(), t.mono, t.coeff);

  std::vector<Term> remainder;
  while (!acc.empty()) {
    auto it = acc.begin();
    const std::size_t* idx = table.find(it->first);
    if (idx == nullptr) {
      remainder.push_back({it->first, std::move(it->second)});
      acc.erase(it);
      continue;
    }
    const Polynomial& g = basis[*idx];
    const Term& lead = g.leading();
    Monomial shift = it->first / lead.mono;
    FieldElem factor = field.div(it->second, lead.coeff);
    acc.erase(it);
    const auto& gt = g.terms();
    for (std::size_t k = 1; k < gt.size(); ++k) {
      Monomial m = shift * gt[k].mono;
      if (trunc != 0 && m.degree() >= trunc) continue;
      auto [pos, inserted] = acc.try_emplace(m, 0);
      field.sub_mul(pos->second, factor, gt[k].coeff);
      if (pos->second == 0) acc.erase(pos);
    }
  }
  return Polynomial::from_sorted_terms(ring, std::move(remainder));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Field& field = f.ring()->field();
  Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial a = f.mul_term(l / f.lead_monomial(), field.inv(f.lead_coeff()));
  Polynomial b = g.mul_term(l / g.lead_monomial(), field.inv(g.lead_coeff()));
  return a - b;
}

void for_each_monomial_of_degree(std::size_t nvars, unsigned degree, const std::function<void(const Monomial&)>& fn) {
  Monomial m(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      m.set(var, left);
      fn(m);
      m.set(var, 0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(var, e);
      rec(var + 1, left - e);
    }
    m.set(var, 0);
  };
  if (nvars == 0) {
    if (degree == 0) fn(m);
    return;
  }
  rec(0, degree);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(RingPtr ring, unsigned trunc) : ring_(std::move(ring)), trunc_(trunc) {}

  void insert_generator(const Polynomial& g) {
    Polynomial h = reduce_active(g);
    if (!h.is_zero()) add(h.monic());
  }

  void run() {
    for (;;) {
      if (!pending_.empty()) {
        Polynomial p = std::move(pending_.front());
        pending_.erase(pending_.begin());
        insert_generator(p);
        continue;
      }
      if (pairs_.empty()) break;
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      const Polynomial& f = polys_[p.i];
      const Polynomial& g = polys_[p.j];
      if (trunc_ != 0 && p.lcm.degree() >= trunc_ && f.is_homogeneous() && g.is_homogeneous()) continue;
      insert_generator(s_polynomial(f, g));
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!active_[i]) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
        if (j == i || !active_[j]) continue;
        const Monomial& a = polys_[j].lead_monomial();
        const Monomial& b = polys_[i].lead_monomial();
        if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(polys_[i]);
    }
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      DivisorTable table;
      for (std::size_t j = 0; j < minimal.size(); ++j) {
        if (j == i) continue;
        table.add(minimal[j].lead_monomial(), others.size());
        others.push_back(minimal[j]);
      }
      const Polynomial& g = minimal[i];
      Polynomial tail = Polynomial::from_sorted_terms(
          ring_, std::vector<Term>(g.terms().begin() + 1, g.terms().end()));
      Polynomial reduced_tail = reduce_with(tail, others, table, trunc_);
      Polynomial lead = Polynomial::from_sorted_terms(ring_, {g.leading()});
      out.push_back((lead + reduced_tail).monic());
    }
    const MonomialOrder& order = ring_->order();
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare_unchecked(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return out;
  }

 private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = ring_->order().compare_unchecked(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Polynomial reduce_active(const Polynomial& f) const { return reduce_with(f, polys_, table_, trunc_); }

  void rebuild_table() {
    table_.clear();
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) table_.add(polys_[i].lead_monomial(), i);
  }

  // Gebauer-Moeller update with both Buchberger criteria.
  void add(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.lead_monomial();

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, lcm(polys_[g].lead_monomial(), lh)});

    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = polys_[p.i].lead_monomial().coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
          if (b == a) continue;
          const Monomial& other = candidates[b].lcm;
          if (!other.divides(p.lcm)) continue;
          // Among equal lcms keep the first one only.
          if (other == p.lcm) {
            if (b < a) {
              bool b_coprime = polys_[candidates[b].i].lead_monomial().coprime(lh);
              if (!b_coprime) dominated = true;
            }
          } else {
            dominated = true;
          }
        }
      }
      if (!dominated) kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const auto& p : kept)
      if (!polys_[p.i].lead_monomial().coprime(lh)) fresh.push_back(p);

    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (!lh.divides(p.lcm)) {
        old.push_back(p);
        continue;
      }
      Monomial li = lcm(polys_[p.i].lead_monomial(), lh);
      Monomial lj = lcm(polys_[p.j].lead_monomial(), lh);
      if (li == p.lcm || lj == p.lcm) old.push_back(p);
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].lead_monomial())) active_[g] = false;

    if (trunc_ != 0 && !h.is_homogeneous()) {
      unsigned d = lh.degree();
      if (d < trunc_) {
        for_each_monomial_of_degree(ring_->nvars(), trunc_ - d, [&](const Monomial& m) {
          Polynomial p = h.mul_term(m, FieldElem(1)).truncated(trunc_);
          if (!p.is_zero()) pending_.push_back(std::move(p));
        });
      }
    }

    polys_.push_back(std::move(h));
    active_.push_back(true);
    rebuild_table();
  }

  RingPtr ring_;
  unsigned trunc_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::vector<Polynomial> pending_;
  DivisorTable table_;
};

}  // namespace

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, unsigned truncation_degree) {
  std::vector<Polynomial> nonzero;
  DivisorTable table;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.ring() != f.ring() && !g.ring()->same_as(*f.ring()))
      throw ArityMismatch("reduce: basis and polynomial live in different rings");
    table.add(g.lead_monomial(), nonzero.size());
    nonzero.push_back(g);
  }
  return reduce_with(f, nonzero, table, truncation_degree);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, GroebnerOptions options) {
  if (gens.empty()) return {};
  RingPtr ring = gens.front().ring();
  for (const auto& g : gens)
    if (g.ring() != ring && !g.ring()->same_as(*ring))
      throw ArityMismatch("buchberger: generators live in different rings");
  const unsigned trunc = options.truncation_degree;
  if (trunc != 0 && !ring->order().degree_compatible())
    throw InvalidArgument("truncated Groebner bases require a degree-compatible order");

  std::vector<Polynomial> input;
  for (const auto& g : gens) {
    Polynomial t = trunc != 0 ? g.truncated(trunc) : g;
    if (!t.is_zero()) input.push_back(std::move(t));
  }
  const MonomialOrder& order = ring->order();
  std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare_unchecked(a.lead_monomial(), b.lead_monomial()) < 0;
  });

  // Monomial ideals are their own Groebner bases.
  bool all_monomial = std::all_of(input.begin(), input.end(), [](const Polynomial& p) { return p.is_monomial(); });
  if (all_monomial) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < input.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < input.size() && !redundant; ++j) {
        if (j == i) continue;
        const Monomial& a = input[j].lead_monomial();
        const Monomial& b = input[i].lead_monomial();
        if (a.divides(b) && (!(a == b) || j < i)) redundant = true;
      }
      if (!redundant) out.push_back(input[i].monic());
    }
    return out;
  }

  Engine engine(ring, trunc);
  for (const auto& g : input) engine.insert_generator(g);
  engine.run();
  return engine.reduced_basis();
}

std::size_t count_standard_monomials(std::span<const Monomial> leads, std::size_t nvars, unsigned below_degree) {
  if (below_degree == 0) return 0;
  std::size_t count = 0;
  Monomial m(nvars);
  auto divisible = [&](const Monomial& x) {
    for (const auto& l : leads)
      if (l.divides(x)) return true;
    return false;
  };
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned used) {
    if (divisible(m)) return;
    if (var == nvars) {
      ++count;
      return;
    }
    for (unsigned e = 0; used + e < below_degree; ++e) {
      m.set(var, e);
      if (e > 0 && divisible(m)) break;
      rec(var + 1, used + e);
    }
    m.set(var, 0);
  };
  rec(0, 0);
  return count;
}

std::size_t count_standard_monomials_in_box(std::span<const Monomial> leads, std::span<const unsigned> bounds) {
  const std::size_t nvars = bounds.size();
  std::size_t count = 0;
  Monomial m(nvars);
  auto divisible = [&](const Monomial& x) {
    for (const auto& l : leads)
      if (l.divides(x)) return true;
    return false;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t var) {
    if (divisible(m)) return;
    if (var == nvars) {
      ++count;
      return;
    }
    for (unsigned e = 0; e < bounds[var]; ++e) {
      m.set(var, e);
      if (e > 0 && divisible(m)) break;
      rec(var + 1);
    }
    m.set(var, 0);
  };
  rec(0);
  return count;
}

}  // namespace samuel
