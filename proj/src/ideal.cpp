#include "samuel/ideal.hpp"

#include <algorithm>
#include <bit>

#include "samuel/errors.hpp"

namespace samuel {

namespace {

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() == b.ring()) return;
  if (a.ring()->nvars() != b.ring()->nvars()) throw ArityMismatch("ideals over different variable sets");
  if (!(a.ring()->field() == b.ring()->field())) throw FieldMismatch("ideals over different fields");
  if (!a.ring()->same_as(*b.ring())) throw InvalidArgument("ideals over differently ordered rings");
}

std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : state_(std::make_shared<State>()) {
  for (const auto& g : generators)
    if (g.ring() != ring && !g.ring()->same_as(*ring)) throw ArityMismatch("generator not in the ideal's ring");
  state_->ring = std::move(ring);
  state_->gens = std::move(generators);
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, FieldElem(1));
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::maximal(RingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::parse(const RingPtr& ring, std::span<const std::string> generators) {
  std::vector<Polynomial> gens;
  for (const auto& s : generators) gens.push_back(parse_polynomial(s, ring));
  return Ideal(ring, std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(state_->once, [this] { state_->gb = buchberger(state_->gens); });
  return state_->gb;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_zero_ideal() const { return groebner_basis().empty(); }

Polynomial Ideal::normal_form(const Polynomial& f) const { return reduce(f, groebner_basis()); }

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < generators().size(); ++i) {
    if (i) s += ", ";
    s += generators()[i].to_string();
  }
  return s + ")";
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const auto& ga = a.groebner_basis();
  const auto& gb = b.groebner_basis();
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i] == gb[i])) return false;
  return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), dedupe(std::move(gens)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), dedupe(std::move(gens)));
}

Ideal ideal_power(const Ideal& a, int n) {
  if (n < 0) throw InvalidArgument("negative ideal power");
  PowerCache cache(a);
  return cache.power(n);
}

PowerCache::PowerCache(Ideal base) {
  powers_.push_back(Ideal::unit(base.ring()));
  powers_.push_back(std::move(base));
}

const Ideal& PowerCache::power(int n) {
  if (n < 0) throw InvalidArgument("negative ideal power");
  while (static_cast<int>(powers_.size()) <= n) powers_.push_back(ideal_product(powers_.back(), powers_[1]));
  return powers_[static_cast<std::size_t>(n)];
}

Ideal elimination(const Ideal& a, std::size_t k) {
  const RingPtr& ring = a.ring();
  if (k == 0) return a;
  if (k > ring->nvars()) throw InvalidArgument("cannot eliminate more variables than the ring has");
  RingPtr elim_ring = ring->with_order(MonomialOrder::elimination(k));
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g.reorder(elim_ring));
  auto gb = buchberger(gens);

  std::vector<std::string> rest(ring->names().begin() + static_cast<std::ptrdiff_t>(k), ring->names().end());
  RingPtr sub = PolyRing::make(rest, ring->field());
  std::vector<std::size_t> var_map(ring->nvars(), 0);
  for (std::size_t i = k; i < ring->nvars(); ++i) var_map[i] = i - k;
  std::uint32_t keep_mask = 0;
  for (std::size_t i = k; i < ring->nvars(); ++i) keep_mask |= 1u << i;

  std::vector<Polynomial> kept;
  for (const auto& g : gb)
    if (g.supported_in(keep_mask)) kept.push_back(g.map_into(sub, var_map));
  return Ideal(sub, std::move(kept));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  const RingPtr& ring = a.ring();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  if (names.size() > kMaxVars) throw InvalidArgument("too many variables for an intersection");
  RingPtr ext = PolyRing::make(names, ring->field(), MonomialOrder::elimination(1));
  std::vector<std::size_t> up(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) up[i] = i + 1;

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, FieldElem(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.groebner_basis()) gens.push_back(t * g.map_into(ext, up));
  for (const auto& g : b.groebner_basis()) gens.push_back(one_minus_t * g.map_into(ext, up));
  auto gb = buchberger(gens);

  std::vector<std::size_t> down(ext->nvars(), 0);
  for (std::size_t i = 1; i < ext->nvars(); ++i) down[i] = i - 1;
  std::uint32_t keep_mask = ~1u;
  std::vector<Polynomial> kept;
  for (const auto& g : gb)
    if (g.supported_in(keep_mask)) kept.push_back(g.map_into(ring, down));
  return Ideal(ring, std::move(kept));
}

Ideal ideal_colon(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("colon by the zero polynomial");
  const RingPtr& ring = a.ring();
  if (f.ring() != ring && !f.ring()->same_as(*ring)) throw ArityMismatch("colon: polynomial not in the ideal's ring");
  if (f.is_constant()) return a;
  Ideal principal(ring, {f});
  Ideal meet = ideal_intersection(a, principal);
  std::vector<Polynomial> gens;
  for (const auto& g : meet.generators()) gens.push_back(g.divide_exact(f));
  return Ideal(ring, dedupe(std::move(gens)));
}

Ideal ideal_colon_ideal(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& g : b.groebner_basis())
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return Ideal::unit(a.ring());
  Ideal result = ideal_colon(a, gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i) result = ideal_intersection(result, ideal_colon(a, gens[i]));
  return result;
}

Ideal saturation(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  if (b.is_zero_ideal()) throw InvalidArgument("saturation by the zero ideal");
  Ideal current = a;
  for (;;) {
    Ideal next = ideal_colon_ideal(current, b);
    if (ideal_equal(next, current)) return current;
    current = next;
  }
}

std::size_t colength(const Ideal& a) {
  const auto& gb = a.groebner_basis();
  const std::size_t n = a.ring()->nvars();
  if (a.is_unit()) return 0;
  std::vector<unsigned> bounds(n, 0);
  std::vector<Monomial> leads;
  for (const auto& g : gb) {
    const Monomial& m = g.lead_monomial();
    leads.push_back(m);
    if (std::popcount(m.support()) == 1) {
      std::size_t v = static_cast<std::size_t>(std::countr_zero(m.support()));
      if (bounds[v] == 0 || m[v] < bounds[v]) bounds[v] = m[v];
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (bounds[v] == 0)
      throw NotZeroDimensional("no pure power of " + a.ring()->names()[v] + " among leading terms");
  return count_standard_monomials_in_box(leads, bounds);
}

std::size_t truncated_colength(const Ideal& a, unsigned n) {
  RingPtr ring = a.ring();
  std::vector<Polynomial> gens = a.generators();
  if (!ring->order().degree_compatible()) {
    RingPtr graded = ring->with_order(MonomialOrder::degrevlex());
    for (auto& g : gens) g = g.reorder(graded);
    ring = graded;
  }
  if (n == 0) return 0;
  auto gb = buchberger(gens, GroebnerOptions{n});
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.lead_monomial());
  return count_standard_monomials(leads, ring->nvars(), n);
}

int krull_dimension(const Ideal& a) {
  if (a.is_unit()) return -1;
  const std::size_t n = a.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& g : a.groebner_basis()) supports.push_back(g.lead_monomial().support());
  int best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    int size = std::popcount(subset);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

}  // namespace samuel
