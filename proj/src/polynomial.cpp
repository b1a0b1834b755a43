#include "samuel/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "samuel/errors.hpp"

namespace samuel {

RingPtr PolyRing::make(std::vector<std::string> names, Field field, MonomialOrder order) {
  if (names.size() > kMaxVars - 1)
    throw InvalidArgument("at most " + std::to_string(kMaxVars - 1) + " ring variables are supported");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InvalidArgument("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw InvalidArgument("duplicate variable name '" + names[i] + "'");
  }
  return RingPtr(new PolyRing(std::move(names), field, order));
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr PolyRing::with_order(MonomialOrder order) const {
  return RingPtr(new PolyRing(names_, field_, order));
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Field& field = ring->field();
  const MonomialOrder& order = ring->order();
  for (auto& t : terms) {
    if (t.mono.arity() != ring->nvars()) throw ArityMismatch("term arity does not match the ring");
    if (!field.is_rational()) t.coeff = field.from_rational(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare_unchecked(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElem& c) {
  return monomial(ring, Monomial(ring->nvars()), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw ArityMismatch("variable index out of range");
  return monomial(ring, Monomial::variable(ring->nvars(), index), FieldElem(1));
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const FieldElem& c) {
  if (m.arity() != ring->nvars()) throw ArityMismatch("monomial arity does not match the ring");
  FieldElem v = ring->field().from_rational(c);
  std::vector<Term> t;
  if (v != 0) t.push_back({m, v});
  return Polynomial(std::move(ring), std::move(t));
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

int Polynomial::order() const noexcept {
  if (terms_.empty()) return -1;
  int d = static_cast<int>(terms_.front().mono.degree());
  for (const auto& t : terms_) d = std::min(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

FieldElem Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  for (const auto& t : terms_)
    if (t.mono.is_one()) return t.coeff;
  return FieldElem(0);
}

bool Polynomial::supported_in(std::uint32_t mask) const noexcept {
  for (const auto& t : terms_)
    if ((t.mono.support() & ~mask) != 0) return false;
  return true;
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (ring_->nvars() != other.ring_->nvars()) throw ArityMismatch("polynomials over different variable sets");
  if (!(ring_->field() == other.ring_->field())) throw FieldMismatch("polynomials over different fields");
  if (!ring_->same_as(*other.ring_)) throw InvalidArgument("polynomials over rings with different orders or names");
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coeff = ring_->field().neg(term.coeff);
  return Polynomial(ring_, std::move(t));
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              const Field& field, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
      ++j;
      continue;
    }
    auto c = order.compare_unchecked(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? field.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      FieldElem s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  return Polynomial(f.ring_, merge_terms(f.terms_, g.terms_, false, f.ring_->field(), f.ring_->order()));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  return Polynomial(f.ring_, merge_terms(f.terms_, g.terms_, true, f.ring_->field(), f.ring_->order()));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  f.check_compatible(g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  if (g.terms_.size() == 1) return f.mul_term(g.terms_[0].mono, g.terms_[0].coeff);
  if (f.terms_.size() == 1) return g.mul_term(f.terms_[0].mono, f.terms_[0].coeff);
  const Field& field = f.ring_->field();
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) prod.push_back({a.mono * b.mono, field.mul(a.coeff, b.coeff)});
  return Polynomial::from_terms(f.ring_, std::move(prod));
}

Polynomial Polynomial::scale(const FieldElem& c) const {
  const Field& field = ring_->field();
  FieldElem v = field.from_rational(c);
  if (v == 0) return Polynomial(ring_);
  std::vector<Term> t = terms_;
  for (auto& term : t) term.coeff = field.mul(term.coeff, v);
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElem& c) const {
  const Field& field = ring_->field();
  FieldElem v = field.from_rational(c);
  if (v == 0) return Polynomial(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back({term.mono * m, field.mul(term.coeff, v)});
  // Multiplication by a monomial preserves the order of a global monomial order.
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ring_, FieldElem(1));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::truncated(unsigned n) const {
  std::vector<Term> t;
  for (const auto& term : terms_)
    if (term.mono.degree() < n) t.push_back(term);
  return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::divide_exact(const Polynomial& g) const {
  check_compatible(g);
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const Field& field = ring_->field();
  Polynomial quotient(ring_);
  Polynomial rest = *this;
  const Term& lg = g.leading();
  FieldElem lg_inv = field.inv(lg.coeff);
  while (!rest.is_zero()) {
    const Term& lr = rest.leading();
    if (!lg.mono.divides(lr.mono)) throw InvalidArgument("polynomial division is not exact");
    Monomial m = lr.mono / lg.mono;
    FieldElem c = field.mul(lr.coeff, lg_inv);
    quotient = quotient + monomial(ring_, m, c);
    rest = rest - g.mul_term(m, c);
  }
  return quotient;
}

FieldElem Polynomial::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != ring_->nvars()) throw ArityMismatch("evaluation point has the wrong dimension");
  const Field& field = ring_->field();
  FieldElem sum(0);
  for (const auto& t : terms_) {
    FieldElem v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v = field.mul(v, field.from_rational(point[i]));
    sum = field.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::map_into(const RingPtr& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars()) throw ArityMismatch("variable map has the wrong size");
  if (!(target->field() == ring_->field())) throw FieldMismatch("cannot map between different fields");
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (term.mono[i] == 0) continue;
      if (var_map[i] >= target->nvars()) throw ArityMismatch("variable map points outside the target ring");
      m.set(var_map[i], m[var_map[i]] + term.mono[i]);
    }
    t.push_back({m, term.coeff});
  }
  return from_terms(target, std::move(t));
}

Polynomial Polynomial::reorder(const RingPtr& target) const {
  if (target->names() != ring_->names()) throw ArityMismatch("reorder requires identical variables");
  if (!(target->field() == ring_->field())) throw FieldMismatch("cannot reorder across fields");
  return from_terms(target, terms_);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_->names();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff < 0;
    mpq_class mag = negative ? mpq_class(-t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.ring_ != g.ring_ && !f.ring_->same_as(*g.ring_)) return false;
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (!(f.terms_[i].mono == g.terms_[i].mono) || f.terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

bool canonical_less(const Polynomial& f, const Polynomial& g) {
  const MonomialOrder& order = f.ring()->order();
  const auto& a = f.terms();
  const auto& b = g.terms();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto c = order.compare_unchecked(a[i].mono, b[i].mono);
    if (c != 0) return c < 0;
    if (a[i].coeff != b[i].coeff) return a[i].coeff < b[i].coeff;
  }
  return a.size() < b.size();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      auto e = integer();
      if (!e) fail("expected exponent");
      if (e->fits_uint_p() == 0 || *e > 10000) fail("exponent out of range");
      base = base.pow(static_cast<unsigned>(e->get_ui()));
    }
    return base;
  }

  std::optional<mpz_class> integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(*integer());
      std::size_t save = pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        auto den = integer();
        if (!den) fail("expected denominator");
        if (*den == 0) fail("zero denominator");
        value = mpq_class(value.get_num(), *den);
        value.canonicalize();
      } else {
        pos_ = save;
      }
      return Polynomial::constant(ring_, ring_->field().from_rational(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) { return PolyParser(text, ring).parse(); }

}  // namespace samuel
