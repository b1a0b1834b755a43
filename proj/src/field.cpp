#include "samuel/field.hpp"

#include "samuel/errors.hpp"

namespace samuel {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p < 32003 || !is_prime(p))
    throw InvalidArgument("prime field requires a prime p >= 32003, got " + std::to_string(p));
  return Field(p);
}

void Field::reduce(FieldElem& a) const {
  if (p_ == 0) return;
  mpz_class r = a.get_num() % p_;
  if (r < 0) r += p_;
  a = r;
}

FieldElem Field::from_int(long v) const {
  FieldElem r(v);
  reduce(r);
  return r;
}

FieldElem Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return q;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw InvalidArgument("denominator divisible by the characteristic");
  mpz_class num = q.get_num() % p_;
  mpz_class den_inv;
  mpz_class modulus(p_);
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  FieldElem r(mpz_class(num * den_inv));
  reduce(r);
  return r;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a + b;
  reduce(r);
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a - b;
  reduce(r);
  return r;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = a * b;
  reduce(r);
  return r;
}

FieldElem Field::div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

FieldElem Field::neg(const FieldElem& a) const {
  FieldElem r = -a;
  reduce(r);
  return r;
}

FieldElem Field::inv(const FieldElem& a) const {
  if (a == 0) throw InvalidArgument("division by zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class modulus(p_);
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), modulus.get_mpz_t());
  return FieldElem(r);
}

void Field::sub_mul(FieldElem& a, const FieldElem& b, const FieldElem& c) const {
  if (p_ == 0) {
    a -= b * c;
    return;
  }
  mpz_class t = a.get_num() - b.get_num() * c.get_num();
  t %= p_;
  if (t < 0) t += p_;
  a = t;
}

std::string Field::to_string(const FieldElem& a) const { return a.get_str(); }

std::string Field::describe() const { return p_ == 0 ? "Q" : "Fp " + std::to_string(p_); }

}  // namespace samuel
