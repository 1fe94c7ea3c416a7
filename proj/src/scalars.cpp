#include <gmpxx.h>

#include "hecke/errors.hpp"
#include "hecke/prime_field.hpp"
#include "hecke/rational.hpp"

namespace hecke {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int k) const {
  Rational base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.v_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.v_.get_den_mpz_t(), e);
  return Rational(mpq_class(num, den));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {
std::uint64_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(p) : r);
}
}  // namespace

Zp::Zp(long value, std::uint32_t p) : v_(0), p_(p) {
  if (p < 2) throw DomainError("prime field modulus must be at least 2");
  v_ = reduce(value, p);
}

std::uint32_t Zp::unify(Zp& a, Zp b, Zp& b_out) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
    throw ContextMismatch("prime field elements with moduli " + std::to_string(a.p_) + " and " +
                          std::to_string(b.p_));
  std::uint32_t p = a.p_ != 0 ? a.p_ : b.p_;
  if (p != 0) {
    if (a.p_ == 0) a = Zp(a.literal_, p);
    if (b.p_ == 0) b = Zp(b.literal_, p);
  }
  b_out = b;
  return p;
}

Zp Zp::operator-() const {
  if (p_ == 0) return Zp(-literal_);
  return Zp(-static_cast<long>(v_), p_);
}

Zp& Zp::operator+=(const Zp& o) {
  Zp b;
  if (unify(*this, o, b) == 0) {
    literal_ += b.literal_;
  } else {
    v_ = (v_ + b.v_) % p_;
  }
  return *this;
}

Zp& Zp::operator-=(const Zp& o) { return *this += -o; }

Zp& Zp::operator*=(const Zp& o) {
  Zp b;
  if (unify(*this, o, b) == 0) {
    literal_ *= b.literal_;
  } else {
    v_ = (v_ * b.v_) % p_;
  }
  return *this;
}

Zp& Zp::operator/=(const Zp& o) { return *this *= o.inverse(); }

Zp Zp::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in prime field");
  if (p_ == 0) {
    if (literal_ == 1 || literal_ == -1) return *this;
    throw ContextMismatch("inverting an integer literal outside a prime field");
  }
  return pow(static_cast<long>(p_) - 2);
}

Zp Zp::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (p_ == 0) {
    long r = 1;
    for (long i = 0; i < k; ++i) r *= literal_;
    return Zp(r);
  }
  std::uint64_t result = 1 % p_;
  std::uint64_t base = v_;
  while (k > 0) {
    if (k & 1) result = result * base % p_;
    base = base * base % p_;
    k >>= 1;
  }
  Zp z;
  z.p_ = p_;
  z.v_ = result;
  return z;
}

bool Zp::operator==(const Zp& o) const {
  if (p_ == o.p_) return p_ == 0 ? literal_ == o.literal_ : v_ == o.v_;
  if (p_ != 0 && o.p_ != 0) return false;
  std::uint32_t p = p_ != 0 ? p_ : o.p_;
  Zp a = p_ == 0 ? Zp(literal_, p) : *this;
  Zp b = o.p_ == 0 ? Zp(o.literal_, p) : o;
  return a.v_ == b.v_;
}

}  // namespace hecke
