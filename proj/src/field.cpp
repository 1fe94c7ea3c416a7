#include "hecke/field.hpp"

#include "hecke/errors.hpp"

namespace hecke {

Rational RationalField::from_expression(const RationalFunction& x) const {
  if (!x.is_constant()) throw DomainError("expected a rational constant, got " + x.to_string());
  return Rational(x.numerator().constant_value());
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("prime field modulus " + std::to_string(p) + " is not prime");
}

Zp PrimeField::from_rational(const mpq_class& v) const {
  mpz_class num = v.get_num() % p_;
  mpz_class den = v.get_den() % p_;
  if (den == 0) throw DivisionByZero("denominator " + v.get_den().get_str() + " vanishes mod " + std::to_string(p_));
  return Zp(num.get_si(), p_) / Zp(den.get_si(), p_);
}

Zp PrimeField::from_expression(const RationalFunction& x) const {
  if (!x.is_constant()) throw DomainError("expected a constant, got " + x.to_string());
  return from_rational(x.numerator().constant_value());
}

}  // namespace hecke
