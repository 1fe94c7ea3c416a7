#include "hecke/quantum_e.hpp"

#include "hecke/errors.hpp"

namespace hecke {

// Over a field of characteristic zero the partial sums vanish only at q = -1
// among rationals; non-constant rational functions are never roots of unity.
QuantumE quantum_e(const Rational& q) {
  if (q.is_zero()) throw DomainError("quantum characteristic of a non-unit");
  return q == Rational(-1) ? QuantumE::finite(2) : QuantumE::infinite();
}

QuantumE quantum_e(const RationalFunction& q) {
  if (q.is_zero()) throw DomainError("quantum characteristic of a non-unit");
  if (!q.is_constant()) return QuantumE::infinite();
  return quantum_e(Rational(q.numerator().constant_value()));
}

QuantumE quantum_e(const Zp& q) {
  if (q.is_zero()) throw DomainError("quantum characteristic of a non-unit");
  const std::uint32_t p = q.modulus();
  if (p == 0) throw ContextMismatch("quantum characteristic of an unreduced literal");
  // The partial sums are periodic with period dividing p * ord(q) <= p * (p - 1).
  const long bound = static_cast<long>(p) * static_cast<long>(p);
  Zp sum(0, p);
  Zp power(1, p);
  for (long e = 1; e <= bound; ++e) {
    sum += power;
    if (sum.is_zero()) return QuantumE::finite(static_cast<int>(e));
    power *= q;
  }
  return QuantumE::infinite();
}

}  // namespace hecke
