#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hecke/monomial.hpp"

namespace hecke {

/// Multivariate Laurent polynomial with rational coefficients.
///
/// Terms are kept sorted by descending graded-lex order of their monomials
/// and no stored coefficient is zero, so structural equality is value
/// equality.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    mpq_class coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const mpq_class& constant);

  static LaurentPoly monomial(const Monomial& m, const mpq_class& c = 1);
  static LaurentPoly variable(Var v, int power = 1);
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Requires is_constant().
  mpq_class constant_value() const;
  /// Requires nonzero.
  const Term& leading_term() const { return terms_.front(); }

  /// Componentwise minimum exponent over all terms; unit for zero.
  Monomial min_monomial() const;
  bool is_polynomial() const;
  bool uses(Var v) const;
  int max_degree(Var v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly times(const Monomial& m) const;
  LaurentPoly times(const mpq_class& c) const;
  /// k >= 0, or any k for a monomial.
  LaurentPoly pow(int k) const;

  bool operator==(const LaurentPoly& other) const;

  /// Terms in descending graded-lex order, e.g. `q1^2-3/2*q1*q2+1`.
  std::string to_string() const;

 private:
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract);

  std::vector<Term> terms_;
};

/// Exact quotient of polynomials; throws InvariantViolation when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor of two ordinary polynomials (no negative exponents),
/// normalized by `normalize_factor`. gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// The rational c such that c * p has coprime integer coefficients and a positive
/// leading coefficient. Requires p nonzero.
mpq_class normalize_factor(const LaurentPoly& p);

}  // namespace hecke
