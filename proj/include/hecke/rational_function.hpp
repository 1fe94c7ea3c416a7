#pragma once

#include <string>

#include "hecke/laurent_poly.hpp"

namespace hecke {

/// Element of Q(q1, q2, q, s) in canonical form.
///
/// The numerator is a Laurent polynomial. The denominator is an ordinary
/// polynomial divisible by no variable, coprime to the numerator, with
/// coprime integer coefficients and positive graded-lex leading coefficient.
/// Equal values therefore have identical representations.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const mpq_class& c) : num_(c), den_(1) {}

  static RationalFunction variable(Var v) { return LaurentPoly::variable(v); }
  /// Throws DivisionByZero for a zero denominator.
  static RationalFunction canonicalize(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  /// `num` or `(num) / (den)`; multi-term parts are parenthesized.
  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_{1};
};

inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline bool is_one(const RationalFunction& x) { return x.is_one(); }
inline RationalFunction inverse(const RationalFunction& x) { return x.inverse(); }
inline std::string to_string(const RationalFunction& x) { return x.to_string(); }

}  // namespace hecke
