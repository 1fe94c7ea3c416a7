#include "hecke/rational_function.hpp"

#include "hecke/errors.hpp"

namespace hecke {

RationalFunction RationalFunction::canonicalize(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  RationalFunction r;
  if (num.is_zero()) return r;

  Monomial mn = num.min_monomial();
  Monomial md = den.min_monomial();
  LaurentPoly n = num.times(Monomial{} / mn);
  LaurentPoly d = den.times(Monomial{} / md);
  Monomial shift = mn / md;

  if (d.is_constant()) {
    r.num_ = n.times(shift).times(1 / d.constant_value());
    return r;
  }
  LaurentPoly g = poly_gcd(n, d);
  if (!g.is_constant()) {
    n = divide_exact(n, g);
    d = divide_exact(d, g);
  }
  mpq_class f = normalize_factor(d);
  // d may have become a constant after cancellation
  if (d.is_constant()) {
    r.num_ = n.times(shift).times(1 / d.constant_value());
    return r;
  }
  r.num_ = n.times(shift).times(f);
  r.den_ = d.times(f);
  return r;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = canonicalize(num_ + o.num_, den_);
  if (o.den_.is_one()) return *this = canonicalize(num_ + o.num_ * den_, den_);
  if (den_.is_one()) return *this = canonicalize(num_ * o.den_ + o.num_, o.den_);
  LaurentPoly g = poly_gcd(den_, o.den_);
  LaurentPoly a = divide_exact(den_, g);
  LaurentPoly b = divide_exact(o.den_, g);
  return *this = canonicalize(num_ * b + o.num_ * a, a * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.is_constant()) {
    num_ = num_.times(o.num_.constant_value());
    return *this;
  }
  if (is_constant()) {
    mpq_class c = num_.constant_value();
    *this = o;
    num_ = num_.times(c);
    return *this;
  }
  return *this = canonicalize(num_ * o.num_, den_ * o.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return canonicalize(den_, num_);
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction result(1);
  RationalFunction base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto wrap = [](const LaurentPoly& p) { return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string(); };
  return wrap(num_) + " / " + wrap(den_);
}

}  // namespace hecke
