#pragma once

#include <gmpxx.h>

#include <string>

#include "hecke/errors.hpp"

namespace hecke {

/// Arbitrary-precision rational scalar.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(long num, long den);

  const mpq_class& value() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const;
  Rational pow(int k) const;

  bool operator==(const Rational& o) const { return v_ == o.v_; }

  std::string to_string() const { return v_.get_str(); }

 private:
  mpq_class v_{0};
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_one(const Rational& x) { return x.is_one(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }

}  // namespace hecke
