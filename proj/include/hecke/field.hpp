#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include "hecke/prime_field.hpp"
#include "hecke/rational.hpp"
#include "hecke/rational_function.hpp"

namespace hecke {

/// Exact field scalar: ring operators, division, integer literals and the
/// free functions is_zero / is_one / inverse / to_string.
template <class S>
concept FieldScalar = std::regular<S> && std::constructible_from<S, long> && requires(const S a, const S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { is_one(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::convertible_to<S>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

/// The field of rational functions over Q in the fixed variable alphabet.
struct RationalFunctionField {
  using Scalar = RationalFunction;
  Scalar from_integer(long v) const { return Scalar(v); }
  Scalar from_rational(const mpq_class& v) const { return Scalar(v); }
  /// Identity; every parsed expression already lives here.
  Scalar from_expression(const RationalFunction& x) const { return x; }
  std::string name() const { return "Q(q1,q2,q,s)"; }
  bool operator==(const RationalFunctionField&) const = default;
};

struct RationalField {
  using Scalar = Rational;
  Scalar from_integer(long v) const { return Scalar(v); }
  Scalar from_rational(const mpq_class& v) const { return Scalar(v); }
  /// Throws DomainError unless x is a constant.
  Scalar from_expression(const RationalFunction& x) const;
  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;
};

class PrimeField {
 public:
  using Scalar = Zp;
  /// Throws DomainError unless p is prime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  Scalar from_integer(long v) const { return Scalar(v, p_); }
  /// Throws DivisionByZero if p divides the denominator.
  Scalar from_rational(const mpq_class& v) const;
  Scalar from_expression(const RationalFunction& x) const;
  std::string name() const { return "F" + std::to_string(p_); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

template <class S>
struct FieldFor;
template <>
struct FieldFor<RationalFunction> {
  using type = RationalFunctionField;
};
template <>
struct FieldFor<Rational> {
  using type = RationalField;
};
template <>
struct FieldFor<Zp> {
  using type = PrimeField;
};

template <class S>
using FieldOf = typename FieldFor<S>::type;

}  // namespace hecke
