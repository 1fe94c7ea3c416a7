#pragma once

#include <map>

#include "hecke/errors.hpp"
#include "hecke/field.hpp"

namespace hecke {

template <class Target>
using Assignment = std::map<Var, Target>;

namespace detail {

template <class Target>
Target evaluate(const LaurentPoly& p, const Assignment<Target>& values, const FieldOf<Target>& field,
                std::map<std::pair<Var, int>, Target>& powers) {
  Target sum = field.from_integer(0);
  for (const auto& term : p.terms()) {
    Target value = field.from_rational(term.coeff);
    for (int i = 0; i < kNumVars; ++i) {
      int e = term.mono.exponent(i);
      if (e == 0) continue;
      auto v = static_cast<Var>(i);
      auto it = values.find(v);
      if (it == values.end()) throw DomainError("no value assigned to variable " + std::string(var_name(v)));
      auto key = std::make_pair(v, e);
      auto cached = powers.find(key);
      if (cached == powers.end()) cached = powers.emplace(key, it->second.pow(e)).first;
      value = value * cached->second;
    }
    sum = sum + value;
  }
  return sum;
}

}  // namespace detail

/// Image of x under the ring homomorphism fixing Q and sending each assigned
/// variable to its value. Throws DivisionByZero when the denominator vanishes.
template <class Target>
Target specialize(const RationalFunction& x, const Assignment<Target>& values,
                  const FieldOf<Target>& field = FieldOf<Target>{}) {
  std::map<std::pair<Var, int>, Target> powers;
  Target num = detail::evaluate(x.numerator(), values, field, powers);
  if (x.is_laurent()) return num;
  Target den = detail::evaluate(x.denominator(), values, field, powers);
  if (is_zero(den)) throw DivisionByZero("denominator " + x.denominator().to_string() + " vanishes under specialization");
  return num / den;
}

}  // namespace hecke
