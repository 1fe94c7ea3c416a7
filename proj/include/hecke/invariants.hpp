#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "hecke/braid_word.hpp"
#include "hecke/markov_trace.hpp"
#include "hecke/rational_function.hpp"

namespace hecke {

/// Laurent polynomial in s = t^(1/2) with integer coefficients, plus the
/// component count of the link it came from.
class JonesPolynomial {
 public:
  using Coefficients = std::map<int, mpz_class>;  // s-exponent -> coefficient

  JonesPolynomial() = default;
  JonesPolynomial(Coefficients coeffs, int components);

  const Coefficients& coefficients() const { return coeffs_; }
  int components() const { return components_; }
  /// True when every exponent of s is even, i.e. the polynomial lives in Z[t, 1/t].
  bool in_t() const;

  bool operator==(const JonesPolynomial&) const = default;

  /// In t when possible (`-t^4+t^3+t`), otherwise in s (`-s-s^-1`).
  std::string to_string() const;

 private:
  Coefficients coeffs_;
  int components_ = 1;
};

/// The Markov trace of the braid's image in H_n(q1, q2) over Q(q1, q2).
RationalFunction homflypt(const BraidWord& b);
RationalFunction homflypt(const BraidWord& b, MarkovTrace<RationalFunction>& trace);

/// homflypt with q1 -> -s, q2 -> s^3. Throws InvariantViolation if the
/// substitution leaves a denominator or a non-integer coefficient.
JonesPolynomial jones(const BraidWord& b);
JonesPolynomial jones(const BraidWord& b, MarkovTrace<RationalFunction>& trace);
JonesPolynomial jones_from_homflypt(const RationalFunction& p, int components);

}  // namespace hecke
