#include "hecke/invariants.hpp"

#include "hecke/specialize.hpp"

namespace hecke {

JonesPolynomial::JonesPolynomial(Coefficients coeffs, int components) : components_(components) {
  for (auto& [e, c] : coeffs)
    if (sgn(c) != 0) coeffs_.emplace(e, std::move(c));
}

bool JonesPolynomial::in_t() const {
  for (const auto& [e, c] : coeffs_)
    if (e % 2 != 0) return false;
  return true;
}

std::string JonesPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  const bool t = in_t();
  const char* var = t ? "t" : "s";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int e = t ? it->first / 2 : it->first;
    mpz_class c = it->second;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (negative) out += '-';
    else if (!out.empty()) out += '+';
    if (e == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

RationalFunction homflypt(const BraidWord& b, MarkovTrace<RationalFunction>& trace) { return trace_of_braid(b, trace); }

RationalFunction homflypt(const BraidWord& b) {
  MarkovTrace<RationalFunction> trace(generic_hecke_algebra(1));
  return homflypt(b, trace);
}

JonesPolynomial jones_from_homflypt(const RationalFunction& p, int components) {
  const RationalFunction s = RationalFunction::variable(Var::s);
  Assignment<RationalFunction> subst{{Var::q1, -s}, {Var::q2, s * s * s}};
  RationalFunction v = specialize(p, subst);
  if (!v.is_laurent()) throw InvariantViolation("Jones substitution left a denominator: " + v.to_string());
  JonesPolynomial::Coefficients coeffs;
  for (const auto& term : v.numerator().terms()) {
    if (term.coeff.get_den() != 1) throw InvariantViolation("Jones substitution left a fractional coefficient");
    coeffs.emplace(term.mono.exponent(Var::s), term.coeff.get_num());
  }
  return JonesPolynomial(std::move(coeffs), components);
}

JonesPolynomial jones(const BraidWord& b, MarkovTrace<RationalFunction>& trace) {
  return jones_from_homflypt(homflypt(b, trace), closure_components(b));
}

JonesPolynomial jones(const BraidWord& b) {
  MarkovTrace<RationalFunction> trace(generic_hecke_algebra(1));
  return jones(b, trace);
}

}  // namespace hecke
