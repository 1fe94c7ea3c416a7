#include "hecke/laurent_poly.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

bool by_descending_mono(const LaurentPoly::Term& a, const LaurentPoly::Term& b) { return a.mono > b.mono; }

std::string coeff_string(const mpq_class& c) { return c.get_str(); }

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({Monomial{}, mpq_class(constant)});
}

LaurentPoly::LaurentPoly(const mpq_class& constant) {
  if (sgn(constant) != 0) terms_.push_back({Monomial{}, constant});
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpq_class& c) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int power) { return monomial(Monomial::variable(v, power)); }

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), by_descending_mono);
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool LaurentPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

mpq_class LaurentPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial is not a constant: " + to_string());
  return terms_.empty() ? mpq_class(0) : terms_[0].coeff;
}

Monomial LaurentPoly::min_monomial() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_) m = Monomial::gcd(m, t.mono);
  return m;
}

bool LaurentPoly::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_polynomial(); });
}

bool LaurentPoly::uses(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.mono.exponent(v) != 0; });
}

int LaurentPoly::max_degree(Var v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.mono.exponent(v) > d) d = t.mono.exponent(v);
    first = false;
  }
  return d;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly LaurentPoly::merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  LaurentPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->mono > j->mono)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->mono > i->mono) {
      r.terms_.push_back({j->mono, subtract ? mpq_class(-j->coeff) : j->coeff});
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(i->coeff - j->coeff) : mpq_class(i->coeff + j->coeff);
      if (sgn(c) != 0) r.terms_.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  return *this = merge(*this, o, false);
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  return *this = merge(*this, o, true);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times(a.terms_[0].mono).times(a.terms_[0].coeff);
  if (b.size() == 1) return a.times(b.terms_[0].mono).times(b.terms_[0].coeff);
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  if (m.is_one()) return *this;
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

LaurentPoly LaurentPoly::times(const mpq_class& c) const {
  if (sgn(c) == 0) return {};
  if (c == 1) return *this;
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (is_monomial()) {
    mpq_class c;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), terms_[0].coeff.get_num_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    mpz_pow_ui(den.get_mpz_t(), terms_[0].coeff.get_den_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
    c = k < 0 ? mpq_class(den, num) : mpq_class(num, den);
    c.canonicalize();
    return monomial(terms_[0].mono.pow(k), c);
  }
  if (k < 0) throw DomainError("negative power of a non-monomial Laurent polynomial");
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff) return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    std::string mono = t.mono.to_string();
    if (mono.empty()) {
      out += coeff_string(c);
    } else {
      if (c != 1) out += coeff_string(c) + '*';
      out += mono;
    }
  }
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (b.is_monomial()) {
    const auto& lt = b.leading_term();
    return a.times(Monomial{} / lt.mono).times(1 / lt.coeff);
  }
  if (a.is_zero()) return {};
  Monomial ma = a.min_monomial();
  Monomial mb = b.min_monomial();
  if (!ma.is_one() || !mb.is_one())
    return divide_exact(a.times(Monomial{} / ma), b.times(Monomial{} / mb)).times(ma / mb);
  const auto& lb = b.leading_term();
  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly rem = a;
  while (!rem.is_zero()) {
    const auto& lr = rem.leading_term();
    Monomial m = lr.mono / lb.mono;
    if (!m.is_polynomial() || rem.terms().back().mono > (b.terms().back().mono * m))
      throw InvariantViolation("inexact polynomial division");
    mpq_class c = lr.coeff / lb.coeff;
    quotient.push_back({m, c});
    rem -= b.times(m).times(c);
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

mpq_class normalize_factor(const LaurentPoly& p) {
  if (p.is_zero()) throw DivisionByZero("normalizing the zero polynomial");
  mpz_class den_lcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_class scaled = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  mpq_class f(den_lcm, num_gcd);
  f.canonicalize();
  if (sgn(p.leading_term().coeff) < 0) f = -f;
  return f;
}

}  // namespace hecke
