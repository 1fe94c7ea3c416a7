// Multivariate gcd over Q by recursion on the main variable: contents are
// handled recursively, primitive parts by a primitive pseudo-remainder
// sequence, and the innermost univariate case by Euclid over Q.

#include <algorithm>
#include <array>
#include <optional>
#include <utility>

#include "hecke/errors.hpp"
#include "hecke/laurent_poly.hpp"

namespace hecke {

namespace {

using UPoly = std::vector<LaurentPoly>;

std::optional<Var> main_var(const LaurentPoly& a, const LaurentPoly& b) {
  for (int i = kNumVars - 1; i >= 0; --i) {
    auto v = static_cast<Var>(i);
    if (a.uses(v) || b.uses(v)) return v;
  }
  return std::nullopt;
}

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly coefficients_in(const LaurentPoly& p, Var v) {
  std::vector<std::vector<LaurentPoly::Term>> buckets(static_cast<std::size_t>(p.max_degree(v)) + 1);
  for (const auto& t : p.terms()) {
    int e = t.mono.exponent(v);
    buckets[static_cast<std::size_t>(e)].push_back({t.mono / Monomial::variable(v, e), t.coeff});
  }
  UPoly out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(LaurentPoly::from_terms(std::move(b)));
  trim(out);
  return out;
}

LaurentPoly from_coefficients(const UPoly& c, Var v) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Monomial x = Monomial::variable(v, static_cast<int>(k));
    for (const auto& t : c[k].terms()) terms.push_back({t.mono * x, t.coeff});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Primitive integer polynomial with positive leading coefficient.
void make_primitive(QPoly& p) {
  if (p.empty()) return;
  mpz_class den = 1, num = 0;
  for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
  for (const auto& c : p) num = gcd(num, mpz_class(c.get_num()));
  mpq_class f(den, num);
  if (sgn(p.back()) < 0) f = -f;
  for (auto& c : p) c *= f;
}

// Euclid with integer pseudo-remainders; rational Euclid blows up in size.
QPoly q_gcd(QPoly a, QPoly b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
      mpq_class la = a.back();
      std::size_t shift = a.size() - 1 - db;
      for (auto& c : a) c *= b.back();
      for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
      trim(a);
      make_primitive(a);
    }
    std::swap(a, b);
  }
  mpq_class lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

mpq_class evaluate(const LaurentPoly& p, const std::array<mpq_class, kNumVars>& at) {
  mpq_class sum = 0;
  for (const auto& t : p.terms()) {
    mpq_class term = t.coeff;
    for (int i = 0; i < kNumVars; ++i) {
      int e = t.mono.exponent(static_cast<Var>(i));
      if (e == 0) continue;
      mpq_class x = at[static_cast<std::size_t>(i)];
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      term *= e > 0 ? mpq_class(num, den) : mpq_class(den, num);
    }
    sum += term;
  }
  return sum;
}

// True when a and b (primitive in the main variable) certainly share no
// factor of positive degree in it. A gcd of degree k in the main variable
// keeps degree k at any point where the leading coefficients survive, so a
// constant gcd at such a point settles it.
bool coprime_by_specialization(const UPoly& a, const UPoly& b) {
  static const int points[][kNumVars] = {{2, 3, 5, 7}, {-3, 5, -7, 11}, {7, -2, 3, -5}};
  for (const auto& pt : points) {
    std::array<mpq_class, kNumVars> at;
    for (int i = 0; i < kNumVars; ++i) at[static_cast<std::size_t>(i)] = pt[i];
    QPoly qa, qb;
    for (const auto& c : a) qa.push_back(evaluate(c, at));
    for (const auto& c : b) qb.push_back(evaluate(c, at));
    if (sgn(qa.back()) == 0 || sgn(qb.back()) == 0) continue;
    return q_gcd(std::move(qa), std::move(qb)).size() == 1;
  }
  return false;
}

LaurentPoly gcd_core(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_of(const UPoly& c) {
  std::vector<const LaurentPoly*> order;
  for (const auto& coef : c)
    if (!coef.is_zero()) order.push_back(&coef);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->size() < y->size(); });
  LaurentPoly g;
  for (const auto* coef : order) {
    g = gcd_core(g, *coef);
    if (g.is_constant() && !g.is_zero()) return LaurentPoly(1);
  }
  return g;
}

UPoly divided(UPoly c, const LaurentPoly& d) {
  if (d.is_one()) return c;
  for (auto& coef : c) coef = divide_exact(coef, d);
  return c;
}

UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const LaurentPoly& lb = b.back();
  while (a.size() >= b.size()) {
    LaurentPoly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& coef : a) coef = coef * lb;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
    trim(a);
  }
  return a;
}

LaurentPoly gcd_core(const LaurentPoly& a_in, const LaurentPoly& b_in) {
  if (a_in.is_zero()) return b_in;
  if (b_in.is_zero()) return a_in;
  if (a_in.is_constant() || b_in.is_constant()) return LaurentPoly(1);

  Monomial ma = a_in.min_monomial();
  Monomial mb = b_in.min_monomial();
  Monomial gm = Monomial::gcd(ma, mb);
  LaurentPoly a = a_in.times(Monomial{} / ma);
  LaurentPoly b = b_in.times(Monomial{} / mb);
  LaurentPoly mono = LaurentPoly::monomial(gm);
  if (a.is_constant() || b.is_constant()) return mono;

  Var v = *main_var(a, b);
  if (!a.uses(v)) return mono * gcd_core(a, content_of(coefficients_in(b, v)));
  if (!b.uses(v)) return mono * gcd_core(content_of(coefficients_in(a, v)), b);

  UPoly ca = coefficients_in(a, v);
  UPoly cb = coefficients_in(b, v);
  LaurentPoly conta = content_of(ca);
  LaurentPoly contb = content_of(cb);
  ca = divided(std::move(ca), conta);
  cb = divided(std::move(cb), contb);
  LaurentPoly content = gcd_core(conta, contb);

  bool univariate = true;
  for (const auto* side : {&ca, &cb})
    for (const auto& coef : *side) univariate = univariate && coef.is_constant();

  LaurentPoly primitive;
  if (univariate) {
    QPoly qa, qb;
    for (const auto& coef : ca) qa.push_back(coef.constant_value());
    for (const auto& coef : cb) qb.push_back(coef.constant_value());
    QPoly g = q_gcd(std::move(qa), std::move(qb));
    UPoly gu;
    for (const auto& c : g) gu.emplace_back(c);
    primitive = from_coefficients(gu, v);
  } else if (coprime_by_specialization(ca, cb)) {
    primitive = LaurentPoly(1);
  } else {
    if (ca.size() < cb.size()) std::swap(ca, cb);
    while (true) {
      UPoly r = pseudo_remainder(ca, cb);
      if (r.empty()) break;
      if (r.size() == 1) {
        cb = UPoly{LaurentPoly(1)};
        break;
      }
      ca = std::move(cb);
      cb = divided(r, content_of(r));
    }
    primitive = from_coefficients(cb, v);
  }
  return mono * content * primitive;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly g = gcd_core(a, b);
  if (g.is_zero()) return g;
  return g.times(normalize_factor(g));
}

}  // namespace hecke
