#include <cstdint>
#include <optional>
#include <vector>

#include "hecke/specht.hpp"

namespace hecke::detail {

namespace {

constexpr std::uint64_t kPrime = 2147483629;
constexpr int kMaxHalfDegree = 128;

std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }
std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t power(std::uint64_t a, long e) {
  if (e < 0) return power(power(a, kPrime - 2), -e);
  std::uint64_t r = 1;
  for (; e > 0; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

std::uint64_t inv(std::uint64_t a) { return power(a, static_cast<long>(kPrime - 2)); }

std::optional<std::uint64_t> residue(const mpq_class& c) {
  std::uint64_t den = mpz_fdiv_ui(c.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mul(mpz_fdiv_ui(c.get_num_mpz_t(), kPrime), inv(den));
}

// Smallest-height fraction congruent to u, if numerator and denominator
// both fit below sqrt(p/2).
std::optional<mpq_class> reconstruct(std::uint64_t u) {
  const std::int64_t bound = 32767;
  std::int64_t r0 = kPrime, r1 = static_cast<std::int64_t>(u), t0 = 0, t1 = 1;
  while (r1 > bound) {
    std::int64_t quot = r0 / r1;
    std::int64_t r2 = r0 - quot * r1, t2 = t0 - quot * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (t1 == 0 || t1 > bound || t1 < -bound) return std::nullopt;
  mpq_class value(r1, t1);
  value.canonicalize();
  if (value.get_den() != (t1 < 0 ? -t1 : t1)) return std::nullopt;
  return value;
}

// Laurent polynomial in q reduced mod p, as (exponent, residue) pairs.
using Residues = std::vector<std::pair<int, std::uint64_t>>;

std::optional<Residues> residues(const RationalFunction& x) {
  if (!x.is_laurent()) return std::nullopt;
  Residues out;
  for (const auto& term : x.numerator().terms()) {
    for (int i = 0; i < kNumVars; ++i)
      if (static_cast<Var>(i) != Var::q && term.mono.exponent(i) != 0) return std::nullopt;
    auto c = residue(term.coeff);
    if (!c) return std::nullopt;
    out.emplace_back(term.mono.exponent(Var::q), *c);
  }
  return out;
}

struct Sample {
  std::uint64_t point;
  std::vector<std::uint64_t> reduced;  // row-major, rank x ambient
};

// Gauss-Jordan with leading pivots at q = point. Empty when the rank drops.
std::optional<Sample> sample(const std::vector<std::vector<std::pair<int, Residues>>>& rows, int ambient,
                             std::uint64_t point, std::vector<int>& pivots) {
  const auto k = rows.size();
  const auto n = static_cast<std::size_t>(ambient);
  std::vector<std::uint64_t> a(k * n, 0);
  for (std::size_t r = 0; r < k; ++r)
    for (const auto& [col, poly] : rows[r]) {
      std::uint64_t v = 0;
      for (const auto& [e, c] : poly) v = (v + mul(c, power(point, e))) % kPrime;
      a[r * n + static_cast<std::size_t>(col)] = v;
    }
  std::vector<int> found;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < k; ++col) {
    std::size_t pick = rank;
    while (pick < k && a[pick * n + col] == 0) ++pick;
    if (pick == k) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a[pick * n + j], a[rank * n + j]);
    std::uint64_t f = inv(a[rank * n + col]);
    for (std::size_t j = 0; j < n; ++j) a[rank * n + j] = mul(a[rank * n + j], f);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == rank || a[r * n + col] == 0) continue;
      std::uint64_t g = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) a[r * n + j] = sub(a[r * n + j], mul(g, a[rank * n + j]));
    }
    found.push_back(static_cast<int>(col));
    ++rank;
  }
  if (rank < k) return std::nullopt;
  if (pivots.empty()) pivots = found;
  if (found != pivots) return std::nullopt;
  return Sample{point, std::move(a)};
}

// Newton interpolation through (xs[i], ys[i]); coefficients low degree first.
std::vector<std::uint64_t> interpolate(const std::vector<std::uint64_t>& xs, std::vector<std::uint64_t> ys) {
  const std::size_t m = xs.size();
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = m - 1; i >= j; --i) ys[i] = mul(sub(ys[i], ys[i - 1]), inv(sub(xs[i], xs[i - j])));
  std::vector<std::uint64_t> poly{ys[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    poly.insert(poly.begin(), 0);
    for (std::size_t d = 0; d + 1 < poly.size(); ++d) poly[d] = sub(poly[d], mul(xs[i], poly[d + 1]));
    poly[0] = (poly[0] + ys[i]) % kPrime;
  }
  return poly;
}

std::uint64_t evaluate(const std::vector<std::uint64_t>& poly, std::uint64_t x) {
  std::uint64_t v = 0;
  for (std::size_t d = poly.size(); d-- > 0;) v = (mul(v, x) + poly[d]) % kPrime;
  return v;
}

}  // namespace

std::optional<std::map<int, SparseVector<RationalFunction>>> fit_reduced_rows(
    const std::vector<SparseVector<RationalFunction>>& vectors, int ambient) {
  std::map<int, SparseVector<RationalFunction>> rows;
  if (vectors.empty()) return rows;

  std::vector<std::vector<std::pair<int, Residues>>> images;
  for (const auto& v : vectors) {
    auto& image = images.emplace_back();
    for (const auto& [col, x] : v) {
      auto r = residues(x);
      if (!r) return std::nullopt;
      image.emplace_back(col, std::move(*r));
    }
  }

  const std::size_t k = vectors.size();
  const auto n = static_cast<std::size_t>(ambient);
  std::vector<int> pivots;
  std::vector<Sample> samples;
  std::uint64_t next_point = 2;
  auto gather = [&](std::size_t count) {
    for (int misses = 0; samples.size() < count; ++next_point)
      if (auto s = sample(images, ambient, next_point, pivots)) {
        samples.push_back(std::move(*s));
      } else if (++misses > 64) {
        return false;
      }
    return true;
  };

  for (int half = 4; half <= kMaxHalfDegree; half *= 2) {
    // entries times q^half are polynomials of degree <= 2 half; one extra sample checks the fit
    const auto m = static_cast<std::size_t>(2 * half + 1);
    if (!gather(m + 1)) return std::nullopt;
    std::vector<std::uint64_t> xs(m), shift(m + 1);
    for (std::size_t j = 0; j <= m; ++j) shift[j] = power(samples[j].point, half);
    for (std::size_t j = 0; j < m; ++j) xs[j] = samples[j].point;
    const Sample& check = samples[m];

    rows.clear();
    bool fits = true;
    for (std::size_t r = 0; r < k && fits; ++r) {
      SparseVector<RationalFunction> row;
      for (std::size_t col = 0; col < n && fits; ++col) {
        std::vector<std::uint64_t> ys(m);
        bool zero = true;
        for (std::size_t j = 0; j < m; ++j) {
          ys[j] = mul(samples[j].reduced[r * n + col], shift[j]);
          zero = zero && ys[j] == 0 && check.reduced[r * n + col] == 0;
        }
        if (zero) continue;
        auto poly = interpolate(xs, std::move(ys));
        if (evaluate(poly, check.point) != mul(check.reduced[r * n + col], shift[m])) {
          fits = false;
          break;
        }
        std::vector<LaurentPoly::Term> terms;
        for (std::size_t d = 0; d < poly.size(); ++d) {
          if (poly[d] == 0) continue;
          auto c = reconstruct(poly[d]);
          if (!c) return std::nullopt;
          terms.push_back({Monomial::variable(Var::q, static_cast<int>(d) - half), *c});
        }
        row.emplace(static_cast<int>(col), RationalFunction(LaurentPoly::from_terms(std::move(terms))));
      }
      if (fits) rows.emplace(pivots[r], std::move(row));
    }
    if (!fits) continue;

    // Each input must be the combination of rows read off its pivot entries;
    // with k independent inputs and k rows the spans then agree.
    for (const auto& v : vectors) {
      SparseVector<RationalFunction> rest = v;
      for (const auto& [pivot, row] : rows)
        if (auto it = v.find(pivot); it != v.end()) subtract_multiple(rest, it->second, row);
      if (!rest.empty()) return std::nullopt;
    }
    return rows;
  }
  return std::nullopt;
}

}  // namespace hecke::detail
