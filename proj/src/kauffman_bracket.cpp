#include "hecke/kauffman_bracket.hpp"

#include <numeric>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using Poly = std::map<int, std::int64_t>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

class DisjointSets {
 public:
  explicit DisjointSets(int size) : parent_(static_cast<std::size_t>(size)) {
    std::iota(parent_.begin(), parent_.end(), 0);
    classes_ = size;
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[static_cast<std::size_t>(a)] = b;
      --classes_;
    }
  }
  int classes() const { return classes_; }

 private:
  std::vector<int> parent_;
  int classes_;
};

// Endpoints live on horizontal lines 0..c between crossings, positions
// 0..n-1. Closing the braid identifies line c with line 0.
int count_loops(int strands, const std::vector<int>& letters, std::uint32_t vertical_mask) {
  const int c = static_cast<int>(letters.size());
  auto point = [&](int line, int pos) { return (line == c ? 0 : line) * strands + pos; };
  DisjointSets sets(c * strands == 0 ? strands : c * strands);
  for (int k = 0; k < c; ++k) {
    int i = (letters[static_cast<std::size_t>(k)] < 0 ? -letters[static_cast<std::size_t>(k)] : letters[static_cast<std::size_t>(k)]) - 1;
    bool vertical = (vertical_mask >> k) & 1u;
    for (int pos = 0; pos < strands; ++pos) {
      if (!vertical && (pos == i || pos == i + 1)) continue;
      sets.join(point(k, pos), point(k + 1, pos));
    }
    if (!vertical) {
      sets.join(point(k, i), point(k, i + 1));
      sets.join(point(k + 1, i), point(k + 1, i + 1));
    }
  }
  return sets.classes();
}

}  // namespace

std::string BracketPolynomial::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    auto [e, c] = *it;
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "A";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

BracketPolynomial kauffman_bracket_oracle(const BraidWord& b, int max_crossings) {
  const auto& letters = b.letters();
  const int c = static_cast<int>(letters.size());
  if (c > max_crossings || c > 30)
    throw DomainError("bracket state sum limited to " + std::to_string(max_crossings) + " crossings");

  const Poly loop_value{{2, -1}, {-2, -1}};
  std::vector<Poly> loop_powers{Poly{{0, 1}}};

  Poly total;
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    // bit k set: crossing k is smoothed vertically
    int a_count = 0;
    for (int k = 0; k < c; ++k) {
      bool vertical = (state >> k) & 1u;
      bool positive = letters[static_cast<std::size_t>(k)] > 0;
      a_count += vertical != positive;
    }
    int loops = count_loops(b.strands(), letters, state);
    while (static_cast<int>(loop_powers.size()) < loops) loop_powers.push_back(multiply(loop_powers.back(), loop_value));
    int shift = a_count - (c - a_count);
    for (const auto& [e, coeff] : loop_powers[static_cast<std::size_t>(loops - 1)]) total[e + shift] += coeff;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return BracketPolynomial{total};
}

JonesPolynomial jones_via_bracket(const BraidWord& b, int max_crossings) {
  Poly bracket = kauffman_bracket_oracle(b, max_crossings).coeffs;
  int w = 0;
  for (int j : b.letters()) w += j > 0 ? 1 : -1;
  // (-A^-3)^(-w) = (-1)^w A^(3w)
  std::int64_t sign = (w % 2 == 0) ? 1 : -1;
  JonesPolynomial::Coefficients coeffs;
  for (const auto& [e, c] : bracket) {
    int exponent = e + 3 * w;
    if (exponent % 2 != 0) throw InvariantViolation("odd power of A in a normalized bracket");
    coeffs.emplace(exponent / 2, mpz_class(static_cast<long>(sign * c)));
  }
  int components = 0;
  {
    // cycles of the underlying permutation, computed locally
    std::vector<int> image(static_cast<std::size_t>(b.strands()));
    std::iota(image.begin(), image.end(), 0);
    for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) {
      int i = (*it < 0 ? -*it : *it) - 1;
      for (auto& x : image) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
      }
    }
    std::vector<bool> seen(image.size());
    for (std::size_t s = 0; s < image.size(); ++s) {
      if (seen[s]) continue;
      ++components;
      for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(image[x])) seen[x] = true;
    }
  }
  return JonesPolynomial(std::move(coeffs), components);
}

}  // namespace hecke
