#include "hecke/monomial.hpp"

#include <algorithm>
#include <limits>

#include "hecke/errors.hpp"

namespace hecke {

namespace {
constexpr std::array<std::string_view, kNumVars> kNames = {"q1", "q2", "q", "s"};
}

std::string_view var_name(Var v) { return kNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (kNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

Monomial::Exponent Monomial::checked(int e) {
  if (e > std::numeric_limits<Exponent>::max() || e < std::numeric_limits<Exponent>::min())
    throw DomainError("monomial exponent overflow");
  return static_cast<Exponent>(e);
}

Monomial Monomial::variable(Var v, int power) {
  Monomial m;
  m.exps_[static_cast<int>(v)] = checked(power);
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_polynomial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e >= 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps_[i] = checked(int{exps_[i]} + other.exps_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps_[i] = checked(int{exps_[i]} - other.exps_[i]);
  return r;
}

Monomial Monomial::pow(int k) const {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps_[i] = checked(int{exps_[i]} * k);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = total_degree() <=> other.total_degree(); c != 0) return c;
  for (int i = 0; i < kNumVars; ++i)
    if (auto c = exps_[i] <=> other.exps_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0;
  for (auto e : exps_) h = (h << 16) | static_cast<std::uint16_t>(e);
  return std::hash<std::uint64_t>{}(h);
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kNames[i];
    if (exps_[i] != 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

}  // namespace hecke
