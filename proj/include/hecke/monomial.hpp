#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hecke {

/// The fixed ordered alphabet of formal variables. Earlier variables are
/// larger in lexicographic comparisons.
enum class Var : std::uint8_t { q1 = 0, q2 = 1, q = 2, s = 3 };

inline constexpr int kNumVars = 4;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Laurent monomial q1^a q2^b q^c s^d with signed exponents.
class Monomial {
 public:
  using Exponent = std::int16_t;

  constexpr Monomial() = default;

  static Monomial variable(Var v, int power = 1);

  int exponent(Var v) const { return exps_[static_cast<int>(v)]; }
  int exponent(int i) const { return exps_[i]; }
  int total_degree() const;
  bool is_one() const;
  /// All exponents nonnegative.
  bool is_polynomial() const;

  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;
  Monomial pow(int k) const;

  /// Componentwise minimum / maximum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;

  /// Graded lexicographic order.
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::size_t hash() const;

  /// `q1^2*q2`, empty string for the unit monomial.
  std::string to_string() const;

 private:
  static Exponent checked(int e);

  std::array<Exponent, kNumVars> exps_{};
};

}  // namespace hecke
