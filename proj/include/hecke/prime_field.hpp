#pragma once

#include <cstdint>
#include <string>

namespace hecke {

bool is_prime(std::uint64_t n);

/// Element of Z/pZ. An element with modulus 0 is an integer literal that
/// adopts the modulus of the first element it meets; this lets generic code
/// write `Scalar(0)` without a field in hand. Mixing two different nonzero
/// moduli throws ContextMismatch.
class Zp {
 public:
  Zp() = default;
  Zp(long literal) : literal_(literal) {}  // NOLINT(google-explicit-constructor)
  Zp(long value, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  /// Representative in [0, p); the literal itself when the modulus is unset.
  long value() const { return p_ == 0 ? literal_ : static_cast<long>(v_); }

  bool is_zero() const { return p_ == 0 ? literal_ == 0 : v_ == 0; }
  bool is_one() const { return p_ == 0 ? literal_ == 1 : v_ == 1; }

  Zp operator-() const;
  Zp& operator+=(const Zp& o);
  Zp& operator-=(const Zp& o);
  Zp& operator*=(const Zp& o);
  Zp& operator/=(const Zp& o);
  friend Zp operator+(Zp a, const Zp& b) { return a += b; }
  friend Zp operator-(Zp a, const Zp& b) { return a -= b; }
  friend Zp operator*(Zp a, const Zp& b) { return a *= b; }
  friend Zp operator/(Zp a, const Zp& b) { return a /= b; }

  Zp inverse() const;
  Zp pow(long k) const;

  bool operator==(const Zp& o) const;

  std::string to_string() const { return std::to_string(value()); }

 private:
  /// Brings both operands to a common modulus.
  static std::uint32_t unify(Zp& a, Zp b, Zp& b_out);

  std::uint64_t v_ = 0;
  std::uint32_t p_ = 0;
  long literal_ = 0;
};

inline bool is_zero(const Zp& x) { return x.is_zero(); }
inline bool is_one(const Zp& x) { return x.is_one(); }
inline Zp inverse(const Zp& x) { return x.inverse(); }
inline std::string to_string(const Zp& x) { return x.to_string(); }

}  // namespace hecke
