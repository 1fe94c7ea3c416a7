#pragma once

#include <optional>
#include <string>

#include "hecke/prime_field.hpp"
#include "hecke/rational.hpp"
#include "hecke/rational_function.hpp"

namespace hecke {

/// Smallest e >= 1 with 1 + q + ... + q^(e-1) = 0, or infinity.
class QuantumE {
 public:
  static QuantumE infinite() { return QuantumE(); }
  static QuantumE finite(int e) { return QuantumE(e); }

  bool is_infinite() const { return !e_.has_value(); }
  /// Requires a finite value.
  int value() const { return *e_; }
  std::string to_string() const { return e_ ? std::to_string(*e_) : "inf"; }

  bool operator==(const QuantumE&) const = default;

 private:
  QuantumE() = default;
  explicit QuantumE(int e) : e_(e) {}
  std::optional<int> e_;
};

QuantumE quantum_e(const Rational& q);
QuantumE quantum_e(const Zp& q);
QuantumE quantum_e(const RationalFunction& q);

}  // namespace hecke
