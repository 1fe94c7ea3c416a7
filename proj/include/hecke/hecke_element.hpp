#pragma once

#include <map>
#include <string>

#include "hecke/errors.hpp"
#include "hecke/field.hpp"
#include "hecke/permutation.hpp"

namespace hecke {

/// Finitely supported linear combination sum c_w T_w of the standard basis
/// of H_n. No stored coefficient is zero; the zero element has empty support.
template <FieldScalar S>
class HeckeElement {
 public:
  using Scalar = S;
  using Support = std::map<Permutation, S>;

  explicit HeckeElement(int n = 1) : n_(n) {}

  int degree() const { return n_; }
  const Support& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of T_w, zero when w is outside the support.
  S coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const Permutation& w, const S& c) {
    if (w.degree() != n_) throw ContextMismatch("basis element of degree " + std::to_string(w.degree()) + " in H_" + std::to_string(n_));
    if (hecke::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second = it->second + c;
    if (hecke::is_zero(it->second)) terms_.erase(it);
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    check_degree(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    check_degree(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement operator-() const { return scaled(S(-1)); }

  HeckeElement scaled(const S& c) const {
    HeckeElement r(n_);
    if (hecke::is_zero(c)) return r;
    for (const auto& [w, x] : terms_) {
      S y = x * c;
      if (!hecke::is_zero(y)) r.terms_.emplace_hint(r.terms_.end(), w, std::move(y));
    }
    return r;
  }
  friend HeckeElement operator*(const S& c, const HeckeElement& a) { return a.scaled(c); }

  bool operator==(const HeckeElement& o) const {
    if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
    auto j = o.terms_.begin();
    for (auto i = terms_.begin(); i != terms_.end(); ++i, ++j)
      if (!(i->first == j->first) || !(i->second == j->second)) return false;
    return true;
  }

  /// `(q1+q2)*T[2,1] + (-q1*q2)*T[1,2]`: terms by descending (length, one-line).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      if (!is_one(it->second)) out += "(" + hecke::to_string(it->second) + ")*";
      out += "T" + it->first.to_string();
    }
    return out;
  }

 private:
  void check_degree(const HeckeElement& o) const {
    if (o.n_ != n_) throw ContextMismatch("adding elements of H_" + std::to_string(n_) + " and H_" + std::to_string(o.n_));
  }

  int n_;
  Support terms_;
};

/// The antiautomorphism T_w -> T_{w^-1}.
template <FieldScalar S>
HeckeElement<S> star(const HeckeElement<S>& a) {
  HeckeElement<S> r(a.degree());
  for (const auto& [w, c] : a.terms()) r.add_term(w.inverse(), c);
  return r;
}

}  // namespace hecke
