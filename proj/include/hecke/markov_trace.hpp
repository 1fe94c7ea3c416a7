#pragma once

#include <map>
#include <string>

#include "hecke/hecke_algebra.hpp"

namespace hecke {

/// The normalized Markov trace tr on H_1 ⊂ H_2 ⊂ ...: tr(ab) = tr(ba),
/// tr(T_{n} a) = tr(a) for a in H_n, and tr(1) = 1 in H_1. Adding a strand
/// multiplies by delta = (1 + q1 q2) / (q1 + q2).
///
/// Basis values are memoized, so one object should serve many queries.
template <FieldScalar S>
class MarkovTrace {
 public:
  /// Throws DomainError when q1 + q2 is not a unit.
  explicit MarkovTrace(const HeckeAlgebra<S>& algebra) : base_(algebra.with_degree(1)) {
    S sum = base_.q1() + base_.q2();
    if (is_zero(sum)) throw DomainError("the Markov trace needs q1 + q2 to be a unit");
    delta_ = (base_.one() + base_.q1() * base_.q2()) / sum;
  }

  const S& delta() const { return delta_; }
  const HeckeAlgebra<S>& parameters() const { return base_; }

  S operator()(const HeckeElement<S>& a) {
    S r = base_.field().from_integer(0);
    for (const auto& [w, c] : a.terms()) r += c * of_basis(w);
    return r;
  }

  /// tr(T_w). For w not fixing m, w = x s_{m-1} y with y = s_{m-2}...s_k
  /// where w(k) = m, and tr(T_x T_{m-1} T_y) = tr(T_y T_x) one level down.
  S of_basis(const Permutation& w) {
    const int m = w.degree();
    if (m <= 1) return base_.one();
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;

    S value;
    if (w.fixes(m)) {
      value = delta_ * of_basis(w.restricted(m - 1));
    } else {
      const int k = w.inverse()(m);
      std::vector<int> climb, lower;
      for (int j = m - 1; j >= k; --j) climb.push_back(j);
      for (int j = m - 2; j >= k; --j) lower.push_back(j);
      Permutation x = w * Permutation::from_word(m, climb).inverse();
      Permutation y = Permutation::from_word(m - 1, lower);
      if (x.length() + 1 + y.length() != w.length())
        throw InvariantViolation("coset factorization of " + w.to_string() + " is not length additive");
      const HeckeAlgebra<S> below = base_.with_degree(m - 1);
      value = (*this)(below.basis_times(y, below.basis(x.restricted(m - 1))));
    }
    memo_.emplace(w, value);
    return value;
  }

 private:
  HeckeAlgebra<S> base_;
  S delta_;
  std::map<Permutation, S> memo_;
};

template <FieldScalar S>
S trace_of_braid(const BraidWord& b, MarkovTrace<S>& trace) {
  return trace(trace.parameters().with_degree(b.strands()).from_braid_word(b));
}

}  // namespace hecke
