#pragma once

#include "hecke/braid_word.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/markov_moves.hpp"

namespace hecke {

/// The Iwahori-Hecke algebra H_n(q1, q2): generators T_1..T_{n-1} subject to
/// the braid relations and (T_i - q1)(T_i - q2) = 0.
///
/// Products are computed in the T_w basis by folding the generators of a
/// reduced word of the right factor into the left factor one at a time:
///
///     T_w T_i = T_{w s_i}                              if l(w s_i) > l(w)
///     T_w T_i = (q1 + q2) T_w - q1 q2 T_{w s_i}        otherwise
template <FieldScalar S>
class HeckeAlgebra {
 public:
  using Scalar = S;
  using Element = HeckeElement<S>;

  /// Throws DomainError unless q1 and q2 are units.
  HeckeAlgebra(int n, S q1, S q2, FieldOf<S> field = FieldOf<S>{})
      : n_(n), q1_(std::move(q1)), q2_(std::move(q2)), field_(std::move(field)) {
    if (n < 1 || n > Permutation::kMaxDegree) throw DomainError("unsupported strand count " + std::to_string(n));
    if (is_zero(q1_) || is_zero(q2_)) throw DomainError("Hecke parameters must be units");
    sum_ = q1_ + q2_;
    neg_product_ = -(q1_ * q2_);
    inverse_product_ = inverse(q1_ * q2_);
  }

  int degree() const { return n_; }
  const S& q1() const { return q1_; }
  const S& q2() const { return q2_; }
  const FieldOf<S>& field() const { return field_; }
  S one() const { return field_.from_integer(1); }

  /// Same parameters on a different number of strands.
  HeckeAlgebra with_degree(int m) const { return HeckeAlgebra(m, q1_, q2_, field_); }

  Element zero() const { return Element(n_); }
  Element identity() const { return basis(Permutation(n_)); }
  Element basis(const Permutation& w) const {
    Element e(n_);
    e.add_term(w, one());
    return e;
  }

  /// T_i for Sign::Positive, T_i^-1 = ((q1 + q2) - T_i) / (q1 q2) otherwise.
  Element generator(int i, Sign sign = Sign::Positive) const {
    check_index(i);
    Element t = basis(Permutation::simple(n_, i));
    if (sign == Sign::Positive) return t;
    Element r = identity().scaled(sum_ * inverse_product_);
    r -= t.scaled(inverse_product_);
    return r;
  }

  /// a * T_i.
  Element times_generator(const Element& a, int i) const {
    check(a);
    check_index(i);
    Element r(n_);
    for (const auto& [w, c] : a.terms()) {
      if (!w.has_right_descent(i)) {
        r.add_term(w.times_simple(i), c);
      } else {
        r.add_term(w, sum_ * c);
        r.add_term(w.times_simple(i), neg_product_ * c);
      }
    }
    return r;
  }

  /// T_i * a.
  Element generator_times(int i, const Element& a) const {
    check(a);
    check_index(i);
    Element r(n_);
    for (const auto& [w, c] : a.terms()) {
      if (!w.has_left_descent(i)) {
        r.add_term(w.simple_times(i), c);
      } else {
        r.add_term(w, sum_ * c);
        r.add_term(w.simple_times(i), neg_product_ * c);
      }
    }
    return r;
  }

  /// a * T_i^-1.
  Element times_generator_inverse(const Element& a, int i) const {
    Element r = a.scaled(sum_ * inverse_product_);
    r -= times_generator(a, i).scaled(inverse_product_);
    return r;
  }

  /// a * T_w, folding a reduced word of w.
  Element times_basis(Element a, const Permutation& w) const {
    for (int i : w.reduced_word()) a = times_generator(a, i);
    return a;
  }

  /// T_w * a.
  Element basis_times(const Permutation& w, Element a) const {
    auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) a = generator_times(*it, a);
    return a;
  }

  Element mul(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element r(n_);
    for (const auto& [v, c] : b.terms()) r += times_basis(a, v).scaled(c);
    return r;
  }

  /// Image of a braid word under sigma_i -> T_i; the empty word maps to 1.
  Element from_braid_word(const BraidWord& b) const {
    if (b.strands() != n_)
      throw ContextMismatch("braid on " + std::to_string(b.strands()) + " strands in H_" + std::to_string(n_));
    Element r = identity();
    for (int j : b.letters()) r = j > 0 ? times_generator(r, j) : times_generator_inverse(r, -j);
    return r;
  }

 private:
  void check(const Element& a) const {
    if (a.degree() != n_) throw ContextMismatch("element of H_" + std::to_string(a.degree()) + " used in H_" + std::to_string(n_));
  }
  void check_index(int i) const {
    if (i < 1 || i >= n_) throw DomainError("generator index " + std::to_string(i) + " out of range for H_" + std::to_string(n_));
  }

  int n_;
  S q1_, q2_;
  FieldOf<S> field_;
  S sum_, neg_product_, inverse_product_;
};

/// Coordinates of an element of H_n(1, -1), read as an element of the group
/// algebra of S_n. Throws UnsupportedField for other parameters.
template <FieldScalar S>
typename HeckeElement<S>::Support to_symmetric_group(const HeckeAlgebra<S>& algebra, const HeckeElement<S>& a) {
  if (!(algebra.q1() == algebra.one()) || !(algebra.q2() == -algebra.one()))
    throw UnsupportedField("the symmetric group specialization needs (q1, q2) = (1, -1)");
  return a.terms();
}

/// H_n(q1, q2) over Q(q1, q2) with formal parameters.
inline HeckeAlgebra<RationalFunction> generic_hecke_algebra(int n) {
  return HeckeAlgebra<RationalFunction>(n, RationalFunction::variable(Var::q1), RationalFunction::variable(Var::q2));
}

}  // namespace hecke
