#pragma once

#include <map>
#include <string>
#include <vector>

#include "hecke/braid_word.hpp"
#include "hecke/errors.hpp"
#include "hecke/field.hpp"
#include "hecke/permutation.hpp"

// Brute-force references. sga_mul and the relation search never call
// HeckeAlgebra::mul, so agreement with it is evidence, not tautology.

namespace hecke {

/// Element of the group algebra of S_n: a finite sum of permutations.
template <FieldScalar S>
class SymmetricGroupAlgebraElement {
 public:
  explicit SymmetricGroupAlgebraElement(int n) : n_(n) {}

  static SymmetricGroupAlgebraElement delta(const Permutation& w, S c = S(1)) {
    SymmetricGroupAlgebraElement a(w.degree());
    a.add(w, c);
    return a;
  }

  int degree() const { return n_; }
  const std::map<Permutation, S>& terms() const { return terms_; }

  void add(const Permutation& w, const S& c) {
    if (w.degree() != n_) throw ContextMismatch("permutation of the wrong degree");
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  bool operator==(const SymmetricGroupAlgebraElement&) const = default;

 private:
  int n_;
  std::map<Permutation, S> terms_;
};

/// Convolution: the product of delta_u and delta_v is delta_{u v}.
template <FieldScalar S>
SymmetricGroupAlgebraElement<S> sga_mul(const SymmetricGroupAlgebraElement<S>& a,
                                        const SymmetricGroupAlgebraElement<S>& b) {
  if (a.degree() != b.degree())
    throw ContextMismatch("group algebra elements of S_" + std::to_string(a.degree()) + " and S_" +
                          std::to_string(b.degree()));
  SymmetricGroupAlgebraElement<S> out(a.degree());
  for (const auto& [u, x] : a.terms())
    for (const auto& [v, y] : b.terms()) out.add(u * v, x * y);
  return out;
}

/// Deliberate bugs for checking that the exhaustive search can see one.
enum class Fault { None, FlippedInverse };

struct RelationViolation {
  BraidWord left;
  BraidWord right;
  std::string relation;  // "cancel", "commute" or "braid"
};

struct ClosureReport {
  long checked = 0;
  std::vector<RelationViolation> violations;
};

/// Every word of length <= max_len on n strands against every word one
/// relation away (free cancellation, far commutation, braid relation), with
/// images in H_n over Q(q1, q2). Requires n <= 4 and max_len <= 8.
ClosureReport exhaustive_word_closure(int n, int max_len, Fault fault = Fault::None);

struct CheckOutcome {
  std::string name;
  long checked = 0;
  long failures = 0;
  std::string detail;  // first failure, if any
  bool passed() const { return failures == 0; }
};

/// Small fixed-seed property checks across all modules, a few seconds in all.
std::vector<CheckOutcome> quick_verification(Fault fault = Fault::None);

}  // namespace hecke
