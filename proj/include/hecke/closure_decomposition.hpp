#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hecke/braid_word.hpp"
#include "hecke/exact_linalg.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/partition.hpp"

namespace hecke {

/// Characters of the Specht modules of H_n(q1, q2) over Q(q1, q2).
///
/// Built from the modules of H_n(-1, q) over Q(q): T_i = -q1 T'_i with T'_i
/// satisfying (T'_i + 1)(T'_i - q) = 0 at q = -q2/q1, so a character value on
/// T_w is (-q1)^l(w) times the one-parameter value at that q.
class CharacterTable {
 public:
  /// 1 <= n <= 7.
  explicit CharacterTable(int n);

  int degree() const { return n_; }
  /// Descending lexicographic; rows of the table.
  const std::vector<Partition>& partitions() const { return partitions_; }
  const HeckeAlgebra<RationalFunction>& algebra() const { return algebra_; }

  /// chi_mu(T_w) for mu = partitions()[row].
  const RationalFunction& on_basis(std::size_t row, const Permutation& w) const;
  /// chi_mu(h), extended linearly.
  RationalFunction operator()(std::size_t row, const HeckeElement<RationalFunction>& h) const;
  /// Entry (mu, lambda) is chi_mu of the image of b_lambda.
  Matrix<RationalFunction> closure_basis_matrix() const;

 private:
  int n_;
  std::vector<Partition> partitions_;
  HeckeAlgebra<RationalFunction> algebra_;
  std::vector<std::vector<RationalFunction>> values_;  // [row][index of w in all_permutations(n)]
  std::vector<Permutation> perms_;
};

/// closure(b) as a combination of the closures of the b_lambda.
struct ClosureDecomposition {
  int strands = 0;
  /// Every partition of strands, descending lexicographic.
  std::vector<std::pair<Partition, RationalFunction>> coefficients;

  const RationalFunction& coefficient(const Partition& lambda) const;
  /// `(2,1): q1 ...` one line per partition with a nonzero coefficient.
  std::string to_string() const;
};

/// Solves chi_mu(b) = sum_lambda c_lambda chi_mu(b_lambda) over all mu.
/// Throws InvariantViolation when the character matrix is singular.
ClosureDecomposition decompose_closure(const BraidWord& b, const CharacterTable& table);
ClosureDecomposition decompose_closure(const BraidWord& b);

}  // namespace hecke
