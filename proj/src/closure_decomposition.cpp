#include "hecke/closure_decomposition.hpp"

#include <algorithm>

#include "hecke/errors.hpp"
#include "hecke/specht.hpp"
#include "hecke/specialize.hpp"

namespace hecke {

namespace {

const RationalFunction kQ1 = RationalFunction::variable(Var::q1);
const RationalFunction kQ2 = RationalFunction::variable(Var::q2);

}  // namespace

CharacterTable::CharacterTable(int n)
    : n_(n), partitions_(partitions_of(n)), algebra_(n, kQ1, kQ2), perms_(all_permutations(n)) {
  auto ctx = generic_specht_context(n);
  const Assignment<RationalFunction> rescale{{Var::q, -kQ2 / kQ1}};
  std::vector<RationalFunction> scale{RationalFunction(1)};
  for (int l = 1; l <= n * (n - 1) / 2; ++l) scale.push_back(scale.back() * -kQ1);
  for (const auto& mu : partitions_) {
    auto module = specht_module(mu, ctx);
    auto& row = values_.emplace_back();
    for (const auto& w : perms_)
      row.push_back(scale[static_cast<std::size_t>(w.length())] * specialize(character(module, w), rescale));
  }
}

const RationalFunction& CharacterTable::on_basis(std::size_t row, const Permutation& w) const {
  if (w.degree() != n_) throw ContextMismatch("permutation of the wrong degree for this character table");
  // all_permutations is sorted by the Permutation order
  auto it = std::lower_bound(perms_.begin(), perms_.end(), w);
  return values_.at(row)[static_cast<std::size_t>(it - perms_.begin())];
}

RationalFunction CharacterTable::operator()(std::size_t row, const HeckeElement<RationalFunction>& h) const {
  RationalFunction sum;
  for (const auto& [w, c] : h.terms()) sum += c * on_basis(row, w);
  return sum;
}

Matrix<RationalFunction> CharacterTable::closure_basis_matrix() const {
  const auto k = static_cast<Eigen::Index>(partitions_.size());
  Matrix<RationalFunction> x = Matrix<RationalFunction>::Constant(k, k, RationalFunction());
  for (Eigen::Index col = 0; col < k; ++col) {
    auto image = algebra_.from_braid_word(b_lambda(partitions_[static_cast<std::size_t>(col)]));
    for (Eigen::Index row = 0; row < k; ++row) x(row, col) = (*this)(static_cast<std::size_t>(row), image);
  }
  return x;
}

const RationalFunction& ClosureDecomposition::coefficient(const Partition& lambda) const {
  for (const auto& [p, c] : coefficients)
    if (p == lambda) return c;
  throw DomainError("partition " + lambda.to_string() + " is not a partition of " + std::to_string(strands));
}

std::string ClosureDecomposition::to_string() const {
  std::string out;
  for (const auto& [p, c] : coefficients)
    if (!c.is_zero()) out += p.to_string() + ": " + c.to_string() + "\n";
  return out;
}

ClosureDecomposition decompose_closure(const BraidWord& b, const CharacterTable& table) {
  if (b.strands() != table.degree())
    throw ContextMismatch("braid on " + std::to_string(b.strands()) + " strands, character table for " +
                          std::to_string(table.degree()));
  const auto& parts = table.partitions();
  const auto k = static_cast<Eigen::Index>(parts.size());
  auto image = table.algebra().from_braid_word(b);
  Vector<RationalFunction> y(k);
  for (Eigen::Index row = 0; row < k; ++row) y(row) = table(static_cast<std::size_t>(row), image);
  Vector<RationalFunction> c;
  try {
    c = solve(table.closure_basis_matrix(), y);
  } catch (const DomainError&) {
    throw InvariantViolation("character matrix is singular");
  }
  ClosureDecomposition out{b.strands(), {}};
  for (Eigen::Index i = 0; i < k; ++i) out.coefficients.emplace_back(parts[static_cast<std::size_t>(i)], c(i));
  return out;
}

ClosureDecomposition decompose_closure(const BraidWord& b) { return decompose_closure(b, CharacterTable(b.strands())); }

}  // namespace hecke
