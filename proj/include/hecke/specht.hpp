#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hecke/exact_linalg.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/partition.hpp"
#include "hecke/specialize.hpp"

namespace hecke {

/// Sparse coordinate vector: column -> nonzero entry.
template <FieldScalar S>
using SparseVector = std::map<int, S>;

namespace detail {

/// v -= c * w
template <FieldScalar S>
void subtract_multiple(SparseVector<S>& v, const S& c, const SparseVector<S>& w) {
  for (const auto& [col, x] : w) {
    auto [it, inserted] = v.try_emplace(col, -(c * x));
    if (!inserted) {
      it->second -= c * x;
      if (is_zero(it->second)) v.erase(it);
    } else if (is_zero(it->second)) {
      v.erase(it);
    }
  }
}

template <FieldScalar S>
void scale(SparseVector<S>& v, const S& c) {
  for (auto& [col, x] : v) x *= c;
}

}  // namespace detail

/// Subspace of a coordinate space in reduced echelon form: every row has a 1
/// in its pivot column and every other row is zero there. A new row pivots
/// on its first nonzero entry after reduction. Reducing by the rows leaves
/// the unique representative of v + span that vanishes in every pivot column.
///
/// Optionally remembers how each row combines the accepted input vectors,
/// numbered 0, 1, ... in order of acceptance.
template <FieldScalar S>
class SubspaceBasis {
 public:
  struct Row {
    SparseVector<S> entries;
    SparseVector<S> combination;
  };

  explicit SubspaceBasis(int ambient = 0, bool track_combinations = false)
      : ambient_(ambient), track_(track_combinations) {}

  /// Adopts rows already in reduced form, keyed by pivot; not checked.
  static SubspaceBasis from_reduced_rows(int ambient, std::map<int, SparseVector<S>> rows) {
    SubspaceBasis span(ambient);
    for (auto& [pivot, entries] : rows) span.rows_.emplace(pivot, Row{std::move(entries), {}});
    span.accepted_ = span.dimension();
    return span;
  }

  int ambient_dimension() const { return ambient_; }
  int dimension() const { return static_cast<int>(rows_.size()); }
  /// Rows keyed by pivot column.
  const std::map<int, Row>& rows() const { return rows_; }
  bool is_pivot(int column) const { return rows_.contains(column); }

  /// Normal form: the representative of v + span vanishing in every pivot column.
  SparseVector<S> reduce(SparseVector<S> v) const { return reduce_tracked(std::move(v)).first; }

  bool contains(const SparseVector<S>& v) const { return reduce(v).empty(); }

  /// Adds v. Returns false, changing nothing, when v already lies in the span.
  bool insert(SparseVector<S> v) {
    auto [rest, used] = reduce_tracked(std::move(v));
    if (rest.empty()) return false;
    SparseVector<S> combination;
    if (track_) {
      combination = std::move(used);
      detail::scale(combination, S(-1));
      combination.emplace(accepted_, S(1));
    }
    const int pivot = rest.begin()->first;
    const S inv = inverse(rest.begin()->second);
    detail::scale(rest, inv);
    detail::scale(combination, inv);
    for (auto& [p, row] : rows_) {
      auto it = row.entries.find(pivot);
      if (it == row.entries.end()) continue;
      S f = it->second;
      detail::subtract_multiple(row.entries, f, rest);
      if (track_) detail::subtract_multiple(row.combination, f, combination);
    }
    rows_.emplace(pivot, Row{std::move(rest), std::move(combination)});
    ++accepted_;
    return true;
  }

  /// Coefficients expressing v through the accepted vectors, or nullopt when
  /// v is outside the span. Requires combination tracking.
  std::optional<SparseVector<S>> combination(const SparseVector<S>& v) const {
    if (!track_) throw DomainError("subspace does not track combinations");
    auto [rest, used] = reduce_tracked(v);
    if (!rest.empty()) return std::nullopt;
    return used;
  }

 private:
  // Subtracting a row touches no other pivot column, so one pass suffices.
  std::pair<SparseVector<S>, SparseVector<S>> reduce_tracked(SparseVector<S> v) const {
    SparseVector<S> used;
    std::vector<std::pair<const Row*, S>> hits;
    for (const auto& [col, x] : v)
      if (auto row = rows_.find(col); row != rows_.end()) hits.emplace_back(&row->second, x);
    for (const auto& [row, c] : hits) {
      detail::subtract_multiple(v, c, row->entries);
      if (track_) detail::subtract_multiple(used, -c, row->combination);
    }
    return {std::move(v), std::move(used)};
  }

  int ambient_;
  bool track_;
  int accepted_ = 0;
  std::map<int, Row> rows_;
};

/// H_n(-1, q) together with the T_w coordinate system used for subspaces.
/// Copies share the coordinate tables.
template <FieldScalar S>
class SpechtContext {
 public:
  static constexpr int kMaxDegree = 7;

  /// Throws DomainError for n outside [1, 7] or q = 0.
  SpechtContext(int n, S q, FieldOf<S> field = FieldOf<S>{})
      : algebra_(check_degree(n), -field.from_integer(1), q, field), q_(std::move(q)) {
    auto tables = std::make_shared<Tables>();
    tables->perms = all_permutations(n);
    for (std::size_t i = 0; i < tables->perms.size(); ++i) tables->index.emplace(tables->perms[i], static_cast<int>(i));
    tables_ = std::move(tables);
  }

  int degree() const { return algebra_.degree(); }
  const S& q() const { return q_; }
  const HeckeAlgebra<S>& algebra() const { return algebra_; }
  /// n!, the dimension of H_n.
  int size() const { return static_cast<int>(tables_->perms.size()); }
  const Permutation& permutation(int column) const { return tables_->perms[static_cast<std::size_t>(column)]; }

  SparseVector<S> coordinates(const HeckeElement<S>& a) const {
    SparseVector<S> v;
    for (const auto& [w, c] : a.terms()) v.emplace(tables_->index.at(w), c);
    return v;
  }

  HeckeElement<S> element(const SparseVector<S>& v) const {
    HeckeElement<S> a(degree());
    for (const auto& [col, c] : v) a.add_term(permutation(col), c);
    return a;
  }

 private:
  struct Tables {
    std::vector<Permutation> perms;
    std::map<Permutation, int> index;
  };

  static int check_degree(int n) {
    if (n < 1 || n > kMaxDegree)
      throw DomainError("Specht modules are supported for 1 <= n <= " + std::to_string(kMaxDegree));
    return n;
  }

  HeckeAlgebra<S> algebra_;
  S q_;
  std::shared_ptr<const Tables> tables_;
};

/// Generic parameter q over Q(q).
inline SpechtContext<RationalFunction> generic_specht_context(int n) {
  return SpechtContext<RationalFunction>(n, RationalFunction::variable(Var::q));
}

template <FieldScalar S>
void check_partition(const Partition& lambda, const SpechtContext<S>& ctx) {
  if (lambda.size() != ctx.degree())
    throw DomainError("partition " + lambda.to_string() + " is not a partition of " + std::to_string(ctx.degree()));
}

/// Sum of T_w over the Young subgroup of lambda.
template <FieldScalar S>
HeckeElement<S> m_lambda(const Partition& lambda, const SpechtContext<S>& ctx) {
  check_partition(lambda, ctx);
  HeckeElement<S> m(ctx.degree());
  for (const auto& w : young_subgroup(lambda)) m.add_term(w, ctx.algebra().one());
  return m;
}

/// Span of T_w m_lambda over all w.
template <FieldScalar S>
SubspaceBasis<S> module_basis_M(const Partition& lambda, const SpechtContext<S>& ctx) {
  const auto m = m_lambda(lambda, ctx);
  SubspaceBasis<S> span(ctx.size());
  for (int col = 0; col < ctx.size(); ++col) span.insert(ctx.coordinates(ctx.algebra().basis_times(ctx.permutation(col), m)));
  return span;
}

namespace detail {

// Closure of the seeds under left and right generator multiplication.
template <FieldScalar S>
SubspaceBasis<S> two_sided_closure(const std::vector<HeckeElement<S>>& seeds, const SpechtContext<S>& ctx) {
  const auto& h = ctx.algebra();
  SubspaceBasis<S> span(ctx.size());
  std::vector<HeckeElement<S>> pending;
  auto offer = [&](HeckeElement<S> x) {
    if (span.insert(ctx.coordinates(x))) pending.push_back(std::move(x));
  };
  for (const auto& x : seeds) offer(x);
  while (!pending.empty()) {
    HeckeElement<S> x = std::move(pending.back());
    pending.pop_back();
    for (int i = 1; i < ctx.degree(); ++i) {
      offer(h.generator_times(i, x));
      offer(h.times_generator(x, i));
    }
  }
  return span;
}

/// Reduced rows with leading pivots spanning the same space as `vectors`, or
/// nullopt. Entries must be Laurent polynomials in q alone. The rows are
/// fitted by interpolation mod a prime and then verified exactly.
std::optional<std::map<int, SparseVector<RationalFunction>>> fit_reduced_rows(
    const std::vector<SparseVector<RationalFunction>>& vectors, int ambient);

// Same closure over Q(q1, q2, q, s). Exact elimination in arrival order
// spends nearly all its time on denominators that cancel again, while the
// final rows are small Laurent polynomials. So a shadow copy at a fixed
// point mod a prime decides which products enter the closure (independence
// there implies independence here), the rows are fitted, and each product
// the shadow rejected is re-checked exactly. A failed check resumes the
// closure; a failed fit falls back to plain elimination.
inline SubspaceBasis<RationalFunction> two_sided_closure(const std::vector<HeckeElement<RationalFunction>>& seeds,
                                                         const SpechtContext<RationalFunction>& ctx) {
  using Element = HeckeElement<RationalFunction>;
  const PrimeField shadow_field(2147483629);
  Assignment<Zp> point;
  for (int i = 0; i < kNumVars; ++i) point[static_cast<Var>(i)] = shadow_field.from_integer(1000003 + 7919L * i);

  const auto& h = ctx.algebra();
  SubspaceBasis<Zp> shadow(ctx.size());
  std::vector<SparseVector<RationalFunction>> chosen;
  std::vector<Element> pending;
  std::vector<std::pair<Element, SparseVector<RationalFunction>>> rejected;

  auto accept = [&](Element x, SparseVector<RationalFunction> v) {
    chosen.push_back(std::move(v));
    pending.push_back(std::move(x));
  };
  auto offer = [&](Element x) {
    auto v = ctx.coordinates(x);
    SparseVector<Zp> image;
    for (const auto& [col, c] : v)
      if (Zp y = specialize(c, point, shadow_field); !y.is_zero()) image.emplace(col, y);
    if (shadow.insert(std::move(image))) {
      accept(std::move(x), std::move(v));
    } else {
      rejected.emplace_back(std::move(x), std::move(v));
    }
  };

  for (const auto& x : seeds) offer(x);
  for (;;) {
    while (!pending.empty()) {
      Element x = std::move(pending.back());
      pending.pop_back();
      for (int i = 1; i < ctx.degree(); ++i) {
        offer(h.generator_times(i, x));
        offer(h.times_generator(x, i));
      }
    }
    auto rows = fit_reduced_rows(chosen, ctx.size());
    if (!rows) return two_sided_closure<RationalFunction>(seeds, ctx);
    auto span = SubspaceBasis<RationalFunction>::from_reduced_rows(ctx.size(), std::move(*rows));
    auto recheck = std::move(rejected);
    rejected.clear();
    for (auto& [x, v] : recheck)
      if (!span.contains(v)) accept(std::move(x), std::move(v));
    if (pending.empty()) return span;
  }
}

}  // namespace detail

/// I^lambda: the two-sided ideal generated by the m_mu with mu strictly
/// dominating lambda.
template <FieldScalar S>
SubspaceBasis<S> ideal_I(const Partition& lambda, const SpechtContext<S>& ctx) {
  check_partition(lambda, ctx);
  std::vector<HeckeElement<S>> seeds;
  for (const auto& mu : partitions_of(ctx.degree()))
    if (strictly_dominates(mu, lambda)) seeds.push_back(m_lambda(mu, ctx));
  if constexpr (std::is_same_v<S, RationalFunction>) {
    try {
      return detail::two_sided_closure(seeds, ctx);
    } catch (const DivisionByZero&) {
      // the shadow point hit a pole; fall through to plain elimination
    }
  }
  return detail::two_sided_closure<S>(seeds, ctx);
}

/// S^lambda realized as (M^lambda + I^lambda) / I^lambda, with basis the
/// classes of those T_w m_lambda that are independent modulo I^lambda.
template <FieldScalar S>
class SpechtModule {
 public:
  SpechtModule(const Partition& lambda, SpechtContext<S> ctx)
      : lambda_(lambda), ctx_(std::move(ctx)), ideal_(ideal_I(lambda_, ctx_)), quotient_(ctx_.size(), true) {
    const auto& h = ctx_.algebra();
    m_ = m_lambda(lambda_, ctx_);
    m_normal_ = ideal_.reduce(ctx_.coordinates(m_));
    if (m_normal_.empty()) throw InvariantViolation("m_lambda lies in I^lambda for " + lambda_.to_string());

    for (int col = 0; col < ctx_.size(); ++col) {
      const auto& w = ctx_.permutation(col);
      auto x = h.basis_times(w, m_);
      if (quotient_.insert(ideal_.reduce(ctx_.coordinates(x)))) {
        representatives_.push_back(w);
        basis_.push_back(std::move(x));
      }
    }

    const auto d = static_cast<Eigen::Index>(basis_.size());
    for (int i = 1; i < ctx_.degree(); ++i) {
      Matrix<S> a = zero_matrix(d, d);
      for (Eigen::Index j = 0; j < d; ++j) a.col(j) = coordinates(h.generator_times(i, basis_[static_cast<std::size_t>(j)]));
      actions_.push_back(std::move(a));
    }

    gram_ = zero_matrix(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k)
        gram_(j, k) = gram_entry(basis_[static_cast<std::size_t>(j)], basis_[static_cast<std::size_t>(k)]);
  }

  const Partition& partition() const { return lambda_; }
  const SpechtContext<S>& context() const { return ctx_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const HeckeElement<S>& m() const { return m_; }
  const SubspaceBasis<S>& ideal() const { return ideal_; }
  /// w with T_w m_lambda + I^lambda forming the basis.
  const std::vector<Permutation>& representatives() const { return representatives_; }
  const std::vector<HeckeElement<S>>& basis_elements() const { return basis_; }
  const Matrix<S>& gram_matrix() const { return gram_; }

  /// Matrix of left multiplication by T_i; column j is the image of basis vector j.
  const Matrix<S>& action(int i) const {
    if (i < 1 || i >= ctx_.degree()) throw DomainError("generator index out of range");
    return actions_[static_cast<std::size_t>(i - 1)];
  }

  /// Matrix of T_w, multiplied out along the canonical reduced word.
  Matrix<S> action(const Permutation& w) const {
    if (w.degree() != ctx_.degree()) throw ContextMismatch("permutation of the wrong degree");
    Matrix<S> a = identity_matrix(dimension(), ctx_.algebra().one());
    for (int i : w.reduced_word()) a = a * action(i);
    return a;
  }

  /// Coordinates of the class of x, which must lie in M^lambda + I^lambda.
  Vector<S> coordinates(const HeckeElement<S>& x) const {
    auto c = quotient_.combination(ideal_.reduce(ctx_.coordinates(x)));
    if (!c) throw InvariantViolation("element outside M^lambda + I^lambda");
    Vector<S> v = Vector<S>::Constant(dimension(), zero());
    for (const auto& [j, x_j] : *c) v(j) = x_j;
    return v;
  }

  /// r with x = r m_lambda modulo I^lambda. Throws InvariantViolation when
  /// x is not proportional to m_lambda there.
  S proportionality(const HeckeElement<S>& x) const {
    auto v = ideal_.reduce(ctx_.coordinates(x));
    if (v.empty()) return zero();
    const auto& [col, lead] = *m_normal_.begin();
    auto it = v.find(col);
    S r = it == v.end() ? zero() : it->second / lead;
    detail::subtract_multiple(v, r, m_normal_);
    if (!v.empty()) throw InvariantViolation("m_lambda h m_lambda is not a multiple of m_lambda modulo I^lambda");
    return r;
  }

  /// The form <x, y> defined by x* y = <x, y> m_lambda modulo I^lambda.
  S gram_entry(const HeckeElement<S>& x, const HeckeElement<S>& y) const {
    return proportionality(ctx_.algebra().mul(star(x), y));
  }

 private:
  S zero() const { return ctx_.algebra().field().from_integer(0); }
  Matrix<S> zero_matrix(Eigen::Index r, Eigen::Index c) const { return Matrix<S>::Constant(r, c, zero()); }

  Partition lambda_;
  SpechtContext<S> ctx_;
  HeckeElement<S> m_{1};
  SparseVector<S> m_normal_;
  SubspaceBasis<S> ideal_;
  SubspaceBasis<S> quotient_;
  std::vector<Permutation> representatives_;
  std::vector<HeckeElement<S>> basis_;
  std::vector<Matrix<S>> actions_;
  Matrix<S> gram_;
};

template <FieldScalar S>
SpechtModule<S> specht_module(const Partition& lambda, const SpechtContext<S>& ctx) {
  return SpechtModule<S>(lambda, ctx);
}

template <FieldScalar S>
S gram_entry(const HeckeElement<S>& x, const HeckeElement<S>& y, const SpechtModule<S>& module) {
  return module.gram_entry(x, y);
}

/// dim D^lambda: rank of the Gram matrix.
template <FieldScalar S>
int dim_D_lambda(const SpechtModule<S>& module) {
  return static_cast<int>(rank(module.gram_matrix()));
}

template <FieldScalar S>
S gram_determinant(const SpechtModule<S>& module) {
  return determinant(module.gram_matrix());
}

/// Trace of T_w on S^lambda.
template <FieldScalar S>
S character(const SpechtModule<S>& module, const Permutation& w) {
  return module.action(w).trace();
}

/// Trace of T_w on D^lambda = S^lambda / rad, where rad is the kernel of the Gram matrix.
template <FieldScalar S>
S d_character(const SpechtModule<S>& module, const Permutation& w) {
  const Matrix<S> a = module.action(w);
  auto rad = kernel(module.gram_matrix());
  const Matrix<S> image = a * rad.basis;
  const auto k = static_cast<Eigen::Index>(rad.free.size());
  Matrix<S> restricted(k, k);
  for (Eigen::Index r = 0; r < k; ++r) restricted.row(r) = image.row(rad.free[static_cast<std::size_t>(r)]);
  if (!exactly_equal<S>(rad.basis * restricted, image)) throw InvariantViolation("the radical is not a submodule");
  return k == 0 ? a.trace() : a.trace() - restricted.trace();
}

/// Number of standard Young tableaux of shape lambda, by backtracking.
long count_standard_tableaux(const Partition& lambda);

}  // namespace hecke
