#pragma once

#include <utility>
#include <vector>

#include "hecke/eigen_scalar.hpp"
#include "hecke/errors.hpp"

namespace hecke {

namespace detail {

/// Scales a row so that rational-function entries become polynomials;
/// returns the factor used. Other scalar types are left alone.
template <class S>
S clear_row_denominators(Matrix<S>& m, Eigen::Index row) {
  return S(1);
}

template <>
inline RationalFunction clear_row_denominators(Matrix<RationalFunction>& m, Eigen::Index row) {
  LaurentPoly lcm(1);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const auto& d = m(row, j).denominator();
    if (d.is_one()) continue;
    LaurentPoly g = poly_gcd(lcm, d);
    lcm = lcm * divide_exact(d, g);
  }
  if (lcm.is_one()) return RationalFunction(1);
  RationalFunction f(lcm);
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(row, j) *= f;
  return f;
}

struct BareissResult {
  Eigen::Index rank = 0;
  bool odd_swaps = false;
};

/// Fraction-free (Bareiss) forward elimination in place. The last pivot of a
/// full-rank square matrix is its determinant.
template <class S>
BareissResult bareiss(Matrix<S>& m, S& last_pivot) {
  BareissResult result;
  S prev(1);
  last_pivot = S(1);
  for (Eigen::Index col = 0; col < m.cols() && result.rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = result.rank; r < m.rows(); ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != result.rank) {
      m.row(pivot).swap(m.row(result.rank));
      result.odd_swaps = !result.odd_swaps;
    }
    const Eigen::Index k = result.rank;
    for (Eigen::Index i = k + 1; i < m.rows(); ++i) {
      for (Eigen::Index j = col + 1; j < m.cols(); ++j) m(i, j) = (m(k, col) * m(i, j) - m(i, col) * m(k, j)) / prev;
      m(i, col) = S(0) * m(k, col);
    }
    prev = m(k, col);
    last_pivot = prev;
    ++result.rank;
  }
  return result;
}

}  // namespace detail

/// Exact rank by fraction-free elimination.
template <class S>
Eigen::Index rank(Matrix<S> m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) detail::clear_row_denominators(m, i);
  S last;
  return detail::bareiss(m, last).rank;
}

/// Exact determinant of a square matrix; det of the 0 x 0 matrix is 1.
template <class S>
S determinant(Matrix<S> m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return S(1);
  S scale(1);
  for (Eigen::Index i = 0; i < m.rows(); ++i) scale = scale * detail::clear_row_denominators(m, i);
  S last = S(1);
  auto r = detail::bareiss(m, last);
  if (r.rank < m.rows()) return S(0) * scale;
  S det = last / scale;
  return r.odd_swaps ? -det : det;
}

/// Solves a x = b for square invertible a by Gauss-Jordan elimination.
/// Throws DomainError when a is singular.
template <class S>
Vector<S> solve(Matrix<S> a, Vector<S> b) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw DomainError("solve: dimension mismatch");
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("solve: singular matrix");
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      std::swap(b(pivot), b(col));
    }
    S inv = inverse(a(col, col));
    for (Eigen::Index j = col; j < n; ++j) a(col, j) = a(col, j) * inv;
    b(col) = b(col) * inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      S f = a(r, col);
      for (Eigen::Index j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
      b(r) = b(r) - f * b(col);
    }
  }
  return b;
}

template <class S>
struct Kernel {
  /// Columns span the kernel; column k has a 1 in row free[k] and 0 in the other free rows.
  Matrix<S> basis;
  std::vector<Eigen::Index> free;
};

/// Kernel of a by reduced row echelon form.
template <class S>
Kernel<S> kernel(Matrix<S> a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < cols && r < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!is_zero(a(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(r));
    S inv = inverse(a(r, col));
    for (Eigen::Index j = 0; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, col))) continue;
      S f = a(i, col);
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  Kernel<S> k;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols));
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) k.free.push_back(c);
  const S zero = S(0) * (rows > 0 && cols > 0 ? a(0, 0) : S(0));
  k.basis = Matrix<S>::Constant(cols, static_cast<Eigen::Index>(k.free.size()), zero);
  for (std::size_t f = 0; f < k.free.size(); ++f) {
    const auto fc = k.free[f];
    const auto col = static_cast<Eigen::Index>(f);
    k.basis(fc, col) = S(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) k.basis(pivots[p], col) = -a(static_cast<Eigen::Index>(p), fc);
  }
  return k;
}

}  // namespace hecke
