#pragma once

// Registers the exact scalar types with Eigen so they can be stored in dense
// matrices and multiplied. Nothing here relies on Eigen's floating-point
// decompositions; exact elimination lives in exact_linalg.hpp.

#include <Eigen/Core>

#include "hecke/field.hpp"

namespace Eigen {

template <class S>
struct HeckeExactNumTraits : GenericNumTraits<S> {
  using Real = S;
  using NonInteger = S;
  using Literal = S;
  using Nested = S;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16,
  };
};

template <>
struct NumTraits<hecke::RationalFunction> : HeckeExactNumTraits<hecke::RationalFunction> {};
template <>
struct NumTraits<hecke::Rational> : HeckeExactNumTraits<hecke::Rational> {};
template <>
struct NumTraits<hecke::Zp> : HeckeExactNumTraits<hecke::Zp> {};

}  // namespace Eigen

namespace hecke {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// n x n identity over the field of `one`.
template <class S>
Matrix<S> identity_matrix(Eigen::Index n, const S& one) {
  Matrix<S> m = Matrix<S>::Constant(n, n, one - one);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

template <class S>
bool exactly_equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

}  // namespace hecke
