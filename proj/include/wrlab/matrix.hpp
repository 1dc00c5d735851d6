#pragma once

// Dense exact matrices on Eigen containers and the elimination routines the
// lattice code needs. Everything here is templated on the scalar so the same
// code runs over Integer, Rational, QuadScalar and fixed-precision floats.

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "wrlab/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<wrlab::QuadScalar> : GenericNumTraits<wrlab::QuadScalar> {
  using Real = wrlab::QuadScalar;
  using NonInteger = wrlab::QuadScalar;
  using Nested = wrlab::QuadScalar;
  using Literal = wrlab::QuadScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 40,
    MulCost = 80
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace wrlab {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using ExactMatrix = Matrix<QuadScalar>;
using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

inline int sign_of(const Integer& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }
inline int sign_of(const QuadScalar& v) { return v.sign(); }
template <class F>
int sign_of(const F& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

template <class S>
bool is_zero_entry(const S& v) {
  return sign_of(v) == 0;
}

template <class S>
Matrix<S> identity_matrix(Eigen::Index n) {
  Matrix<S> m = Matrix<S>::Constant(n, n, S(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class S>
bool is_symmetric(const Matrix<S>& g) {
  if (g.rows() != g.cols()) return false;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = i + 1; j < g.cols(); ++j)
      if (!(g(i, j) == g(j, i))) return false;
  return true;
}

template <class S>
bool matrices_equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Fraction-free (Bareiss) determinant; every division is exact.
template <class S>
S det_bareiss(Matrix<S> a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return S(1);
  int sign = 1;
  S prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero_entry(a(k, k))) {
      Eigen::Index swap = k + 1;
      while (swap < n && is_zero_entry(a(swap, k))) ++swap;
      if (swap == n) return S(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign < 0 ? S(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

// Reduced row echelon form over a field; returns the pivot columns.
template <class S>
std::vector<Eigen::Index> rref_in_place(Matrix<S>& a,
                                        Eigen::Index pivot_cols = -1) {
  if (pivot_cols < 0) pivot_cols = a.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < pivot_cols && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero_entry(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    const S inv = S(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero_entry(a(i, col))) continue;
      const S f = a(i, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
Eigen::Index rank_exact(Matrix<S> a) {
  return static_cast<Eigen::Index>(rref_in_place(a).size());
}

template <class S>
Matrix<S> inverse_exact(const Matrix<S>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw DomainError("inverse of a non-square matrix");
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = identity_matrix<S>(n);
  if (static_cast<Eigen::Index>(rref_in_place(aug, n).size()) != n)
    throw DegeneracyError("singular matrix");
  return aug.rightCols(n);
}

// Solves a*x = b for a of full column rank; nullopt if b is outside the
// column space of a.
template <class S>
std::optional<Matrix<S>> solve_exact(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows()) throw DomainError("row count mismatch in solve");
  const Eigen::Index n = a.cols();
  Matrix<S> aug(a.rows(), n + b.cols());
  aug.leftCols(n) = a;
  aug.rightCols(b.cols()) = b;
  if (static_cast<Eigen::Index>(rref_in_place(aug, n).size()) != n)
    throw DegeneracyError("matrix is not of full column rank");
  for (Eigen::Index i = n; i < aug.rows(); ++i)
    for (Eigen::Index j = n; j < aug.cols(); ++j)
      if (!is_zero_entry(aug(i, j))) return std::nullopt;
  return Matrix<S>(aug.topRightCorner(n, b.cols()));
}

template <class To, class From>
Matrix<To> cast_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

inline ExactMatrix to_exact(const RationalMatrix& m) {
  return cast_matrix<QuadScalar>(m);
}
inline ExactMatrix to_exact(const IntegerMatrix& m) {
  return cast_matrix<QuadScalar>(m);
}

// The rational matrix if every entry is rational.
std::optional<RationalMatrix> rational_entries(const ExactMatrix& m);
// Integer matrix if every entry is a rational integer.
std::optional<IntegerMatrix> integer_entries(const ExactMatrix& m);
// Radicand shared by the irrational entries (0 if all rational).
Integer matrix_radicand(const ExactMatrix& m);

RationalMatrix as_rational(const IntegerMatrix& m);

}  // namespace wrlab
