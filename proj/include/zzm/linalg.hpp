#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "zzm/types.hpp"

namespace zzm {

// Exact elimination over a field (Rational). None of these routines pivot on
// magnitude; any nonzero pivot is exact.

/// Reduced row echelon form in place; returns pivot columns.
template <typename Scalar>
std::vector<Index> rref_in_place(MatX<Scalar>& a) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index p = row;
    while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    Scalar inv = Scalar(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      Scalar f = a(r, col);
      for (Index j = col; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  MatX<typename Derived::Scalar> a = m;
  return static_cast<Index>(rref_in_place(a).size());
}

/// Some X with A X = B, or nullopt when inconsistent.
template <typename Scalar>
std::optional<MatX<Scalar>> exact_solve(const MatX<Scalar>& A, const MatX<Scalar>& B) {
  MatX<Scalar> aug(A.rows(), A.cols() + B.cols());
  aug << A, B;
  auto pivots = rref_in_place(aug);
  for (Index p : pivots)
    if (p >= A.cols()) return std::nullopt;
  MatX<Scalar> X = MatX<Scalar>::Zero(A.cols(), B.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    X.row(pivots[i]) = aug.row(static_cast<Index>(i)).tail(B.cols());
  return X;
}

/// Basis (columns) of the right null space.
template <typename Scalar>
MatX<Scalar> exact_nullspace(const MatX<Scalar>& A) {
  MatX<Scalar> a = A;
  auto pivots = rref_in_place(a);
  std::vector<bool> is_pivot(A.cols(), false);
  for (Index p : pivots) is_pivot[p] = true;
  MatX<Scalar> N = MatX<Scalar>::Zero(A.cols(), A.cols() - static_cast<Index>(pivots.size()));
  Index k = 0;
  for (Index free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    N(free, k) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) N(pivots[i], k) = -a(static_cast<Index>(i), free);
    ++k;
  }
  return N;
}

template <typename Scalar>
Scalar exact_determinant(MatX<Scalar> a) {
  Scalar det(1);
  for (Index col = 0; col < a.cols(); ++col) {
    Index p = col;
    while (p < a.rows() && a(p, col) == Scalar(0)) ++p;
    if (p == a.rows()) return Scalar(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Index r = col + 1; r < a.rows(); ++r) {
      if (a(r, col) == Scalar(0)) continue;
      Scalar f = a(r, col) / a(col, col);
      for (Index j = col; j < a.cols(); ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

// Integer lattices. Matrices hold generators as columns.

/// Column Hermite form: A * U = H with U unimodular and H in column echelon
/// form (pivot rows strictly increasing, pivots positive, entries left of a
/// pivot reduced into [0, pivot)). `rank` is the number of nonzero columns,
/// which come first.
struct ColumnHermite {
  MatXi H;
  MatXi U;
  Index rank = 0;
  std::vector<Index> pivot_rows;
};

ColumnHermite column_hermite(const MatXi& A);

/// Z-basis of {x : A x = 0}, as columns in row-Hermite-reduced form.
MatXi integer_kernel(const MatXi& A);

/// Some integer x with A x = b, or nullopt.
std::optional<VecXi> integer_solve(const MatXi& A, const VecXi& b);

/// Basis (columns) of the lattice generated by the columns of `gens`.
MatXi lattice_basis(const MatXi& gens);

Index integer_rank(const MatXi& A);

/// Lowest common multiple of all denominators of a rational matrix.
std::int64_t common_denominator(const MatXq& m);

}  // namespace zzm
