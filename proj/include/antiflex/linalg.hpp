#pragma once

// Exact dense linear algebra over Rational / Fp.
//
// Gaussian elimination uses the first nonzero entry in the pivot column
// (lowest row index wins). There are no tolerances: the fields are exact.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "antiflex/scalar.hpp"

namespace antiflex {

template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
bool is_zero(const Eigen::MatrixBase<S>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

template <class S>
Vec<S> unit_vector(const FieldSpec& field, int n, int i) {
  Vec<S> v = Vec<S>::Zero(n);
  v(i) = embed<S>(field, 1);
  return v;
}

template <class S>
Mat<S> identity_map(const FieldSpec& field, int n) {
  Mat<S> m = Mat<S>::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = embed<S>(field, 1);
  return m;
}

/// Reduced row echelon form of a matrix together with its pivot columns.
template <class S>
struct Echelon {
  Mat<S> rref;              // rank rows, each with a leading 1 in its pivot column
  std::vector<int> pivots;  // pivots[r] = pivot column of row r

  int rank() const { return static_cast<int>(pivots.size()); }

  /// Residual of v after eliminating every pivot coordinate; zero iff v lies
  /// in the row space.
  Vec<S> residual(Vec<S> v) const {
    for (int r = 0; r < rank(); ++r) {
      const S c = v(pivots[r]);
      if (!c.is_zero()) v -= c * rref.row(r).transpose();
    }
    return v;
  }
};

/// Row-reduces `m` (rows are the vectors). Leaves zero rows out of the result.
template <class S>
Echelon<S> row_reduce(Mat<S> m) {
  Echelon<S> out;
  int row = 0;
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    m.row(row) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const S f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rref = m.topRows(row);
  return out;
}

/// Echelon form of the span of `gens` (each a vector of length n).
template <class S>
Echelon<S> span_of(const std::vector<Vec<S>>& gens, int n) {
  Mat<S> m = Mat<S>::Zero(static_cast<Eigen::Index>(gens.size()), n);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_dims(gens[i].size() == n, "generator length differs from ambient dimension");
    m.row(static_cast<Eigen::Index>(i)) = gens[i].transpose();
  }
  return row_reduce<S>(std::move(m));
}

template <class S>
S determinant(Mat<S> m) {
  require_dims(m.rows() == m.cols(), "determinant of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  S det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (!m(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return S(0);
    if (pivot != col) {
      m.row(pivot).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    const S inv = S(1) / m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const S f = m(r, col) * inv;
      m.row(r) -= f * m.row(col);
    }
  }
  return det;
}

/// Exact inverse of a square matrix; nullopt when singular.
template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& m) {
  require_dims(m.rows() == m.cols(), "inverse of a non-square matrix");
  const auto n = m.rows();
  Mat<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Mat<S>::Identity(n, n);
  Echelon<S> e = row_reduce<S>(std::move(aug));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return Mat<S>(e.rref.rightCols(n));
}

}  // namespace antiflex
