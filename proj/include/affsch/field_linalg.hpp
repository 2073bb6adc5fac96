#pragma once

// Exact Gauss-Jordan elimination over a field scalar (no pivoting by
// magnitude: the first non-zero entry is taken).

#include "affsch/errors.hpp"

#include <Eigen/Core>

#include <vector>

namespace affsch {

template <class Scalar>
struct RowEchelon {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> reduced;
  std::vector<Eigen::Index> pivot_cols;
};

template <class Derived>
RowEchelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m_in) {
  using S = typename Derived::Scalar;
  RowEchelon<S> out{m_in, {}};
  auto& m = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < m.rows() && m(piv, col) == S(0)) ++piv;
    if (piv == m.rows()) continue;
    m.row(piv).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == S(0)) continue;
      const S f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

template <class Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(rref(m).pivot_cols.size());
}

/// Columns form a basis of the right null space {x : m x = 0}, one basis
/// vector per free column (free variable set to 1, other free variables 0).
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> nullspace(
    const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> basis =
      Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>::Zero(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], static_cast<Eigen::Index>(k)) = S(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      basis(e.pivot_cols[r], static_cast<Eigen::Index>(k)) = -e.reduced(static_cast<Eigen::Index>(r), free[k]);
    }
  }
  return basis;
}

template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(
    const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto n = m.rows();
  if (m.cols() != n) throw SizeMismatch("inverse of a non-square matrix");
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) aug(i, n + i) = S(1);
  const auto e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivot_cols.size()) < n || e.pivot_cols[static_cast<std::size_t>(n - 1)] >= n) {
    throw SingularMatrix("matrix is not invertible");
  }
  return e.reduced.rightCols(n);
}

}  // namespace affsch
