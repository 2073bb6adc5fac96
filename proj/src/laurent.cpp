#include "affsch/laurent.hpp"

namespace affsch {

LaurentMatrix lift_simple(int n, int i) {
  const Word check(n, {i});  // validates rank and index
  LaurentMatrix m = laurent_identity<Rational>(n);
  if (i == 0) {
    m(0, 0) = LaurentPoly();
    m(n - 1, n - 1) = LaurentPoly();
    m(0, n - 1) = LaurentPoly::t(-1);
    m(n - 1, 0) = -LaurentPoly::t(1);
  } else {
    m(i - 1, i - 1) = LaurentPoly();
    m(i, i) = LaurentPoly();
    m(i - 1, i) = LaurentPoly(1);
    m(i, i - 1) = LaurentPoly(-1);
  }
  return m;
}

LaurentMatrix lift_word(const Word& w) {
  LaurentMatrix m = laurent_identity<Rational>(w.n);
  for (int l : w.letters) m = (m * lift_simple(w.n, l)).eval();
  return m;
}

std::optional<RationalMatrix> torus_sign_factor(const LaurentMatrix& m, const LaurentMatrix& target) {
  if (m.rows() != target.rows() || m.cols() != target.cols()) {
    throw SizeMismatch("torus_sign_factor: shapes differ");
  }
  const auto n = m.rows();
  RationalMatrix d = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // The row's sign is read off the first non-zero target entry.
    std::optional<Rational> sign;
    for (Eigen::Index j = 0; j < n && !sign; ++j) {
      if (target(i, j).is_zero()) continue;
      if (m(i, j) == target(i, j)) {
        sign = Rational(1);
      } else if (m(i, j) == -target(i, j)) {
        sign = Rational(-1);
      } else {
        return std::nullopt;
      }
    }
    if (!sign) return std::nullopt;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (m(i, j) != LaurentPoly(*sign) * target(i, j)) return std::nullopt;
    }
    d(i, i) = *sign;
  }
  return d;
}

SeriesMatrix series_inverse(const LaurentMatrix& m, Index extra) {
  const LaurentPoly dm = det(m);
  if (dm.is_zero()) throw SingularMatrix("series_inverse of a singular matrix");
  const Index k = dm.order();
  const auto inv_det = series_inv(truncate(dm, k + extra));
  const LaurentMatrix adj = adjugate(m);
  SeriesMatrix out{LaurentMatrix(m.rows(), m.cols()), kInfiniteOrder / 2};
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto entry = adj(i, j) * inv_det;
      out.known(i, j) = entry.known();
      out.precision = std::min(out.precision, entry.precision());
    }
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.known(i, j) = out.known(i, j).truncated_below(out.precision);
  return out;
}

SeriesMatrix operator*(const SeriesMatrix& s, const LaurentMatrix& m) {
  if (s.known.cols() != m.rows()) throw SizeMismatch("series matrix product: shapes differ");
  // Each product term s_ik m_kj is certified below precision + ord(m_kj).
  const Index shift = std::min<Index>(min_order(m), kInfiniteOrder / 4);
  SeriesMatrix out{(s.known * m).eval(), s.precision + shift};
  for (Eigen::Index i = 0; i < out.known.rows(); ++i)
    for (Eigen::Index j = 0; j < out.known.cols(); ++j)
      out.known(i, j) = out.known(i, j).truncated_below(out.precision);
  return out;
}

}  // namespace affsch
