#pragma once

// Exact Laurent polynomials over a field, Eigen matrices of them, and the
// canonical lifts of the simple reflections to SL_n(K((t))).

#include "affsch/affine_weyl.hpp"
#include "affsch/errors.hpp"
#include "affsch/rational.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace affsch {

/// Order of the zero series.
inline constexpr Index kInfiniteOrder = std::numeric_limits<Index>::max();

/// Finite sum sum_e c_e t^e with c_e in Scalar. Stored densely from the
/// lowest exponent; no leading or trailing zero coefficients are kept, so
/// structural equality is value equality.
template <class Scalar>
class Laurent {
public:
  Laurent() = default;
  Laurent(int c) : Laurent(Scalar(c)) {}  // NOLINT: Eigen needs Scalar(0), Scalar(1)
  Laurent(const Scalar& c) {              // NOLINT
    if (c != 0) coeffs_.push_back(c);
  }

  static Laurent monomial(const Scalar& c, Index e) {
    Laurent f(c);
    if (!f.is_zero()) f.low_ = e;
    return f;
  }
  static Laurent t(Index e = 1) { return monomial(Scalar(1), e); }

  static Laurent from_map(const std::map<Index, Scalar>& m) {
    Laurent f;
    if (m.empty()) return f;
    f.low_ = m.begin()->first;
    f.coeffs_.assign(static_cast<std::size_t>(m.rbegin()->first - f.low_ + 1), Scalar(0));
    for (const auto& [e, c] : m) f.coeffs_[static_cast<std::size_t>(e - f.low_)] = c;
    f.trim();
    return f;
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Smallest exponent with non-zero coefficient; kInfiniteOrder for 0.
  Index order() const { return is_zero() ? kInfiniteOrder : low_; }
  /// Largest exponent with non-zero coefficient; undefined for 0.
  Index degree() const { return low_ + static_cast<Index>(coeffs_.size()) - 1; }
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }

  Scalar coeff(Index e) const {
    if (is_zero() || e < low_ || e > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(e - low_)];
  }
  Scalar leading_coeff() const { return is_zero() ? Scalar(0) : coeffs_.front(); }

  /// Non-zero terms in increasing exponent order.
  std::vector<std::pair<Index, Scalar>> terms() const {
    std::vector<std::pair<Index, Scalar>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] != 0) out.emplace_back(low_ + static_cast<Index>(k), coeffs_[k]);
    }
    return out;
  }

  /// f * t^k.
  Laurent shifted(Index k) const {
    Laurent f = *this;
    if (!f.is_zero()) f.low_ += k;
    return f;
  }

  /// Terms with exponent < N.
  Laurent truncated_below(Index N) const {
    if (is_zero() || N <= low_) return Laurent();
    Laurent f = *this;
    if (N <= degree()) f.coeffs_.resize(static_cast<std::size_t>(N - low_));
    f.trim();
    return f;
  }

  Laurent operator-() const {
    Laurent f = *this;
    for (auto& c : f.coeffs_) c = -c;
    return f;
  }

  Laurent& operator+=(const Laurent& g) {
    if (g.is_zero()) return *this;
    if (is_zero()) return *this = g;
    const Index lo = std::min(low_, g.low_);
    const Index hi = std::max(degree(), g.degree());
    std::vector<Scalar> out(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[low_ - lo + k] = coeffs_[k];
    for (std::size_t k = 0; k < g.coeffs_.size(); ++k) out[g.low_ - lo + k] += g.coeffs_[k];
    coeffs_ = std::move(out);
    low_ = lo;
    trim();
    return *this;
  }
  Laurent& operator-=(const Laurent& g) { return *this += -g; }
  Laurent& operator*=(const Laurent& g) { return *this = *this * g; }

  friend Laurent operator+(Laurent f, const Laurent& g) { return f += g; }
  friend Laurent operator-(Laurent f, const Laurent& g) { return f -= g; }
  friend Laurent operator*(const Laurent& f, const Laurent& g) {
    Laurent out;
    if (f.is_zero() || g.is_zero()) return out;
    out.low_ = f.low_ + g.low_;
    out.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (f.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    out.trim();
    return out;
  }

  friend bool operator==(const Laurent& f, const Laurent& g) {
    return f.coeffs_ == g.coeffs_ && (f.is_zero() || f.low_ == g.low_);
  }
  friend bool operator!=(const Laurent& f, const Laurent& g) { return !(f == g); }

  friend std::ostream& operator<<(std::ostream& os, const Laurent& f) {
    if (f.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (e != 0) os << "t^" << e;
    }
    return os;
  }

private:
  void trim() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    while (coeffs_.back() == 0) coeffs_.pop_back();
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<Index>(lead);
  }

  Index low_ = 0;
  std::vector<Scalar> coeffs_;
};

template <class Scalar>
Index order(const Laurent<Scalar>& f) {
  return f.order();
}

using LaurentPoly = Laurent<Rational>;

}  // namespace affsch

namespace Eigen {

template <class Scalar>
struct NumTraits<affsch::Laurent<Scalar>> : GenericNumTraits<affsch::Laurent<Scalar>> {
  using Real = affsch::Laurent<Scalar>;
  using NonInteger = affsch::Laurent<Scalar>;
  using Literal = affsch::Laurent<Scalar>;
  using Nested = affsch::Laurent<Scalar>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static Real epsilon() { return Real(); }
  static Real dummy_precision() { return Real(); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace affsch {

template <class Scalar>
using LaurentMatrixX = Eigen::Matrix<Laurent<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using LaurentMatrix = LaurentMatrixX<Rational>;
using RationalMatrix = MatrixX<Rational>;

/// Division-free determinant over any commutative ring: Laplace expansion
/// along rows with minors memoised by column subset, O(2^n n) ring products.
template <class Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto n = m.rows();
  if (m.cols() != n) throw SizeMismatch("det of a non-square matrix");
  if (n == 0) return S(1);
  if (n > 20) throw SizeMismatch("det: matrix too large for subset expansion");
  const std::size_t states = std::size_t{1} << n;
  std::vector<S> minor(states, S(0));
  minor[0] = S(1);
  for (std::size_t mask = 0; mask + 1 < states; ++mask) {
    if (minor[mask] == S(0)) continue;
    const int row = __builtin_popcountll(mask);
    for (Eigen::Index c = 0; c < n; ++c) {
      const std::size_t bit = std::size_t{1} << c;
      if (mask & bit) continue;
      if (m(row, c) == S(0)) continue;
      // sign from the number of already used columns to the right of c
      const int above = __builtin_popcountll(mask >> (c + 1));
      S term = m(row, c) * minor[mask];
      if (above % 2 == 1) term = -term;
      minor[mask | bit] += term;
    }
  }
  return minor[states - 1];
}

/// Transposed cofactor matrix: adj(M) * M = M * adj(M) = det(M) * Id.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> adjugate(
    const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const auto n = m.rows();
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> adj(n, n);
  if (n == 1) {
    adj(0, 0) = S(1);
    return adj;
  }
  Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> sub(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          sub(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      S cof = det(sub);
      adj(j, i) = ((i + j) % 2 == 0) ? cof : S(-cof);
    }
  }
  return adj;
}

template <class Scalar>
LaurentMatrixX<Scalar> laurent_identity(Eigen::Index n) {
  LaurentMatrixX<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Laurent<Scalar>(i == j ? 1 : 0);
  return m;
}

template <class Scalar>
LaurentMatrixX<Scalar> to_laurent(const MatrixX<Scalar>& c) {
  return c.unaryExpr([](const Scalar& x) { return Laurent<Scalar>(x); });
}

/// Smallest order among all entries (kInfiniteOrder for the zero matrix).
template <class Scalar>
Index min_order(const LaurentMatrixX<Scalar>& m) {
  Index lo = kInfiniteOrder;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) lo = std::min(lo, m(i, j).order());
  return lo;
}

/// Largest exponent among all entries; only meaningful for non-zero matrices.
template <class Scalar>
Index max_degree(const LaurentMatrixX<Scalar>& m) {
  Index hi = std::numeric_limits<Index>::min();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) hi = std::max(hi, m(i, j).degree());
  return hi;
}

/// Entries all in A = K[[t]].
template <class Scalar>
bool is_integral(const LaurentMatrixX<Scalar>& m) {
  return min_order(m) >= 0;
}

template <class Scalar>
bool is_constant(const LaurentMatrixX<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) return false;
  return true;
}

/// Coefficient matrix of t^e.
template <class Scalar>
MatrixX<Scalar> coefficient(const LaurentMatrixX<Scalar>& m, Index e) {
  return m.unaryExpr([e](const Laurent<Scalar>& f) { return f.coeff(e); });
}

/// Canonical lift of s_i: for i >= 1 the signed permutation matrix with
/// a_{i,i+1} = 1, a_{i+1,i} = -1; for i = 0 the matrix with (1,n) = t^{-1},
/// (n,1) = -t and ones on the remaining diagonal.
LaurentMatrix lift_simple(int n, int i);
/// Ordered product of canonical lifts.
LaurentMatrix lift_word(const Word& w);

/// Returns the constant diagonal D with entries +-1 such that m = D * target,
/// or nullopt if no such D exists.
std::optional<RationalMatrix> torus_sign_factor(const LaurentMatrix& m, const LaurentMatrix& target);

/// Truncated power series: coefficients are certified for exponents < precision.
template <class Scalar>
class TruncatedSeries {
public:
  TruncatedSeries(Laurent<Scalar> known, Index precision)
      : known_(known.truncated_below(precision)), precision_(precision) {}

  Index precision() const { return precision_; }
  const Laurent<Scalar>& known() const { return known_; }

  /// Throws InsufficientPrecision for e >= precision.
  Scalar coeff(Index e) const {
    if (e >= precision_) {
      throw InsufficientPrecision("coefficient of t^" + std::to_string(e) +
                                  " requested, certified below t^" + std::to_string(precision_));
    }
    return known_.coeff(e);
  }

  /// Order, provided it is certified (i.e. some certified coefficient is non-zero).
  Index certified_order() const {
    if (known_.is_zero()) {
      throw InsufficientPrecision("all certified coefficients vanish below t^" +
                                  std::to_string(precision_));
    }
    return known_.order();
  }

  friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    const Index p = std::min(f.precision_, g.precision_);
    return TruncatedSeries(f.known_ + g.known_, p);
  }
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    // f = F + O(t^Nf), g = G + O(t^Ng): fg = FG + O(t^min(Nf + ord g, Ng + ord f)).
    const Index of = f.known_.is_zero() ? f.precision_ : f.known_.order();
    const Index og = g.known_.is_zero() ? g.precision_ : g.known_.order();
    const Index p = std::min(f.precision_ + og, g.precision_ + of);
    return TruncatedSeries(f.known_ * g.known_, p);
  }
  /// Exact Laurent polynomial times series.
  friend TruncatedSeries operator*(const Laurent<Scalar>& f, const TruncatedSeries& g) {
    if (f.is_zero()) return TruncatedSeries(Laurent<Scalar>(), kInfiniteOrder / 2);
    return TruncatedSeries(f * g.known_, g.precision_ + f.order());
  }

private:
  Laurent<Scalar> known_;
  Index precision_;
};

template <class Scalar>
TruncatedSeries<Scalar> truncate(const Laurent<Scalar>& f, Index N) {
  return TruncatedSeries<Scalar>(f, N);
}

/// Inverse of a series with certified non-zero leading term. If u = t^k v with
/// v known below t^{N-k}, then u^{-1} = t^{-k} v^{-1} is known below t^{N-2k}.
template <class Scalar>
TruncatedSeries<Scalar> series_inv(const TruncatedSeries<Scalar>& u) {
  if (u.known().is_zero()) throw ZeroLeadingTerm("cannot invert a series with no certified non-zero term");
  const Index k = u.known().order();
  const Index terms = u.precision() - k;  // coefficients of v certified: v_0 .. v_{terms-1}
  const Scalar v0 = u.known().leading_coeff();
  std::map<Index, Scalar> inv;
  std::vector<Scalar> b(static_cast<std::size_t>(std::max<Index>(terms, 0)), Scalar(0));
  for (Index m = 0; m < terms; ++m) {
    Scalar acc = (m == 0) ? Scalar(1) : Scalar(0);
    for (Index j = 1; j <= m; ++j) acc -= u.known().coeff(k + j) * b[static_cast<std::size_t>(m - j)];
    b[static_cast<std::size_t>(m)] = acc / v0;
    if (b[static_cast<std::size_t>(m)] != 0) inv[m - k] = b[static_cast<std::size_t>(m)];
  }
  return TruncatedSeries<Scalar>(Laurent<Scalar>::from_map(inv), u.precision() - 2 * k);
}

/// Default working precision for inverting a quantity attached to rank n.
inline Index default_precision(int n, const LaurentPoly& f) {
  const Index spread = f.is_zero() ? 0 : f.degree() - f.order();
  return 8 * static_cast<Index>(n) + spread;
}

/// Matrix whose entries are all certified below t^precision.
struct SeriesMatrix {
  LaurentMatrix known;
  Index precision = 0;
};

/// M^{-1} = adj(M) / det(M), with det(M) inverted as a truncated series.
/// `extra` is the number of certified terms requested beyond order(det).
SeriesMatrix series_inverse(const LaurentMatrix& m, Index extra);

/// Exact polynomial matrix times a series matrix.
SeriesMatrix operator*(const SeriesMatrix& s, const LaurentMatrix& m);

}  // namespace affsch
