#include "affsch/lattice.hpp"

#include "affsch/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace affsch {

namespace {

// Splits a non-zero f as t^k * u with u a polynomial of non-zero constant term.
std::pair<Index, LaurentPoly> split_unit(const LaurentPoly& f) {
  const Index k = f.order();
  return {k, f.shifted(-k)};
}

}  // namespace

SmithForm smith_over_dvr(const LaurentMatrix& a) {
  const auto n = a.rows();
  if (a.cols() != n) throw SizeMismatch("smith_over_dvr: matrix not square");
  SmithForm out;
  LaurentMatrix m = a;
  out.left = laurent_identity<Rational>(n);
  out.right = laurent_identity<Rational>(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pr = -1, pc = -1;
    Index best = kInfiniteOrder;
    for (Eigen::Index i = k; i < n; ++i) {
      for (Eigen::Index j = k; j < n; ++j) {
        if (m(i, j).order() < best) {
          best = m(i, j).order();
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) throw SingularMatrix("smith_over_dvr: determinant is zero");
    m.row(k).swap(m.row(pr));
    out.left.row(k).swap(out.left.row(pr));
    m.col(k).swap(m.col(pc));
    out.right.col(k).swap(out.right.col(pc));

    const auto [e, unit] = split_unit(m(k, k));
    // row_i <- unit * row_i - v * row_k, with v = m(i,k) t^{-e} in A.
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const LaurentPoly v = m(i, k).shifted(-e);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) = unit * m(i, j) - v * m(k, j);
        out.left(i, j) = unit * out.left(i, j) - v * out.left(k, j);
      }
    }
    for (Eigen::Index j = k + 1; j < n; ++j) {
      if (m(k, j).is_zero()) continue;
      const LaurentPoly v = m(k, j).shifted(-e);
      for (Eigen::Index i = 0; i < n; ++i) {
        m(i, j) = unit * m(i, j) - v * m(i, k);
        out.right(i, j) = unit * out.right(i, j) - v * out.right(i, k);
      }
    }
    out.exponents.push_back(e);
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  out.diagonal = std::move(m);
  return out;
}

Lattice::Lattice(LaurentMatrix basis) : basis_(std::move(basis)) {
  if (basis_.rows() != basis_.cols()) throw SizeMismatch("lattice basis must be square");
  if (det(basis_).is_zero()) throw SingularMatrix("lattice basis is singular");
}

Lattice Lattice::standard(int n) { return Lattice(laurent_identity<Rational>(n)); }

Index vdim(const Lattice& v) { return -det(v.basis()).order(); }

std::pair<Index, Index> quotient_dims(const Lattice& v) {
  // In Smith coordinates V = sum A t^{a_i} f_i and E = sum A f_i, so
  // V / V cap E has dimension sum_{a_i < 0} -a_i and E / V cap E has
  // dimension sum_{a_i > 0} a_i.
  Index above = 0, below = 0;
  for (Index a : smith_over_dvr(v.basis()).exponents) {
    if (a < 0) above += -a;
    if (a > 0) below += a;
  }
  return {above, below};
}

Index vdim_from_quotients(const Lattice& v) {
  const auto [above, below] = quotient_dims(v);
  return above - below;
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  if (a.rank() != b.rank()) return false;
  // a^{-1} b = adj(a) b / det(a), and det(a) = t^k * unit.
  const Index k = det(a.basis()).order();
  const LaurentMatrix transition = adjugate(a.basis()) * b.basis();
  const auto s = smith_over_dvr(transition);
  return std::all_of(s.exponents.begin(), s.exponents.end(), [k](Index e) { return e == k; });
}

ChainPoint::ChainPoint(int d, LaurentMatrix m) : d_(d), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw SizeMismatch("chain point matrix must be square");
  const int n = static_cast<int>(m_.rows());
  if (d < 1 || d > n - 1) throw InvalidParams("d must lie in [1, n-1]");
  const LaurentPoly dm = det(m_);
  if (dm.is_zero()) throw SingularMatrix("chain point matrix is singular");
  if (dm.order() != 0) {
    throw PreconditionViolated("order(det M) = " + std::to_string(dm.order()) + ", expected 0");
  }
}

std::pair<Lattice, Lattice> ChainPoint::lattices() const {
  LaurentMatrix sub = laurent_identity<Rational>(n());
  for (int i = d_; i < n(); ++i) sub(i, i) = LaurentPoly::t(1);
  return {Lattice(m_), Lattice(m_ * sub)};
}

AffinePermutation bruhat_cell(const LaurentMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw SizeMismatch("bruhat_cell: matrix not square");
  const LaurentPoly dm = det(m);
  if (dm.is_zero()) throw SingularMatrix("bruhat_cell: matrix is singular");
  if (dm.order() != 0) throw PreconditionViolated("bruhat_cell: order(det M) != 0");

  // Unfold M into the periodic Z x Z matrix c over K acting on the basis
  // eps_{r + kn} = t^{-k} e_r: c(r + (l - m) n, s + l n) = [t^m] M(r, s).
  // The Iwahori subgroup becomes the invertible upper triangular periodic
  // matrices, so the cell is read off the south-west rank function
  //   rank(rows >= i, cols <= j) = #{k <= j : w(k) >= i},
  // i.e. from a column echelon form whose pivot is the lowest non-zero row.
  const Index lowest_exp = min_order(m);
  const Index hi = (n - 1) - lowest_exp * n;  // row - col <= hi for non-zero c
  const Index band = std::max<Index>(hi, 0);
  // w(j) - j <= hi for all j and the displacements sum to zero.
  const Index row_floor = 1 - (n - 1) * band;
  const Index col_floor = row_floor - hi;

  using Column = std::map<Index, Rational>;
  std::map<Index, Column> pivots;  // pivot row -> reduced column with 1 at the pivot
  std::vector<Index> window(static_cast<std::size_t>(n), 0);

  for (Index b = col_floor; b <= n; ++b) {
    const Index l = floor_div(b - 1, n);
    const Index s = b - l * n;
    Column col;
    for (int r = 1; r <= n; ++r) {
      for (const auto& [e, c] : m(r - 1, s - 1).terms()) {
        const Index row = r + (l - e) * n;
        if (row >= row_floor) col[row] = c;
      }
    }
    while (!col.empty()) {
      const auto low = std::prev(col.end());
      const auto hit = pivots.find(low->first);
      if (hit == pivots.end()) break;
      const Rational f = low->second;
      for (const auto& [row, c] : hit->second) {
        auto [it, inserted] = col.try_emplace(row, Rational(0));
        it->second -= f * c;
        if (it->second == 0) col.erase(it);
      }
    }
    if (col.empty()) {
      if (b >= 1) throw Error("bruhat_cell: column " + std::to_string(b) + " has no pivot");
      continue;
    }
    const Index p = std::prev(col.end())->first;
    const Rational inv = Rational(1) / std::prev(col.end())->second;
    for (auto& [row, c] : col) c *= inv;
    pivots.emplace(p, std::move(col));
    if (b >= 1) window[static_cast<std::size_t>(b - 1)] = p;
  }
  return AffinePermutation(std::move(window));
}

AffinePermutation relative_position(const ChainPoint& p) {
  return min_coset_rep(bruhat_cell(p.matrix()), GeneratorSet::two_step(p.n(), p.d()));
}

bool in_Q(const LaurentMatrix& h, int d) {
  const auto n = h.rows();
  if (h.cols() != n) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Index o = h(i, j).order();
      const bool strictly = (j < d) && (i >= d);
      if (o < 0 || (strictly && o == 0)) return false;
    }
  }
  return det(h).order() == 0;
}

}  // namespace affsch
