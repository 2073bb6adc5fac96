#pragma once

// Lattice model of the affine Grassmannian and of G/Q for the two-step
// parahoric Q: A-lattices in F^n (A = K[[t]], F = K((t))), virtual dimension,
// Smith form over A, and Bruhat cell identification.

#include "affsch/affine_weyl.hpp"
#include "affsch/laurent.hpp"

#include <utility>
#include <vector>

namespace affsch {

/// left * a * right = diagonal, with left/right integral of unit determinant
/// and diagonal(i, i) = t^{exponents[i]} * (unit of A). Exponents ascending.
/// The transforms are returned in this inverse form so that they stay exact
/// Laurent polynomial matrices.
struct SmithForm {
  std::vector<Index> exponents;
  LaurentMatrix left;
  LaurentMatrix right;
  LaurentMatrix diagonal;
};

/// Throws SingularMatrix when det(a) = 0.
SmithForm smith_over_dvr(const LaurentMatrix& a);

/// Free A-submodule of F^n of rank n spanned by the columns of `basis`.
class Lattice {
public:
  /// Throws SingularMatrix if det(basis) = 0.
  explicit Lattice(LaurentMatrix basis);

  /// E = A e_1 + ... + A e_n.
  static Lattice standard(int n);

  int rank() const { return static_cast<int>(basis_.rows()); }
  const LaurentMatrix& basis() const { return basis_; }

private:
  LaurentMatrix basis_;
};

/// dim_K(V / V cap E) - dim_K(E / V cap E), computed as -order(det(basis)).
Index vdim(const Lattice& v);
/// The same quantity assembled from the two quotient dimensions read off the
/// Smith exponents (negative exponents contribute to V / V cap E).
Index vdim_from_quotients(const Lattice& v);
std::pair<Index, Index> quotient_dims(const Lattice& v);

/// Same A-span: the transition matrix lies in GL_n(A).
bool same_lattice(const Lattice& a, const Lattice& b);

/// Coset representative M of G_0 / Q where Q stabilises the pair
/// (E, E^{(d)}), E^{(d)} = span_A{e_1..e_d, t e_{d+1}..t e_n}.
class ChainPoint {
public:
  /// Throws InvalidParams (d outside [1, n-1]), SingularMatrix (det = 0) or
  /// PreconditionViolated (order(det M) != 0).
  ChainPoint(int d, LaurentMatrix m);

  int n() const { return static_cast<int>(m_.rows()); }
  int d() const { return d_; }
  const LaurentMatrix& matrix() const { return m_; }

  /// (M E, M E^{(d)}).
  std::pair<Lattice, Lattice> lattices() const;

private:
  int d_;
  LaurentMatrix m_;
};

/// The w in the affine Weyl group with M in B w B (B the Iwahori subgroup,
/// upper triangular mod t). Requires order(det M) = 0.
AffinePermutation bruhat_cell(const LaurentMatrix& m);

/// Minimal representative w of the cell B w Q containing M.
AffinePermutation relative_position(const ChainPoint& p);

/// h integral, h_{ij} in tA for j <= d < i, det h a unit of A.
bool in_Q(const LaurentMatrix& h, int d);

}  // namespace affsch
