#pragma once

// The map (g, Y) -> g (Id + t^{-1} Y) mod Q from G x^{P_d} u(P_d) into the
// partial affine flag variety, the factorisation g kappa_d = Ybar h with
// g in GL_n(A) and h in Q, and the coset comparisons behind injectivity.

#include "affsch/check_report.hpp"
#include "affsch/lattice.hpp"
#include "affsch/laurent.hpp"
#include "affsch/random.hpp"

#include <cstdint>

namespace affsch {

/// Y = sum_{i <= d < j} a_{ij} E_{ij}, an element of the nilradical of P_d;
/// `block` holds the d x (n-d) array a.
class NilpotentY {
public:
  /// Throws InvalidParams (d outside [1, n-1]) or SizeMismatch.
  NilpotentY(int n, int d, RationalMatrix block);

  static NilpotentY zero(int n, int d);
  /// Throws PreconditionViolated unless y is supported on rows <= d < columns.
  static NilpotentY from_full(int d, const RationalMatrix& y);

  int n() const { return n_; }
  int d() const { return d_; }
  const RationalMatrix& block() const { return block_; }
  /// The n x n matrix Y; Y^2 = 0.
  RationalMatrix full() const;

  friend bool operator==(const NilpotentY& a, const NilpotentY& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.block_ == b.block_;
  }

private:
  int n_;
  int d_;
  RationalMatrix block_;
};

/// Id + t^{-1} Y (the series Id + t^{-1} Y + t^{-2} Y^2 + ... stops since Y^2 = 0).
LaurentMatrix ybar(const NilpotentY& y);
/// Id - t^{-1} Y.
LaurentMatrix ybar_inverse(const NilpotentY& y);

struct Factorization {
  LaurentMatrix g;
  LaurentMatrix h;
  bool certified = false;
  int attempts = 0;
};

/// Free data of the column template. g has degree <= 1:
///  * columns 1..d: `first` (n x d constants);
///  * columns d+1..n-d: top rows `middle_top` (d x (n-2d)), bottom rows a
///    combination of a kernel basis of a with coefficients `middle_kernel`,
///    so that the t^{-1} part of h vanishes;
///  * columns n-d+1..n: a solution of the homogeneous system
///      g^{(0)}_{ij} - sum_{m > d} a_{im} g^{(1)}_{mj} = 0  (i <= d),
///    given by coefficients `last` on its null space basis; bottom rows have
///    order exactly 1 and top rows order 0.
struct FactorizationParams {
  RationalMatrix first;
  RationalMatrix middle_top;
  RationalMatrix middle_kernel;
  RationalMatrix last;
};

/// The d^2 x nd coefficient matrix of the homogeneous system above; variables
/// are ordered column by column as (g^{(0)}_{1j..dj}, g^{(1)}_{d+1 j..n j}).
RationalMatrix last_column_system(const NilpotentY& y);
/// Right kernel basis of the block a (columns).
RationalMatrix block_kernel(const NilpotentY& y);

/// Builds g from the parameters and sets h = Ybar^{-1} g kappa_d. `certified`
/// records g kappa_d == Ybar h, g integral with unit determinant, h in Q.
Factorization assemble_factorization(const NilpotentY& y, const FactorizationParams& p);

/// Parameters with every free entry equal to one (the solver's first attempt).
FactorizationParams unit_params(const NilpotentY& y);

/// Searches the template for g with unit determinant: first the all-ones
/// choice, then seeded draws of small integers. Throws DegenerateInput when
/// rank(a) < d (the last d columns of g(0) then lie in the image of a) or when
/// the budget is exhausted.
Factorization factorize(const NilpotentY& y, std::uint64_t seed = 0, int max_attempts = 64);

/// g0 (constant, det 1) times Ybar, as a point of G_0 / Q.
/// Throws NotConstant or NotUnimodular.
ChainPoint phi(const LaurentMatrix& g0, const NilpotentY& y);
ChainPoint phi(const RationalMatrix& g0, const NilpotentY& y);

/// relative_position(phi(Id, Y)) <= kappa_d (name "thm_membership").
CheckReport membership_check(const NilpotentY& y);

/// M2^{-1} M1 in Q. Both must have order(det) = 0. The inverse is never
/// expanded: M2^{-1} M1 = adj(M2) M1 / det(M2) and det(M2) is a unit of A, so
/// the entry orders of adj(M2) M1 decide membership.
bool coset_eq(const LaurentMatrix& m1, const LaurentMatrix& m2, int d);
/// Same predicate through series_inverse(M2, precision) M1. An entry with no
/// certified term has order >= the certified precision. Throws
/// InsufficientPrecision when that bound is < 1.
bool coset_eq_series(const LaurentMatrix& m1, const LaurentMatrix& m2, int d, Index precision);

/// If phi(g1, Y1) = phi(g2, Y2): h = g2^{-1} g1 must lie in P_d and
/// Y1 = h^{-1} Y2 h (pass); otherwise the report is vacuous.
/// Name "injectivity".
CheckReport injectivity_witness(const RationalMatrix& g1, const NilpotentY& y1, const RationalMatrix& g2,
                                const NilpotentY& y2);

/// h_{ij} = 0 for j <= d < i.
bool in_parabolic(const RationalMatrix& h, int d);

// Samplers used by the randomized suites.
enum class YKind { Generic, Sparse, RankDeficient };
/// Generic: every entry non-zero and rank(a) = d. Sparse: entries zero with
/// probability 1/2. RankDeficient: rank(a) < d (a = 0 when d = 1).
NilpotentY random_nilpotent_y(int n, int d, YKind kind, Rng& rng);
/// Product of random integer elementary matrices and a permutation sign fix;
/// det = 1.
RationalMatrix random_sl(int n, Rng& rng);
/// Random element of P_d with det = 1.
RationalMatrix random_parabolic(int n, int d, Rng& rng);

Json to_json(const NilpotentY& y);
NilpotentY nilpotent_y_from_json(const Json& j);
Json to_json(const Factorization& f);

}  // namespace affsch
