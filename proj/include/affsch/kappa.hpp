#pragma once

// The elements w_1, w_2 and kappa_d = w_1 w_2 of the affine Weyl group, and
// the checks of their combinatorial properties.
//
// "System B" is the type A_{n-1} diagram
//   alpha_{d-1} - ... - alpha_1 - alpha_0 - alpha_{n-1} - ... - alpha_{d+1}
// relabelled alpha'_1, ..., alpha'_{n-1}; its generators are represented by
// ambient indices (system_b_generator), so there is one group law throughout.

#include "affsch/affine_weyl.hpp"
#include "affsch/check_report.hpp"
#include "affsch/laurent.hpp"

#include <cstdint>

namespace affsch {

/// Throws InvalidParams unless n >= 2 and 1 <= d <= n - d.
void validate_kappa_params(int n, int d);

/// Ambient index of s'_m: s'_{d-k} = s_k (1 <= k <= d-1), s'_d = s_0,
/// s'_{n+d-l} = s_l (d+1 <= l <= n-1).
int system_b_generator(int n, int d, int m);

/// u_1 u_2 ... u_d with u_k = s_{n-d+k-1} s_{n-d+k-2} ... s_k.
Word build_w1(int n, int d);
/// v_{d-1} ... v_1 v_0 with v_k = s_{d+k+1} ... s_{n-1} s_0 s_1 ... s_k; the
/// leading run is empty when d + k + 1 = n.
Word build_w2(int n, int d);

/// diag(t I_d, I_{n-2d}, t^{-1} I_d).
LaurentMatrix kappa_matrix(int n, int d);

struct KappaData {
  int n = 0;
  int d = 0;
  Word w1_word;
  Word w2_word;
  Word kappa_word;
  AffinePermutation w1;
  AffinePermutation w2;
  AffinePermutation kappa;
  LaurentMatrix matrix;
};

KappaData build_kappa(int n, int d);

/// KappaData invariants and dim X(kappa_d) = 2d(n-d) (name "cor_dimension").
CheckReport check_kappa_invariants(int n, int d);

/// ell(y1 y2) = ell(y1) + ell(y2) for y1 in W^{P_d}, y2 in W^{P'_d}
/// (name "lemma_reduced"). Throws PreconditionViolated otherwise.
CheckReport check_lemma_red(const AffinePermutation& y1, const AffinePermutation& y2, int n, int d);
/// y1 y2 has no right descent in {1..n-1} \ {d} (name "lemma_min_rep").
CheckReport check_lemma_min(const AffinePermutation& y1, const AffinePermutation& y2, int n, int d);

/// s_k w_1 = w_1 s_{d+k} (1 <= k <= n-d-1), s_l w_1 = w_1 s_{l-(n-d)}
/// (n+1-d <= l <= n-1), and the same identities for w_2 in primed indices.
CheckReport check_stab(int n, int d);
/// s_k kappa = kappa s_k for 1 <= k <= n-1, k != d, n-d.
CheckReport check_rel(int n, int d);
/// min_coset_rep(s_k kappa) <= kappa for 1 <= k <= n-1, with a strict length
/// drop at k in {d, n-d} and commutation elsewhere.
CheckReport check_g0_stability(int n, int d);
/// lift_word(kappa word) = D * kappa_matrix with D = diag(+-1).
CheckReport check_matrix_lift(int n, int d);

bool in_w_pd_quotient(const AffinePermutation& y, int d);
bool in_w_pd_prime_quotient(const AffinePermutation& y, int d);

enum class QuotientSide { A, B };

/// Uniform element of S_n (A side) or of its system B copy, projected to its
/// minimal coset representative. Deterministic per seed.
AffinePermutation sample_quotient(int n, int d, QuotientSide side, std::uint64_t seed);

}  // namespace affsch
