#include "affsch/errors.hpp"
#include "affsch/kappa.hpp"
#include "affsch/lattice.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace affsch;

namespace {

LaurentPoly t(Index e = 1) { return LaurentPoly::t(e); }

LaurentMatrix mat2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
  LaurentMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

LaurentMatrix scalar(int n, const LaurentPoly& f) { return laurent_identity<Rational>(n) * f; }

}  // namespace

TEST_CASE("Smith form examples") {
  CHECK(smith_over_dvr(mat2(t(), 0, 0, t(-1))).exponents == std::vector<Index>{-1, 1});
  CHECK(smith_over_dvr(laurent_identity<Rational>(3)).exponents == std::vector<Index>{0, 0, 0});
  CHECK(smith_over_dvr(mat2(1, t(-1), 0, 1)).exponents == std::vector<Index>{-1, 1});
  CHECK_THROWS_AS(smith_over_dvr(mat2(1, 1, 1, 1)), SingularMatrix);
}

TEST_CASE("Smith transforms are integral with unit determinant") {
  Rng rng(31);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 40; ++k) {
      const LaurentMatrix a = gen::laurent_matrix(n, rng, -2, 2);
      const LaurentPoly da = det(a);
      if (da.is_zero()) continue;
      const SmithForm s = smith_over_dvr(a);
      Index sum = 0;
      for (Index e : s.exponents) sum += e;
      CHECK(sum == da.order());
      CHECK(std::is_sorted(s.exponents.begin(), s.exponents.end()));
      CHECK(is_integral(s.left));
      CHECK(is_integral(s.right));
      CHECK(det(s.left).order() == 0);
      CHECK(det(s.right).order() == 0);
      const LaurentMatrix diag = s.left * a * s.right;
      CHECK(diag == s.diagonal);
      std::vector<Index> orders;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
          if (i != j) CHECK(diag(i, j).is_zero());
        orders.push_back(diag(i, i).order());
      }
      std::sort(orders.begin(), orders.end());
      CHECK(orders == s.exponents);
    }
}

TEST_CASE("virtual dimension examples") {
  CHECK(vdim(Lattice::standard(3)) == 0);
  for (int n = 1; n <= 5; ++n)
    for (int k = -2; k <= 2; ++k) {
      const Lattice v(scalar(n, t(k)));
      CHECK(vdim(v) == -k * n);
      CHECK(vdim_from_quotients(v) == -k * n);
    }
  CHECK(vdim(Lattice(mat2(1, t(-1), 0, 1))) == 0);
  CHECK(quotient_dims(Lattice(mat2(1, t(-1), 0, 1))) == std::pair<Index, Index>{1, 1});
  CHECK(quotient_dims(Lattice(scalar(3, t()))) == std::pair<Index, Index>{0, 3});
  CHECK_THROWS_AS(Lattice(mat2(t(), t(), 1, 1)), SingularMatrix);
}

TEST_CASE("virtual dimension routes agree on random lattices") {
  Rng rng(32);
  int tested = 0;
  while (tested < 200) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 4));
    const LaurentMatrix b = gen::laurent_matrix(n, rng, -2, 2);
    if (det(b).is_zero()) continue;
    const Lattice v(b);
    CHECK(vdim(v) == vdim_from_quotients(v));
    ++tested;
  }
}

TEST_CASE("same lattice up to integral unit-determinant change of basis") {
  Rng rng(33);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 20; ++k) {
      LaurentMatrix b = gen::laurent_matrix(n, rng, -1, 1);
      if (det(b).is_zero()) continue;
      const LaurentMatrix g = gen::iwahori(n, rng);
      CHECK(same_lattice(Lattice(b), Lattice(b * g)));
      CHECK_FALSE(same_lattice(Lattice(b), Lattice(LaurentMatrix(b * scalar(n, t())))));
      LaurentMatrix shear = laurent_identity<Rational>(n);
      shear(0, n - 1) = t(-1);
      CHECK_FALSE(same_lattice(Lattice(b), Lattice(b * shear)));
    }
}

TEST_CASE("chain points") {
  CHECK_THROWS_AS(ChainPoint(1, scalar(2, t())), PreconditionViolated);
  CHECK_THROWS_AS(ChainPoint(2, laurent_identity<Rational>(2)), InvalidParams);
  CHECK_THROWS_AS(ChainPoint(1, mat2(1, 1, 1, 1)), SingularMatrix);
  const auto [l, lp] = ChainPoint(1, laurent_identity<Rational>(3)).lattices();
  CHECK(vdim(l) == 0);
  CHECK(vdim(lp) == -2);
}

TEST_CASE("membership in Q") {
  CHECK_FALSE(in_Q(kappa_matrix(2, 1), 1));
  CHECK(in_Q(mat2(t() - LaurentPoly(1), 0, t(), 1), 1));
  CHECK(in_Q(laurent_identity<Rational>(4), 2));
  CHECK_FALSE(in_Q(mat2(1, 0, 1, 1), 1));
  CHECK(in_Q(mat2(1, 1, 0, 1), 1));
  CHECK_FALSE(in_Q(mat2(t(), 0, 0, 1), 1));
}

TEST_CASE("relative position examples") {
  CHECK(relative_position(ChainPoint(1, laurent_identity<Rational>(3))) == identity(3));
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; 2 * d <= n; ++d) {
      const KappaData k = build_kappa(n, d);
      CHECK(relative_position(ChainPoint(d, lift_word(k.kappa_word))) == k.kappa);
      CHECK(relative_position(ChainPoint(d, k.matrix)) == k.kappa);
    }
  CHECK(relative_position(ChainPoint(1, mat2(1, t(-1), 0, 1))) == simple(2, 0));
}

TEST_CASE("Bruhat cell of b lift(w) b' is w") {
  Rng rng(34);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 40; ++k) {
      const auto w = gen::affine(n, rng, 1);
      const LaurentMatrix m = gen::iwahori(n, rng) * lift_word(reduced_word(w)) * gen::iwahori(n, rng);
      CHECK(bruhat_cell(m) == w);
    }
}

TEST_CASE("relative position: lift-word oracle and perturbation invariance") {
  Rng rng(35);
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= n - 1; ++d) {
      const GeneratorSet sq = GeneratorSet::two_step(n, d);
      for (int cell = 0; cell < 20; ++cell) {
        const auto w = gen::affine(n, rng, 1);
        const auto expected = min_coset_rep(w, sq);
        const LaurentMatrix base = lift_word(reduced_word(w));
        const auto pos = relative_position(ChainPoint(d, base));
        CHECK(pos == expected);
        CHECK(is_min_coset_rep(pos, sq));
        for (int p = 0; p < 50; ++p) {
          const LaurentMatrix m = gen::iwahori(n, rng) * base * gen::parahoric(n, d, rng);
          CHECK(relative_position(ChainPoint(d, m)) == expected);
        }
      }
    }
}
