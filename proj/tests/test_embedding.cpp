#include "affsch/embedding.hpp"
#include "affsch/errors.hpp"
#include "affsch/field_linalg.hpp"
#include "affsch/kappa.hpp"
#include "support/generators.hpp"

#include <doctest.h>

using namespace affsch;

namespace {

LaurentPoly t(Index e = 1) { return LaurentPoly::t(e); }

LaurentMatrix mat2(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) {
  LaurentMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

RationalMatrix ints(int rows, int cols, std::initializer_list<int> v) {
  RationalMatrix m(rows, cols);
  auto it = v.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

NilpotentY y21(int a) { return NilpotentY(2, 1, ints(1, 1, {a})); }

}  // namespace

TEST_CASE("nilpotent Y") {
  CHECK_THROWS_AS(NilpotentY(3, 1, RationalMatrix::Zero(2, 2)), SizeMismatch);
  CHECK_THROWS_AS(NilpotentY(3, 3, RationalMatrix::Zero(3, 0)), InvalidParams);
  Rng rng(51);
  const NilpotentY y = random_nilpotent_y(5, 2, YKind::Generic, rng);
  const RationalMatrix full = y.full();
  CHECK((full * full).isZero());
  CHECK(NilpotentY::from_full(2, full) == y);
  RationalMatrix bad = full;
  bad(3, 0) = 1;
  CHECK_THROWS_AS(NilpotentY::from_full(2, bad), PreconditionViolated);
}

TEST_CASE("ybar") {
  CHECK(ybar(NilpotentY::zero(3, 1)) == laurent_identity<Rational>(3));
  CHECK(ybar(y21(1)) == mat2(1, t(-1), 0, 1));
  Rng rng(52);
  for (int k = 0; k < 20; ++k) {
    const NilpotentY y = random_nilpotent_y(4, 2, YKind::Sparse, rng);
    CHECK(LaurentMatrix(ybar(y) * ybar_inverse(y)) == laurent_identity<Rational>(4));
    CHECK(LaurentMatrix(ybar_inverse(y) * ybar(y)) == laurent_identity<Rational>(4));
  }
}

TEST_CASE("worked factorization for n = 2") {
  const Factorization f = factorize(y21(1));
  CHECK(f.certified);
  CHECK(f.attempts == 1);
  CHECK(f.g == mat2(1, 1, 1, t()));
  CHECK(f.h == mat2(t() - LaurentPoly(1), 0, t(), 1));
  const LaurentMatrix gk = f.g * kappa_matrix(2, 1);
  CHECK(gk == mat2(t(), t(-1), t(), 1));
  CHECK(LaurentMatrix(ybar(y21(1)) * f.h) == gk);
}

TEST_CASE("degenerate inputs") {
  CHECK_THROWS_AS(factorize(NilpotentY::zero(2, 1)), DegenerateInput);
  CHECK_THROWS_AS(factorize(NilpotentY::zero(4, 2)), DegenerateInput);
  CHECK_THROWS_AS(factorize(NilpotentY(4, 2, ints(2, 2, {1, 2, 2, 4}))), DegenerateInput);
  CHECK_THROWS_AS(factorize(NilpotentY::zero(5, 3)), InvalidParams);
  // Y = 0 sits in the identity cell, strictly below kappa
  CHECK(relative_position(phi(RationalMatrix(RationalMatrix::Identity(3, 3)), NilpotentY::zero(3, 1))) == identity(3));
}

TEST_CASE("the template system") {
  Rng rng(53);
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; 2 * d <= n; ++d) {
      const NilpotentY y = random_nilpotent_y(n, d, YKind::Generic, rng);
      const RationalMatrix sys = last_column_system(y);
      CHECK(sys.rows() == d * d);
      CHECK(sys.cols() == n * d);
      // d^2 independent equations in nd unknowns
      CHECK(nullspace(sys).cols() == n * d - d * d);
      CHECK((y.block() * block_kernel(y)).isZero());
    }
}

TEST_CASE("random generic factorizations are certified and exact") {
  Rng rng(54);
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; 2 * d <= n; ++d)
      for (int k = 0; k < 25; ++k) {
        const NilpotentY y = random_nilpotent_y(n, d, YKind::Generic, rng);
        const Factorization f = factorize(y, rng());
        REQUIRE(f.certified);
        CHECK(LaurentMatrix(f.g * kappa_matrix(n, d)) == LaurentMatrix(ybar(y) * f.h));
        CHECK(det(f.g).order() == 0);
        CHECK(is_integral(f.g));
        CHECK(max_degree(f.g) <= 1);
        CHECK(in_Q(f.h, d));
      }
}

TEST_CASE("factorize is deterministic per seed") {
  Rng rng(55);
  const NilpotentY y = random_nilpotent_y(5, 2, YKind::Generic, rng);
  const Factorization a = factorize(y, 17), b = factorize(y, 17);
  CHECK(a.g == b.g);
  CHECK(a.h == b.h);
  CHECK(a.attempts == b.attempts);
}

TEST_CASE("phi") {
  const RationalMatrix id2 = RationalMatrix::Identity(2, 2);
  CHECK(phi(id2, NilpotentY::zero(2, 1)).matrix() == laurent_identity<Rational>(2));
  CHECK(phi(id2, y21(1)).matrix() == mat2(1, t(-1), 0, 1));
  RationalMatrix s1(2, 2);
  s1 << 0, 1, -1, 0;
  CHECK(phi(s1, y21(1)).matrix() == mat2(0, 1, -1, -t(-1)));
  CHECK_THROWS_AS(phi(ints(2, 2, {2, 0, 0, 1}), y21(1)), NotUnimodular);
  CHECK_THROWS_AS(phi(mat2(t(), 0, 0, t(-1)), y21(1)), NotConstant);
}

TEST_CASE("membership") {
  const auto r = membership_check(y21(1));
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.witness["cell"] == Json::array({0, 3}));
  CHECK(membership_check(NilpotentY::zero(4, 2)).status == CheckStatus::Pass);
  Rng rng(56);
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; 2 * d <= n; ++d)
      for (int k = 0; k < 30; ++k) {
        const YKind kind = static_cast<YKind>(k % 3);
        CHECK(membership_check(random_nilpotent_y(n, d, kind, rng)).status == CheckStatus::Pass);
      }
}

TEST_CASE("coset equality examples") {
  const LaurentMatrix m = mat2(1, t(-1), 0, 1);
  CHECK(coset_eq(m, m, 1));
  CHECK(coset_eq(lift_word(build_kappa(2, 1).kappa_word), kappa_matrix(2, 1), 1));
  CHECK_FALSE(coset_eq(laurent_identity<Rational>(2), kappa_matrix(2, 1), 1));
  CHECK_THROWS_AS(coset_eq(mat2(t(), 0, 0, 1), m, 1), PreconditionViolated);
}

TEST_CASE("coset equality: order route agrees with the series route") {
  Rng rng(57);
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= n - 1; ++d)
      for (int k = 0; k < 30; ++k) {
        const LaurentMatrix m2 = gen::iwahori(n, rng) * lift_word(reduced_word(gen::affine(n, rng, 1)));
        const LaurentMatrix m1 = k % 2 ? LaurentMatrix(m2 * gen::parahoric(n, d, rng))
                                       : LaurentMatrix(gen::iwahori(n, rng) * lift_word(gen::word(n, 3, rng)));
        const bool fast = coset_eq(m1, m2, d);
        CHECK(fast == coset_eq_series(m1, m2, d, default_precision(n, det(m2))));
        if (k % 2) CHECK(fast);
      }
  CHECK_THROWS_AS(coset_eq_series(laurent_identity<Rational>(2), laurent_identity<Rational>(2), 1, 0),
                  InsufficientPrecision);
}

TEST_CASE("injectivity examples") {
  Rng rng(58);
  const RationalMatrix g = random_sl(3, rng);
  const NilpotentY y = random_nilpotent_y(3, 1, YKind::Generic, rng);
  const auto same = injectivity_witness(g, y, g, y);
  CHECK(same.status == CheckStatus::Pass);
  CHECK(same.witness["h"] == rational_matrix_to_json(RationalMatrix::Identity(3, 3)));
  const RationalMatrix id2 = RationalMatrix::Identity(2, 2);
  CHECK(injectivity_witness(id2, y21(1), id2, y21(2)).status == CheckStatus::Vacuous);
}

TEST_CASE("injectivity and equivariance on related pairs, n <= 4") {
  Rng rng(59);
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; 2 * d <= n; ++d)
      for (int k = 0; k < 50; ++k) {
        const RationalMatrix g1 = random_sl(n, rng);
        const NilpotentY y1 = random_nilpotent_y(n, d, static_cast<YKind>(k % 3), rng);
        const RationalMatrix p = random_parabolic(n, d, rng);
        REQUIRE(det(p) == Rational(1));
        REQUIRE(in_parabolic(p, d));
        const RationalMatrix pinv = exact_inverse(p);
        // (g1 p, p^{-1} Y1 p) ~ (g1, Y1); recovered h = p^{-1}
        const NilpotentY y2 = NilpotentY::from_full(d, pinv * y1.full() * p);
        const RationalMatrix g2 = g1 * p;
        CHECK(coset_eq(phi(g2, y2).matrix(), phi(g1, y1).matrix(), d));
        const auto r = injectivity_witness(g1, y1, g2, y2);
        CHECK(r.status == CheckStatus::Pass);
        CHECK(r.witness["h"] == rational_matrix_to_json(pinv));
        // unrelated pair: g2^{-1} g1 outside P_d
        const RationalMatrix h1 = random_sl(n, rng);
        RationalMatrix h2 = random_sl(n, rng);
        while (in_parabolic(RationalMatrix(exact_inverse(h2) * h1), d)) h2 = random_sl(n, rng);
        const auto u = injectivity_witness(h1, random_nilpotent_y(n, d, YKind::Generic, rng), h2,
                                           random_nilpotent_y(n, d, YKind::Generic, rng));
        CHECK(u.status == CheckStatus::Vacuous);
      }
}

TEST_CASE("samplers") {
  Rng rng(60);
  for (int n = 2; n <= 6; ++n) {
    CHECK(det(random_sl(n, rng)) == Rational(1));
    for (int d = 1; d <= n - 1; ++d) {
      const RationalMatrix p = random_parabolic(n, d, rng);
      CHECK(det(p) == Rational(1));
      CHECK(in_parabolic(p, d));
      if (2 * d <= n) {
        CHECK(exact_rank(random_nilpotent_y(n, d, YKind::Generic, rng).block()) == d);
        CHECK(exact_rank(random_nilpotent_y(n, d, YKind::RankDeficient, rng).block()) < d);
      }
    }
  }
}
