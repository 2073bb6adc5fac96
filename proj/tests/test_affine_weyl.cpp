#include "affsch/affine_weyl.hpp"
#include "affsch/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace affsch;

namespace {

AffinePermutation win(std::vector<Index> w) { return AffinePermutation(std::move(w)); }
Word word(int n, std::vector<int> l) { return Word(n, std::move(l)); }
std::vector<Index> window_of(const AffinePermutation& w) { return {w.window().begin(), w.window().end()}; }

}  // namespace

TEST_CASE("identity and simple reflections") {
  CHECK(window_of(identity(2)) == std::vector<Index>{1, 2});
  CHECK(window_of(identity(4)) == std::vector<Index>{1, 2, 3, 4});
  CHECK_THROWS_AS(identity(1), InvalidRank);
  CHECK(window_of(simple(2, 1)) == std::vector<Index>{2, 1});
  CHECK(window_of(simple(2, 0)) == std::vector<Index>{0, 3});
  CHECK(window_of(simple(4, 2)) == std::vector<Index>{1, 3, 2, 4});
  CHECK(window_of(simple(4, 0)) == std::vector<Index>{0, 2, 3, 5});
  CHECK_THROWS_AS(simple(3, 3), IndexOutOfRange);
}

TEST_CASE("window validation") {
  CHECK_NOTHROW(win({2, 3, 1}));
  CHECK_THROWS_AS(win({2, 3, 4}), InvalidElement);
  CHECK_THROWS_AS(win({1, 4, 3}), InvalidElement);  // residues collide
  CHECK_THROWS_AS(simple(2, 1) * simple(3, 1), RankMismatch);
}

TEST_CASE("multiplication examples") {
  CHECK(simple(2, 1) * simple(2, 1) == identity(2));
  CHECK(window_of(simple(2, 1) * simple(2, 0)) == std::vector<Index>{-1, 4});
  CHECK(window_of(from_word(word(2, {1, 0}))) == std::vector<Index>{-1, 4});
  CHECK(from_word(word(3, {})) == identity(3));
  CHECK(window_of(from_word(word(4, {2, 1, 3, 2, 0, 1, 3, 0}))) == std::vector<Index>{-3, -2, 7, 8});
}

TEST_CASE("multiplication matches composition of bijections") {
  Rng rng(11);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 200; ++k) {
      const auto u = gen::affine(n, rng), v = gen::affine(n, rng), w = gen::affine(n, rng);
      REQUIRE(u * v == oracle::compose(u, v));
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * u.inverse() == identity(n));
      CHECK(u.inverse() * u == identity(n));
      for (Index i = -2 * n; i <= 2 * n; ++i) CHECK(u(i) == oracle::eval(u, i));
    }
  }
}

TEST_CASE("Coxeter presentation for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 0; i < n; ++i) {
      CHECK(simple(n, i) * simple(n, i) == identity(n));
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const int gap = std::abs(i - j);
        const bool adjacent = gap == 1 || gap == n - 1;
        const auto si = simple(n, i), sj = simple(n, j);
        if (n == 2) {
          // infinite dihedral: no relation between s_0 and s_1
          CHECK(si * sj != sj * si);
        } else if (adjacent) {
          CHECK(si * sj * si == sj * si * sj);
          CHECK(si * sj != sj * si);
        } else {
          CHECK(si * sj == sj * si);
        }
      }
    }
  }
}

TEST_CASE("root action") {
  CHECK(act_on_root(simple(2, 0), AffineRoot::simple(2, 0)) == AffineRoot::simple(2, 0).negated());
  const auto kappa = win({-1, 4});
  const auto r = act_on_root(kappa, AffineRoot::simple(2, 1));
  CHECK(r.a == 1);
  CHECK(r.b == 6);
  const auto r2 = act_on_root(simple(2, 1), AffineRoot::simple(2, 0));
  CHECK(r2.a == 1);
  CHECK(r2.b == 4);
  CHECK(AffineRoot::simple(3, 0).a == 3);
  CHECK(AffineRoot::simple(3, 0).b == 4);
}

TEST_CASE("root action is a group action and counts inversions") {
  Rng rng(12);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 60; ++k) {
      const auto u = gen::affine(n, rng, 1), v = gen::affine(n, rng, 1);
      const Index lw = length(u);
      Index negated = 0;
      for (Index a = 1; a <= n; ++a) {
        for (Index b = a + 1; b <= a + n * (lw + 2); ++b) {
          if (floor_mod(b - a, n) == 0) continue;
          const auto r = AffineRoot::normalized(n, a, b);
          CHECK(act_on_root(u * v, r) == act_on_root(u, act_on_root(v, r)));
          if (!act_on_root(u, r).is_positive()) ++negated;
        }
      }
      CHECK(negated == lw);
    }
  }
}

TEST_CASE("length examples and Shi's formula") {
  CHECK(length(identity(3)) == 0);
  CHECK(length(win({-1, 4})) == 2);
  CHECK(length(win({3, 4, 1, 2})) == 4);
  Rng rng(13);
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k < 300; ++k) {
      const auto w = gen::affine(n, rng, 3);
      CHECK(length(w) == oracle::shi_length(w));
    }
}

TEST_CASE("reducedness: root scan and length agree") {
  CHECK(is_reduced(word(2, {1, 0, 1})));
  CHECK_FALSE(is_reduced(word(2, {1, 1})));
  CHECK(is_reduced(word(4, {2, 1, 3, 2, 0, 1, 3, 0})));
  Rng rng(14);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 1000; ++k) {
      const Word w = gen::word(n, 1 + uniform_below(rng, 8), rng);
      CHECK(is_reduced(w) == is_reduced_by_length(w));
      CHECK(is_reduced(w) == !first_non_reduced_position(w).has_value());
    }
  }
}

TEST_CASE("reduced words") {
  Rng rng(15);
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k < 200; ++k) {
      const auto w = gen::affine(n, rng);
      const Word rw = reduced_word(w);
      CHECK(from_word(rw) == w);
      CHECK(static_cast<Index>(rw.size()) == length(w));
      CHECK(is_reduced(rw));
    }
}

TEST_CASE("descents") {
  for (int i = 0; i < 3; ++i) CHECK_FALSE(descent_right(identity(3), i));
  CHECK(descent_right(simple(2, 1), 1));
  CHECK(descent_right(win({-1, 4}), 0));
  Rng rng(16);
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k < 100; ++k) {
      const auto w = gen::affine(n, rng);
      for (int i = 0; i < n; ++i) {
        CHECK(descent_right(w, i) == (length(w * simple(n, i)) < length(w)));
        CHECK(descent_left(w, i) == (length(simple(n, i) * w) < length(w)));
      }
    }
}

TEST_CASE("minimal coset representatives") {
  CHECK(min_coset_rep(simple(2, 1), GeneratorSet(2, {1})) == identity(2));
  CHECK(min_coset_rep(win({-1, 4}), GeneratorSet::empty(2)) == win({-1, 4}));
  const auto s1 = simple(2, 1), s0 = simple(2, 0);
  CHECK(min_coset_rep(s1 * s0 * s1, GeneratorSet(2, {1})) == s1 * s0);

  Rng rng(17);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 40; ++k) {
      const auto w = gen::affine(n, rng);
      std::vector<int> gens;
      for (int i = 1; i < n; ++i)
        if (uniform_below(rng, 2)) gens.push_back(i);
      const GeneratorSet J(n, gens);
      const auto u = min_coset_rep(w, J);
      CHECK(u == oracle::min_coset_rep(w, gens));
      CHECK(min_coset_rep(u, J) == u);
      CHECK(is_min_coset_rep(u, J));
      for (int j : gens) CHECK_FALSE(descent_right(u, j));
    }
  }
}

TEST_CASE("Bruhat order examples") {
  const auto s1 = simple(2, 1), s0 = simple(2, 0);
  CHECK(bruhat_leq(identity(2), s1 * s0));
  CHECK(bruhat_leq(s0, s1 * s0));
  CHECK_FALSE(bruhat_leq(s1 * s0 * s1, s1 * s0));
}

TEST_CASE("Bruhat order matches the subword oracle for n <= 3, length <= 6") {
  for (int n = 2; n <= 3; ++n) {
    const auto elems = oracle::ball(n, 6);
    for (const auto& [w, word] : elems) {
      const auto below = oracle::subword_products(n, word);
      for (const auto& [u, unused] : elems) CHECK(bruhat_leq(u, w) == below.contains(u));
    }
  }
}

TEST_CASE("Bruhat order is a partial order on random triples") {
  Rng rng(18);
  for (int n = 2; n <= 5; ++n)
    for (int k = 0; k < 100; ++k) {
      const auto a = gen::affine(n, rng, 1);
      CHECK(bruhat_leq(a, a));
      // descend from a by random reflections to build a chain c <= b <= a
      const Word rw = reduced_word(a);
      std::vector<int> sub_b, sub_c;
      for (int l : rw.letters)
        if (uniform_below(rng, 4)) sub_b.push_back(l);
      const auto b = from_word(Word(n, sub_b));
      for (int l : reduced_word(b).letters)
        if (uniform_below(rng, 4)) sub_c.push_back(l);
      const auto c = from_word(Word(n, sub_c));
      CHECK(bruhat_leq(b, a));
      CHECK(bruhat_leq(c, b));
      CHECK(bruhat_leq(c, a));
      const auto other = gen::affine(n, rng, 1);
      if (other != a && length(other) == length(a)) {
        CHECK_FALSE(bruhat_leq(other, a));
      }
    }
}

TEST_CASE("generator sets") {
  const auto q = GeneratorSet::two_step(5, 2);
  CHECK(q.indices == std::vector<int>{1, 3, 4});
  CHECK_FALSE(q.contains(0));
  CHECK(GeneratorSet::finite(3).indices == std::vector<int>{1, 2});
  CHECK_THROWS_AS(GeneratorSet(3, {3}), IndexOutOfRange);
  CHECK_THROWS_AS(Word(3, {0, 3}), IndexOutOfRange);
}
