#include "affsch/kappa.hpp"

#include "affsch/errors.hpp"
#include "affsch/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace affsch {

namespace {

Json word_json(const Word& w) {
  Json a = Json::array();
  for (int l : w.letters) a.push_back(l);
  return a;
}

Json root_json(const AffineRoot& r) { return Json::array({r.a, r.b}); }

Word map_to_system_b(const Word& w, int d) {
  std::vector<int> letters;
  letters.reserve(w.letters.size());
  for (int m : w.letters) letters.push_back(system_b_generator(w.n, d, m));
  return Word(w.n, std::move(letters));
}

bool letters_avoid(const AffinePermutation& y, int forbidden) {
  const Word rw = reduced_word(y);
  return std::find(rw.letters.begin(), rw.letters.end(), forbidden) == rw.letters.end();
}

}  // namespace

void validate_kappa_params(int n, int d) {
  if (n < 2 || d < 1 || d > n - d) {
    throw InvalidParams("need n >= 2 and 1 <= d <= n - d, got n=" + std::to_string(n) +
                        " d=" + std::to_string(d));
  }
}

int system_b_generator(int n, int d, int m) {
  validate_kappa_params(n, d);
  if (m < 1 || m > n - 1) throw IndexOutOfRange("system B index " + std::to_string(m));
  if (m < d) return d - m;
  if (m == d) return 0;
  return n + d - m;
}

Word build_w1(int n, int d) {
  validate_kappa_params(n, d);
  std::vector<int> letters;
  for (int k = 1; k <= d; ++k) {
    for (int i = n - d + k - 1; i >= k; --i) letters.push_back(i);
  }
  return Word(n, std::move(letters));
}

Word build_w2(int n, int d) {
  validate_kappa_params(n, d);
  std::vector<int> letters;
  for (int k = d - 1; k >= 0; --k) {
    for (int i = d + k + 1; i <= n - 1; ++i) letters.push_back(i);
    letters.push_back(0);
    for (int i = 1; i <= k; ++i) letters.push_back(i);
  }
  return Word(n, std::move(letters));
}

LaurentMatrix kappa_matrix(int n, int d) {
  validate_kappa_params(n, d);
  LaurentMatrix m = laurent_identity<Rational>(n);
  for (int i = 0; i < d; ++i) {
    m(i, i) = LaurentPoly::t(1);
    m(n - 1 - i, n - 1 - i) = LaurentPoly::t(-1);
  }
  return m;
}

KappaData build_kappa(int n, int d) {
  Word w1 = build_w1(n, d);
  Word w2 = build_w2(n, d);
  Word kw = concat(w1, w2);
  AffinePermutation p1 = from_word(w1);
  AffinePermutation p2 = from_word(w2);
  AffinePermutation pk = p1 * p2;
  return KappaData{n, d, w1, w2, kw, p1, p2, pk, kappa_matrix(n, d)};
}

CheckReport check_kappa_invariants(int n, int d) {
  const std::string name = "cor_dimension";
  const KappaData k = build_kappa(n, d);
  const Index expected = 2 * static_cast<Index>(d) * (n - d);
  const Index l1 = length(k.w1), l2 = length(k.w2), lk = length(k.kappa);

  // kappa is the translation j -> j - n (j <= d), j (middle), j + n (j > n - d).
  std::vector<Index> translation(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    translation[j - 1] = j <= d ? j - n : (j > n - d ? j + n : j);
  }
  // w1 as a finite permutation is ([n-d+1, n][1, n-d]) in one-line notation.
  std::vector<Index> block(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) block[j - 1] = j <= d ? n - d + j : j - d;

  Json w = Json::object();
  w["kappa_word"] = word_json(k.kappa_word);
  w["kappa_window"] = to_json(k.kappa);
  w["length"] = lk;
  w["expected"] = expected;

  const bool ok = k.kappa == from_word(k.kappa_word) && lk == expected && l1 + l2 == lk &&
                  static_cast<Index>(k.kappa_word.size()) == expected && is_reduced(k.kappa_word) &&
                  is_reduced_by_length(k.kappa_word) && std::ranges::equal(k.kappa.window(), translation) &&
                  std::ranges::equal(k.w1.window(), block);
  return ok ? CheckReport::pass(name, n, d, w) : CheckReport::fail(name, n, d, w);
}

bool in_w_pd_quotient(const AffinePermutation& y, int d) {
  return y.is_finite() && is_min_coset_rep(y, GeneratorSet::two_step(y.rank(), d));
}

bool in_w_pd_prime_quotient(const AffinePermutation& y, int d) {
  // System B contains every generator except s_d; P'_d drops s'_d = s_0.
  return letters_avoid(y, d) && is_min_coset_rep(y, GeneratorSet::two_step(y.rank(), d));
}

CheckReport check_lemma_red(const AffinePermutation& y1, const AffinePermutation& y2, int n, int d) {
  validate_kappa_params(n, d);
  if (y1.rank() != n || y2.rank() != n) throw RankMismatch("check_lemma_red: rank mismatch");
  if (!in_w_pd_quotient(y1, d)) throw PreconditionViolated("y1 is not in W^{P_d}");
  if (!in_w_pd_prime_quotient(y2, d)) throw PreconditionViolated("y2 is not in W^{P'_d}");
  const std::string name = "lemma_reduced";
  const Word word = concat(reduced_word(y1), reduced_word(y2));
  const Index l1 = length(y1), l2 = length(y2), l12 = length(y1 * y2);
  Json w = Json::object();
  w["word"] = word_json(word);
  w["length"] = l12;
  if (const auto j = first_non_reduced_position(word)) {
    const Word prefix(n, std::vector<int>(word.letters.begin(), word.letters.begin() + static_cast<std::ptrdiff_t>(*j)));
    w["position"] = *j;
    w["prefix"] = word_json(prefix);
    w["root"] = root_json(act_on_root(from_word(prefix), AffineRoot::simple(n, word.letters[*j])));
    return CheckReport::fail(name, n, d, w);
  }
  if (l12 != l1 + l2) return CheckReport::fail(name, n, d, w);
  return CheckReport::pass(name, n, d, w);
}

CheckReport check_lemma_min(const AffinePermutation& y1, const AffinePermutation& y2, int n, int d) {
  validate_kappa_params(n, d);
  if (y1.rank() != n || y2.rank() != n) throw RankMismatch("check_lemma_min: rank mismatch");
  if (!in_w_pd_quotient(y1, d)) throw PreconditionViolated("y1 is not in W^{P_d}");
  if (!in_w_pd_prime_quotient(y2, d)) throw PreconditionViolated("y2 is not in W^{P'_d}");
  const std::string name = "lemma_min_rep";
  const AffinePermutation y = y1 * y2;
  for (int i : GeneratorSet::two_step(n, d).indices) {
    if (descent_right(y, i)) {
      Json w = Json::object();
      w["window"] = to_json(y);
      w["descent"] = i;
      w["root"] = root_json(act_on_root(y, AffineRoot::simple(n, i)));
      return CheckReport::fail(name, n, d, w);
    }
  }
  return CheckReport::pass(name, n, d, Json{{"window", to_json(y)}});
}

CheckReport check_stab(int n, int d) {
  const std::string name = "lemma_stab";
  const KappaData k = build_kappa(n, d);
  Json checked = Json::array();
  // (system, left index, right index) triples in primed or plain labels
  auto verify = [&](const char* system, const AffinePermutation& w, int left, int right) -> bool {
    const bool primed = system[0] == 'B';
    const int a = primed ? system_b_generator(n, d, left) : left;
    const int b = primed ? system_b_generator(n, d, right) : right;
    const bool ok = simple(n, a) * w == w * simple(n, b);
    checked.push_back(Json{{"system", system}, {"left", left}, {"right", right}, {"ok", ok}});
    return ok;
  };
  bool ok = true;
  for (const auto& [system, w] : {std::pair{"A", k.w1}, std::pair{"B", k.w2}}) {
    for (int kk = 1; kk <= n - d - 1; ++kk) ok = verify(system, w, kk, d + kk) && ok;
    for (int l = n + 1 - d; l <= n - 1; ++l) ok = verify(system, w, l, l - (n - d)) && ok;
  }
  Json w = Json{{"identities", checked}};
  return ok ? CheckReport::pass(name, n, d, w) : CheckReport::fail(name, n, d, w);
}

CheckReport check_rel(int n, int d) {
  const std::string name = "lemma_rel";
  const KappaData k = build_kappa(n, d);
  Json ks = Json::array();
  for (int kk = 1; kk <= n - 1; ++kk) {
    if (kk == d || kk == n - d) continue;
    if (simple(n, kk) * k.kappa != k.kappa * simple(n, kk)) {
      return CheckReport::fail(name, n, d, Json{{"k", kk}});
    }
    ks.push_back(kk);
  }
  return CheckReport::pass(name, n, d, Json{{"k", ks}});
}

CheckReport check_g0_stability(int n, int d) {
  const std::string name = "prop_g0_stability";
  const KappaData k = build_kappa(n, d);
  const GeneratorSet sq = GeneratorSet::two_step(n, d);
  const Index lk = length(k.kappa);
  Json cases = Json::array();
  bool ok = true;
  for (int kk = 1; kk <= n - 1; ++kk) {
    const AffinePermutation sk = simple(n, kk) * k.kappa;
    const AffinePermutation rep = min_coset_rep(sk, sq);
    const bool below = bruhat_leq(rep, k.kappa);
    std::string kind;
    bool case_ok = below;
    if (kk == d || kk == n - d) {
      kind = "drop";
      case_ok = case_ok && length(sk) < lk;
    } else {
      kind = "commute";
      case_ok = case_ok && sk == k.kappa * simple(n, kk) && rep == k.kappa;
    }
    cases.push_back(Json{{"k", kk}, {"kind", kind}, {"min_rep", to_json(rep)}, {"ok", case_ok}});
    ok = ok && case_ok;
  }
  Json w = Json{{"cases", cases}};
  return ok ? CheckReport::pass(name, n, d, w) : CheckReport::fail(name, n, d, w);
}

CheckReport check_matrix_lift(int n, int d) {
  const std::string name = "kappa_matrix_lift";
  const KappaData k = build_kappa(n, d);
  const LaurentMatrix lifted = lift_word(k.kappa_word);
  const auto sign = torus_sign_factor(lifted, k.matrix);
  if (!sign) return CheckReport::fail(name, n, d, Json{{"lift", to_json(lifted)}});
  Json diag = Json::array();
  for (int i = 0; i < n; ++i) diag.push_back((*sign)(i, i) == 1 ? 1 : -1);
  return CheckReport::pass(name, n, d, Json{{"D", diag}});
}

AffinePermutation sample_quotient(int n, int d, QuotientSide side, std::uint64_t seed) {
  validate_kappa_params(n, d);
  Rng rng(seed);
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{1});
  for (std::size_t i = perm.size() - 1; i > 0; --i) {
    std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
  }
  AffinePermutation sigma(std::move(perm));
  if (side == QuotientSide::B) sigma = from_word(map_to_system_b(reduced_word(sigma), d));
  return min_coset_rep(sigma, GeneratorSet::two_step(n, d));
}

}  // namespace affsch
