#include "affsch/affine_weyl.hpp"

#include "affsch/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace affsch {

namespace {

void require_rank(int n) {
  if (n < 2) throw InvalidRank("rank must be at least 2, got " + std::to_string(n));
}

void require_index(int n, int i) {
  if (i < 0 || i >= n) {
    throw IndexOutOfRange("generator index " + std::to_string(i) + " outside [0, " +
                          std::to_string(n - 1) + "]");
  }
}

// Position p such that alpha_i = (p, p + 1).
Index root_position(int n, int i) { return i == 0 ? n : i; }

}  // namespace

AffinePermutation::AffinePermutation(std::vector<Index> window) : window_(std::move(window)) {
  const int n = rank();
  require_rank(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Index displacement = 0;
  for (int i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(floor_mod(window_[i], n));
    if (seen[r]) throw InvalidElement("window entries are not distinct mod n");
    seen[r] = true;
    displacement += window_[i] - (i + 1);
  }
  if (displacement != 0) {
    throw InvalidElement("window displacement sum is " + std::to_string(displacement) +
                         ", expected 0");
  }
}

AffinePermutation AffinePermutation::inverse() const {
  const Index n = rank();
  std::vector<Index> inv(window_.size());
  for (Index r = 1; r <= n; ++r) {
    const Index v = window_[r - 1];
    const Index q = floor_div(v - 1, n);
    inv[v - 1 - q * n] = r - q * n;
  }
  return AffinePermutation(std::move(inv), Unchecked{});
}

bool AffinePermutation::is_finite() const {
  const Index n = rank();
  return std::all_of(window_.begin(), window_.end(), [n](Index v) { return v >= 1 && v <= n; });
}

AffineRoot AffineRoot::normalized(int n, Index a, Index b) {
  require_rank(n);
  if (floor_mod(a - b, n) == 0) throw InvalidElement("root endpoints congruent mod n");
  const Index shift = floor_div(a - 1, n) * n;
  return AffineRoot{n, a - shift, b - shift};
}

AffineRoot AffineRoot::simple(int n, int i) {
  require_rank(n);
  require_index(n, i);
  const Index p = root_position(n, i);
  return AffineRoot{n, p, p + 1};
}

Word::Word(int n_, std::vector<int> letters_) : n(n_), letters(std::move(letters_)) {
  require_rank(n);
  for (int l : letters) require_index(n, l);
}

Word concat(const Word& a, const Word& b) {
  if (a.n != b.n) throw RankMismatch("cannot concatenate words of different rank");
  std::vector<int> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return Word(a.n, std::move(letters));
}

GeneratorSet::GeneratorSet(int n_, std::vector<int> indices_) : n(n_), indices(std::move(indices_)) {
  require_rank(n);
  for (int i : indices) require_index(n, i);
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
}

bool GeneratorSet::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

GeneratorSet GeneratorSet::finite(int n) {
  std::vector<int> idx(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::iota(idx.begin(), idx.end(), 1);
  return GeneratorSet(n, std::move(idx));
}

GeneratorSet GeneratorSet::two_step(int n, int d) {
  std::vector<int> idx;
  for (int i = 1; i < n; ++i) {
    if (i != d) idx.push_back(i);
  }
  return GeneratorSet(n, std::move(idx));
}

AffinePermutation identity(int n) {
  require_rank(n);
  std::vector<Index> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), Index{1});
  return AffinePermutation(std::move(w));
}

AffinePermutation simple(int n, int i) {
  require_rank(n);
  require_index(n, i);
  std::vector<Index> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), Index{1});
  if (i == 0) {
    w.front() = 0;
    w.back() = n + 1;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation multiply(const AffinePermutation& u, const AffinePermutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch("multiply: ranks differ");
  std::vector<Index> w(v.window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = u(v.window_[i]);
  return AffinePermutation(std::move(w), AffinePermutation::Unchecked{});
}

AffinePermutation from_word(const Word& word) {
  AffinePermutation w = identity(word.n);
  for (int l : word.letters) w = w * simple(word.n, l);
  return w;
}

AffineRoot act_on_root(const AffinePermutation& w, const AffineRoot& r) {
  if (w.rank() != r.n) throw RankMismatch("act_on_root: ranks differ");
  return AffineRoot::normalized(r.n, w(r.a), w(r.b));
}

Index length(const AffinePermutation& w) {
  const auto win = w.window();
  const Index n = w.rank();
  const auto [lo, hi] = std::minmax_element(win.begin(), win.end());
  const Index spread = *hi - *lo;
  Index count = 0;
  for (Index a = 1; a <= n; ++a) {
    const Index wa = w(a);
    // An inversion (a, b) needs b < n + spread + 1.
    for (Index b = a + 1; b <= a + n + spread; ++b) {
      if (wa > w(b)) ++count;
    }
  }
  return count;
}

std::optional<std::size_t> first_non_reduced_position(const Word& word) {
  AffinePermutation prefix = identity(word.n);
  for (std::size_t j = 0; j < word.letters.size(); ++j) {
    const int l = word.letters[j];
    if (!act_on_root(prefix, AffineRoot::simple(word.n, l)).is_positive()) return j;
    prefix = prefix * simple(word.n, l);
  }
  return std::nullopt;
}

bool is_reduced(const Word& w) { return !first_non_reduced_position(w).has_value(); }

bool is_reduced_by_length(const Word& w) {
  return length(from_word(w)) == static_cast<Index>(w.size());
}

bool descent_right(const AffinePermutation& w, int i) {
  require_index(w.rank(), i);
  const Index p = root_position(w.rank(), i);
  return w(p) > w(p + 1);
}

bool descent_left(const AffinePermutation& w, int i) { return descent_right(w.inverse(), i); }

Word reduced_word(const AffinePermutation& w) {
  const int n = w.rank();
  std::vector<int> reversed;
  AffinePermutation cur = w;
  const AffinePermutation e = identity(n);
  while (cur != e) {
    for (int i = 0; i < n; ++i) {
      if (descent_right(cur, i)) {
        reversed.push_back(i);
        cur = cur * simple(n, i);
        break;
      }
    }
  }
  return Word(n, std::vector<int>(reversed.rbegin(), reversed.rend()));
}

AffinePermutation min_coset_rep(const AffinePermutation& w, const GeneratorSet& J) {
  if (J.n != w.rank()) throw RankMismatch("min_coset_rep: ranks differ");
  AffinePermutation cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : J.indices) {
      if (descent_right(cur, j)) {
        cur = cur * simple(w.rank(), j);
        changed = true;
      }
    }
  }
  return cur;
}

bool is_min_coset_rep(const AffinePermutation& w, const GeneratorSet& J) {
  return std::none_of(J.indices.begin(), J.indices.end(),
                      [&](int j) { return descent_right(w, j); });
}

bool bruhat_leq(const AffinePermutation& u_in, const AffinePermutation& w_in) {
  if (u_in.rank() != w_in.rank()) throw RankMismatch("bruhat_leq: ranks differ");
  const int n = w_in.rank();
  const AffinePermutation e = identity(n);
  AffinePermutation u = u_in;
  AffinePermutation w = w_in;
  Index lu = length(u);
  Index lw = length(w);
  // Lifting property: for a left descent s of w,
  //   u <= w  iff  su <= sw  (s a left descent of u)
  //           iff  u <= sw   (otherwise).
  while (true) {
    if (lu > lw) return false;
    if (lw == 0) return u == e;
    if (lu == 0) return true;
    const AffinePermutation winv = w.inverse();
    int s = -1;
    for (int i = 0; i < n; ++i) {
      if (descent_right(winv, i)) {
        s = i;
        break;
      }
    }
    const AffinePermutation gen = simple(n, s);
    if (descent_left(u, s)) {
      u = gen * u;
      --lu;
    }
    w = gen * w;
    --lw;
  }
}

}  // namespace affsch
