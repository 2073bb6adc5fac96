#pragma once

// Affine symmetric group (affine Weyl group of type A_{n-1}) realised as
// affine permutations w : Z -> Z with w(i + n) = w(i) + n and zero window
// displacement sum. Generator s_i (1 <= i <= n-1) swaps i and i+1; s_0 swaps
// n and n+1. All values are immutable once constructed.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace affsch {

using Index = std::int64_t;

/// Floor division / modulo for possibly negative integers.
constexpr Index floor_div(Index a, Index b) {
  Index q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr Index floor_mod(Index a, Index b) { return a - b * floor_div(a, b); }

class AffinePermutation {
public:
  /// Validates bijectivity mod n and the zero displacement sum.
  /// Throws InvalidRank (n < 2) or InvalidElement.
  explicit AffinePermutation(std::vector<Index> window);

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const Index> window() const { return window_; }

  /// w(i) for any integer i.
  Index operator()(Index i) const {
    const Index n = rank();
    const Index q = floor_div(i - 1, n);
    return window_[static_cast<std::size_t>(i - 1 - q * n)] + q * n;
  }

  AffinePermutation inverse() const;

  /// True iff every window entry lies in [1, n], i.e. w is a finite permutation.
  bool is_finite() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation& a, const AffinePermutation& b) {
    return a.window_ <=> b.window_;
  }

private:
  struct Unchecked {};
  AffinePermutation(std::vector<Index> window, Unchecked) : window_(std::move(window)) {}

  std::vector<Index> window_;

  friend AffinePermutation multiply(const AffinePermutation&, const AffinePermutation&);
};

/// Real root q*delta + e_i - e_j stored as the pair (a, b) with a in [1, n],
/// a != b (mod n), i = a, j = b mod n, q = (b - j) / n. Positive iff a < b.
struct AffineRoot {
  int n = 0;
  Index a = 0;
  Index b = 0;

  /// Shifts (a, b) by a common multiple of n so that a lands in [1, n].
  static AffineRoot normalized(int n, Index a, Index b);
  /// alpha_i, with alpha_0 = delta - theta = (n, n + 1).
  static AffineRoot simple(int n, int i);

  bool is_positive() const { return a < b; }
  AffineRoot negated() const { return normalized(n, b, a); }
  /// Coefficient of delta.
  Index level() const { return floor_div(b - 1, n); }

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

struct Word {
  int n = 0;
  std::vector<int> letters;

  Word() = default;
  /// Throws InvalidRank / IndexOutOfRange.
  Word(int n, std::vector<int> letters);

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

Word concat(const Word& a, const Word& b);

/// Subset of {0, ..., n-1}: simple reflections of a standard parabolic subgroup.
struct GeneratorSet {
  int n = 0;
  std::vector<int> indices;  // sorted, unique

  GeneratorSet() = default;
  GeneratorSet(int n, std::vector<int> indices);

  bool contains(int i) const;

  static GeneratorSet empty(int n) { return GeneratorSet(n, {}); }
  /// {1, ..., n-1}: the finite Weyl group.
  static GeneratorSet finite(int n);
  /// {1, ..., n-1} \ {d}: the two-step parahoric omitting alpha_0 and alpha_d.
  static GeneratorSet two_step(int n, int d);
};

AffinePermutation identity(int n);
AffinePermutation simple(int n, int i);
/// (u * v)(i) = u(v(i)). Throws RankMismatch.
AffinePermutation multiply(const AffinePermutation& u, const AffinePermutation& v);
inline AffinePermutation operator*(const AffinePermutation& u, const AffinePermutation& v) {
  return multiply(u, v);
}
/// s_{l_1} s_{l_2} ... s_{l_k}.
AffinePermutation from_word(const Word& w);

AffineRoot act_on_root(const AffinePermutation& w, const AffineRoot& r);

/// Number of inversions (a, b) with 1 <= a <= n, a < b, w(a) > w(b).
Index length(const AffinePermutation& w);

/// First position j (0-based) at which s_{l_1}...s_{l_{j}} sends alpha_{l_{j+1}}
/// negative, or nullopt when the word is reduced.
std::optional<std::size_t> first_non_reduced_position(const Word& w);
/// Root-positivity scan.
bool is_reduced(const Word& w);
/// length(from_word(w)) == |w|; kept as an independent second route.
bool is_reduced_by_length(const Word& w);

bool descent_right(const AffinePermutation& w, int i);
bool descent_left(const AffinePermutation& w, int i);

/// A reduced word obtained by stripping right descents.
Word reduced_word(const AffinePermutation& w);

/// Unique element of w W_J with no right descent in J.
AffinePermutation min_coset_rep(const AffinePermutation& w, const GeneratorSet& J);
bool is_min_coset_rep(const AffinePermutation& w, const GeneratorSet& J);

/// Bruhat-Chevalley order via the lifting property.
bool bruhat_leq(const AffinePermutation& u, const AffinePermutation& w);

}  // namespace affsch
