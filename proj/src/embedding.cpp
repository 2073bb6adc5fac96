#include "affsch/embedding.hpp"

#include "affsch/errors.hpp"
#include "affsch/field_linalg.hpp"
#include "affsch/kappa.hpp"

#include <string>

namespace affsch {

NilpotentY::NilpotentY(int n, int d, RationalMatrix block) : n_(n), d_(d), block_(std::move(block)) {
  if (n < 2 || d < 1 || d > n - 1) throw InvalidParams("NilpotentY needs 1 <= d <= n-1");
  if (block_.rows() != d || block_.cols() != n - d) {
    throw SizeMismatch("NilpotentY block must be d x (n-d)");
  }
}

NilpotentY NilpotentY::zero(int n, int d) {
  if (n < 2 || d < 1 || d > n - 1) throw InvalidParams("NilpotentY needs 1 <= d <= n-1");
  return NilpotentY(n, d, RationalMatrix::Zero(d, n - d));
}

NilpotentY NilpotentY::from_full(int d, const RationalMatrix& y) {
  const auto n = y.rows();
  if (y.cols() != n) throw SizeMismatch("from_full: matrix not square");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const bool inside = i < d && j >= d;
      if (!inside && y(i, j) != 0) {
        throw PreconditionViolated("matrix is not supported on rows <= d < columns");
      }
    }
  }
  return NilpotentY(static_cast<int>(n), d, y.block(0, d, d, n - d));
}

RationalMatrix NilpotentY::full() const {
  RationalMatrix y = RationalMatrix::Zero(n_, n_);
  y.block(0, d_, d_, n_ - d_) = block_;
  return y;
}

LaurentMatrix ybar(const NilpotentY& y) {
  LaurentMatrix m = laurent_identity<Rational>(y.n());
  const RationalMatrix full = y.full();
  for (int i = 0; i < y.n(); ++i)
    for (int j = 0; j < y.n(); ++j)
      if (full(i, j) != 0) m(i, j) += LaurentPoly::monomial(full(i, j), -1);
  return m;
}

LaurentMatrix ybar_inverse(const NilpotentY& y) {
  return ybar(NilpotentY(y.n(), y.d(), RationalMatrix(-y.block())));
}

RationalMatrix last_column_system(const NilpotentY& y) {
  const int n = y.n(), d = y.d();
  // Unknowns per last column j: g^{(0)}_{1..d, j} then g^{(1)}_{d+1..n, j}.
  RationalMatrix sys = RationalMatrix::Zero(d * d, n * d);
  for (int col = 0; col < d; ++col) {
    for (int i = 0; i < d; ++i) {
      const int eq = col * d + i;
      sys(eq, col * n + i) = 1;
      for (int m = 0; m < n - d; ++m) sys(eq, col * n + d + m) = -y.block()(i, m);
    }
  }
  return sys;
}

RationalMatrix block_kernel(const NilpotentY& y) { return nullspace(y.block()); }

Factorization assemble_factorization(const NilpotentY& y, const FactorizationParams& p) {
  const int n = y.n(), d = y.d();
  validate_kappa_params(n, d);
  const int mid = n - 2 * d;
  const RationalMatrix kernel = block_kernel(y);
  const RationalMatrix null_last = nullspace(last_column_system(y));
  if (p.first.rows() != n || p.first.cols() != d || p.middle_top.rows() != d || p.middle_top.cols() != mid ||
      p.middle_kernel.rows() != kernel.cols() || p.middle_kernel.cols() != mid ||
      p.last.rows() != null_last.cols() || p.last.cols() != 1) {
    throw SizeMismatch("factorization parameters do not match the template");
  }

  LaurentMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = LaurentPoly(p.first(i, j));

  const RationalMatrix mid_bottom = kernel * p.middle_kernel;  // (n-d) x mid
  for (int j = 0; j < mid; ++j) {
    for (int i = 0; i < d; ++i) g(i, d + j) = LaurentPoly(p.middle_top(i, j));
    for (int i = d; i < n; ++i) g(i, d + j) = LaurentPoly(mid_bottom(i - d, j));
  }

  const RationalMatrix solution = null_last * p.last;  // nd x 1
  for (int col = 0; col < d; ++col) {
    const int j = n - d + col;
    for (int i = 0; i < d; ++i) g(i, j) = LaurentPoly(solution(col * n + i, 0));
    for (int i = d; i < n; ++i) g(i, j) = LaurentPoly::monomial(solution(col * n + i, 0), 1);
  }

  const LaurentMatrix kappa = kappa_matrix(n, d);
  const LaurentMatrix gk = g * kappa;
  Factorization f;
  f.h = ybar_inverse(y) * gk;
  f.g = std::move(g);
  const LaurentPoly dg = det(f.g);
  f.certified = is_integral(f.g) && !dg.is_zero() && dg.order() == 0 && in_Q(f.h, d) &&
                LaurentMatrix(ybar(y) * f.h) == gk;
  return f;
}

FactorizationParams unit_params(const NilpotentY& y) {
  const int n = y.n(), d = y.d();
  const auto kernel_dim = block_kernel(y).cols();
  const auto null_dim = nullspace(last_column_system(y)).cols();
  return FactorizationParams{RationalMatrix::Ones(n, d), RationalMatrix::Ones(d, n - 2 * d),
                             RationalMatrix::Ones(kernel_dim, n - 2 * d), RationalMatrix::Ones(null_dim, 1)};
}

Factorization factorize(const NilpotentY& y, std::uint64_t seed, int max_attempts) {
  validate_kappa_params(y.n(), y.d());
  if (exact_rank(y.block()) < y.d()) {
    throw DegenerateInput("rank(a) < d: no unit-determinant g exists in the column template");
  }
  FactorizationParams p = unit_params(y);
  Rng rng(seed);
  auto redraw = [&rng](RationalMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Rational(uniform_int(rng, -3, 3));
  };
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    if (attempt > 1) {
      redraw(p.first);
      redraw(p.middle_top);
      redraw(p.middle_kernel);
      redraw(p.last);
    }
    Factorization f = assemble_factorization(y, p);
    if (f.certified) {
      f.attempts = attempt;
      return f;
    }
  }
  throw DegenerateInput("no unit-determinant g found within " + std::to_string(max_attempts) + " attempts");
}

ChainPoint phi(const LaurentMatrix& g0, const NilpotentY& y) {
  if (g0.rows() != y.n() || g0.cols() != y.n()) throw SizeMismatch("phi: g0 has the wrong size");
  if (!is_constant(g0)) throw NotConstant("phi: g0 must have constant entries");
  if (det(g0) != LaurentPoly(1)) throw NotUnimodular("phi: det g0 must be 1");
  return ChainPoint(y.d(), g0 * ybar(y));
}

ChainPoint phi(const RationalMatrix& g0, const NilpotentY& y) { return phi(to_laurent(g0), y); }

CheckReport membership_check(const NilpotentY& y) {
  const std::string name = "thm_membership";
  const KappaData k = build_kappa(y.n(), y.d());
  const AffinePermutation cell = relative_position(ChainPoint(y.d(), ybar(y)));
  Json w = Json::object();
  w["cell"] = to_json(cell);
  w["length"] = length(cell);
  if (!bruhat_leq(cell, k.kappa)) {
    w["y"] = to_json(y);
    return CheckReport::fail(name, y.n(), y.d(), w);
  }
  return CheckReport::pass(name, y.n(), y.d(), w);
}

bool coset_eq(const LaurentMatrix& m1, const LaurentMatrix& m2, int d) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) throw SizeMismatch("coset_eq: shapes differ");
  const LaurentPoly d1 = det(m1), d2 = det(m2);
  if (d1.is_zero() || d2.is_zero() || d1.order() != 0 || d2.order() != 0) {
    throw PreconditionViolated("coset_eq needs order(det) = 0 on both sides");
  }
  const LaurentMatrix x = adjugate(m2) * m1;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const Index o = x(i, j).order();
      if (o < 0 || (j < d && i >= d && o == 0)) return false;
    }
  }
  return true;
}

bool coset_eq_series(const LaurentMatrix& m1, const LaurentMatrix& m2, int d, Index precision) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) throw SizeMismatch("coset_eq_series: shapes differ");
  const LaurentPoly d1 = det(m1), d2 = det(m2);
  if (d1.is_zero() || d2.is_zero() || d1.order() != 0 || d2.order() != 0) {
    throw PreconditionViolated("coset_eq_series needs order(det) = 0 on both sides");
  }
  if (precision < 1) throw InsufficientPrecision("coset_eq_series: precision must be >= 1");
  const SeriesMatrix x = series_inverse(m2, precision) * m1;
  for (Eigen::Index i = 0; i < x.known.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.known.cols(); ++j) {
      const LaurentPoly& f = x.known(i, j);
      if (f.is_zero()) {
        if (x.precision < 1) throw InsufficientPrecision("coset_eq_series: entry order not certified");
        continue;
      }
      const Index o = f.order();
      if (o < 0 || (j < d && i >= d && o == 0)) return false;
    }
  }
  return true;
}

bool in_parabolic(const RationalMatrix& h, int d) {
  for (Eigen::Index i = d; i < h.rows(); ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (h(i, j) != 0) return false;
  return true;
}

CheckReport injectivity_witness(const RationalMatrix& g1, const NilpotentY& y1, const RationalMatrix& g2,
                                const NilpotentY& y2) {
  const std::string name = "injectivity";
  const int n = y1.n(), d = y1.d();
  if (y2.n() != n || y2.d() != d) throw RankMismatch("injectivity_witness: (n, d) differ");
  const ChainPoint p1 = phi(g1, y1);
  const ChainPoint p2 = phi(g2, y2);
  if (!coset_eq(p1.matrix(), p2.matrix(), d)) return CheckReport::vacuous(name, n, d);
  const RationalMatrix h = exact_inverse(g2) * g1;
  Json w = Json::object();
  w["h"] = rational_matrix_to_json(h);
  const bool parabolic = in_parabolic(h, d);
  const bool conjugate = RationalMatrix(exact_inverse(h) * y2.full() * h) == y1.full();
  w["h_in_P_d"] = parabolic;
  w["y1_conjugate"] = conjugate;
  return parabolic && conjugate ? CheckReport::pass(name, n, d, w) : CheckReport::fail(name, n, d, w);
}

NilpotentY random_nilpotent_y(int n, int d, YKind kind, Rng& rng) {
  RationalMatrix a(d, n - d);
  auto nonzero = [&rng] {
    Index v = 0;
    while (v == 0) v = uniform_int(rng, -5, 5);
    return Rational(v);
  };
  switch (kind) {
    case YKind::Generic:
      do {
        for (Eigen::Index i = 0; i < a.rows(); ++i)
          for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = nonzero();
      } while (exact_rank(a) < d);
      break;
    case YKind::Sparse:
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = uniform_below(rng, 2) == 0 ? Rational(0) : nonzero();
      break;
    case YKind::RankDeficient: {
      // a = u v^T with a zero row forced when d > 1, so rank(a) <= 1 < d or a = 0.
      a.setZero();
      if (d > 1) {
        RationalMatrix u(d, 1), v(1, n - d);
        for (int i = 0; i < d; ++i) u(i, 0) = i == 0 ? Rational(0) : nonzero();
        for (int j = 0; j < n - d; ++j) v(0, j) = nonzero();
        a = u * v;
      }
      break;
    }
  }
  return NilpotentY(n, d, std::move(a));
}

RationalMatrix random_sl(int n, Rng& rng) {
  RationalMatrix lower = RationalMatrix::Identity(n, n);
  RationalMatrix upper = RationalMatrix::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      lower(i, j) = Rational(uniform_int(rng, -2, 2));
      upper(j, i) = Rational(uniform_int(rng, -2, 2));
    }
  }
  RationalMatrix g = lower * upper;
  // random row permutation; fix the sign on the first row
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(rng, static_cast<std::uint64_t>(i + 1))]);
  RationalMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.row(i) = g.row(perm[i]);
  const Rational dt = det(out);
  out.row(0) /= dt;
  return out;
}

RationalMatrix random_parabolic(int n, int d, Rng& rng) {
  RationalMatrix h = RationalMatrix::Zero(n, n);
  h.block(0, 0, d, d) = random_sl(d == 1 ? 2 : d, rng).block(0, 0, d, d);
  if (d == 1) h(0, 0) = Rational(uniform_int(rng, 1, 3));
  if (n - d == 1) {
    h(n - 1, n - 1) = Rational(uniform_int(rng, 1, 3));
  } else {
    h.block(d, d, n - d, n - d) = random_sl(n - d, rng);
  }
  for (int i = 0; i < d; ++i)
    for (int j = d; j < n; ++j) h(i, j) = Rational(uniform_int(rng, -3, 3));
  const Rational dt = det(h);
  h.row(0) /= dt;
  return h;
}

Json to_json(const NilpotentY& y) { return rational_matrix_to_json(y.block()); }

NilpotentY nilpotent_y_from_json(const Json& j) {
  const RationalMatrix a = rational_matrix_from_json(j);
  const int d = static_cast<int>(a.rows());
  return NilpotentY(d + static_cast<int>(a.cols()), d, a);
}

Json to_json(const Factorization& f) {
  Json j = Json::object();
  j["g"] = to_json(f.g);
  j["h"] = to_json(f.h);
  j["certified"] = f.certified;
  return j;
}

}  // namespace affsch
