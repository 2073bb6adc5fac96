#include "affsch/sweep.hpp"

#include "affsch/embedding.hpp"
#include "affsch/errors.hpp"
#include "affsch/field_linalg.hpp"
#include "affsch/kappa.hpp"
#include "affsch/random.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <tuple>

namespace affsch {

namespace {

using Sample = std::function<std::optional<Json>(Rng&)>;

// Runs `samples` draws from the stream of (name, n, d); the first failure
// becomes the witness.
CheckReport sampled(const SweepConfig& cfg, const std::string& name, int n, int d, const Sample& one) {
  if (cfg.samples == 0) return CheckReport::skipped(name, n, d, "samples = 0");
  Rng rng(derive_seed(cfg.seed, name, n, d));
  for (int i = 0; i < cfg.samples; ++i) {
    if (auto bad = one(rng)) {
      (*bad)["sample"] = i;
      return CheckReport::fail(name, n, d, *bad);
    }
  }
  return CheckReport::pass(name, n, d, Json{{"samples", cfg.samples}});
}

std::optional<Json> unless(bool ok, Json witness) {
  if (ok) return std::nullopt;
  return witness;
}

YKind kind_for(int i) {
  static constexpr YKind kinds[] = {YKind::Generic, YKind::Sparse, YKind::RankDeficient};
  return kinds[i % 3];
}

struct RelatedPair {
  RationalMatrix g1, g2;
  NilpotentY y1, y2;
};

// (g1, Y1) and (g1 p^{-1}, p Y1 p^{-1}) with p in P_d; they share a coset.
RelatedPair related_pair(int n, int d, Rng& rng) {
  const RationalMatrix g1 = random_sl(n, rng);
  const NilpotentY y1 = random_nilpotent_y(n, d, kind_for(static_cast<int>(uniform_below(rng, 3))), rng);
  const RationalMatrix p = random_parabolic(n, d, rng);
  const RationalMatrix pinv = exact_inverse(p);
  return {g1, g1 * pinv, y1, NilpotentY::from_full(d, p * y1.full() * pinv)};
}

// Independent draws, redrawn while g2^{-1} g1 lies in P_d.
RelatedPair unrelated_pair(int n, int d, Rng& rng) {
  RationalMatrix g1 = random_sl(n, rng), g2 = random_sl(n, rng);
  while (in_parabolic(RationalMatrix(exact_inverse(g2) * g1), d)) g2 = random_sl(n, rng);
  return {g1, g2, random_nilpotent_y(n, d, YKind::Generic, rng), random_nilpotent_y(n, d, YKind::Generic, rng)};
}

std::vector<CheckReport> cell_reports(const SweepConfig& cfg, int n, int d) {
  std::vector<CheckReport> out;
  auto guarded = [&](const std::string& name, const std::function<CheckReport()>& f) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r;
    try {
      r = f();
    } catch (const Error& e) {
      r = CheckReport::fail(name, n, d, Json{{"error", e.what()}});
    }
    if (cfg.timings) {
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    out.push_back(std::move(r));
  };

  guarded("cor_dimension", [&] { return check_kappa_invariants(n, d); });
  guarded("kappa_matrix_lift", [&] { return check_matrix_lift(n, d); });
  guarded("lemma_stab", [&] { return check_stab(n, d); });
  guarded("lemma_rel", [&] { return check_rel(n, d); });
  guarded("prop_g0_stability", [&] { return check_g0_stability(n, d); });
  guarded("kappa_factors_reduced", [&] {
    const KappaData k = build_kappa(n, d);
    CheckReport r = check_lemma_red(k.w1, k.w2, n, d);
    r.name = "kappa_factors_reduced";
    return r;
  });
  guarded("kappa_factors_min_rep", [&] {
    const KappaData k = build_kappa(n, d);
    CheckReport r = check_lemma_min(k.w1, k.w2, n, d);
    r.name = "kappa_factors_min_rep";
    return r;
  });
  guarded("factorize_zero_degenerate", [&] {
    const std::string name = "factorize_zero_degenerate";
    try {
      const Factorization f = factorize(NilpotentY::zero(n, d));
      return CheckReport::fail(name, n, d, to_json(f));
    } catch (const DegenerateInput&) {
      return CheckReport::pass(name, n, d);
    }
  });

  auto quotient_pair = [n, d](Rng& rng) {
    const auto y1 = sample_quotient(n, d, QuotientSide::A, rng());
    const auto y2 = sample_quotient(n, d, QuotientSide::B, rng());
    return std::pair{y1, y2};
  };
  auto pair_json = [](const AffinePermutation& y1, const AffinePermutation& y2, const CheckReport& r) {
    return Json{{"y1", to_json(y1)}, {"y2", to_json(y2)}, {"report", r.witness}};
  };
  guarded("lemma_reduced", [&] {
    return sampled(cfg, "lemma_reduced", n, d, [&](Rng& rng) {
      const auto [y1, y2] = quotient_pair(rng);
      const CheckReport r = check_lemma_red(y1, y2, n, d);
      return unless(!r.failed(), pair_json(y1, y2, r));
    });
  });
  guarded("lemma_min_rep", [&] {
    return sampled(cfg, "lemma_min_rep", n, d, [&](Rng& rng) {
      const auto [y1, y2] = quotient_pair(rng);
      const CheckReport r = check_lemma_min(y1, y2, n, d);
      return unless(!r.failed(), pair_json(y1, y2, r));
    });
  });
  guarded("factorization", [&] {
    return sampled(cfg, "factorization", n, d, [&](Rng& rng) {
      const NilpotentY y = random_nilpotent_y(n, d, YKind::Generic, rng);
      try {
        const Factorization f = factorize(y, rng());
        return unless(f.certified, Json{{"y", to_json(y)}});
      } catch (const DegenerateInput& e) {
        return std::optional<Json>(Json{{"y", to_json(y)}, {"error", e.what()}});
      }
    });
  });
  guarded("thm_membership", [&] {
    int i = 0;
    return sampled(cfg, "thm_membership", n, d, [&](Rng& rng) {
      const NilpotentY y = i == 0 ? NilpotentY::zero(n, d) : random_nilpotent_y(n, d, kind_for(i), rng);
      ++i;
      const CheckReport r = membership_check(y);
      return unless(!r.failed(), Json{{"y", to_json(y)}, {"report", r.witness}});
    });
  });
  guarded("injectivity", [&] {
    return sampled(cfg, "injectivity", n, d, [&](Rng& rng) -> std::optional<Json> {
      const RelatedPair rel = related_pair(n, d, rng);
      const CheckReport r = injectivity_witness(rel.g1, rel.y1, rel.g2, rel.y2);
      if (r.status != CheckStatus::Pass) return Json{{"pair", "related"}, {"status", to_string(r.status)}};
      const RelatedPair unrel = unrelated_pair(n, d, rng);
      const CheckReport u = injectivity_witness(unrel.g1, unrel.y1, unrel.g2, unrel.y2);
      return unless(u.status == CheckStatus::Vacuous, Json{{"pair", "unrelated"}, {"report", u.witness}});
    });
  });
  guarded("equivariance", [&] {
    return sampled(cfg, "equivariance", n, d, [&](Rng& rng) {
      const RationalMatrix g0 = random_sl(n, rng);
      const RationalMatrix p = random_parabolic(n, d, rng);
      const NilpotentY y = random_nilpotent_y(n, d, kind_for(static_cast<int>(uniform_below(rng, 3))), rng);
      const RationalMatrix pinv = exact_inverse(p);
      const NilpotentY moved = NilpotentY::from_full(d, pinv * y.full() * p);
      const bool ok = coset_eq(phi(RationalMatrix(g0 * p), moved).matrix(), phi(g0, y).matrix(), d);
      return unless(ok, Json{{"g0", rational_matrix_to_json(g0)}, {"p", rational_matrix_to_json(p)}, {"y", to_json(y)}});
    });
  });
  guarded("coset_eq_routes", [&] {
    return sampled(cfg, "coset_eq_routes", n, d, [&](Rng& rng) -> std::optional<Json> {
      for (const RelatedPair& pr : {related_pair(n, d, rng), unrelated_pair(n, d, rng)}) {
        const LaurentMatrix m1 = phi(pr.g1, pr.y1).matrix();
        const LaurentMatrix m2 = phi(pr.g2, pr.y2).matrix();
        const Index prec = cfg.precision.value_or(default_precision(n, det(m2)));
        const bool a = coset_eq(m1, m2, d);
        const bool b = coset_eq_series(m1, m2, d, prec);
        if (a != b) return Json{{"m1", to_json(m1)}, {"m2", to_json(m2)}, {"order_route", a}, {"series_route", b}};
      }
      return std::nullopt;
    });
  });
  return out;
}

}  // namespace

void validate_config(const SweepConfig& cfg) {
  if (cfg.n_min < 2 || cfg.n_min > cfg.n_max) throw InvalidParams("need 2 <= n_min <= n_max");
  if (cfg.samples < 0) throw InvalidParams("samples must be >= 0");
  if (cfg.precision && *cfg.precision < 1) throw InvalidParams("precision must be >= 1");
}

std::vector<CheckReport> run_sweep(const SweepConfig& cfg) {
  validate_config(cfg);
  std::vector<CheckReport> all;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int d = 1; 2 * d <= n; ++d) {
      auto cell = cell_reports(cfg, n, d);
      all.insert(all.end(), std::make_move_iterator(cell.begin()), std::make_move_iterator(cell.end()));
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.name, a.n, a.d) < std::tie(b.name, b.n, b.d);
  });
  return all;
}

Json sweep_header(const SweepConfig& cfg) {
  Json h = Json::object();
  h["type"] = "header";
  h["n_min"] = cfg.n_min;
  h["n_max"] = cfg.n_max;
  h["samples"] = cfg.samples;
  h["seed"] = cfg.seed;
  h["precision"] = cfg.precision ? Json(*cfg.precision) : Json("default: 8n + spread of det");
  h["seed_rule"] =
      "check (name, n, d) draws from mt19937_64 seeded with sm(sm(sm(seed ^ fnv1a(name)) ^ n) ^ d), "
      "sm = splitmix64";
  return h;
}

Json sweep_summary(const std::vector<CheckReport>& reports) {
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : reports) ++counts[static_cast<int>(r.status)];
  Json s = Json::object();
  s["type"] = "summary";
  s["total"] = reports.size();
  s["pass"] = counts[static_cast<int>(CheckStatus::Pass)];
  s["fail"] = counts[static_cast<int>(CheckStatus::Fail)];
  s["vacuous"] = counts[static_cast<int>(CheckStatus::Vacuous)];
  s["skipped"] = counts[static_cast<int>(CheckStatus::Skipped)];
  return s;
}

void write_sweep(std::ostream& os, const SweepConfig& cfg, const std::vector<CheckReport>& reports) {
  os << sweep_header(cfg).dump() << '\n';
  for (const auto& r : reports) os << to_json(r, cfg.timings).dump() << '\n';
  os << sweep_summary(reports).dump() << '\n';
}

}  // namespace affsch
