#pragma once

// The batch verification sweep behind `affsch verify`.

#include "affsch/check_report.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace affsch {

struct SweepConfig {
  int n_min = 2;
  int n_max = 6;
  int samples = 20;
  std::uint64_t seed = 0;
  std::optional<Index> precision;  // series precision for coset_eq_routes
  std::string output;              // empty: stdout
  bool timings = false;
};

/// Throws InvalidParams unless 2 <= n_min <= n_max and samples >= 0.
void validate_config(const SweepConfig& cfg);

/// Every check for every cell (n, d), n_min <= n <= n_max, 1 <= d <= n/2,
/// sorted by (name, n, d). Randomized suites are skipped when samples = 0.
std::vector<CheckReport> run_sweep(const SweepConfig& cfg);

Json sweep_header(const SweepConfig& cfg);
Json sweep_summary(const std::vector<CheckReport>& reports);

/// Header line, one line per report, summary line.
void write_sweep(std::ostream& os, const SweepConfig& cfg, const std::vector<CheckReport>& reports);

}  // namespace affsch
