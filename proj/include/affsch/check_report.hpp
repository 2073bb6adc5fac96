#pragma once

#include "affsch/json_io.hpp"

#include <optional>
#include <string>

namespace affsch {

enum class CheckStatus { Pass, Fail, Vacuous, Skipped };

std::string to_string(CheckStatus s);

/// Verdict of one statement at one (n, d). A failing report always carries a
/// witness describing the offending data.
struct CheckReport {
  std::string name;
  int n = 0;
  int d = 0;
  CheckStatus status = CheckStatus::Pass;
  std::string reason;  // set for Skipped
  Json witness;        // null when absent
  std::optional<double> elapsed_ms;

  bool failed() const { return status == CheckStatus::Fail; }

  static CheckReport pass(std::string name, int n, int d, Json witness = nullptr);
  static CheckReport fail(std::string name, int n, int d, Json witness);
  static CheckReport vacuous(std::string name, int n, int d, Json witness = nullptr);
  static CheckReport skipped(std::string name, int n, int d, std::string reason);
};

Json to_json(const CheckReport& r, bool include_elapsed = false);

}  // namespace affsch
