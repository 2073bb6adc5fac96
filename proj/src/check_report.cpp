#include "affsch/check_report.hpp"

namespace affsch {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: return "vacuous";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

CheckReport CheckReport::pass(std::string name, int n, int d, Json witness) {
  return CheckReport{std::move(name), n, d, CheckStatus::Pass, {}, std::move(witness), {}};
}

CheckReport CheckReport::fail(std::string name, int n, int d, Json witness) {
  if (witness.is_null()) witness = Json::object();
  return CheckReport{std::move(name), n, d, CheckStatus::Fail, {}, std::move(witness), {}};
}

CheckReport CheckReport::vacuous(std::string name, int n, int d, Json witness) {
  return CheckReport{std::move(name), n, d, CheckStatus::Vacuous, {}, std::move(witness), {}};
}

CheckReport CheckReport::skipped(std::string name, int n, int d, std::string reason) {
  return CheckReport{std::move(name), n, d, CheckStatus::Skipped, std::move(reason), nullptr, {}};
}

Json to_json(const CheckReport& r, bool include_elapsed) {
  Json j = Json::object();
  j["name"] = r.name;
  j["n"] = r.n;
  j["d"] = r.d;
  j["status"] = to_string(r.status);
  if (r.status == CheckStatus::Skipped) j["reason"] = r.reason;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (include_elapsed && r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j;
}

}  // namespace affsch
