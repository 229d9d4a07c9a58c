#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsign/matkit.hpp"

namespace dsign {

struct CheckResult {
  std::string module;
  std::string name;
  std::string anchor;  // the statement being exercised
  bool pass = false;
  double residual = 0.0;
  int samples = 0;
  std::string detail;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  int samples = 1000;
  std::vector<CheckResult> results;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int samples = 1000;
  double tol = kDefaultTol;
};

/// Names of every module invariant the suite must exercise.
const std::vector<std::string>& invariant_checklist();

/// Runs every invariant check; results are in checklist order.
Report run_verify(const VerifyOptions& opt, std::string command = "verify");

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace dsign
