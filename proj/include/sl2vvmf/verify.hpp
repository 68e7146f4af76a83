#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace sl2vvmf {

struct RunConfig {
  std::size_t order = 12;
  double tolerance = 1e-9;
  int max_level = 48;
};

enum class Suite { tables, mlde, bgg, mtc, dims, all };
std::optional<Suite> parse_suite(const std::string& s);
std::string suite_name(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool pass() const;
  std::size_t failures() const;
};

// suites run their independent jobs concurrently
SuiteReport run_suite(Suite s, const RunConfig& cfg);

// S^(2) at level 5 as published to two decimals
Eigen::MatrixXcd level5_s2_reference();
// entrywise |re|, |im| differences within half a unit in the second decimal
bool matches_two_decimals(const Eigen::MatrixXcd& computed, const Eigen::MatrixXcd& reference);

}  // namespace sl2vvmf
