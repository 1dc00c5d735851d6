#pragma once

// The acceptance checks, runnable from the CLI and the test suite. Each check
// returns one result line; oracles are injected so tests can supply their own.

#include <functional>
#include <string>
#include <vector>

#include "wrlab/svp.hpp"

namespace wrlab {

enum class VerifyLevel { Fast, Full };
VerifyLevel parse_level(const std::string& text);

struct CriterionResult {
  int id = 0;
  std::string key;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOracles {
  // All nonzero u with u^T G u <= bound, both signs, sorted.
  std::function<std::vector<Coeffs>(const Matrix<long>&, long)> brute_force;
  // (sum over m in Z of t^(m^2))^n - 1.
  std::function<long double(long double, int)> zn_theta_minus_one;
};

// Naive coefficient-box search and a direct one-dimensional theta sum.
VerifyOracles default_oracles();

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, VerifyLevel level, const VerifyOracles& oracles);

// Runs every check concurrently; results come back ordered by id and are
// reported through on_result in that order.
std::vector<CriterionResult> run_acceptance(
    VerifyLevel level, const VerifyOracles& oracles,
    const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3 gwr-enumeration (12.3 s) detail".
std::string format_result(const CriterionResult& r);

// |computed - printed| <= half a unit in the sixth significant figure of the
// printed value.
bool matches_printed(const BigFloat& computed, const std::string& printed);

}  // namespace wrlab
