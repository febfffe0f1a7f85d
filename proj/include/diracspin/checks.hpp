#pragma once

#include <string>
#include <vector>

#include "diracspin/sampling.hpp"
#include "diracspin/spincat.hpp"

namespace ds {

enum class CheckKind { Equality, Commutator, Distinctness, Parity, MatrixIdentity };

struct CheckSpec {
  std::string id;
  std::string description;
  /// the mathematical statement being tested, e.g. "[q_e^i, q_e^j] = 0"
  std::string anchor;
  CheckKind kind = CheckKind::Equality;
  /// 0 means "use the suite default tolerance"
  double tolerance = 0.0;
  /// only for Distinctness: min residual over |p| >= 0.5 m must exceed this
  double floor = 0.0;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  /// max residual for equality-type checks; min residual for distinctness
  double max_residual = 0.0;
  Momentum worst_sample;
  int samples_used = 0;
  std::uint64_t seed = 0;
};

struct CheckRecord {
  CheckSpec spec;
  CheckResult result;
};

struct SuiteReport {
  SampleConfig cfg;
  double tolerance = 1e-10;
  Conventions conventions{};
  std::vector<CheckRecord> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.result.pass) return false;
    return true;
  }
};

/// '*' and '?' wildcards, anchored at both ends.
bool glob_match(const std::string& pattern, const std::string& text);

const std::vector<CheckSpec>& check_registry();

/// Runs one registered check.  Mathematical failure is reported in the
/// result, never thrown; unknown ids throw ConfigError.
CheckResult run_check(const std::string& id, const SampleConfig& cfg,
                      double tol = 1e-10, Exec exec = Exec::Parallel);

/// Runs all checks whose id matches the filter (empty filter = all), in
/// registry order.
SuiteReport run_suite(const SampleConfig& cfg, const std::string& filter = "",
                      double tol = 1e-10, Exec exec = Exec::Parallel);

}  // namespace ds
