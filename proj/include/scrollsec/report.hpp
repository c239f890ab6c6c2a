#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "scrollsec/delpezzo.hpp"

namespace scrollsec {

/// Process exit codes shared by the CLI and the Python bindings.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitUnclassifiable = 2,
  kExitDisagreement = 3,
  kExitOnVariety = 4,
};

struct RunConfig {
  std::uint32_t q = 10007;
  int d_max = 2;
  std::uint64_t seed = 0;
  std::string scroll;
  std::string point;
  int n = 200;
  /// "mixture" draws from the witness samplers, "uniform" from the ambient space.
  std::string sampler = "mixture";
  AtlasBounds bounds;
  std::uint64_t budget = 10'000'000;
};

struct RunResult {
  nlohmann::json report;
  int exit_code = kExitOk;
};

/// Comma-separated integers, reduced mod q; throws ParseError.
Vec parse_point(const Field& field, const std::string& text, std::size_t expected);

RunResult run_classify(const RunConfig& config);
RunResult run_sample(const RunConfig& config);
RunResult run_atlas(const RunConfig& config);
/// Requires q <= 101.
RunResult run_oracle_check(const RunConfig& config);

/// Runs one of "classify", "sample", "atlas", "oracle-check", mapping library
/// errors to an error report and an exit code.
RunResult run_command(const std::string& command, const RunConfig& config);

/// Two-space indented JSON with a trailing newline.
std::string render(const nlohmann::json& report);

}  // namespace scrollsec
