// Command implementations behind the goldpart CLI. Each returns the exact
// report text and an exit code so callers (the CLI, tests) can compare
// reports byte for byte.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "goldpart/gold.hpp"

namespace goldpart {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2, kBudgetRefusal = 3 };

struct RunConfig {
  int m = 0;
  int s = 1;
  std::optional<std::uint32_t> modulus;
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;  // default depends on m
  unsigned threads = 1;
  bool long_run = false;
  bool json = false;
  bool timing = false;
  std::string mode = "sampled";  // verify: sampled | exhaustive
  std::string rep = "zero";      // squares: zero | nonzero | hex:<subset>
  std::string subset;            // color / orbit
  std::string table = "gold";    // crooked: gold | identity | random | <path>
  std::uint32_t alpha = 0;       // export
};

struct CommandResult {
  int exit_code = kPass;
  std::string output;
};

/// 1000 for m <= 9, 200 above.
std::size_t default_samples(int m);

/// {m, s, sigma_plus_1, modulus_hex, d}.
nlohmann::ordered_json params_json(const GoldParams& p);

// Parameter problems throw std::invalid_argument; size refusals throw
// BudgetExceeded. run_command maps both to exit codes.
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_table(const RunConfig& config);
CommandResult cmd_squares(const RunConfig& config);
CommandResult cmd_color(const RunConfig& config);
CommandResult cmd_orbit(const RunConfig& config);
CommandResult cmd_crooked(const RunConfig& config);
CommandResult cmd_export(const RunConfig& config);
CommandResult cmd_coincide(const RunConfig& config);

/// Dispatches by name and converts exceptions to exit codes 2 and 3 with
/// the message as output.
CommandResult run_command(const std::string& name, const RunConfig& config);

}  // namespace goldpart
