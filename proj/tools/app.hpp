#pragma once

#include "boxideal/groebner.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace boxideal::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_check_failed = 1,
  exit_input = 2,
  exit_budget = 3,
  exit_internal = 4,
};

/// Everything a run depends on. Identical configs give identical output.
struct RunConfig {
  std::string command;  // minors, gb-verify, hilbert, segre-kernel, decompose, blowup
  std::string target;   // box spec, or tensor file for decompose
  int d = 1;
  int n = 1;
  std::uint64_t seed = 1;
  unsigned tmax = 4;
  std::size_t budget_spairs = GbOptions{}.max_spairs;
  std::size_t max_terms = GbOptions{}.max_terms;
  std::uint32_t max_degree = 40;                // Hilbert sampling degree limit
  std::optional<std::size_t> gate_positions;    // command default when unset
  bool json = true;
  bool mutate = false;
};

struct RunResult {
  int exit_code = exit_ok;
  std::string output;  // JSON document or text report, newline-terminated
};

RunResult run_command(const RunConfig& config);

} // namespace boxideal::cli
