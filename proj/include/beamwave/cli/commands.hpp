#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beamwave/cli/config.hpp"

namespace beamwave::cli {

// Outcome of one verification property over all seeds and sample times.
struct PropertyResult {
  std::string name;
  std::string statement;     // what is being checked, in one line
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::uint64_t worst_seed = 0;
  double worst_time = 0.0;
  bool passed = false;
};

// Runs every duality and energetics property over seeded random data plus
// the canonical closed-form scenarios.
std::vector<PropertyResult> run_verify_suite(const VerifyConfig& cfg);

int cmd_simulate(const SimulateConfig& cfg);
int cmd_verify(const VerifyConfig& cfg);
int cmd_bench(const BenchConfig& cfg);
int cmd_packet(const PacketConfig& cfg);

// Full front end: parses argv, loads config, dispatches, maps every failure
// class to the exit-code contract (0 ok, 1 property failure, 2 bad config,
// 3 numerical precondition violated).
int run_cli(int argc, char** argv);

}  // namespace beamwave::cli
