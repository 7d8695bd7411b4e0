#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace beamwave::cli {

// Invalid configuration value. Carries the offending field name so the
// top-level runner can print a message that points at it and exit with 2.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("field '" + field + "': " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Fields shared by every subcommand.
struct CommonConfig {
  int grid_n = 256;
  double grid_l = 2.0 * std::numbers::pi;
  double a = 1.0;
  double b = 1.0;
  std::uint64_t seed = 1;
  std::string out_dir = "out";
};

struct SimulateConfig {
  CommonConfig common{.grid_n = 1024, .grid_l = 80.0};
  std::string scenario = "gaussian_packet";  // gaussian_packet | random | single_mode | zero
  std::vector<double> times = {0.0, 1.0, 2.0};
  double x0 = 0.0;
  double s0 = 1.0;
  double k0 = 1.0;
  int mode = 1;                // wavenumber index for single_mode
  double kmax_fraction = 0.25; // band limit for random data
  bool snapshots = true;
};

struct VerifyConfig {
  CommonConfig common{};
  int seed_count = 20;
  std::optional<double> tol_override;
  bool inject_sign_error = false;  // test hook: flips the sign of Im(psi)
};

struct BenchConfig {
  CommonConfig common{};
  std::vector<int> sizes = {128, 256, 512, 1024};
  double t_final = 0.05;
  double dt_fraction = 0.4;    // dt = fraction of the measured stability threshold
  double kmax_fraction = 0.25;
};

struct PacketConfig {
  CommonConfig common{.grid_n = 2048, .grid_l = 80.0};
  double x0 = 0.0;
  double s0 = 1.0;
  double k0 = 1.0;
  std::vector<double> times = {0.0, 0.5, 1.0, 2.0};
};

// Values supplied on the command line; they win over config-file values.
struct FlagOverrides {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> grid_n;
  std::optional<double> grid_l;
  std::optional<double> a;
  std::optional<double> b;
  std::optional<double> tol;
  std::optional<std::vector<double>> times;
  bool inject_sign_error = false;
};

// Each loader starts from defaults, applies the named section of the JSON
// config file (when config_path is non-empty), applies flag overrides, then
// validates every field against the module preconditions. Throws ConfigError.
SimulateConfig load_simulate_config(const std::string& config_path, const FlagOverrides& flags);
VerifyConfig load_verify_config(const std::string& config_path, const FlagOverrides& flags);
BenchConfig load_bench_config(const std::string& config_path, const FlagOverrides& flags);
PacketConfig load_packet_config(const std::string& config_path, const FlagOverrides& flags);

}  // namespace beamwave::cli
