#include "beamwave/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "json.hpp"

namespace beamwave::cli {

namespace {

using nlohmann::json;

json load_section(const std::string& config_path, const std::string& section,
                  const std::set<std::string>& known_keys) {
  if (config_path.empty()) return json::object();
  std::ifstream in(config_path);
  if (!in) throw ConfigError("config", "cannot open config file '" + config_path + "'");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config", "top level must be an object");
  if (!root.contains(section)) return json::object();
  const json& sec = root.at(section);
  if (!sec.is_object()) throw ConfigError(section, "section must be an object");
  for (const auto& item : sec.items()) {
    if (!known_keys.contains(item.key())) {
      throw ConfigError(item.key(), "unknown key in section '" + section + "'");
    }
  }
  return sec;
}

void read_int(const json& sec, const char* key, int& dst) {
  if (!sec.contains(key)) return;
  if (!sec.at(key).is_number_integer()) throw ConfigError(key, "expected an integer");
  dst = sec.at(key).get<int>();
}

void read_u64(const json& sec, const char* key, std::uint64_t& dst) {
  if (!sec.contains(key)) return;
  const json& v = sec.at(key);
  const bool ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
  if (!ok) throw ConfigError(key, "expected a non-negative integer");
  dst = v.get<std::uint64_t>();
}

void read_double(const json& sec, const char* key, double& dst) {
  if (!sec.contains(key)) return;
  if (!sec.at(key).is_number()) throw ConfigError(key, "expected a number");
  dst = sec.at(key).get<double>();
}

void read_bool(const json& sec, const char* key, bool& dst) {
  if (!sec.contains(key)) return;
  if (!sec.at(key).is_boolean()) throw ConfigError(key, "expected a boolean");
  dst = sec.at(key).get<bool>();
}

void read_string(const json& sec, const char* key, std::string& dst) {
  if (!sec.contains(key)) return;
  if (!sec.at(key).is_string()) throw ConfigError(key, "expected a string");
  dst = sec.at(key).get<std::string>();
}

void read_double_list(const json& sec, const char* key, std::vector<double>& dst) {
  if (!sec.contains(key)) return;
  const json& v = sec.at(key);
  if (!v.is_array()) throw ConfigError(key, "expected an array of numbers");
  std::vector<double> out;
  for (const json& e : v) {
    if (!e.is_number()) throw ConfigError(key, "expected an array of numbers");
    out.push_back(e.get<double>());
  }
  dst = std::move(out);
}

void read_int_list(const json& sec, const char* key, std::vector<int>& dst) {
  if (!sec.contains(key)) return;
  const json& v = sec.at(key);
  if (!v.is_array()) throw ConfigError(key, "expected an array of integers");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) throw ConfigError(key, "expected an array of integers");
    out.push_back(e.get<int>());
  }
  dst = std::move(out);
}

void read_common(const json& sec, CommonConfig& c) {
  read_int(sec, "grid_n", c.grid_n);
  read_double(sec, "grid_l", c.grid_l);
  read_double(sec, "a", c.a);
  read_double(sec, "b", c.b);
  read_u64(sec, "seed", c.seed);
  read_string(sec, "out", c.out_dir);
}

void apply_common_flags(const FlagOverrides& flags, CommonConfig& c) {
  if (flags.grid_n) c.grid_n = *flags.grid_n;
  if (flags.grid_l) c.grid_l = *flags.grid_l;
  if (flags.a) c.a = *flags.a;
  if (flags.b) c.b = *flags.b;
  if (flags.seed) c.seed = *flags.seed;
  if (flags.out_dir) c.out_dir = *flags.out_dir;
}

void validate_common(const CommonConfig& c) {
  if (c.grid_n < 4 || c.grid_n % 2 != 0) {
    throw ConfigError("grid_n", "N must be an even integer >= 4, got " + std::to_string(c.grid_n));
  }
  if (!(c.grid_l > 0.0) || !std::isfinite(c.grid_l)) {
    throw ConfigError("grid_l", "L must be positive and finite");
  }
  if (!(c.a > 0.0) || !std::isfinite(c.a)) throw ConfigError("a", "must be positive and finite");
  if (!(c.b > 0.0) || !std::isfinite(c.b)) throw ConfigError("b", "must be positive and finite");
  if (c.out_dir.empty()) throw ConfigError("out", "output directory must not be empty");
}

void validate_times(const std::vector<double>& times, const char* key) {
  if (times.empty()) throw ConfigError(key, "at least one sample time is required");
  for (double t : times) {
    if (!std::isfinite(t)) throw ConfigError(key, "sample times must be finite");
  }
}

const std::set<std::string> kCommonKeys = {"grid_n", "grid_l", "a", "b", "seed", "out"};

std::set<std::string> with_common(std::set<std::string> extra) {
  extra.insert(kCommonKeys.begin(), kCommonKeys.end());
  return extra;
}

}  // namespace

SimulateConfig load_simulate_config(const std::string& config_path, const FlagOverrides& flags) {
  SimulateConfig cfg;
  const json sec = load_section(
      config_path, "simulate",
      with_common({"scenario", "times", "x0", "s0", "k0", "mode", "kmax_fraction", "snapshots"}));
  read_common(sec, cfg.common);
  read_string(sec, "scenario", cfg.scenario);
  read_double_list(sec, "times", cfg.times);
  read_double(sec, "x0", cfg.x0);
  read_double(sec, "s0", cfg.s0);
  read_double(sec, "k0", cfg.k0);
  read_int(sec, "mode", cfg.mode);
  read_double(sec, "kmax_fraction", cfg.kmax_fraction);
  read_bool(sec, "snapshots", cfg.snapshots);
  apply_common_flags(flags, cfg.common);
  if (flags.times) cfg.times = *flags.times;

  validate_common(cfg.common);
  if (cfg.scenario != "gaussian_packet" && cfg.scenario != "random" &&
      cfg.scenario != "single_mode" && cfg.scenario != "zero") {
    throw ConfigError("scenario",
                      "must be one of gaussian_packet, random, single_mode, zero; got '" +
                          cfg.scenario + "'");
  }
  validate_times(cfg.times, "times");
  if (!(cfg.s0 > 0.0)) throw ConfigError("s0", "packet width must be positive");
  if (cfg.mode < 1 || cfg.mode > cfg.common.grid_n / 2 - 1) {
    throw ConfigError("mode", "mode index must lie in [1, N/2 - 1]");
  }
  if (!(cfg.kmax_fraction > 0.0) || cfg.kmax_fraction > 0.5) {
    throw ConfigError("kmax_fraction", "must lie in (0, 0.5]");
  }
  return cfg;
}

VerifyConfig load_verify_config(const std::string& config_path, const FlagOverrides& flags) {
  VerifyConfig cfg;
  const json sec =
      load_section(config_path, "verify", with_common({"seed_count", "tol", "inject_sign_error"}));
  read_common(sec, cfg.common);
  read_int(sec, "seed_count", cfg.seed_count);
  if (sec.contains("tol")) {
    double tol = 0.0;
    read_double(sec, "tol", tol);
    cfg.tol_override = tol;
  }
  read_bool(sec, "inject_sign_error", cfg.inject_sign_error);
  apply_common_flags(flags, cfg.common);
  if (flags.tol) cfg.tol_override = *flags.tol;
  if (flags.inject_sign_error) cfg.inject_sign_error = true;

  validate_common(cfg.common);
  if (cfg.seed_count < 1) throw ConfigError("seed_count", "need at least one seed");
  if (cfg.tol_override && !(*cfg.tol_override > 0.0)) {
    throw ConfigError("tol", "tolerance must be positive");
  }
  return cfg;
}

BenchConfig load_bench_config(const std::string& config_path, const FlagOverrides& flags) {
  BenchConfig cfg;
  const json sec = load_section(config_path, "bench",
                                with_common({"sizes", "t_final", "dt_fraction", "kmax_fraction"}));
  read_common(sec, cfg.common);
  read_int_list(sec, "sizes", cfg.sizes);
  read_double(sec, "t_final", cfg.t_final);
  read_double(sec, "dt_fraction", cfg.dt_fraction);
  read_double(sec, "kmax_fraction", cfg.kmax_fraction);
  apply_common_flags(flags, cfg.common);

  validate_common(cfg.common);
  if (cfg.sizes.empty()) throw ConfigError("sizes", "grid-size list must not be empty");
  for (int n : cfg.sizes) {
    if (n < 4 || n % 2 != 0) {
      throw ConfigError("sizes", "every N must be an even integer >= 4, got " + std::to_string(n));
    }
  }
  if (!(cfg.t_final > 0.0)) throw ConfigError("t_final", "must be positive");
  if (!(cfg.dt_fraction > 0.0) || cfg.dt_fraction > 1.0) {
    throw ConfigError("dt_fraction", "must lie in (0, 1]");
  }
  if (!(cfg.kmax_fraction > 0.0) || cfg.kmax_fraction > 0.5) {
    throw ConfigError("kmax_fraction", "must lie in (0, 0.5]");
  }
  return cfg;
}

PacketConfig load_packet_config(const std::string& config_path, const FlagOverrides& flags) {
  PacketConfig cfg;
  const json sec = load_section(config_path, "packet", with_common({"x0", "s0", "k0", "times"}));
  read_common(sec, cfg.common);
  read_double(sec, "x0", cfg.x0);
  read_double(sec, "s0", cfg.s0);
  read_double(sec, "k0", cfg.k0);
  read_double_list(sec, "times", cfg.times);
  apply_common_flags(flags, cfg.common);
  if (flags.times) cfg.times = *flags.times;

  validate_common(cfg.common);
  if (!(cfg.s0 > 0.0)) throw ConfigError("s0", "packet width must be positive");
  validate_times(cfg.times, "times");
  return cfg;
}

}  // namespace beamwave::cli
