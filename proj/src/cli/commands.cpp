#include "beamwave/cli/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>

#include "CLI11.hpp"

#include "beamwave/cli/output.hpp"
#include "beamwave/duality.hpp"
#include "beamwave/energetics.hpp"
#include "beamwave/errors.hpp"
#include "beamwave/propagators.hpp"
#include "beamwave/scenarios.hpp"
#include "beamwave/timesteppers.hpp"

namespace beamwave::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

fs::path ensure_out_dir(const std::string& dir) {
  fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir + "'");
  return path;
}

}  // namespace

int cmd_simulate(const SimulateConfig& cfg) {
  const Grid grid = make_grid(cfg.common.grid_l, cfg.common.grid_n);
  const PhysParams p(cfg.common.a, cfg.common.b);
  const fs::path out = ensure_out_dir(cfg.common.out_dir);

  ComplexField psi0(grid);
  if (cfg.scenario == "gaussian_packet") {
    psi0 = gaussian_packet({cfg.x0, cfg.s0, cfg.k0}, grid);
  } else if (cfg.scenario == "random") {
    const BeamState s0 = random_band_limited(cfg.common.seed, cfg.kmax_fraction, grid, true);
    psi0 = wavefunction_from_state(strain_velocity(s0), p);
  } else if (cfg.scenario == "single_mode") {
    const double k = 2.0 * std::numbers::pi * cfg.mode / grid.length();
    const BeamState s0{RealField::sample(grid, [&](double x) { return std::cos(k * x); }),
                       RealField(grid)};
    psi0 = wavefunction_from_state(strain_velocity(s0), p);
  }
  // the "zero" scenario keeps psi0 identically zero

  const double mass0 = integrate(abs_squared(psi0));
  const bool zero_data = !(mass0 > 1e-300);
  const double lambda = zero_data ? 0.0 : normalization_constant(psi0);
  const double dt_fd = default_balance_step(grid, p);
  const StrainTrajectory traj = [psi0, p](double t) {
    return state_from_wavefunction(propagate_schrodinger(psi0, t, p), p);
  };

  std::vector<ordered_json> records;
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    const double t = cfg.times[i];
    const ComplexField psi_t = propagate_schrodinger(psi0, t, p);
    const StrainState s_t = state_from_wavefunction(psi_t, p);
    const RealField energy = energy_density(s_t, p);
    const RealField rho = probability_density(psi_t, lambda);
    const double total_e = integrate(energy);
    const double mass = integrate(rho);
    const double gap = duality_gap(s_t, psi_t, lambda, p);
    const double res_e = max_abs(balance_residual(traj, t, dt_fd, BalanceLaw::energy, p));
    const double res_rho =
        max_abs(balance_residual(traj, t, dt_fd, BalanceLaw::probability, p, lambda));

    ordered_json rec;
    rec["schema"] = "simulate-record/1";
    rec["scenario"] = cfg.scenario;
    rec["time"] = t;
    rec["lambda"] = lambda;
    rec["total_energy"] = total_e;
    rec["probability_mass"] = mass;
    rec["duality_gap"] = gap;
    rec["residual_energy_max"] = res_e;
    rec["residual_probability_max"] = res_rho;
    records.push_back(rec);

    if (cfg.snapshots) {
      CsvWriter csv(out / ("simulate_fields_" + std::to_string(i) + ".csv"));
      csv.write_row({"x", "gamma", "v", "psi_re", "psi_im", "energy_density",
                     "probability_density"});
      for (int j = 0; j < grid.size(); ++j) {
        csv.write_row({format_double(grid.point(j)), format_double(s_t.gamma[j]),
                       format_double(s_t.v[j]), format_double(psi_t[j].real()),
                       format_double(psi_t[j].imag()), format_double(energy[j]),
                       format_double(rho[j])});
      }
    }

    std::cout << "t = " << format_double(t) << "  total_energy = " << sci(total_e)
              << "  probability_mass = " << sci(mass) << "  duality_gap = " << sci(gap) << "\n";
  }
  write_jsonl(out / "simulate_records.jsonl", records);
  std::cout << "wrote " << records.size() << " records to "
            << (out / "simulate_records.jsonl").string() << "\n";
  return 0;
}

int cmd_verify(const VerifyConfig& cfg) {
  const fs::path out = ensure_out_dir(cfg.common.out_dir);
  const std::vector<PropertyResult> results = run_verify_suite(cfg);

  std::size_t name_width = 8;
  for (const auto& r : results) name_width = std::max(name_width, r.name.size());

  std::printf("%-*s  %13s  %10s  %s\n", static_cast<int>(name_width), "property",
              "max deviation", "tolerance", "result");
  int failures = 0;
  std::vector<ordered_json> records;
  for (const auto& r : results) {
    std::printf("%-*s  %13s  %10s  %s\n", static_cast<int>(name_width), r.name.c_str(),
                sci(r.max_deviation).c_str(), sci(r.tolerance).c_str(),
                r.passed ? "PASS" : "FAIL");
    if (!r.passed) {
      ++failures;
      std::printf("  reproduce: seed %llu, t = %s, measured %s vs tolerance %s\n",
                  static_cast<unsigned long long>(r.worst_seed), format_double(r.worst_time).c_str(),
                  sci(r.max_deviation).c_str(), sci(r.tolerance).c_str());
    }
    ordered_json rec;
    rec["schema"] = "verify-record/1";
    rec["property"] = r.name;
    rec["statement"] = r.statement;
    rec["max_deviation"] = r.max_deviation;
    rec["tolerance"] = r.tolerance;
    rec["worst_seed"] = r.worst_seed;
    rec["worst_time"] = r.worst_time;
    rec["passed"] = r.passed;
    records.push_back(rec);
  }
  write_jsonl(out / "verify_report.jsonl", records);
  std::printf("%zu properties, %zu passed, %d failed\n", results.size(),
              results.size() - static_cast<std::size_t>(failures), failures);
  return failures == 0 ? 0 : 1;
}

int cmd_bench(const BenchConfig& cfg) {
  const PhysParams p(cfg.common.a, cfg.common.b);
  const fs::path out = ensure_out_dir(cfg.common.out_dir);
  const BenchReport report = run_benchmark(cfg.sizes, cfg.common.grid_l, cfg.t_final,
                                           cfg.dt_fraction, cfg.common.seed, cfg.kmax_fraction, p);

  ordered_json doc;
  doc["schema"] = "bench-report/1";
  doc["grid_l"] = cfg.common.grid_l;
  doc["t_final"] = cfg.t_final;
  doc["dt_fraction"] = cfg.dt_fraction;
  doc["kmax_fraction"] = cfg.kmax_fraction;
  doc["seed"] = cfg.common.seed;
  doc["dt_star_exponent"] = report.dt_star_exponent;
  doc["rows"] = ordered_json::array();
  for (const BenchRow& r : report.rows) {
    ordered_json row;
    row["formulation"] = formulation_name(r.formulation);
    row["grid_n"] = r.grid_n;
    row["dt"] = r.dt;
    row["t_final"] = r.t_final;
    row["steps"] = r.steps;
    row["max_error"] = r.max_error;
    row["wall_ms"] = r.wall_ms;
    row["stable"] = r.stable;
    row["dt_star"] = r.dt_star;
    row["dt_star_theory"] = r.dt_star_theory;
    row["fft_calls"] = r.fft_calls;
    row["fft_calls_per_step"] = r.fft_calls_per_step;
    row["dof"] = r.dof;
    doc["rows"].push_back(row);
  }
  std::ofstream json_out(out / "bench_report.json");
  if (!json_out) throw std::runtime_error("cannot open bench_report.json for writing");
  json_out << doc.dump(2) << "\n";

  CsvWriter csv(out / "bench_summary.csv");
  csv.write_row({"formulation", "N", "dt", "error", "wall_ms", "stable"});
  for (const BenchRow& r : report.rows) {
    csv.write_row({formulation_name(r.formulation), std::to_string(r.grid_n),
                   format_double(r.dt), format_double(r.max_error), format_double(r.wall_ms),
                   r.stable ? "true" : "false"});
  }

  std::printf("%-24s %6s %12s %12s %10s %8s %14s\n", "formulation", "N", "dt", "max_error",
              "wall_ms", "stable", "fft_per_step");
  for (const BenchRow& r : report.rows) {
    std::printf("%-24s %6d %12s %12s %10.2f %8s %14.2f\n",
                formulation_name(r.formulation).c_str(), r.grid_n, sci(r.dt).c_str(),
                sci(r.max_error).c_str(), r.wall_ms, r.stable ? "yes" : "no",
                r.fft_calls_per_step);
  }
  std::printf("stability threshold exponent vs N: %.4f\n", report.dt_star_exponent);
  return 0;
}

int cmd_packet(const PacketConfig& cfg) {
  const Grid grid = make_grid(cfg.common.grid_l, cfg.common.grid_n);
  const PhysParams p(cfg.common.a, cfg.common.b);
  const fs::path out = ensure_out_dir(cfg.common.out_dir);

  const ComplexField psi0 = gaussian_packet({cfg.x0, cfg.s0, cfg.k0}, grid);
  const double lambda = normalization_constant(psi0);

  CsvWriter csv(out / "packet_widths.csv");
  csv.write_row({"t", "width_measured", "width_analytic", "relative_deviation"});
  std::printf("%12s %16s %16s %20s\n", "t", "width_measured", "width_analytic",
              "relative_deviation");
  for (double t : cfg.times) {
    const ComplexField psi_t = propagate_schrodinger(psi0, t, p);
    const RealField rho = probability_density(psi_t, lambda);
    const double measured = packet_width(rho);
    const double analytic = packet_width_law(cfg.s0, t, p);
    const double rel = (measured - analytic) / analytic;
    csv.write_row({format_double(t), format_double(measured), format_double(analytic),
                   format_double(rel)});
    std::printf("%12s %16.12f %16.12f %20s\n", format_double(t).c_str(), measured, analytic,
                sci(rel).c_str());
  }
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"spectral toolkit for the beam / wave-function correspondence"};
  app.require_subcommand(1);
  app.footer(
      "Config file: a JSON object with one section per subcommand\n"
      "(simulate | verify | bench | packet). Section keys mirror the flags\n"
      "(grid_n, grid_l, a, b, seed, out) plus per-command extras:\n"
      "  simulate: scenario, times, x0, s0, k0, mode, kmax_fraction, snapshots\n"
      "  verify:   seed_count, tol, inject_sign_error\n"
      "  bench:    sizes, t_final, dt_fraction, kmax_fraction\n"
      "  packet:   x0, s0, k0, times\n"
      "Flags override config-file values.");

  std::string config_path;
  FlagOverrides flags;

  auto* sim = app.add_subcommand("simulate", "propagate a scenario, emit records and snapshots");
  auto* ver = app.add_subcommand("verify", "run the correspondence property suite");
  auto* ben = app.add_subcommand("bench", "benchmark RK4 on both formulations");
  auto* pac = app.add_subcommand("packet", "gaussian packet spreading table");

  for (CLI::App* sub : {sim, ver, ben, pac}) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", flags.out_dir, "output directory");
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_option("--grid-n", flags.grid_n, "number of grid points (even, >= 4)");
    sub->add_option("--grid-l", flags.grid_l, "periodic box length");
    sub->add_option("--a", flags.a, "coefficient a (quantum reading: hbar)");
    sub->add_option("--b", flags.b, "coefficient b (quantum reading: hbar^2 / 2m)");
  }
  sim->add_option("--times", flags.times, "comma-separated sample times")->delimiter(',');
  pac->add_option("--times", flags.times, "comma-separated sample times")->delimiter(',');
  ver->add_option("--tol", flags.tol, "override every property tolerance");
  ver->add_flag("--inject-sign-error", flags.inject_sign_error)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sim->parsed()) return cmd_simulate(load_simulate_config(config_path, flags));
    if (ver->parsed()) return cmd_verify(load_verify_config(config_path, flags));
    if (ben->parsed()) return cmd_bench(load_bench_config(config_path, flags));
    return cmd_packet(load_packet_config(config_path, flags));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const GridMismatchError& e) {
    std::cerr << "numerical precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    // NonZeroMean, PacketTooWide, NotNormalized, ZeroWaveFunction and the
    // spectral residue guard all land here
    std::cerr << "numerical precondition violated: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace beamwave::cli
