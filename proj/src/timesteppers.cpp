#include "beamwave/timesteppers.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "beamwave/scenarios.hpp"
#include "beamwave/spectral.hpp"

namespace beamwave {

namespace {

constexpr double kBlowUpNormFactor = 10.0;   // flag when norm > 10x initial
constexpr int kStabilityProbeSteps = 400;    // horizon of one bisection probe

bool all_finite(const RealField& f) {
  for (double v : f.values()) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool all_finite(const ComplexField& f) {
  for (const Complex& v : f.values()) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

// Mechanical energy from u'''' (integral of u * u'''' equals integral of
// (u'')^2 on the periodic box), so the monitor reuses the stage-1 derivative.
double beam_energy(const RealField& u, const RealField& u4, const RealField& v,
                   const PhysParams& p) {
  const double w = u.grid().length() / u.size();
  double bending = 0.0, kinetic = 0.0;
  for (int j = 0; j < u.size(); ++j) {
    bending += u[j] * u4[j];
    kinetic += v[j] * v[j];
  }
  return 0.5 * (p.b * p.b * bending + p.a * p.a * kinetic) * w;
}

double wave_mass(const ComplexField& psi) {
  const double w = psi.grid().length() / psi.size();
  double mass = 0.0;
  for (const Complex& z : psi.values()) mass += std::norm(z);
  return mass * w;
}

struct StepPlan {
  std::int64_t full_steps = 0;
  double remainder = 0.0;
};

StepPlan plan_steps(double dt, double t_final) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (t_final < 0.0) throw std::invalid_argument("t_final must be non-negative");
  StepPlan plan;
  plan.full_steps = static_cast<std::int64_t>(std::floor(t_final / dt + 1e-12));
  plan.remainder = t_final - static_cast<double>(plan.full_steps) * dt;
  if (plan.remainder < 1e-12 * dt) plan.remainder = 0.0;
  return plan;
}

}  // namespace

std::string formulation_name(Formulation f) {
  return f == Formulation::beam_first_order_system ? "beam_first_order_system" : "schrodinger";
}

double rk4_stability_limit(const Grid& grid, const PhysParams& p) {
  const double k_nyquist = std::numbers::pi * grid.size() / grid.length();
  const double omega_max = (p.b / p.a) * k_nyquist * k_nyquist;
  return 2.0 * std::sqrt(2.0) / omega_max;
}

Rk4Outcome<BeamState> rk4_integrate_beam(const BeamState& s0, double dt, double t_final,
                                         const PhysParams& p) {
  require_same_grid(s0.u.grid(), s0.v.grid());
  const StepPlan plan = plan_steps(dt, t_final);
  const double c = (p.b / p.a) * (p.b / p.a);

  Rk4Outcome<BeamState> out{s0, false, 1.0, 0};
  RealField& u = out.state.u;
  RealField& v = out.state.v;

  double energy_0 = -1.0;  // set from the first monitor evaluation
  const double energy_cap_factor = kBlowUpNormFactor * kBlowUpNormFactor;

  auto take_step = [&](double h) -> bool {
    if (!all_finite(u) || !all_finite(v)) return false;
    const RealField u4 = spectral_derivative(u, 4);
    const double energy = beam_energy(u, u4, v, p);
    if (energy_0 < 0.0) energy_0 = energy;
    if (!std::isfinite(energy) || (energy_0 > 0.0 && energy > energy_cap_factor * energy_0)) {
      out.norm_ratio = energy_0 > 0.0 ? std::sqrt(std::abs(energy) / energy_0) : 0.0;
      return false;
    }

    const RealField k1u = v;
    const RealField k1v = -c * u4;
    const RealField u2f = u + (0.5 * h) * k1u;
    const RealField v2f = v + (0.5 * h) * k1v;
    const RealField k2u = v2f;
    const RealField k2v = -c * spectral_derivative(u2f, 4);
    const RealField u3f = u + (0.5 * h) * k2u;
    const RealField v3f = v + (0.5 * h) * k2v;
    const RealField k3u = v3f;
    const RealField k3v = -c * spectral_derivative(u3f, 4);
    const RealField u4f = u + h * k3u;
    const RealField v4f = v + h * k3v;
    const RealField k4u = v4f;
    const RealField k4v = -c * spectral_derivative(u4f, 4);

    const double w = h / 6.0;
    for (int j = 0; j < u.size(); ++j) {
      u[j] += w * (k1u[j] + 2.0 * k2u[j] + 2.0 * k3u[j] + k4u[j]);
      v[j] += w * (k1v[j] + 2.0 * k2v[j] + 2.0 * k3v[j] + k4v[j]);
    }
    ++out.steps;
    return true;
  };

  for (std::int64_t i = 0; i < plan.full_steps; ++i) {
    if (!take_step(dt)) {
      out.blew_up = true;
      return out;
    }
  }
  if (plan.remainder > 0.0 && !take_step(plan.remainder)) {
    out.blew_up = true;
    return out;
  }

  if (all_finite(u) && all_finite(v) && energy_0 > 0.0) {
    const double energy = beam_energy(u, spectral_derivative(u, 4), v, p);
    out.norm_ratio = std::sqrt(std::abs(energy) / energy_0);
    out.blew_up = !std::isfinite(energy) || energy > energy_cap_factor * energy_0;
  } else if (!all_finite(u) || !all_finite(v)) {
    out.blew_up = true;
  }
  return out;
}

Rk4Outcome<ComplexField> rk4_integrate_schrodinger(const ComplexField& psi0, double dt,
                                                   double t_final, const PhysParams& p) {
  const StepPlan plan = plan_steps(dt, t_final);
  const Complex ic(0.0, p.b / p.a);

  Rk4Outcome<ComplexField> out{psi0, false, 1.0, 0};
  ComplexField& psi = out.state;

  const double mass_0 = wave_mass(psi0);
  const double mass_cap = kBlowUpNormFactor * kBlowUpNormFactor * mass_0;

  auto rhs = [&](const ComplexField& f) { return ic * spectral_derivative(f, 2); };

  auto take_step = [&](double h) -> bool {
    if (!all_finite(psi)) return false;
    const double mass = wave_mass(psi);
    if (!std::isfinite(mass) || (mass_0 > 0.0 && mass > mass_cap)) {
      out.norm_ratio = mass_0 > 0.0 ? std::sqrt(mass / mass_0) : 0.0;
      return false;
    }
    const ComplexField k1 = rhs(psi);
    const ComplexField k2 = rhs(psi + Complex(0.5 * h) * k1);
    const ComplexField k3 = rhs(psi + Complex(0.5 * h) * k2);
    const ComplexField k4 = rhs(psi + Complex(h) * k3);
    const double w = h / 6.0;
    for (int j = 0; j < psi.size(); ++j) {
      psi[j] += w * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    ++out.steps;
    return true;
  };

  for (std::int64_t i = 0; i < plan.full_steps; ++i) {
    if (!take_step(dt)) {
      out.blew_up = true;
      return out;
    }
  }
  if (plan.remainder > 0.0 && !take_step(plan.remainder)) {
    out.blew_up = true;
    return out;
  }

  if (!all_finite(psi)) {
    out.blew_up = true;
  } else if (mass_0 > 0.0) {
    const double mass = wave_mass(psi);
    out.norm_ratio = std::sqrt(mass / mass_0);
    out.blew_up = !std::isfinite(mass) || mass > mass_cap;
  }
  return out;
}

namespace {

// Probe data for the stability scan: band-limited noise plus a small
// Nyquist-mode component so the fastest mode is populated from the start.
BeamState stability_probe_data(const Grid& grid, std::uint64_t seed) {
  BeamState s = random_band_limited(seed, 0.25, grid, true);
  const double amp = 1e-3 * std::max(max_abs(s.u), 1e-30);
  for (int j = 0; j < grid.size(); ++j) {
    s.u[j] += (j % 2 == 0 ? amp : -amp);
  }
  return s;
}

bool probe_is_stable(Formulation f, const BeamState& probe, const ComplexField& probe_psi,
                     double dt, const PhysParams& p) {
  const double horizon = kStabilityProbeSteps * dt;
  if (f == Formulation::beam_first_order_system) {
    return !rk4_integrate_beam(probe, dt, horizon, p).blew_up;
  }
  return !rk4_integrate_schrodinger(probe_psi, dt, horizon, p).blew_up;
}

}  // namespace

double find_stability_threshold(Formulation f, const Grid& grid, const PhysParams& p,
                                std::uint64_t seed) {
  const BeamState probe = stability_probe_data(grid, seed);
  const ComplexField probe_psi = wavefunction_from_state(strain_velocity(probe), p);
  const double theory = rk4_stability_limit(grid, p);

  double lo = 0.5 * theory;
  double hi = 2.0 * theory;
  int guard = 0;
  while (!probe_is_stable(f, probe, probe_psi, lo, p) && ++guard < 10) lo *= 0.5;
  guard = 0;
  while (probe_is_stable(f, probe, probe_psi, hi, p) && ++guard < 10) hi *= 2.0;

  while (hi / lo > 1.05) {
    const double mid = std::sqrt(lo * hi);
    if (probe_is_stable(f, probe, probe_psi, mid, p)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

namespace {

double fit_log_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

BenchReport run_benchmark(const std::vector<int>& grid_sizes, double grid_l, double t_final,
                          double dt_fraction, std::uint64_t seed, double kmax_fraction,
                          const PhysParams& p) {
  if (grid_sizes.empty()) throw std::invalid_argument("benchmark needs at least one grid size");
  BenchReport report;
  std::vector<double> ns, stars_beam, stars_schrodinger;

  for (int n : grid_sizes) {
    const Grid grid = make_grid(grid_l, n);
    const BeamState s0 = random_band_limited(seed, kmax_fraction, grid, true);
    const ComplexField psi0 = wavefunction_from_state(strain_velocity(s0), p);
    const BeamState beam_exact = propagate_beam(s0, t_final, p);
    const ComplexField psi_exact = propagate_schrodinger(psi0, t_final, p);

    for (Formulation f :
         {Formulation::beam_first_order_system, Formulation::schrodinger}) {
      BenchRow row;
      row.formulation = f;
      row.grid_n = n;
      row.t_final = t_final;
      row.dt_star = find_stability_threshold(f, grid, p, seed);
      row.dt_star_theory = rk4_stability_limit(grid, p);
      row.dt = dt_fraction * row.dt_star;
      row.dof = 2 * static_cast<std::int64_t>(n);

      reset_fft_call_count();
      const auto start = std::chrono::steady_clock::now();
      if (f == Formulation::beam_first_order_system) {
        const auto outcome = rk4_integrate_beam(s0, row.dt, t_final, p);
        row.stable = !outcome.blew_up;
        row.steps = outcome.steps;
        double err = 0.0;
        for (int j = 0; j < n; ++j) {
          err = std::max(err, std::abs(outcome.state.u[j] - beam_exact.u[j]));
          err = std::max(err, std::abs(outcome.state.v[j] - beam_exact.v[j]));
        }
        row.max_error = err;
      } else {
        const auto outcome = rk4_integrate_schrodinger(psi0, row.dt, t_final, p);
        row.stable = !outcome.blew_up;
        row.steps = outcome.steps;
        double err = 0.0;
        for (int j = 0; j < n; ++j) {
          err = std::max(err, std::abs(outcome.state[j] - psi_exact[j]));
        }
        row.max_error = err;
      }
      const auto stop = std::chrono::steady_clock::now();
      row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      row.fft_calls = static_cast<std::int64_t>(fft_call_count());
      row.fft_calls_per_step =
          row.steps > 0 ? static_cast<double>(row.fft_calls) / static_cast<double>(row.steps) : 0.0;

      if (f == Formulation::beam_first_order_system) {
        stars_beam.push_back(row.dt_star);
      } else {
        stars_schrodinger.push_back(row.dt_star);
      }
      report.rows.push_back(row);
    }
    ns.push_back(static_cast<double>(n));
  }

  const double slope_beam = fit_log_slope(ns, stars_beam);
  const double slope_schrodinger = fit_log_slope(ns, stars_schrodinger);
  report.dt_star_exponent = 0.5 * (slope_beam + slope_schrodinger);
  return report;
}

}  // namespace beamwave
