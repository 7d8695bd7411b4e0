#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beamwave/duality.hpp"
#include "beamwave/fields.hpp"
#include "beamwave/propagators.hpp"

namespace beamwave {

// Which first-order-in-time system RK4 advances: the beam written as
// (u, v) with u' = v, v' = -(b/a)^2 u'''', or the single complex equation
// psi' = i (b/a) psi''.
enum class Formulation { beam_first_order_system, schrodinger };

std::string formulation_name(Formulation f);

struct IntegratorConfig {
  Formulation formulation = Formulation::beam_first_order_system;
  double dt = 1e-3;
  double t_final = 1.0;
  int grid_n = 256;
  double grid_l = 2.0 * 3.14159265358979323846;
  PhysParams params{};
};

// Outcome of an RK4 run. blew_up is a flag, not an exception: the integrator
// stops stepping once the solution norm exceeds 10x its initial value (or
// goes non-finite) and returns the state it reached.
template <class StateT>
struct Rk4Outcome {
  StateT state;
  bool blew_up = false;
  double norm_ratio = 1.0;  // final norm / initial norm
  std::int64_t steps = 0;
};

// Classical RK4 on the method-of-lines system, spatial derivatives spectral.
// Integrates to exactly t_final: full steps of dt, then one shorter final
// step for the remainder.
Rk4Outcome<BeamState> rk4_integrate_beam(const BeamState& s0, double dt, double t_final,
                                         const PhysParams& p);
Rk4Outcome<ComplexField> rk4_integrate_schrodinger(const ComplexField& psi0, double dt,
                                                   double t_final, const PhysParams& p);

// RK4 amplification on the imaginary axis leaves |R| <= 1 up to
// |omega| dt = 2*sqrt(2); the fastest retained mode is the Nyquist one.
double rk4_stability_limit(const Grid& grid, const PhysParams& p);

// One benchmark run at fixed (formulation, N, dt).
struct BenchRow {
  Formulation formulation = Formulation::beam_first_order_system;
  int grid_n = 0;
  double dt = 0.0;
  double t_final = 0.0;
  double max_error = 0.0;  // max-norm vs the exact spectral propagator
  double wall_ms = 0.0;
  bool stable = true;
  double dt_star = 0.0;           // empirical stability threshold (5% bisection)
  double dt_star_theory = 0.0;    // 2 sqrt(2) / omega_max
  std::int64_t steps = 0;
  std::int64_t fft_calls = 0;     // measured, whole run
  double fft_calls_per_step = 0.0;
  std::int64_t dof = 0;           // real degrees of freedom advanced
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double dt_star_exponent = 0.0;  // log-log fit of dt_star vs N per formulation mean
};

// Benchmarks both formulations on corresponding initial data (the pair is
// built through the bijection from seeded band-limited beam data) across the
// given grid sizes. dt = dt_fraction * empirical threshold. Runs execute
// sequentially so wall times do not contend.
BenchReport run_benchmark(const std::vector<int>& grid_sizes, double grid_l, double t_final,
                          double dt_fraction, std::uint64_t seed, double kmax_fraction,
                          const PhysParams& p);

// Bisection for the blow-up threshold dt* of one formulation, to 5% relative
// accuracy, over a short probe horizon seeded with Nyquist-mode content.
double find_stability_threshold(Formulation f, const Grid& grid, const PhysParams& p,
                                std::uint64_t seed);

}  // namespace beamwave
