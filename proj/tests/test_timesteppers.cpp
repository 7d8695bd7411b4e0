// Tests for the RK4 method-of-lines integrators, blow-up detection, and the
// two-formulation benchmark.
//
// Analytic anchors:
//   [1] the exact spectral propagators from the propagator module serve as
//       the error reference for every RK4 run
//   [2] RK4 applied to a pure oscillation is neutrally stable up to
//       omega dt = 2 sqrt(2) and unstable beyond, so a dt above that bound
//       for the fastest mode must trip the blow-up flag

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "beamwave/duality.hpp"
#include "beamwave/fields.hpp"
#include "beamwave/grid.hpp"
#include "beamwave/propagators.hpp"
#include "beamwave/scenarios.hpp"
#include "beamwave/spectral.hpp"
#include "beamwave/timesteppers.hpp"
#include "oracles.hpp"

using namespace beamwave;

constexpr double pi = std::numbers::pi;

// --- basic integration --------------------------------------------------------

TEST_CASE("a single cosine integrated at small dt matches the exact propagator") {
  const Grid g = make_grid(2.0 * pi, 64);
  const PhysParams p(1.0, 1.0);
  const BeamState s0{RealField::sample(g, [](double x) { return std::cos(x); }),
                     RealField(g)};
  const auto out = rk4_integrate_beam(s0, 1e-3, 1.0, p);
  CHECK_FALSE(out.blew_up);
  CHECK(out.steps == 1000);
  const BeamState want = propagate_beam(s0, 1.0, p);
  CHECK(max_abs(out.state.u - want.u) <= 1e-10);
  CHECK(max_abs(out.state.v - want.v) <= 1e-10);
}

TEST_CASE("zero final time returns the initial data unchanged") {
  const Grid g = make_grid(2.0 * pi, 32);
  const PhysParams p(1.3, 0.7);
  const BeamState s0 = random_band_limited(3u, 0.25, g, true);
  const auto out = rk4_integrate_beam(s0, 1e-2, 0.0, p);
  CHECK_FALSE(out.blew_up);
  CHECK(out.steps == 0);
  for (int j = 0; j < g.size(); ++j) {
    CHECK(out.state.u[j] == s0.u[j]);
    CHECK(out.state.v[j] == s0.v[j]);
  }

  const ComplexField psi0 = wavefunction_from_state(strain_velocity(s0), p);
  const auto qout = rk4_integrate_schrodinger(psi0, 1e-2, 0.0, p);
  CHECK_FALSE(qout.blew_up);
  for (int j = 0; j < g.size(); ++j) {
    CHECK(qout.state[j] == psi0[j]);
  }
}

TEST_CASE("the first-order formulation converges to the exact evolution as well") {
  const Grid g = make_grid(2.0 * pi, 64);
  const PhysParams p(1.0, 1.0);
  const ComplexField psi0 = ComplexField::sample(g, [](double x) {
    return std::exp(Complex(0.0, x)) + 0.3 * std::exp(Complex(0.0, 2.0 * x));
  });
  const auto out = rk4_integrate_schrodinger(psi0, 1e-3, 1.0, p);
  CHECK_FALSE(out.blew_up);
  const ComplexField want = propagate_schrodinger(psi0, 1.0, p);
  CHECK(max_abs(out.state - want) <= 1e-10);
}

TEST_CASE("error shrinks by about sixteen per halving of dt") {
  // N = 16 keeps the coarse step below the stability limit of the full grid
  // (the empty fast modes still feel it through round-off seeding).
  const Grid g = make_grid(2.0 * pi, 16);
  const PhysParams p(1.0, 1.0);
  const BeamState s0{RealField::sample(g, [](double x) { return std::cos(2.0 * x); }),
                     RealField::sample(g, [](double x) { return 0.5 * std::sin(x); })};
  const BeamState want = propagate_beam(s0, 1.0, p);
  const double coarse_dt = 2e-2;
  const double e1 = max_abs(rk4_integrate_beam(s0, coarse_dt, 1.0, p).state.u - want.u);
  const double e2 = max_abs(rk4_integrate_beam(s0, coarse_dt / 2.0, 1.0, p).state.u - want.u);
  const double order = std::log2(e1 / e2);
  CHECK(order == doctest::Approx(4.0).epsilon(0.08));
}

// --- stability ------------------------------------------------------------------

TEST_CASE("the stability limit follows the imaginary-axis bound of RK4") {
  const Grid g = make_grid(2.0 * pi, 64);
  const PhysParams p(1.0, 2.0);
  const double k_max = pi * g.size() / g.length();
  const double omega_max = (p.b / p.a) * k_max * k_max;
  CHECK(rk4_stability_limit(g, p) == doctest::Approx(2.0 * std::sqrt(2.0) / omega_max));
}

TEST_CASE("a step above the stability bound trips the blow-up flag") {
  const Grid g = make_grid(2.0 * pi, 64);
  const PhysParams p(1.0, 1.0);
  // populate every mode including the fastest one
  BeamState s0 = random_band_limited(5u, 0.5, g, true);
  for (int j = 0; j < g.size(); ++j) {
    s0.u[j] += 1e-3 * (j % 2 == 0 ? 1.0 : -1.0);
  }
  const double dt = 1.5 * rk4_stability_limit(g, p);
  const auto out = rk4_integrate_beam(s0, dt, 400.0 * dt, p);
  CHECK(out.blew_up);
  CHECK(out.norm_ratio > 10.0);

  const ComplexField psi0 = wavefunction_from_state(strain_velocity(s0), p);
  const auto qout = rk4_integrate_schrodinger(psi0, dt, 400.0 * dt, p);
  CHECK(qout.blew_up);
}

TEST_CASE("a step below the bound stays stable over many periods") {
  const Grid g = make_grid(2.0 * pi, 64);
  const PhysParams p(1.0, 1.0);
  const BeamState s0 = random_band_limited(5u, 0.25, g, true);
  const double dt = 0.5 * rk4_stability_limit(g, p);
  const auto out = rk4_integrate_beam(s0, dt, 1000.0 * dt, p);
  CHECK_FALSE(out.blew_up);
  CHECK(out.norm_ratio < 2.0);
}

TEST_CASE("zero initial data is trivially stable") {
  const Grid g = make_grid(2.0 * pi, 32);
  const PhysParams p(1.0, 1.0);
  const auto out =
      rk4_integrate_beam(BeamState{RealField(g), RealField(g)}, 1.0, 10.0, p);
  CHECK_FALSE(out.blew_up);
  CHECK(max_abs(out.state.u) == 0.0);
  const auto qout = rk4_integrate_schrodinger(ComplexField(g), 1.0, 10.0, p);
  CHECK_FALSE(qout.blew_up);
}

TEST_CASE("the measured threshold brackets the theoretical one") {
  const Grid g = make_grid(2.0 * pi, 128);
  const PhysParams p(1.0, 1.0);
  const double theory = rk4_stability_limit(g, p);
  for (Formulation f : {Formulation::beam_first_order_system, Formulation::schrodinger}) {
    const double dt_star = find_stability_threshold(f, g, p, 7u);
    CHECK(dt_star > 0.5 * theory);
    CHECK(dt_star < 2.0 * theory);
  }
}

// --- cross-formulation agreement ---------------------------------------------------

TEST_CASE("both formulations agree under the bijection at matched dt") {
  const Grid g = make_grid(2.0 * pi, 64);
  const PhysParams p(1.0, 1.0);
  const BeamState s0 = random_band_limited(9u, 0.25, g, true);
  const ComplexField psi0 = wavefunction_from_state(strain_velocity(s0), p);
  const double dt = 0.3 * rk4_stability_limit(g, p);
  const double t_final = 0.5;
  const auto beam_out = rk4_integrate_beam(s0, dt, t_final, p);
  const auto wave_out = rk4_integrate_schrodinger(psi0, dt, t_final, p);
  REQUIRE_FALSE(beam_out.blew_up);
  REQUIRE_FALSE(wave_out.blew_up);
  const ComplexField mapped =
      wavefunction_from_state(strain_velocity(beam_out.state), p);
  CHECK(max_abs(mapped - wave_out.state) <= 1e-6 * max_abs(wave_out.state));
}

// --- benchmark -------------------------------------------------------------------

TEST_CASE("the benchmark emits one row per formulation and grid size") {
  const BenchReport report =
      run_benchmark({128, 256}, 2.0 * pi, 0.05, 0.4, 1u, 0.25, PhysParams(1.0, 1.0));
  REQUIRE(report.rows.size() == 4);
  int beam_rows = 0, wave_rows = 0;
  for (const BenchRow& row : report.rows) {
    if (row.formulation == Formulation::beam_first_order_system) ++beam_rows;
    if (row.formulation == Formulation::schrodinger) ++wave_rows;
    CHECK(row.stable);
    CHECK(row.wall_ms > 0.0);
    CHECK(row.dt > 0.0);
    CHECK(row.steps > 0);
    CHECK(row.fft_calls > 0);
    CHECK(row.max_error >= 0.0);
    CHECK((row.grid_n == 128 || row.grid_n == 256));
    CHECK(row.dof == 2 * row.grid_n);
  }
  CHECK(beam_rows == 2);
  CHECK(wave_rows == 2);
  // omega_max quadruples per grid doubling, so dt* must fall as N^-2
  CHECK(report.dt_star_exponent == doctest::Approx(-2.0).epsilon(0.05));
}

TEST_CASE("formulation names are stable strings for reports") {
  CHECK(formulation_name(Formulation::beam_first_order_system) == "beam_first_order_system");
  CHECK(formulation_name(Formulation::schrodinger) == "schrodinger");
}
