#pragma once

#include <functional>
#include <optional>

#include "beamwave/duality.hpp"
#include "beamwave/fields.hpp"

namespace beamwave {

// Mechanical energy density and flux of a strain-velocity pair.
struct EnergyFields {
  RealField energy;
  RealField flux;
};

// Quantum probability density and current with the attached normalization.
struct ProbabilityFields {
  RealField density;
  RealField current;
  double lambda = 0.0;
};

// E = (b^2/2) gamma^2 + (a^2/2) v^2, evaluated as ((b g)^2 + (a v)^2) / 2 so
// that 2 lambda E reproduces lambda |psi|^2 bit-exactly for the pair built by
// wavefunction_from_state.
RealField energy_density(const StrainState& s, const PhysParams& p);

// Q = b^2 (v gamma' - v' gamma) with spectral derivatives.
RealField energy_flux(const StrainState& s, const PhysParams& p);

// integral of the energy density; constant along beam trajectories.
double total_energy(const StrainState& s, const PhysParams& p);

// lambda = 1 / integral |psi|^2; throws ZeroWaveFunctionError for a zero field.
double normalization_constant(const ComplexField& psi);

// rho = lambda |psi|^2.
RealField probability_density(const ComplexField& psi, double lambda);

// q = (2 b lambda / a) Im(conj(psi) psi').
RealField probability_current(const ComplexField& psi, double lambda, const PhysParams& p);

// max_x |rho - 2 lambda E|: zero (to round-off) when s and psi correspond
// under the bijection; a diagnostic, never an error.
double duality_gap(const StrainState& s, const ComplexField& psi, double lambda,
                   const PhysParams& p);

enum class BalanceLaw { energy, probability };

using StrainTrajectory = std::function<StrainState(double)>;

// Centered-difference residual of the transport law at time t:
//   energy:      [E(t+dt) - E(t-dt)]/(2 dt) + Q'(t)
//   probability: [rho(t+dt) - rho(t-dt)]/(2 dt) + q'(t)
// The max-norm is O(dt_fd^2) for exact trajectories. For the probability law
// lambda defaults to the normalization of psi(t) when not supplied.
RealField balance_residual(const StrainTrajectory& trajectory, double t, double dt_fd,
                           BalanceLaw which, const PhysParams& p,
                           std::optional<double> lambda = std::nullopt);

// Trajectory of the exact beam evolution of s0, in strain-velocity form.
StrainTrajectory make_beam_trajectory(const BeamState& s0, const PhysParams& p);

// Default residual step: a small fraction of the fastest mode's period.
double default_balance_step(const Grid& grid, const PhysParams& p);

}  // namespace beamwave
