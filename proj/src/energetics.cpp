#include "beamwave/energetics.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "beamwave/spectral.hpp"

namespace beamwave {

RealField energy_density(const StrainState& s, const PhysParams& p) {
  require_same_grid(s.gamma.grid(), s.v.grid());
  RealField e(s.gamma.grid());
  for (int j = 0; j < e.size(); ++j) {
    const double bg = p.b * s.gamma[j];
    const double av = p.a * s.v[j];
    e[j] = 0.5 * (bg * bg + av * av);
  }
  return e;
}

RealField energy_flux(const StrainState& s, const PhysParams& p) {
  require_same_grid(s.gamma.grid(), s.v.grid());
  const RealField gamma_x = spectral_derivative(s.gamma, 1);
  const RealField v_x = spectral_derivative(s.v, 1);
  RealField q(s.gamma.grid());
  const double b2 = p.b * p.b;
  for (int j = 0; j < q.size(); ++j) {
    q[j] = b2 * (s.v[j] * gamma_x[j] - v_x[j] * s.gamma[j]);
  }
  return q;
}

double total_energy(const StrainState& s, const PhysParams& p) {
  return integrate(energy_density(s, p));
}

double normalization_constant(const ComplexField& psi) {
  const double mass = integrate(abs_squared(psi));
  if (mass <= 1e-300) throw ZeroWaveFunctionError();
  return 1.0 / mass;
}

RealField probability_density(const ComplexField& psi, double lambda) {
  RealField rho(psi.grid());
  for (int j = 0; j < rho.size(); ++j) {
    const double re = psi[j].real(), im = psi[j].imag();
    rho[j] = lambda * (re * re + im * im);
  }
  return rho;
}

RealField probability_current(const ComplexField& psi, double lambda, const PhysParams& p) {
  const ComplexField psi_x = spectral_derivative(psi, 1);
  RealField q(psi.grid());
  const double factor = 2.0 * p.b * lambda / p.a;
  for (int j = 0; j < q.size(); ++j) {
    q[j] = factor * std::imag(std::conj(psi[j]) * psi_x[j]);
  }
  return q;
}

double duality_gap(const StrainState& s, const ComplexField& psi, double lambda,
                   const PhysParams& p) {
  require_same_grid(s.gamma.grid(), psi.grid());
  const RealField e = energy_density(s, p);
  const RealField rho = probability_density(psi, lambda);
  double gap = 0.0;
  for (int j = 0; j < rho.size(); ++j) {
    gap = std::max(gap, std::abs(rho[j] - (2.0 * lambda) * e[j]));
  }
  return gap;
}

RealField balance_residual(const StrainTrajectory& trajectory, double t, double dt_fd,
                           BalanceLaw which, const PhysParams& p, std::optional<double> lambda) {
  if (!(dt_fd > 0.0)) throw std::invalid_argument("dt_fd must be positive");
  const StrainState ahead = trajectory(t + dt_fd);
  const StrainState behind = trajectory(t - dt_fd);
  const StrainState now = trajectory(t);

  RealField density_ahead(ahead.gamma.grid());
  RealField density_behind(behind.gamma.grid());
  RealField flux(now.gamma.grid());
  if (which == BalanceLaw::energy) {
    density_ahead = energy_density(ahead, p);
    density_behind = energy_density(behind, p);
    flux = energy_flux(now, p);
  } else {
    const ComplexField psi_now = wavefunction_from_state(now, p);
    const double lam = lambda ? *lambda : normalization_constant(psi_now);
    density_ahead = probability_density(wavefunction_from_state(ahead, p), lam);
    density_behind = probability_density(wavefunction_from_state(behind, p), lam);
    flux = probability_current(psi_now, lam, p);
  }

  const RealField flux_x = spectral_derivative(flux, 1);
  RealField residual(flux_x.grid());
  const double inv_2dt = 1.0 / (2.0 * dt_fd);
  for (int j = 0; j < residual.size(); ++j) {
    residual[j] = (density_ahead[j] - density_behind[j]) * inv_2dt + flux_x[j];
  }
  return residual;
}

StrainTrajectory make_beam_trajectory(const BeamState& s0, const PhysParams& p) {
  return [s0, p](double t) { return strain_velocity(propagate_beam(s0, t, p)); };
}

double default_balance_step(const Grid& grid, const PhysParams& p) {
  const double dx = grid.dx();
  return 1e-4 * (p.a / p.b) * dx * dx;
}

}  // namespace beamwave
