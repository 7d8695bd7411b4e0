#include "beamwave/propagators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "beamwave/spectral.hpp"

namespace beamwave {

namespace {

// One harmonic-oscillator rotation of the modal pair (uhat, vhat).
// n = 0 has omega = 0 exactly and integrates to a linear drift.
void rotate_modes(std::vector<Complex>& u_modes, std::vector<Complex>& v_modes, const Grid& grid,
                  double t, const PhysParams& p) {
  for (std::size_t j = 0; j < u_modes.size(); ++j) {
    const double omega = dispersion_beam(grid.wavenumber(static_cast<int>(j)), p);
    if (omega == 0.0) {
      u_modes[j] += t * v_modes[j];
      continue;
    }
    const double c = std::cos(omega * t);
    const double s = std::sin(omega * t);
    const Complex u_new = u_modes[j] * c + v_modes[j] * (s / omega);
    const Complex v_new = -u_modes[j] * (omega * s) + v_modes[j] * c;
    u_modes[j] = u_new;
    v_modes[j] = v_new;
  }
}

}  // namespace

ModeSymbols mode_symbols(double k, const PhysParams& p) {
  return ModeSymbols{k, dispersion_schrodinger(k, p), dispersion_beam(k, p)};
}

double dispersion_schrodinger(double k, const PhysParams& p) { return (p.b / p.a) * (k * k); }

// The factorization makes the beam frequency equal the Schrodinger one mode
// for mode; sharing the arithmetic keeps the two propagators phase-locked to
// the last bit, which the cross-formulation checks rely on at large omega*t.
double dispersion_beam(double k, const PhysParams& p) { return dispersion_schrodinger(k, p); }

Complex factorization_residual(double k, double omega, const PhysParams& p) {
  const Complex symbol_plus = p.a * omega - p.b * k * k;
  const Complex symbol_minus = -p.a * omega - p.b * k * k;
  const Complex symbol_beam = -(p.a * p.a) * (omega * omega) + (p.b * p.b) * (k * k * k * k);
  return symbol_plus * symbol_minus - symbol_beam;
}

ComplexField propagate_schrodinger(const ComplexField& psi0, double t, const PhysParams& p,
                                   BranchSign branch) {
  std::vector<Complex> modes = modal_coefficients(psi0);
  const double branch_sign = sign_of(branch);
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const double omega = dispersion_schrodinger(psi0.grid().wavenumber(static_cast<int>(j)), p);
    const double phase = -branch_sign * omega * t;
    modes[j] *= Complex(std::cos(phase), std::sin(phase));
  }
  return field_from_modes(psi0.grid(), modes);
}

BeamState propagate_beam(const BeamState& s0, double t, const PhysParams& p) {
  require_same_grid(s0.u.grid(), s0.v.grid());
  const Grid& grid = s0.u.grid();
  std::vector<Complex> u_modes = modal_coefficients(s0.u);
  std::vector<Complex> v_modes = modal_coefficients(s0.v);
  // Bounds on what the rotation can make of analysis round-off, for the
  // real-synthesis symmetry check: |sin(wt)/w| <= |t| and |w sin(wt)| <= w_max.
  double max_u = 0.0;
  double max_v = 0.0;
  for (std::size_t j = 0; j < u_modes.size(); ++j) {
    max_u = std::max(max_u, std::abs(u_modes[j]));
    max_v = std::max(max_v, std::abs(v_modes[j]));
  }
  const double omega_max = dispersion_beam(grid.wavenumber(grid.size() / 2), p);
  const double scale_u = max_u + std::abs(t) * max_v;
  const double scale_v = omega_max * max_u + max_v;
  rotate_modes(u_modes, v_modes, grid, t, p);
  return BeamState{real_field_from_modes(grid, u_modes, scale_u),
                   real_field_from_modes(grid, v_modes, scale_v)};
}

ComplexBeamState propagate_beam(const ComplexBeamState& s0, double t, const PhysParams& p) {
  require_same_grid(s0.u.grid(), s0.v.grid());
  std::vector<Complex> u_modes = modal_coefficients(s0.u);
  std::vector<Complex> v_modes = modal_coefficients(s0.v);
  rotate_modes(u_modes, v_modes, s0.u.grid(), t, p);
  return ComplexBeamState{field_from_modes(s0.u.grid(), u_modes),
                          field_from_modes(s0.v.grid(), v_modes)};
}

}  // namespace beamwave
