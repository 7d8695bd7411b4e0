#include "beamwave/duality.hpp"

#include <utility>

#include "beamwave/spectral.hpp"

namespace beamwave {

ComplexBeamState beam_ic_from_wavefunction(const ComplexField& psi0, BranchSign sign,
                                           const PhysParams& p) {
  const Complex factor = sign_of(sign) * Complex(0.0, p.b / p.a);
  ComplexField v0 = factor * spectral_derivative(psi0, 2);
  return ComplexBeamState{psi0, std::move(v0)};
}

ConjugatePair split_initial_data(const ComplexBeamState& s0, const PhysParams& p) {
  require_same_grid(s0.u.grid(), s0.v.grid());
  const ComplexField u_xx = spectral_derivative(s0.u, 2);
  const Grid& grid = s0.u.grid();
  ComplexField rhs_plus(grid);
  ComplexField rhs_minus(grid);
  const double half_a_over_b = p.a / (2.0 * p.b);
  for (int j = 0; j < grid.size(); ++j) {
    const Complex i_a_v = Complex(0.0, half_a_over_b) * s0.v[j];
    const Complex b_uxx = 0.5 * u_xx[j];
    rhs_plus[j] = b_uxx - i_a_v;
    rhs_minus[j] = b_uxx + i_a_v;
  }
  return ConjugatePair{spectral_double_antiderivative(rhs_plus),
                       spectral_double_antiderivative(rhs_minus)};
}

ConjugatePair split_initial_data(const BeamState& s0, const PhysParams& p) {
  return split_initial_data(ComplexBeamState{to_complex(s0.u), to_complex(s0.v)}, p);
}

ConjugatePair propagate_pair(const ConjugatePair& pair0, double t, const PhysParams& p) {
  return ConjugatePair{propagate_schrodinger(pair0.psi_plus, t, p, BranchSign::plus),
                       propagate_schrodinger(pair0.psi_minus, t, p, BranchSign::minus)};
}

ComplexField superpose(const ConjugatePair& pair) {
  return pair.psi_plus + pair.psi_minus;
}

BeamState real_state_from_psi_plus(const ComplexField& psi_plus, const PhysParams& p) {
  const ComplexField psi_xx = spectral_derivative(psi_plus, 2);
  const Grid& grid = psi_plus.grid();
  RealField u(grid);
  RealField v(grid);
  const double factor = -2.0 * p.b / p.a;
  for (int j = 0; j < grid.size(); ++j) {
    u[j] = 2.0 * psi_plus[j].real();
    v[j] = factor * psi_xx[j].imag();
  }
  return BeamState{std::move(u), std::move(v)};
}

ComplexField wavefunction_from_state(const StrainState& s, const PhysParams& p) {
  require_same_grid(s.gamma.grid(), s.v.grid());
  ComplexField psi(s.gamma.grid());
  for (int j = 0; j < psi.size(); ++j) {
    psi[j] = Complex(p.b * s.gamma[j], -(p.a * s.v[j]));
  }
  return psi;
}

StrainState state_from_wavefunction(const ComplexField& psi, const PhysParams& p) {
  RealField gamma(psi.grid());
  RealField v(psi.grid());
  for (int j = 0; j < psi.size(); ++j) {
    gamma[j] = psi[j].real() / p.b;
    v[j] = -psi[j].imag() / p.a;
  }
  return StrainState{std::move(gamma), std::move(v)};
}

StrainState strain_velocity(const BeamState& s) {
  require_same_grid(s.u.grid(), s.v.grid());
  return StrainState{spectral_derivative(s.u, 2), s.v};
}

}  // namespace beamwave
