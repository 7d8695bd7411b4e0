#pragma once

#include "beamwave/fields.hpp"
#include "beamwave/propagators.hpp"

namespace beamwave {

// Strain-velocity pair (gamma, v) = (u'', du/dt) of a real beam solution.
// The displacement itself is not recoverable from this pair: the rigid-motion
// content (mean displacement and its drift) is deliberately dropped.
struct StrainState {
  RealField gamma;
  RealField v;
};

// The pair of first-order solutions whose sum reconstructs the displacement.
// For real beam data psi_minus is the pointwise conjugate of psi_plus.
struct ConjugatePair {
  ComplexField psi_plus;
  ComplexField psi_minus;
};

// Beam initial data equivalent to the first-order problem with data psi0:
// u(0) = psi0, du/dt(0) = sign * (i b / a) * psi0''. The resulting beam
// evolution coincides with propagate_schrodinger(psi0, t, p, sign) for all t.
ComplexBeamState beam_ic_from_wavefunction(const ComplexField& psi0, BranchSign sign,
                                           const PhysParams& p);

// Splits beam initial data into the conjugate pair of first-order data:
//   psi_pm0'' = (-+ i a v0 + b u0'') / (2 b),
// double-antidifferentiated with the zero-mean convention for both constants.
// v0 must have (numerically) zero mean; throws NonZeroMeanError otherwise.
ConjugatePair split_initial_data(const ComplexBeamState& s0, const PhysParams& p);
ConjugatePair split_initial_data(const BeamState& s0, const PhysParams& p);

// Evolves both members: psi_plus under the plus branch, psi_minus under the
// conjugate (minus) branch.
ConjugatePair propagate_pair(const ConjugatePair& pair0, double t, const PhysParams& p);

// u = psi_plus + psi_minus. Real (up to round-off) for real beam data.
ComplexField superpose(const ConjugatePair& pair);

// Recovers the real beam state from the plus member alone:
// u = 2 Re psi_plus, v = -(2 b / a) Im psi_plus''.
BeamState real_state_from_psi_plus(const ComplexField& psi_plus, const PhysParams& p);

// The bijection between real beam solutions and wave functions:
//   psi = b gamma - i a v,  gamma = Re psi / b,  v = -Im psi / a.
ComplexField wavefunction_from_state(const StrainState& s, const PhysParams& p);
StrainState state_from_wavefunction(const ComplexField& psi, const PhysParams& p);

// gamma = u'' (spectral), v passed through.
StrainState strain_velocity(const BeamState& s);

}  // namespace beamwave
