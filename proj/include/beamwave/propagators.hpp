#pragma once

#include "beamwave/fields.hpp"

namespace beamwave {

// Beam state (u, v): displacement and particle velocity v = du/dt on one grid.
struct BeamState {
  RealField u;
  RealField v;
};

struct ComplexBeamState {
  ComplexField u;
  ComplexField v;
};

// Plane-wave symbols of one wavenumber: Omega for the first-order equation,
// omega for the beam equation (principal branch, both equal (b/a) k^2).
struct ModeSymbols {
  double k = 0.0;
  double omega_schrodinger = 0.0;
  double omega_beam = 0.0;
};

ModeSymbols mode_symbols(double k, const PhysParams& p);

// Which of the two conjugate first-order equations +-i a df/dt + b f'' = 0
// a quantity obeys: plus propagates modes as exp(-i Omega t), minus as
// exp(+i Omega t).
enum class BranchSign { plus, minus };

inline double sign_of(BranchSign s) { return s == BranchSign::plus ? 1.0 : -1.0; }

// Omega(k) = b k^2 / a, forced by exp(i(kx - Omega t)) in i a f' + b f'' = 0.
double dispersion_schrodinger(double k, const PhysParams& p);

// omega(k) = (b/a) k^2, principal branch of omega^2 = (b/a)^2 k^4.
double dispersion_beam(double k, const PhysParams& p);

// Product of the two first-order symbols minus the beam symbol; identically
// zero (to round-off) for every (k, Omega) since the fourth-order operator
// factors into the conjugate pair.
Complex factorization_residual(double k, double omega, const PhysParams& p);

// Exact-in-time spectral propagation of i a psi' + b psi'' = 0 (branch plus)
// or its conjugate (branch minus); a unitary group, valid for all t.
ComplexField propagate_schrodinger(const ComplexField& psi0, double t, const PhysParams& p,
                                   BranchSign branch = BranchSign::plus);

// Exact-in-time spectral propagation of a^2 u'' + b^2 u'''' = 0 as per-mode
// harmonic oscillators; the k = 0 mode drifts linearly (rigid translation).
BeamState propagate_beam(const BeamState& s0, double t, const PhysParams& p);
ComplexBeamState propagate_beam(const ComplexBeamState& s0, double t, const PhysParams& p);

}  // namespace beamwave
