#pragma once

#include <cstdint>

#include "beamwave/fields.hpp"
#include "beamwave/propagators.hpp"

namespace beamwave {

// Free Gaussian wave packet: center x0, initial density standard deviation s0
// (of |psi|^2, not of psi), carrier wavenumber k0.
struct PacketSpec {
  double x0 = 0.0;
  double s0 = 1.0;
  double k0 = 0.0;
};

// psi0(x) = exp(-d^2 / (4 s0^2) + i k0 (x0 + d)) with d the minimal-image
// distance from x0. Throws PacketTooWideError unless the +-6 s0 support fits
// inside the box.
ComplexField gaussian_packet(const PacketSpec& spec, const Grid& grid);

// Density standard deviation sqrt(int (x - xbar)^2 rho dx), with moments taken
// in minimal-image coordinates around the density maximum. Requires
// int rho dx = 1 within 1e-6 and throws NotNormalizedError otherwise.
double packet_width(const RealField& rho);

// Analytic free-packet spreading law s(t) = s0 sqrt(1 + (b t / (a s0^2))^2).
double packet_width_law(double s0, double t, const PhysParams& p);

// Deterministic band-limited random beam data: per-mode amplitudes are
// unit-variance complex Gaussians (Box-Muller over mt19937_64, so the output
// is reproducible bit-for-bit for a given seed) with conjugate symmetry;
// every mode with |n| > kmax_fraction * (N/2) is zero. With zero_mean_v the
// velocity field has its mean removed.
BeamState random_band_limited(std::uint64_t seed, double kmax_fraction, const Grid& grid,
                              bool zero_mean_v);

}  // namespace beamwave
