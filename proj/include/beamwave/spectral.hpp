#pragma once

#include <cstdint>
#include <vector>

#include "beamwave/fields.hpp"

namespace beamwave {

// Fourier convention, fixed project-wide:
//   f(x_j) = sum_n fhat_n exp(i k_n x_j),  fhat_n = (1/N) sum_j f(x_j) exp(-i k_n x_j),
// with coefficients stored in FFT bin order (see Grid::wavenumber).

// Modal analysis: forward transform carrying the 1/N factor.
std::vector<Complex> modal_coefficients(const ComplexField& f);
std::vector<Complex> modal_coefficients(const RealField& f);

// Modal synthesis (exact inverse of modal_coefficients).
ComplexField field_from_modes(const Grid& grid, const std::vector<Complex>& modes);

// Synthesis that asserts the result is real: the imaginary residue must stay
// below 1e-13 * N * residue_scale. A violation means the spectrum lost
// conjugate symmetry and is reported as a logic error. The scale defaults to
// max|mode| of the given spectrum; operations that amplify analysis round-off
// before synthesizing (derivative multipliers, mode rotations) pass the bound
// on what round-off can legitimately have become instead, since narrow-band
// data leaves max|mode| blind to the amplification of the empty bins.
RealField real_field_from_modes(const Grid& grid, const std::vector<Complex>& modes,
                                double residue_scale = -1.0);

// d^order/dx^order via multiplication by (i k)^order, order in {1,2,3,4}.
// The Nyquist mode is zeroed for odd orders (symmetric treatment of the
// unpaired mode); callers should keep data band-limited below N/2.
RealField spectral_derivative(const RealField& f, int order);
ComplexField spectral_derivative(const ComplexField& f, int order);

// Periodic double antiderivative: ghat_n = -fhat_n / k_n^2 for n != 0 and
// ghat_0 = 0 (the zero-mean convention for both integration constants).
// Requires |fhat_0| <= 1e-10 * max|fhat| and throws NonZeroMeanError otherwise.
ComplexField spectral_double_antiderivative(const ComplexField& f);

inline constexpr double kZeroMeanTolerance = 1e-10;

// Number of complex FFT executions since process start (or last reset).
// Used by the benchmark to report measured per-step operation counts.
std::uint64_t fft_call_count();
void reset_fft_call_count();

}  // namespace beamwave
