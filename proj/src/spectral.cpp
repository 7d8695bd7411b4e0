#include "beamwave/spectral.hpp"

#include <fftw3.h>

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace beamwave {

namespace {

std::atomic<std::uint64_t> g_fft_calls{0};

// FFTW plan creation is not thread-safe; execution via the new-array API is.
// One unaligned in-place plan per (N, direction) serves every buffer.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  void execute(std::vector<Complex>& data, int direction) {
    fftw_plan plan = get_plan(static_cast<int>(data.size()), direction);
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, raw, raw);
    g_fft_calls.fetch_add(1, std::memory_order_relaxed);
  }

 private:
  fftw_plan get_plan(int n, int direction) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, direction);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<Complex> scratch(static_cast<std::size_t>(n));
    auto* raw = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(n, raw, raw, direction, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw std::runtime_error("fftw plan creation failed");
    plans_.emplace(key, plan);
    return plan;
  }

  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

std::vector<Complex> forward(const std::vector<Complex>& values) {
  std::vector<Complex> modes = values;
  PlanCache::instance().execute(modes, FFTW_FORWARD);
  const double inv_n = 1.0 / static_cast<double>(values.size());
  for (Complex& m : modes) m *= inv_n;
  return modes;
}

std::vector<Complex> backward(std::vector<Complex> modes) {
  PlanCache::instance().execute(modes, FFTW_BACKWARD);
  return modes;
}

double max_mode_abs(const std::vector<Complex>& modes) {
  double m = 0.0;
  for (const Complex& c : modes) m = std::max(m, std::abs(c));
  return m;
}

// Multiplier table for (i k)^order with the odd-order Nyquist zeroed.
std::vector<Complex> derivative_multipliers(const Grid& grid, int order) {
  if (order < 1 || order > 4) {
    throw std::invalid_argument("derivative order must be in {1, 2, 3, 4}");
  }
  const int n = grid.size();
  std::vector<Complex> mult(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double k = grid.wavenumber(j);
    Complex m = 1.0;
    const Complex ik(0.0, k);
    for (int p = 0; p < order; ++p) m *= ik;
    if (order % 2 == 1 && j == n / 2) m = 0.0;
    mult[static_cast<std::size_t>(j)] = m;
  }
  return mult;
}

}  // namespace

std::vector<Complex> modal_coefficients(const ComplexField& f) {
  return forward(std::vector<Complex>(f.values().begin(), f.values().end()));
}

std::vector<Complex> modal_coefficients(const RealField& f) {
  std::vector<Complex> values(static_cast<std::size_t>(f.size()));
  for (int j = 0; j < f.size(); ++j) values[static_cast<std::size_t>(j)] = Complex(f[j], 0.0);
  return forward(values);
}

ComplexField field_from_modes(const Grid& grid, const std::vector<Complex>& modes) {
  if (modes.size() != static_cast<std::size_t>(grid.size())) {
    throw std::invalid_argument("mode count does not match grid size");
  }
  return ComplexField(grid, backward(modes));
}

RealField real_field_from_modes(const Grid& grid, const std::vector<Complex>& modes,
                                double residue_scale) {
  const ComplexField synth = field_from_modes(grid, modes);
  // N * scale bounds the synthesized amplitude; round-off residue sits orders
  // of magnitude below 1e-13 of it, a symmetry bug orders above.
  const double scale = residue_scale >= 0.0 ? residue_scale : max_mode_abs(modes);
  const double tol = 1e-13 * static_cast<double>(grid.size()) * scale;
  RealField out(grid);
  double residue = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    residue = std::max(residue, std::abs(synth[j].imag()));
    out[j] = synth[j].real();
  }
  if (residue > tol) {
    throw std::runtime_error("spectrum is not conjugate-symmetric: imaginary residue " +
                             std::to_string(residue) + " exceeds " + std::to_string(tol));
  }
  return out;
}

RealField spectral_derivative(const RealField& f, int order) {
  std::vector<Complex> modes = modal_coefficients(f);
  const std::vector<Complex> mult = derivative_multipliers(f.grid(), order);
  // Analysis round-off in any bin is bounded by eps-of-max|fhat| and gets
  // multiplied by at most max|mult|, so the symmetry check must allow that
  // much imaginary residue even when the populated bins stay low-order.
  const double residue_scale = max_mode_abs(modes) * max_mode_abs(mult);
  for (std::size_t j = 0; j < modes.size(); ++j) modes[j] *= mult[j];
  return real_field_from_modes(f.grid(), modes, residue_scale);
}

ComplexField spectral_derivative(const ComplexField& f, int order) {
  std::vector<Complex> modes = modal_coefficients(f);
  const std::vector<Complex> mult = derivative_multipliers(f.grid(), order);
  for (std::size_t j = 0; j < modes.size(); ++j) modes[j] *= mult[j];
  return field_from_modes(f.grid(), modes);
}

ComplexField spectral_double_antiderivative(const ComplexField& f) {
  std::vector<Complex> modes = modal_coefficients(f);
  const double mean_mag = std::abs(modes[0]);
  const double threshold = kZeroMeanTolerance * max_mode_abs(modes);
  if (mean_mag > threshold) throw NonZeroMeanError(mean_mag, threshold);
  modes[0] = 0.0;
  for (int j = 1; j < f.size(); ++j) {
    const double k = f.grid().wavenumber(j);
    modes[static_cast<std::size_t>(j)] /= -(k * k);
  }
  return field_from_modes(f.grid(), modes);
}

std::uint64_t fft_call_count() { return g_fft_calls.load(std::memory_order_relaxed); }

void reset_fft_call_count() { g_fft_calls.store(0, std::memory_order_relaxed); }

}  // namespace beamwave
