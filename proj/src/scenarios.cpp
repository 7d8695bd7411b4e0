#include "beamwave/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "beamwave/spectral.hpp"

namespace beamwave {

namespace {

// Box-Muller over explicit uniforms: unlike std::normal_distribution the
// sample sequence is fully specified, so seeded fields are portable.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform_(engine_);
    } while (u1 <= 0.0);
    const double u2 = uniform_(engine_);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  Complex next_complex() {
    const double re = next();
    const double im = next();
    return Complex(re, im) / std::sqrt(2.0);
  }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Conjugate-symmetric spectrum, band-limited to |n| <= cutoff.
std::vector<Complex> random_spectrum(GaussianSource& gauss, const Grid& grid, int cutoff,
                                     bool zero_mean) {
  const int n = grid.size();
  std::vector<Complex> modes(static_cast<std::size_t>(n), Complex{});
  modes[0] = zero_mean ? Complex{} : Complex(gauss.next(), 0.0);
  for (int j = 1; j <= cutoff; ++j) {
    const Complex amp = gauss.next_complex();
    modes[static_cast<std::size_t>(j)] = amp;
    modes[static_cast<std::size_t>(n - j)] = std::conj(amp);
  }
  return modes;
}

void remove_mean(RealField& f) {
  long double sum = 0.0L;
  for (double v : f.values()) sum += v;
  const double mean = static_cast<double>(sum / f.size());
  for (double& v : f.values()) v -= mean;
}

}  // namespace

ComplexField gaussian_packet(const PacketSpec& spec, const Grid& grid) {
  if (!(spec.s0 > 0.0)) throw std::invalid_argument("packet width s0 must be positive");
  if (12.0 * spec.s0 > grid.length()) {
    throw PacketTooWideError("packet support 12*s0 = " + std::to_string(12.0 * spec.s0) +
                             " exceeds box length " + std::to_string(grid.length()));
  }
  const double inv_4s2 = 1.0 / (4.0 * spec.s0 * spec.s0);
  return ComplexField::sample(grid, [&](double x) {
    const double d = grid.minimal_image(x - spec.x0);
    const double envelope = std::exp(-d * d * inv_4s2);
    const double phase = spec.k0 * (spec.x0 + d);
    return envelope * Complex(std::cos(phase), std::sin(phase));
  });
}

double packet_width(const RealField& rho) {
  const double mass = integrate(rho);
  if (std::abs(mass - 1.0) > 1e-6) throw NotNormalizedError(mass);

  const Grid& grid = rho.grid();
  int peak = 0;
  for (int j = 1; j < rho.size(); ++j) {
    if (rho[j] > rho[peak]) peak = j;
  }
  const double center = grid.point(peak);

  const double w = grid.length() / rho.size();
  double mean_offset = 0.0;
  for (int j = 0; j < rho.size(); ++j) {
    mean_offset += grid.minimal_image(grid.point(j) - center) * rho[j] * w;
  }
  double variance = 0.0;
  for (int j = 0; j < rho.size(); ++j) {
    const double d = grid.minimal_image(grid.point(j) - center) - mean_offset;
    variance += d * d * rho[j] * w;
  }
  return std::sqrt(variance);
}

double packet_width_law(double s0, double t, const PhysParams& p) {
  const double spread = p.b * t / (p.a * s0 * s0);
  return s0 * std::sqrt(1.0 + spread * spread);
}

BeamState random_band_limited(std::uint64_t seed, double kmax_fraction, const Grid& grid,
                              bool zero_mean_v) {
  if (!(kmax_fraction > 0.0) || kmax_fraction > 0.5) {
    throw std::invalid_argument("kmax_fraction must lie in (0, 0.5]");
  }
  const int cutoff = static_cast<int>(kmax_fraction * (grid.size() / 2));
  GaussianSource gauss(seed);
  RealField u = real_field_from_modes(grid, random_spectrum(gauss, grid, cutoff, false));
  RealField v = real_field_from_modes(grid, random_spectrum(gauss, grid, cutoff, zero_mean_v));
  if (zero_mean_v) remove_mean(v);
  return BeamState{std::move(u), std::move(v)};
}

}  // namespace beamwave
