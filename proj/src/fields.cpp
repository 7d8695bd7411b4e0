#include "beamwave/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace beamwave {

namespace {

// Compensated (Kahan) sums keep quadrature and mean-removal round-off at the
// level of a single rounding of the result.
double kahan_sum(std::span<const double> xs) {
  double sum = 0.0, c = 0.0;
  for (double x : xs) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

Complex kahan_sum(std::span<const Complex> xs) {
  double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
  for (const Complex& x : xs) {
    double y = x.real() - cr;
    double t = sr + y;
    cr = (t - sr) - y;
    sr = t;
    y = x.imag() - ci;
    t = si + y;
    ci = (t - si) - y;
    si = t;
  }
  return {sr, si};
}

}  // namespace

RealField::RealField(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(grid.size())) {
    throw std::invalid_argument("field value count does not match grid size");
  }
}

ComplexField::ComplexField(const Grid& grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(grid.size())) {
    throw std::invalid_argument("field value count does not match grid size");
  }
}

PhysParams::PhysParams(double a_, double b_) : a(a_), b(b_) {
  if (!(a > 0.0)) throw std::invalid_argument("parameter a must be positive");
  if (!(b > 0.0)) throw std::invalid_argument("parameter b must be positive");
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (a != b) throw GridMismatchError();
}

double integrate(const RealField& f) {
  return f.grid().length() * (kahan_sum(f.values()) / f.size());
}

Complex integrate(const ComplexField& f) {
  return f.grid().length() * (kahan_sum(f.values()) / static_cast<double>(f.size()));
}

double max_abs(const RealField& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const ComplexField& f) {
  double m = 0.0;
  for (const Complex& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

ComplexField to_complex(const RealField& f) {
  ComplexField g(f.grid());
  for (int j = 0; j < f.size(); ++j) g[j] = Complex(f[j], 0.0);
  return g;
}

RealField real_part(const ComplexField& f) {
  RealField g(f.grid());
  for (int j = 0; j < f.size(); ++j) g[j] = f[j].real();
  return g;
}

RealField imag_part(const ComplexField& f) {
  RealField g(f.grid());
  for (int j = 0; j < f.size(); ++j) g[j] = f[j].imag();
  return g;
}

ComplexField conj(const ComplexField& f) {
  ComplexField g(f.grid());
  for (int j = 0; j < f.size(); ++j) g[j] = std::conj(f[j]);
  return g;
}

RealField abs_squared(const ComplexField& f) {
  RealField g(f.grid());
  for (int j = 0; j < f.size(); ++j) {
    const double re = f[j].real(), im = f[j].imag();
    g[j] = re * re + im * im;
  }
  return g;
}

RealField operator+(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid());
  RealField r(a.grid());
  for (int j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  return r;
}

RealField operator-(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid());
  RealField r(a.grid());
  for (int j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
  return r;
}

RealField operator*(double s, const RealField& f) {
  RealField r(f.grid());
  for (int j = 0; j < f.size(); ++j) r[j] = s * f[j];
  return r;
}

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.grid(), b.grid());
  ComplexField r(a.grid());
  for (int j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
  return r;
}

ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.grid(), b.grid());
  ComplexField r(a.grid());
  for (int j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
  return r;
}

ComplexField operator*(Complex s, const ComplexField& f) {
  ComplexField r(f.grid());
  for (int j = 0; j < f.size(); ++j) r[j] = s * f[j];
  return r;
}

}  // namespace beamwave
