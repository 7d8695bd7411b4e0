#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "beamwave/errors.hpp"
#include "beamwave/grid.hpp"

namespace beamwave {

using Complex = std::complex<double>;

// Grid-sampled real-valued function of x at a fixed time.
class RealField {
 public:
  explicit RealField(const Grid& grid)
      : grid_(grid), values_(static_cast<std::size_t>(grid.size()), 0.0) {}
  RealField(const Grid& grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  double operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }
  double& operator[](int j) { return values_[static_cast<std::size_t>(j)]; }

  template <class Fn>
  static RealField sample(const Grid& grid, Fn&& fn) {
    RealField f(grid);
    for (int j = 0; j < grid.size(); ++j) f[j] = fn(grid.point(j));
    return f;
  }

 private:
  Grid grid_;
  std::vector<double> values_;
};

// Grid-sampled complex-valued function of x at a fixed time.
class ComplexField {
 public:
  explicit ComplexField(const Grid& grid)
      : grid_(grid), values_(static_cast<std::size_t>(grid.size()), Complex{}) {}
  ComplexField(const Grid& grid, std::vector<Complex> values);

  const Grid& grid() const { return grid_; }
  int size() const { return grid_.size(); }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }
  Complex operator[](int j) const { return values_[static_cast<std::size_t>(j)]; }
  Complex& operator[](int j) { return values_[static_cast<std::size_t>(j)]; }

  template <class Fn>
  static ComplexField sample(const Grid& grid, Fn&& fn) {
    ComplexField f(grid);
    for (int j = 0; j < grid.size(); ++j) f[j] = fn(grid.point(j));
    return f;
  }

 private:
  Grid grid_;
  std::vector<Complex> values_;
};

// Physical constants of the pair of equations. In the beam reading a^2 is the
// mass per unit length and b^2 the flexural rigidity; in the quantum reading
// a is hbar and b is hbar^2/(2m).
struct PhysParams {
  double a = 1.0;
  double b = 1.0;

  PhysParams() = default;
  PhysParams(double a_, double b_);
};

void require_same_grid(const Grid& a, const Grid& b);

// Quadrature over the periodic box: L * mean(values). Exact (to round-off)
// for integrands band-limited below Nyquist.
double integrate(const RealField& f);
Complex integrate(const ComplexField& f);

double max_abs(const RealField& f);
double max_abs(const ComplexField& f);

// Pointwise helpers shared by the physics modules.
ComplexField to_complex(const RealField& f);
RealField real_part(const ComplexField& f);
RealField imag_part(const ComplexField& f);
ComplexField conj(const ComplexField& f);
RealField abs_squared(const ComplexField& f);

RealField operator+(const RealField& a, const RealField& b);
RealField operator-(const RealField& a, const RealField& b);
RealField operator*(double s, const RealField& f);
ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(Complex s, const ComplexField& f);

}  // namespace beamwave
