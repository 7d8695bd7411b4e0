#include "beamwave/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace beamwave {

Grid::Grid(double length, int num_points) : length_(length), num_points_(num_points) {
  if (!(length > 0.0)) {
    throw std::invalid_argument("grid length must be positive, got " + std::to_string(length));
  }
  if (num_points < 4) {
    throw std::invalid_argument("grid needs at least 4 points, got " + std::to_string(num_points));
  }
  if (num_points % 2 != 0) {
    throw std::invalid_argument("grid size must be even, got " + std::to_string(num_points));
  }
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(static_cast<std::size_t>(num_points_));
  for (int j = 0; j < num_points_; ++j) xs[static_cast<std::size_t>(j)] = point(j);
  return xs;
}

double Grid::wavenumber(int bin) const {
  const int n = bin < num_points_ / 2 ? bin : bin - num_points_;
  return 2.0 * std::numbers::pi * n / length_;
}

std::vector<double> Grid::wavenumbers() const {
  std::vector<double> ks(static_cast<std::size_t>(num_points_));
  for (int j = 0; j < num_points_; ++j) ks[static_cast<std::size_t>(j)] = wavenumber(j);
  return ks;
}

double Grid::minimal_image(double dx) const {
  const double wrapped = std::remainder(dx, length_);
  // std::remainder lands in [-L/2, L/2]; fold the closed upper endpoint.
  return wrapped == length_ / 2.0 ? -wrapped : wrapped;
}

Grid make_grid(double length, int num_points) { return Grid(length, num_points); }

}  // namespace beamwave
