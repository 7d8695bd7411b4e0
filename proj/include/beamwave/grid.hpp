#pragma once

#include <vector>

namespace beamwave {

// Uniform periodic grid on [0, L): x_j = j*L/N, j = 0..N-1. The endpoint x = L
// is identified with x = 0. Wavenumbers are k_n = 2*pi*n/L for
// n in {-N/2, ..., N/2 - 1}, stored in FFT bin order (bin j holds n = j for
// j < N/2 and n = j - N otherwise; bin N/2 is the Nyquist mode n = -N/2).
class Grid {
 public:
  Grid(double length, int num_points);

  double length() const { return length_; }
  int size() const { return num_points_; }
  double dx() const { return length_ / num_points_; }

  double point(int j) const { return j * dx(); }
  std::vector<double> points() const;

  // Signed wavenumber of FFT bin j (0 <= j < N).
  double wavenumber(int bin) const;
  std::vector<double> wavenumbers() const;

  // Smallest signed distance from x to y on the circle, in [-L/2, L/2).
  double minimal_image(double dx) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.length_ == b.length_ && a.num_points_ == b.num_points_;
  }
  friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

 private:
  double length_;
  int num_points_;
};

Grid make_grid(double length, int num_points);

}  // namespace beamwave
