#pragma once

#include <stdexcept>
#include <string>

namespace beamwave {

// Raised when a periodic antiderivative is requested for an integrand whose
// mean (n = 0 Fourier mode) is not negligible.
class NonZeroMeanError : public std::runtime_error {
 public:
  explicit NonZeroMeanError(double mean_magnitude, double threshold)
      : std::runtime_error("integrand mean mode |f0| = " + std::to_string(mean_magnitude) +
                           " exceeds zero-mean threshold " + std::to_string(threshold)),
        mean_magnitude_(mean_magnitude) {}

  double mean_magnitude() const { return mean_magnitude_; }

 private:
  double mean_magnitude_;
};

// Raised when normalizing an (effectively) identically zero wave function.
class ZeroWaveFunctionError : public std::runtime_error {
 public:
  ZeroWaveFunctionError() : std::runtime_error("wave function has vanishing L2 norm") {}
};

// Raised when a Gaussian packet does not fit inside the periodic box.
class PacketTooWideError : public std::runtime_error {
 public:
  explicit PacketTooWideError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a density handed to a moment computation does not integrate to one.
class NotNormalizedError : public std::runtime_error {
 public:
  explicit NotNormalizedError(double mass)
      : std::runtime_error("density mass " + std::to_string(mass) + " is not 1 within 1e-6") {}
};

// Raised when two fields that must share a grid do not.
class GridMismatchError : public std::invalid_argument {
 public:
  GridMismatchError() : std::invalid_argument("fields live on different grids") {}
};

}  // namespace beamwave
