#pragma once

#include <cstddef>
#include <vector>

namespace phasespace {

/// Uniform position lattice x_k = x_min + k*dx (k = 0..n-1) together with its
/// Fourier-conjugate momentum lattice p_j = (j - n/2)*dp, dp = 2*pi/(n*dx).
/// The momentum lattice is stored in increasing order and spans
/// [-pi/dx, pi/dx).
class Grid {
 public:
  std::size_t n() const noexcept { return n_; }
  double x_min() const noexcept { return x_min_; }
  double dx() const noexcept { return dx_; }
  double dp() const noexcept { return dp_; }

  /// Right edge of the domain, x_min + n*dx (one step past the last point).
  double x_max() const noexcept { return x_min_ + static_cast<double>(n_) * dx_; }
  double x_last() const noexcept { return x(n_ - 1); }
  double p_min() const noexcept { return p(0); }
  double p_last() const noexcept { return p(n_ - 1); }

  double x(std::size_t k) const noexcept { return x_min_ + static_cast<double>(k) * dx_; }
  double p(std::size_t j) const noexcept {
    return (static_cast<double>(j) - static_cast<double>(n_ / 2)) * dp_;
  }

  std::vector<double> x_axis() const;
  std::vector<double> p_axis() const;

  /// Index of the lattice point nearest to x (clamped to the lattice).
  std::size_t nearest_x(double x) const noexcept;
  std::size_t nearest_p(double p) const noexcept;

  bool operator==(const Grid& other) const noexcept = default;

 private:
  Grid(std::size_t n, double x_min, double dx);

  friend Grid make_grid(std::size_t n, double x_min, double x_max);
  friend Grid make_grid_with_spacing(std::size_t n, double x_min, double dx);

  std::size_t n_;
  double x_min_;
  double dx_;
  double dp_;
};

/// n points spanning [x_min, x_max): dx = (x_max - x_min)/n. Rejects n that is
/// not a power of two >= 16 and domains that do not contain the origin.
Grid make_grid(std::size_t n, double x_min, double x_max);

/// Same lattice, described by its spacing. Used when reading serialized grids.
Grid make_grid_with_spacing(std::size_t n, double x_min, double dx);

/// n = 256 over [-16, 16].
Grid default_grid();

bool is_power_of_two(std::size_t n) noexcept;

}  // namespace phasespace
