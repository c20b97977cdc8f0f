#include "phasespace/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phasespace/error.hpp"

namespace phasespace {

bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

Grid::Grid(std::size_t n, double x_min, double dx)
    : n_(n), x_min_(x_min), dx_(dx), dp_(2.0 * std::numbers::pi / (static_cast<double>(n) * dx)) {}

Grid make_grid_with_spacing(std::size_t n, double x_min, double dx) {
  if (!is_power_of_two(n) || n < 16) {
    throw Error(module_name::kCore,
                "grid size must be a power of two >= 16, got " + std::to_string(n));
  }
  if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x_min)) {
    throw Error(module_name::kCore, "grid spacing must be finite and positive");
  }
  const double x_max = x_min + static_cast<double>(n) * dx;
  if (!(x_min < 0.0 && 0.0 < x_max)) {
    throw Error(module_name::kCore, "grid domain must contain the origin in its interior");
  }
  return Grid(n, x_min, dx);
}

Grid make_grid(std::size_t n, double x_min, double x_max) {
  if (!(x_min < 0.0 && 0.0 < x_max)) {
    throw Error(module_name::kCore, "grid domain must contain the origin in its interior");
  }
  if (n == 0) {
    throw Error(module_name::kCore, "grid size must be a power of two >= 16, got 0");
  }
  return make_grid_with_spacing(n, x_min, (x_max - x_min) / static_cast<double>(n));
}

Grid default_grid() { return make_grid(256, -16.0, 16.0); }

std::vector<double> Grid::x_axis() const {
  std::vector<double> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = x(k);
  return out;
}

std::vector<double> Grid::p_axis() const {
  std::vector<double> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = p(j);
  return out;
}

namespace {
std::size_t nearest_index(double offset, double step, std::size_t n) noexcept {
  const double r = std::round(offset / step);
  if (!(r > 0.0)) return 0;
  return std::min(static_cast<std::size_t>(r), n - 1);
}
}  // namespace

std::size_t Grid::nearest_x(double value) const noexcept {
  return nearest_index(value - x_min_, dx_, n_);
}

std::size_t Grid::nearest_p(double value) const noexcept {
  return nearest_index(value - p_min(), dp_, n_);
}

}  // namespace phasespace
