#include "phasespace/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phasespace/error.hpp"

namespace phasespace {
namespace {

double edge_ratio(std::span<const cplx> amp) {
  double peak = 0.0;
  for (const auto& a : amp) peak = std::max(peak, std::abs(a));
  if (peak == 0.0) return 0.0;
  return std::max(std::abs(amp.front()), std::abs(amp.back())) / peak;
}

}  // namespace

void check_envelope(const WaveFunction& psi, const char* what) {
  const WaveFunction pos = in_basis(psi, Basis::Position);
  const WaveFunction mom = in_basis(psi, Basis::Momentum);
  const double rx = edge_ratio(pos.amp());
  const double rp = edge_ratio(mom.amp());
  if (rx > kEnvelopeTolerance || rp > kEnvelopeTolerance) {
    throw Error(module_name::kCore,
                std::string(what) + " does not fit the grid (relative edge amplitude " +
                    std::to_string(std::max(rx, rp)) + " in the " +
                    (rx > kEnvelopeTolerance ? "position" : "momentum") + " lattice)");
  }
}

WaveFunction coherent_state(const Grid& grid, double x0, double p0, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(module_name::kCore, "coherent state width delta must be positive");
  }
  const double prefactor = std::pow(delta * std::numbers::pi, -0.25);
  std::vector<cplx> amp(grid.n());
  for (std::size_t k = 0; k < grid.n(); ++k) {
    const double x = grid.x(k);
    const double d = x - x0;
    amp[k] = prefactor * std::exp(-d * d / (2.0 * delta)) * std::polar(1.0, x * p0);
  }
  auto psi = WaveFunction::normalized(grid, Basis::Position, std::move(amp));
  check_envelope(psi, "coherent state");
  return psi;
}

WaveFunction fock_state(const Grid& grid, std::size_t m) {
  if (m > kMaxFockIndex) {
    throw Error(module_name::kCore, "Fock index " + std::to_string(m) + " exceeds the supported maximum " +
                                        std::to_string(kMaxFockIndex));
  }
  std::vector<cplx> amp(grid.n());
  const double norm0 = std::pow(std::numbers::pi, -0.25);
  for (std::size_t k = 0; k < grid.n(); ++k) {
    const double x = grid.x(k);
    // Normalized Hermite functions: phi_{j+1} = sqrt(2/(j+1)) x phi_j - sqrt(j/(j+1)) phi_{j-1}.
    double prev = 0.0;
    double cur = norm0 * std::exp(-0.5 * x * x);
    for (std::size_t j = 0; j < m; ++j) {
      const double jd = static_cast<double>(j);
      const double next = std::sqrt(2.0 / (jd + 1.0)) * x * cur - std::sqrt(jd / (jd + 1.0)) * prev;
      prev = cur;
      cur = next;
    }
    amp[k] = cur;
  }
  auto psi = WaveFunction::normalized(grid, Basis::Position, std::move(amp));
  check_envelope(psi, ("Fock state " + std::to_string(m)).c_str());
  return psi;
}

WaveFunction vacuum(const Grid& grid) { return fock_state(grid, 0); }

WaveFunction superpose(cplx a, const WaveFunction& psi1, cplx b, const WaveFunction& psi2) {
  if (!(psi1.grid() == psi2.grid()) || psi1.basis() != psi2.basis()) {
    throw Error(module_name::kCore, "superpose requires states on the same grid and basis");
  }
  std::vector<cplx> amp(psi1.size());
  double norm2 = 0.0;
  for (std::size_t k = 0; k < amp.size(); ++k) {
    amp[k] = a * psi1[k] + b * psi2[k];
    norm2 += std::norm(amp[k]);
  }
  norm2 *= psi1.spacing();
  if (norm2 < 1e-20) throw Error(module_name::kCore, "superposition is the zero vector");
  return WaveFunction::normalized(psi1.grid(), psi1.basis(), std::move(amp));
}

WaveFunction cat_state(const Grid& grid, double x0, double delta) {
  return superpose(1.0, coherent_state(grid, -x0, 0.0, delta), 1.0, coherent_state(grid, x0, 0.0, delta));
}

}  // namespace phasespace
