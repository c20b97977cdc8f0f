#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "phasespace/fft.hpp"
#include "phasespace/grid.hpp"

namespace phasespace {

enum class Basis { Position, Momentum };

std::string_view to_string(Basis basis) noexcept;
Basis basis_from_string(std::string_view name);

/// Pure state sampled on a Grid, tagged with the basis of its amplitudes.
/// Values are immutable; every operation returns a fresh WaveFunction.
class WaveFunction {
 public:
  /// Takes amplitudes as given (no renormalization). Size must equal grid.n().
  WaveFunction(Grid grid, Basis basis, std::vector<cplx> amp);

  /// Builds a state and rescales it to unit quadrature norm. Throws if the
  /// amplitudes have (numerically) zero norm.
  static WaveFunction normalized(Grid grid, Basis basis, std::vector<cplx> amp);

  const Grid& grid() const noexcept { return grid_; }
  Basis basis() const noexcept { return basis_; }
  std::span<const cplx> amp() const noexcept { return amp_; }
  std::size_t size() const noexcept { return amp_.size(); }
  const cplx& operator[](std::size_t i) const noexcept { return amp_[i]; }

  /// dx for position amplitudes, dp for momentum amplitudes.
  double spacing() const noexcept;
  double norm_squared() const noexcept;

  /// |amp_k|^2, i.e. the probability density on the tagged lattice.
  std::vector<double> density() const;

 private:
  Grid grid_;
  Basis basis_;
  std::vector<cplx> amp_;
};

WaveFunction to_momentum(const WaveFunction& psi);
WaveFunction to_position(const WaveFunction& psi);

/// Returns the state in the requested basis, transforming only if needed.
WaveFunction in_basis(const WaveFunction& psi, Basis basis);

/// Quadrature inner product sum conj(psi_k) phi_k * spacing.
cplx inner(const WaveFunction& psi, const WaveFunction& phi);

/// |<psi|phi>|^2 for normalized states.
double fidelity(const WaveFunction& psi, const WaveFunction& phi);

}  // namespace phasespace
