#pragma once

#include <cstddef>

#include "phasespace/wavefunction.hpp"

namespace phasespace {

/// Relative amplitude a state envelope must fall below at the grid edges.
inline constexpr double kEnvelopeTolerance = 1e-12;

/// Largest supported Fock index.
inline constexpr std::size_t kMaxFockIndex = 20;

/// Squeezed coherent state (delta*pi)^(-1/4) exp(-(x-x0)^2/(2 delta) + i x p0).
/// Position variance delta/2, momentum variance 1/(2 delta).
WaveFunction coherent_state(const Grid& grid, double x0, double p0, double delta);

/// Harmonic-oscillator eigenstate phi_m built with the normalized Hermite
/// function recurrence.
WaveFunction fock_state(const Grid& grid, std::size_t m);

/// Ground state, identical to coherent_state(grid, 0, 0, 1).
WaveFunction vacuum(const Grid& grid);

/// Normalized a*psi1 + b*psi2.
WaveFunction superpose(cplx a, const WaveFunction& psi1, cplx b, const WaveFunction& psi2);

/// Even cat state: coherent(-x0, 0, delta) + coherent(x0, 0, delta), normalized.
WaveFunction cat_state(const Grid& grid, double x0, double delta);

/// Throws if |amp| at either end of the lattice exceeds kEnvelopeTolerance
/// relative to the peak, in both the position and momentum representation.
void check_envelope(const WaveFunction& psi, const char* what);

}  // namespace phasespace
