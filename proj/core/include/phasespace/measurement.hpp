#pragma once

#include <cstddef>
#include <vector>

#include "phasespace/distributions.hpp"
#include "phasespace/wavefunction.hpp"

namespace phasespace {

/// Gaussian position measurement M(x) = (delta pi)^(-1/4) exp(-(x - X)^2/(2 delta))
/// with outcome x and sharpness delta.
struct GaussianMeasurement {
  double x = 0.0;
  double delta = 1.0;
};

/// Throws unless delta > 0 and delta >= 4 dx^2 on the grid.
void validate(const GaussianMeasurement& meas, const Grid& grid);

/// Kernel value M(x) at lattice position x_prime.
double measurement_weight(const GaussianMeasurement& meas, double x_prime) noexcept;

/// Outcome density p(x) = <psi|M^2(x)|psi> on the position lattice.
std::vector<double> m_density(const WaveFunction& psi, double delta);

/// M(x) psi without renormalization, position basis.
WaveFunction apply_m_unnormalized(const WaveFunction& psi, const GaussianMeasurement& meas);

/// Post-measurement state M(x) psi / ||M(x) psi||. Throws when the collapse
/// norm falls below 1e-12 (outcome incompatible with the state).
WaveFunction apply_m(const WaveFunction& psi, const GaussianMeasurement& meas);

/// Joint density |<p|M(x)|psi>|^2 of the position-then-momentum measurement on
/// the state lattice. Returned with kind = Husimi.
PhaseSpaceGrid successive_density(const WaveFunction& psi, double delta);

/// Same with the position outcomes on an arbitrary uniform axis.
PhaseSpaceGrid successive_density(const WaveFunction& psi, double delta, const Axis& outcomes);

/// max_a |sum_k M^2(x_k) dx - 1| over the lattice basis vectors. The outcome
/// sum runs over an extended lattice of the same spacing so that edge points
/// see the full Gaussian.
double povm_completeness_deviation(const Grid& grid, double delta);

/// Square-root form check: assembles K = sum_j |x, p_j><x, p_j| dp as a
/// dense matrix, takes its PSD square root, fixes one scalar by trace matching
/// and returns the L-infinity distance to the matrix of M(x).
/// Requires n <= 64. Throws if K has an eigenvalue below -1e-10.
struct SqrtFormResult {
  double deviation = 0.0;
  double scale = 0.0;  // scalar applied to sqrt(K)
};
SqrtFormResult sqrt_form_check(const Grid& grid, double x, double delta);

/// Assembles sum_x M^2(x) dx from the square-root form over an extended
/// outcome lattice and returns its L-infinity distance to the identity.
double sqrt_form_identity_deviation(const Grid& grid, double delta);

/// Conditional position distribution given momentum p. `literal_ratio` divides
/// by the pre-measurement momentum density |<p|psi>|^2; `normalized` divides by
/// the x-integral of Q(x, p), so it integrates to one.
struct ConditionalQ {
  double p = 0.0;                  // lattice momentum actually used
  std::size_t p_index = 0;
  double momentum_density = 0.0;   // |<p|psi>|^2
  double q_column_integral = 0.0;  // sum_x Q(x, p) dx
  std::vector<double> literal_ratio;
  std::vector<double> normalized;
  /// sum literal_ratio dx - 1.
  double normalization_defect = 0.0;
};
ConditionalQ conditional_q(const PhaseSpaceGrid& q, const WaveFunction& psi, double p);

}  // namespace phasespace
