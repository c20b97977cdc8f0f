#include "phasespace/measurement.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phasespace/error.hpp"
#include "phasespace/parallel.hpp"

namespace phasespace {
namespace {

constexpr double kCollapseNormFloor = 1e-12;
constexpr double kNegativeEigenvalueFloor = -1e-10;
constexpr std::size_t kMaxDenseSize = 64;

// Outcome lattice padding: Gaussian weights below exp(-46) ~ 1e-20 are dropped.
std::ptrdiff_t outcome_padding(const Grid& grid, double delta) {
  return static_cast<std::ptrdiff_t>(std::ceil(std::sqrt(46.0 * delta) / grid.dx()));
}

}  // namespace

void validate(const GaussianMeasurement& meas, const Grid& grid) {
  if (!(meas.delta > 0.0) || !std::isfinite(meas.delta)) {
    throw Error(module_name::kMeasurement, "measurement width delta must be positive");
  }
  if (meas.delta < 4.0 * grid.dx() * grid.dx()) {
    throw Error(module_name::kMeasurement, "measurement width delta = " + std::to_string(meas.delta) +
                                               " is under-resolved on this grid (needs delta >= 4 dx^2 = " +
                                               std::to_string(4.0 * grid.dx() * grid.dx()) + ")");
  }
  if (!std::isfinite(meas.x)) throw Error(module_name::kMeasurement, "measurement outcome must be finite");
}

double measurement_weight(const GaussianMeasurement& meas, double x_prime) noexcept {
  const double d = meas.x - x_prime;
  return std::pow(meas.delta * std::numbers::pi, -0.25) * std::exp(-d * d / (2.0 * meas.delta));
}

std::vector<double> m_density(const WaveFunction& psi_in, double delta) {
  const WaveFunction psi = in_basis(psi_in, Basis::Position);
  const Grid& grid = psi.grid();
  validate(GaussianMeasurement{0.0, delta}, grid);
  const std::size_t n = grid.n();
  const std::vector<double> rho = psi.density();
  const double prefactor = grid.dx() / std::sqrt(delta * std::numbers::pi);
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t k) {
    double sum = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      const double d = grid.x(k) - grid.x(l);
      sum += std::exp(-d * d / delta) * rho[l];
    }
    out[k] = prefactor * sum;
  });
  return out;
}

WaveFunction apply_m_unnormalized(const WaveFunction& psi_in, const GaussianMeasurement& meas) {
  const WaveFunction psi = in_basis(psi_in, Basis::Position);
  validate(meas, psi.grid());
  std::vector<cplx> amp(psi.size());
  for (std::size_t k = 0; k < amp.size(); ++k) amp[k] = measurement_weight(meas, psi.grid().x(k)) * psi[k];
  return WaveFunction(psi.grid(), Basis::Position, std::move(amp));
}

WaveFunction apply_m(const WaveFunction& psi, const GaussianMeasurement& meas) {
  WaveFunction collapsed = apply_m_unnormalized(psi, meas);
  const double norm = std::sqrt(collapsed.norm_squared());
  if (!(norm > kCollapseNormFloor)) {
    throw Error(module_name::kMeasurement, "outcome x = " + std::to_string(meas.x) +
                                               " is incompatible with the state (collapse norm " +
                                               std::to_string(norm) + ")");
  }
  std::vector<cplx> amp(collapsed.amp().begin(), collapsed.amp().end());
  return WaveFunction::normalized(collapsed.grid(), Basis::Position, std::move(amp));
}

PhaseSpaceGrid successive_density(const WaveFunction& psi, double delta) {
  return successive_density(psi, delta, x_axis_of(psi.grid()));
}

PhaseSpaceGrid successive_density(const WaveFunction& psi_in, double delta, const Axis& outcomes) {
  const WaveFunction psi = in_basis(psi_in, Basis::Position);
  const Grid& grid = psi.grid();
  validate(GaussianMeasurement{0.0, delta}, grid);
  const std::size_t n = grid.n();
  const FourierKernel kernel(grid);
  PhaseSpaceGrid out{outcomes, p_axis_of(grid), DistKind::Husimi, delta, std::vector<double>(outcomes.count * n)};
  parallel_for(outcomes.count, [&](std::size_t i) {
    const GaussianMeasurement meas{outcomes.at(i), delta};
    std::vector<cplx> collapsed(n);
    for (std::size_t k = 0; k < n; ++k) collapsed[k] = measurement_weight(meas, grid.x(k)) * psi[k];
    std::vector<cplx> momentum(n);
    kernel.to_momentum(collapsed, momentum);
    for (std::size_t j = 0; j < n; ++j) out.values[i * n + j] = std::norm(momentum[j]);
  });
  return out;
}

double povm_completeness_deviation(const Grid& grid, double delta) {
  validate(GaussianMeasurement{0.0, delta}, grid);
  const auto n = static_cast<std::ptrdiff_t>(grid.n());
  const std::ptrdiff_t pad = outcome_padding(grid, delta);
  double worst = 0.0;
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    // (sum_k M^2(x_k) dx) e_a = s_a e_a since every M(x_k) is diagonal.
    double s = 0.0;
    for (std::ptrdiff_t k = -pad; k < n + pad; ++k) {
      const GaussianMeasurement meas{grid.x_min() + static_cast<double>(k) * grid.dx(), delta};
      const double w = measurement_weight(meas, grid.x(static_cast<std::size_t>(a)));
      s += w * w * grid.dx();
    }
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

namespace {

using Eigen::MatrixXcd;

// Matrices act on the orthonormal lattice basis e_a = delta_a / sqrt(dx).
MatrixXcd coherent_projector_sum(const Grid& grid, double x, double delta) {
  const auto n = static_cast<Eigen::Index>(grid.n());
  const double prefactor = std::sqrt(grid.dx()) * std::pow(delta * std::numbers::pi, -0.25);
  MatrixXcd k = MatrixXcd::Zero(n, n);
  Eigen::VectorXcd c(n);
  for (std::size_t j = 0; j < grid.n(); ++j) {
    const double p = grid.p(j);
    for (Eigen::Index a = 0; a < n; ++a) {
      const double xa = grid.x(static_cast<std::size_t>(a));
      const double d = xa - x;
      c(a) = prefactor * std::exp(-d * d / (2.0 * delta)) * std::polar(1.0, xa * p);
    }
    k.noalias() += grid.dp() * c * c.adjoint();
  }
  return k;
}

MatrixXcd psd_sqrt(const MatrixXcd& k) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(k);
  if (solver.info() != Eigen::Success) {
    throw Error(module_name::kMeasurement, "eigendecomposition of the coherent-state sum failed");
  }
  Eigen::VectorXd lambda = solver.eigenvalues();
  if (lambda.minCoeff() < kNegativeEigenvalueFloor) {
    throw Error(module_name::kMeasurement, "coherent-state sum is not positive semidefinite (eigenvalue " +
                                               std::to_string(lambda.minCoeff()) + ")");
  }
  lambda = lambda.cwiseMax(0.0).cwiseSqrt();
  return solver.eigenvectors() * lambda.asDiagonal() * solver.eigenvectors().adjoint();
}

MatrixXcd measurement_matrix(const Grid& grid, const GaussianMeasurement& meas) {
  const auto n = static_cast<Eigen::Index>(grid.n());
  MatrixXcd m = MatrixXcd::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) m(a, a) = measurement_weight(meas, grid.x(static_cast<std::size_t>(a)));
  return m;
}

void require_dense_size(const Grid& grid) {
  if (grid.n() > kMaxDenseSize) {
    throw Error(module_name::kMeasurement, "square-root form check needs n <= 64, got " + std::to_string(grid.n()));
  }
}

}  // namespace

SqrtFormResult sqrt_form_check(const Grid& grid, double x, double delta) {
  require_dense_size(grid);
  const GaussianMeasurement meas{x, delta};
  validate(meas, grid);
  const MatrixXcd root = psd_sqrt(coherent_projector_sum(grid, x, delta));
  const MatrixXcd m = measurement_matrix(grid, meas);
  const double scale = m.trace().real() / root.trace().real();
  return SqrtFormResult{(scale * root - m).cwiseAbs().maxCoeff(), scale};
}

double sqrt_form_identity_deviation(const Grid& grid, double delta) {
  require_dense_size(grid);
  const double origin = grid.x(grid.n() / 2);
  const double scale = sqrt_form_check(grid, origin, delta).scale;
  const auto n = static_cast<std::ptrdiff_t>(grid.n());
  const std::ptrdiff_t pad = outcome_padding(grid, delta);
  MatrixXcd total = MatrixXcd::Zero(n, n);
  for (std::ptrdiff_t k = -pad; k < n + pad; ++k) {
    const double x = grid.x_min() + static_cast<double>(k) * grid.dx();
    const MatrixXcd m = scale * psd_sqrt(coherent_projector_sum(grid, x, delta));
    total.noalias() += grid.dx() * m * m;
  }
  return (total - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

ConditionalQ conditional_q(const PhaseSpaceGrid& q, const WaveFunction& psi, double p) {
  if (q.kind != DistKind::Husimi) throw Error(module_name::kMeasurement, "conditional_q expects a Husimi grid");
  const Grid& grid = psi.grid();
  if (!(q.p == p_axis_of(grid))) {
    throw Error(module_name::kMeasurement, "Husimi grid and state use different momentum lattices");
  }
  ConditionalQ out;
  out.p_index = grid.nearest_p(p);
  out.p = grid.p(out.p_index);
  const WaveFunction mom = in_basis(psi, Basis::Momentum);
  out.momentum_density = std::norm(mom[out.p_index]);
  if (!(out.momentum_density > 1e-12)) {
    throw Error(module_name::kMeasurement, "momentum density at p = " + std::to_string(out.p) +
                                               " vanishes; the conditional is undefined");
  }
  const std::size_t nx = q.x.count;
  out.literal_ratio.resize(nx);
  out.normalized.resize(nx);
  double column = 0.0;
  for (std::size_t i = 0; i < nx; ++i) column += q.at(i, out.p_index);
  column *= q.x.step;
  out.q_column_integral = column;
  if (!(column > 0.0)) throw Error(module_name::kMeasurement, "Husimi column at p has zero mass");
  double ratio_sum = 0.0;
  for (std::size_t i = 0; i < nx; ++i) {
    const double value = q.at(i, out.p_index);
    out.literal_ratio[i] = value / out.momentum_density;
    out.normalized[i] = value / column;
    ratio_sum += out.literal_ratio[i];
  }
  out.normalization_defect = ratio_sum * q.x.step - 1.0;
  return out;
}

}  // namespace phasespace
