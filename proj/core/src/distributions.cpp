#include "phasespace/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "phasespace/error.hpp"
#include "phasespace/parallel.hpp"

namespace phasespace {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest imaginary part tolerated before a transform result is declared real.
constexpr double kImagResidue = 1e-10;

// Momentum mass allowed outside the band resolved by the 2dx y-lattice.
constexpr double kWignerBandLeak = 1e-10;

Axis v_axis_of(const Grid& grid) noexcept {
  return Axis{-static_cast<double>(grid.n() / 2) * grid.dx(), grid.dx(), grid.n()};
}

double sign_of_index(std::size_t k) noexcept { return (k & 1U) ? -1.0 : 1.0; }

}  // namespace

Axis x_axis_of(const Grid& grid) noexcept { return Axis{grid.x_min(), grid.dx(), grid.n()}; }

Axis p_axis_of(const Grid& grid) noexcept { return Axis{grid.p_min(), grid.dp(), grid.n()}; }

std::string_view to_string(DistKind kind) noexcept {
  switch (kind) {
    case DistKind::Wigner: return "wigner";
    case DistKind::Husimi: return "husimi";
    case DistKind::Histogram: return "histogram";
  }
  return "?";
}

DistKind dist_kind_from_string(std::string_view name) {
  if (name == "wigner") return DistKind::Wigner;
  if (name == "husimi") return DistKind::Husimi;
  if (name == "histogram") return DistKind::Histogram;
  throw Error(module_name::kPhaseSpace, "unknown distribution kind '" + std::string(name) + "'");
}

double PhaseSpaceGrid::total() const noexcept {
  return std::accumulate(values.begin(), values.end(), 0.0) * weight();
}

double PhaseSpaceGrid::min_value() const noexcept {
  return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
}

double PhaseSpaceGrid::max_value() const noexcept {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

CharacteristicGrid characteristic(const WaveFunction& psi_in, double s) {
  if (!(s >= -1.0 && s <= 1.0)) {
    throw Error(module_name::kPhaseSpace, "characteristic parameter s must lie in [-1, 1]");
  }
  const WaveFunction psi = in_basis(psi_in, Basis::Position);
  const Grid& grid = psi.grid();
  const std::size_t n = grid.n();
  const auto half = static_cast<std::ptrdiff_t>(n / 2);

  CharacteristicGrid chi{p_axis_of(grid), v_axis_of(grid), s, std::vector<cplx>(n * n)};

  // w0(u, v) = exp(i u v/2) int dx conj(psi(x)) exp(-i u x) psi(x - v), v = shift*dx.
  parallel_for(n, [&](std::size_t m) {
    const std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(m) - half;
    const double v = chi.v.at(m);
    std::vector<cplx> buf(n, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) {
      const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(k) - shift;
      if (src < 0 || src >= static_cast<std::ptrdiff_t>(n)) continue;
      buf[k] = sign_of_index(k) * std::conj(psi[k]) * psi[static_cast<std::size_t>(src)];
    }
    fft_inplace(buf, FftSign::Forward);
    for (std::size_t j = 0; j < n; ++j) {
      const double u = chi.u.at(j);
      const double gauss = std::exp(s * (u * u + v * v) / 4.0);
      chi.values[j * n + m] = grid.dx() * gauss * std::polar(1.0, u * (0.5 * v - grid.x_min())) * buf[j];
    }
  });
  return chi;
}

PhaseSpaceGrid inverse_characteristic(const CharacteristicGrid& chi, const Grid& grid) {
  DistKind kind;
  if (chi.s == 0.0) {
    kind = DistKind::Wigner;
  } else if (chi.s == -1.0) {
    kind = DistKind::Husimi;
  } else if (chi.s > 0.0) {
    throw Error(module_name::kPhaseSpace,
                "inverse transform for s > 0 (Glauber-Sudarshan) is not supported");
  } else {
    throw Error(module_name::kPhaseSpace, "inverse transform is defined for s = 0 and s = -1 only");
  }
  const std::size_t n = grid.n();
  if (!(chi.u == p_axis_of(grid)) || !(chi.v == v_axis_of(grid)) || chi.values.size() != n * n) {
    throw Error(module_name::kPhaseSpace, "characteristic grid does not match the target grid");
  }

  std::vector<cplx> buf(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    const cplx edge = std::polar(1.0, chi.u.at(j) * grid.x_min());
    for (std::size_t m = 0; m < n; ++m) buf[j * n + m] = chi.values[j * n + m] * edge * sign_of_index(m);
  }
  fft2_inplace(buf, n, n, FftSign::Backward);

  const double scale = chi.u.step * chi.v.step / (kTwoPi * kTwoPi);
  PhaseSpaceGrid out{x_axis_of(grid), p_axis_of(grid), kind, kind == DistKind::Husimi ? 1.0 : 0.0,
                     std::vector<double>(n * n)};
  double peak = 0.0;
  double residue = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      const cplx value = scale * sign_of_index(k + l) * buf[k * n + l];
      out.values[k * n + l] = value.real();
      peak = std::max(peak, std::abs(value.real()));
      residue = std::max(residue, std::abs(value.imag()));
    }
  }
  if (residue > kImagResidue * std::max(1.0, peak)) {
    throw Error(module_name::kPhaseSpace,
                "inverse characteristic transform left an imaginary residue of " + std::to_string(residue));
  }
  return out;
}

PhaseSpaceGrid wigner(const WaveFunction& psi_in) {
  const WaveFunction psi = in_basis(psi_in, Basis::Position);
  const Grid& grid = psi.grid();
  const std::size_t n = grid.n();

  // The y-lattice has spacing 2dx, so W is periodic in p with period pi/dx and
  // only |p| < pi/(2 dx) is resolved. Refuse states with momentum beyond it.
  {
    const WaveFunction mom = to_momentum(psi);
    const double band = std::numbers::pi / (2.0 * grid.dx());
    double leak = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(grid.p(j)) >= band) leak += std::norm(mom[j]);
    }
    leak *= grid.dp();
    if (leak > kWignerBandLeak) {
      throw Error(module_name::kPhaseSpace,
                  "state has momentum probability " + std::to_string(leak) +
                      " beyond the Wigner band |p| < pi/(2 dx); refine the grid");
    }
  }

  PhaseSpaceGrid out{x_axis_of(grid), p_axis_of(grid), DistKind::Wigner, 0.0, std::vector<double>(n * n, 0.0)};
  std::vector<double> residues(n, 0.0);

  // On the fine lattice p'_l = (l - n/2) dp/2:
  //   W(x_k, p'_l) = (dx/pi) sum_m (-1)^m exp(2 pi i l m / n) psi_{k-m} conj(psi_{k+m}).
  // The shared lattice point p_j coincides with p'_l for l = 2j - n/2.
  parallel_for(n, [&](std::size_t k) {
    std::vector<cplx> buf(n, cplx{0.0, 0.0});
    const std::size_t reach = std::min(k, n - 1 - k);
    buf[0] = std::norm(psi[k]);
    for (std::size_t m = 1; m <= reach; ++m) {
      const double sgn = sign_of_index(m);
      buf[m] = sgn * psi[k - m] * std::conj(psi[k + m]);
      buf[n - m] = sgn * psi[k + m] * std::conj(psi[k - m]);
    }
    fft_inplace(buf, FftSign::Backward);
    const double scale = grid.dx() / std::numbers::pi;
    double residue = 0.0;
    for (std::size_t j = n / 4; j < 3 * n / 4; ++j) {
      const cplx value = scale * buf[2 * j - n / 2];
      out.values[k * n + j] = value.real();
      residue = std::max(residue, std::abs(value.imag()));
    }
    residues[k] = residue;
  });
  const double residue = *std::max_element(residues.begin(), residues.end());
  if (residue > kImagResidue) {
    throw Error(module_name::kPhaseSpace, "Wigner transform left an imaginary residue of " + std::to_string(residue));
  }
  return out;
}

PhaseSpaceGrid husimi(const WaveFunction& psi, double delta) {
  return husimi(psi, delta, x_axis_of(psi.grid()));
}

PhaseSpaceGrid husimi(const WaveFunction& psi_in, double delta, const Axis& rows) {
  const WaveFunction psi = in_basis(psi_in, Basis::Position);
  const Grid& grid = psi.grid();
  const std::size_t n = grid.n();
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(module_name::kPhaseSpace, "Husimi width delta must be positive");
  }
  if (delta < 4.0 * grid.dx() * grid.dx()) {
    throw Error(module_name::kPhaseSpace, "Husimi window delta = " + std::to_string(delta) +
                                              " is under-resolved (needs delta >= 4 dx^2)");
  }

  const double prefactor = std::pow(delta * std::numbers::pi, -0.25);
  std::vector<cplx> edge(n);
  for (std::size_t j = 0; j < n; ++j) edge[j] = grid.dx() * std::polar(1.0, -grid.x_min() * grid.p(j));

  PhaseSpaceGrid out{rows, p_axis_of(grid), DistKind::Husimi, delta, std::vector<double>(rows.count * n)};

  // <x, p; delta|psi> = (delta pi)^(-1/4) dx sum_l exp(-(x - x_l)^2/(2 delta) - i x_l p) psi_l
  parallel_for(rows.count, [&](std::size_t i) {
    const double x = rows.at(i);
    std::vector<cplx> buf(n);
    for (std::size_t l = 0; l < n; ++l) {
      const double d = x - grid.x(l);
      buf[l] = sign_of_index(l) * prefactor * std::exp(-d * d / (2.0 * delta)) * psi[l];
    }
    fft_inplace(buf, FftSign::Forward);
    for (std::size_t j = 0; j < n; ++j) out.values[i * n + j] = std::norm(edge[j] * buf[j]) / kTwoPi;
  });
  return out;
}

PhaseSpaceGrid husimi_via_characteristic(const WaveFunction& psi) {
  return inverse_characteristic(characteristic(psi, -1.0), psi.grid());
}

std::vector<double> marginal(const PhaseSpaceGrid& dist, MarginalAxis axis) {
  const std::size_t nx = dist.x.count;
  const std::size_t np = dist.p.count;
  if (axis == MarginalAxis::OverP) {
    std::vector<double> out(nx, 0.0);
    for (std::size_t i = 0; i < nx; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < np; ++j) sum += dist.at(i, j);
      out[i] = sum * dist.p.step;
    }
    return out;
  }
  std::vector<double> out(np, 0.0);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < np; ++j) out[j] += dist.at(i, j);
  }
  for (auto& v : out) v *= dist.x.step;
  return out;
}

PhaseSpaceGrid observable_wigner(const Grid& grid, Observable1D obs) {
  const std::size_t n = grid.n();
  PhaseSpaceGrid out{x_axis_of(grid), p_axis_of(grid), DistKind::Wigner, 0.0, std::vector<double>(n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.values[i * n + j] = weyl_symbol(obs, grid.x(i), grid.p(j)) / kTwoPi;
  }
  return out;
}

double trace_product(const PhaseSpaceGrid& wa, const PhaseSpaceGrid& wb) {
  if (wa.kind != DistKind::Wigner || wb.kind != DistKind::Wigner) {
    throw Error(module_name::kPhaseSpace, "trace_product expects two Wigner functions");
  }
  if (!(wa.x == wb.x) || !(wa.p == wb.p)) {
    throw Error(module_name::kPhaseSpace, "trace_product on mismatched grids");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < wa.values.size(); ++i) sum += wa.values[i] * wb.values[i];
  return kTwoPi * sum * wa.weight();
}

double q_moment_correction(Observable1D obs, double delta) noexcept {
  switch (obs) {
    case Observable1D::X:
    case Observable1D::P: return 0.0;
    case Observable1D::X2: return 0.5 * delta;
    case Observable1D::P2: return 0.5 / delta;
    case Observable1D::Number: return 0.25 * (delta + 1.0 / delta);
  }
  return 0.0;
}

double q_moment(const PhaseSpaceGrid& q, Observable1D obs) {
  if (q.kind != DistKind::Husimi) throw Error(module_name::kPhaseSpace, "q_moment expects a Husimi grid");
  double sum = 0.0;
  for (std::size_t i = 0; i < q.x.count; ++i) {
    const double x = q.x.at(i);
    for (std::size_t j = 0; j < q.p.count; ++j) sum += weyl_symbol(obs, x, q.p.at(j)) * q.at(i, j);
  }
  return sum * q.weight() - q_moment_correction(obs, q.delta);
}

}  // namespace phasespace
