#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "phasespace/grid.hpp"
#include "phasespace/observables.hpp"
#include "phasespace/wavefunction.hpp"

namespace phasespace {

/// Uniform 1D axis: value(i) = start + i*step, i < count.
struct Axis {
  double start = 0.0;
  double step = 1.0;
  std::size_t count = 0;

  double at(std::size_t i) const noexcept { return start + static_cast<double>(i) * step; }
  bool operator==(const Axis&) const noexcept = default;
};

Axis x_axis_of(const Grid& grid) noexcept;
Axis p_axis_of(const Grid& grid) noexcept;

enum class DistKind { Wigner, Husimi, Histogram };

std::string_view to_string(DistKind kind) noexcept;
DistKind dist_kind_from_string(std::string_view name);

/// Real-valued distribution over an (x, p) lattice, row-major in x:
/// values[i * p.count + j] is the value at (x.at(i), p.at(j)).
struct PhaseSpaceGrid {
  Axis x;
  Axis p;
  DistKind kind = DistKind::Wigner;
  double delta = 0.0;  // window width for Husimi, 0 otherwise
  std::vector<double> values;
  std::string x_label = "x";
  std::string p_label = "p";

  double at(std::size_t i, std::size_t j) const noexcept { return values[i * p.count + j]; }
  /// Quadrature cell dx*dp.
  double weight() const noexcept { return x.step * p.step; }
  /// sum values * weight.
  double total() const noexcept;
  double min_value() const noexcept;
  double max_value() const noexcept;
};

/// s-parameterized characteristic function on the (u, v) lattice conjugate to
/// (x, p): u shares the momentum lattice, v is the centred position-offset
/// lattice v_m = (m - n/2) dx. Row-major in u.
struct CharacteristicGrid {
  Axis u;
  Axis v;
  double s = 0.0;
  std::vector<cplx> values;

  const cplx& at(std::size_t i, std::size_t j) const noexcept { return values[i * v.count + j]; }
};

/// w(u, v, s) = <psi| exp(-i u x - i v p) |psi> exp(s (u^2 + v^2)/4).
/// Accepts s in [-1, 1]; for s > 0 the values grow away from the origin.
CharacteristicGrid characteristic(const WaveFunction& psi, double s);

/// (1/(2 pi)^2) sum du dv w(u, v, s) exp(i u x + i v p) on the state grid.
/// s > 0 is rejected: the P function has no lattice representation in general.
PhaseSpaceGrid inverse_characteristic(const CharacteristicGrid& chi, const Grid& grid);

/// W(x, p) = (1/2 pi) int dy exp(i p y) psi(x - y/2) conj(psi(x + y/2)),
/// y on a 2dx lattice. The result lives on the shared Grid lattice; momenta
/// with |p| >= pi/(2 dx) lie outside the representable band and are zero.
PhaseSpaceGrid wigner(const WaveFunction& psi);

/// Q(x, p; delta) = (1/2 pi) |<x, p; delta | psi>|^2, computed row by row as a
/// Gaussian-windowed Fourier transform. Rejects delta < 4 dx^2.
PhaseSpaceGrid husimi(const WaveFunction& psi, double delta);

/// Same, with window centres on an arbitrary uniform axis of x values.
PhaseSpaceGrid husimi(const WaveFunction& psi, double delta, const Axis& rows);

/// Husimi function (delta = 1) as the inverse transform of w(u, v, -1).
PhaseSpaceGrid husimi_via_characteristic(const WaveFunction& psi);

enum class MarginalAxis { OverP, OverX };

/// Integrates out one axis: OverP returns a function of x, OverX of p.
std::vector<double> marginal(const PhaseSpaceGrid& dist, MarginalAxis axis);

/// Wigner function of an operator, obtained by linearity from the state
/// convention: weyl_symbol(obs, x, p) / (2 pi).
PhaseSpaceGrid observable_wigner(const Grid& grid, Observable1D obs);

/// Tr(A B) = 2 pi * sum W_A W_B dx dp for two Wigner-kind grids in the state
/// normalization (a state's Wigner function integrates to one).
double trace_product(const PhaseSpaceGrid& wa, const PhaseSpaceGrid& wb);

/// Constant c(obs, delta) such that sum obs(x, p) Q dx dp - c = <obs>.
/// Smoothing by the window adds delta/2 to <x^2> and 1/(2 delta) to <p^2>.
double q_moment_correction(Observable1D obs, double delta) noexcept;

/// <obs> estimated from a Husimi grid: sum weyl_symbol * Q dx dp - correction.
double q_moment(const PhaseSpaceGrid& q, Observable1D obs);

}  // namespace phasespace
