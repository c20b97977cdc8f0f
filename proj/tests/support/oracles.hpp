#pragma once

// Independent reference computations. Everything here evaluates the defining
// integrals on analytic functions by composite Simpson quadrature; nothing
// touches the library's lattice transforms.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;
using Func = std::function<cplx(double)>;

inline constexpr double kPi = std::numbers::pi;

template <typename F>
auto simpson(F&& f, double a, double b, int intervals = 4000) {
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  auto sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum = sum + (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return sum * (h / 3.0);
}

inline double vacuum(double x) { return std::pow(kPi, -0.25) * std::exp(-0.5 * x * x); }

/// Hermite functions from the explicit polynomials H_m / sqrt(2^m m!).
inline double fock(int m, double x) {
  switch (m) {
    case 0: return vacuum(x);
    case 1: return std::sqrt(2.0) * x * vacuum(x);
    case 2: return (2.0 * x * x - 1.0) / std::sqrt(2.0) * vacuum(x);
    case 3: return (2.0 * x * x * x - 3.0 * x) / std::sqrt(3.0) * vacuum(x);
    default: return std::nan("");
  }
}

inline cplx coherent(double x, double x0, double p0, double delta) {
  const double d = x - x0;
  return std::pow(delta * kPi, -0.25) * std::exp(-d * d / (2.0 * delta)) * std::polar(1.0, x * p0);
}

/// W(x, p) = (1/2 pi) int dy exp(i p y) psi(x - y/2) conj(psi(x + y/2)).
inline double wigner_direct(const Func& psi, double x, double p, double half_range = 20.0) {
  const cplx value = simpson(
      [&](double y) { return std::polar(1.0, p * y) * psi(x - 0.5 * y) * std::conj(psi(x + 0.5 * y)); },
      -half_range, half_range, 8000);
  return value.real() / (2.0 * kPi);
}

/// Q(x, p; delta) = (1/2 pi) |(delta pi)^(-1/4) int dx' exp(-(x - x')^2/(2 delta) - i x' p) psi(x')|^2.
inline double husimi_direct(const Func& psi, double x, double p, double delta, double half_range = 20.0) {
  const cplx overlap = simpson(
      [&](double xp) {
        const double d = x - xp;
        return std::exp(-d * d / (2.0 * delta)) * std::polar(1.0, -xp * p) * psi(xp);
      },
      -half_range, half_range, 8000);
  return std::norm(std::pow(delta * kPi, -0.25) * overlap) / (2.0 * kPi);
}

/// <psi|phi> by quadrature of analytic functions.
inline cplx overlap(const Func& psi, const Func& phi, double half_range = 20.0) {
  return simpson([&](double x) { return std::conj(psi(x)) * phi(x); }, -half_range, half_range, 8000);
}

/// int x^k |psi|^2 dx.
inline double position_moment(const Func& psi, int k, double half_range = 20.0) {
  return simpson([&](double x) { return std::pow(x, k) * std::norm(psi(x)); }, -half_range, half_range, 8000);
}

/// (1/sqrt(pi delta)) int dx' exp(-(x - x')^2/delta) |psi(x')|^2.
inline double smoothed_density(const Func& psi, double x, double delta, double half_range = 20.0) {
  const double v = simpson(
      [&](double xp) {
        const double d = x - xp;
        return std::exp(-d * d / delta) * std::norm(psi(xp));
      },
      -half_range, half_range, 8000);
  return v / std::sqrt(kPi * delta);
}

}  // namespace oracle
