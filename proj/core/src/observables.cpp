#include "phasespace/observables.hpp"

#include <string>

#include "phasespace/error.hpp"

namespace phasespace {

std::string_view to_string(Observable1D obs) noexcept {
  switch (obs) {
    case Observable1D::X: return "x";
    case Observable1D::P: return "p";
    case Observable1D::X2: return "x2";
    case Observable1D::P2: return "p2";
    case Observable1D::Number: return "number";
  }
  return "?";
}

Observable1D observable_from_string(std::string_view name) {
  for (auto obs : kAllObservables) {
    if (to_string(obs) == name) return obs;
  }
  throw Error(module_name::kCore, "unknown observable '" + std::string(name) + "'");
}

namespace {

double moment(const WaveFunction& psi, const Grid& grid, bool momentum, int power) {
  double sum = 0.0;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    const double c = momentum ? grid.p(k) : grid.x(k);
    sum += (power == 1 ? c : c * c) * std::norm(psi[k]);
  }
  return sum * psi.spacing();
}

}  // namespace

double expectation(const WaveFunction& psi, Observable1D obs) {
  const Grid& grid = psi.grid();
  switch (obs) {
    case Observable1D::X: return moment(in_basis(psi, Basis::Position), grid, false, 1);
    case Observable1D::X2: return moment(in_basis(psi, Basis::Position), grid, false, 2);
    case Observable1D::P: return moment(in_basis(psi, Basis::Momentum), grid, true, 1);
    case Observable1D::P2: return moment(in_basis(psi, Basis::Momentum), grid, true, 2);
    case Observable1D::Number:
      return 0.5 * (expectation(psi, Observable1D::X2) + expectation(psi, Observable1D::P2) - 1.0);
  }
  return 0.0;
}

double weyl_symbol(Observable1D obs, double x, double p) noexcept {
  switch (obs) {
    case Observable1D::X: return x;
    case Observable1D::P: return p;
    case Observable1D::X2: return x * x;
    case Observable1D::P2: return p * p;
    case Observable1D::Number: return 0.5 * (x * x + p * p - 1.0);
  }
  return 0.0;
}

}  // namespace phasespace
