#include "phasespace/wavefunction.hpp"

#include <cmath>
#include <string>

#include "phasespace/error.hpp"

namespace phasespace {

std::string_view to_string(Basis basis) noexcept {
  return basis == Basis::Position ? "position" : "momentum";
}

Basis basis_from_string(std::string_view name) {
  if (name == "position") return Basis::Position;
  if (name == "momentum") return Basis::Momentum;
  throw Error(module_name::kCore, "unknown basis '" + std::string(name) + "'");
}

WaveFunction::WaveFunction(Grid grid, Basis basis, std::vector<cplx> amp)
    : grid_(grid), basis_(basis), amp_(std::move(amp)) {
  if (amp_.size() != grid_.n()) {
    throw Error(module_name::kCore, "amplitude count " + std::to_string(amp_.size()) +
                                        " does not match grid size " + std::to_string(grid_.n()));
  }
}

WaveFunction WaveFunction::normalized(Grid grid, Basis basis, std::vector<cplx> amp) {
  WaveFunction psi(grid, basis, std::move(amp));
  const double norm2 = psi.norm_squared();
  if (!(norm2 > 1e-300) || !std::isfinite(norm2)) {
    throw Error(module_name::kCore, "cannot normalize a zero (or non-finite) vector");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : psi.amp_) a *= scale;
  return psi;
}

double WaveFunction::spacing() const noexcept {
  return basis_ == Basis::Position ? grid_.dx() : grid_.dp();
}

double WaveFunction::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amp_) sum += std::norm(a);
  return sum * spacing();
}

std::vector<double> WaveFunction::density() const {
  std::vector<double> out(amp_.size());
  for (std::size_t i = 0; i < amp_.size(); ++i) out[i] = std::norm(amp_[i]);
  return out;
}

WaveFunction to_momentum(const WaveFunction& psi) {
  if (psi.basis() != Basis::Position) {
    throw Error(module_name::kCore, "to_momentum expects a position-basis state");
  }
  std::vector<cplx> out(psi.size());
  FourierKernel(psi.grid()).to_momentum(psi.amp(), out);
  return WaveFunction(psi.grid(), Basis::Momentum, std::move(out));
}

WaveFunction to_position(const WaveFunction& psi) {
  if (psi.basis() != Basis::Momentum) {
    throw Error(module_name::kCore, "to_position expects a momentum-basis state");
  }
  std::vector<cplx> out(psi.size());
  FourierKernel(psi.grid()).to_position(psi.amp(), out);
  return WaveFunction(psi.grid(), Basis::Position, std::move(out));
}

WaveFunction in_basis(const WaveFunction& psi, Basis basis) {
  if (psi.basis() == basis) return psi;
  return basis == Basis::Momentum ? to_momentum(psi) : to_position(psi);
}

cplx inner(const WaveFunction& psi, const WaveFunction& phi) {
  if (!(psi.grid() == phi.grid())) throw Error(module_name::kCore, "inner product on mismatched grids");
  if (psi.basis() != phi.basis()) throw Error(module_name::kCore, "inner product on mismatched bases");
  cplx sum{0.0, 0.0};
  for (std::size_t k = 0; k < psi.size(); ++k) sum += std::conj(psi[k]) * phi[k];
  return sum * psi.spacing();
}

double fidelity(const WaveFunction& psi, const WaveFunction& phi) { return std::norm(inner(psi, phi)); }

}  // namespace phasespace
