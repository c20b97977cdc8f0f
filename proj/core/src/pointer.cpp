#include "phasespace/pointer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phasespace/error.hpp"
#include "phasespace/measurement.hpp"
#include "phasespace/parallel.hpp"
#include "phasespace/states.hpp"

namespace phasespace {
namespace {

// Amplitudes below this fraction of the largest one are ignored when checking
// that the interaction keeps the state on the device lattice.
constexpr double kSupportThreshold = 1e-12;

}  // namespace

CompositeWaveFunction::CompositeWaveFunction(Grid device, Grid system, std::vector<cplx> amp)
    : device_(device), system_(system), amp_(std::move(amp)) {
  if (amp_.size() != device_.n() * system_.n()) {
    throw Error(module_name::kPointer, "composite amplitude count does not match n_device * n_system");
  }
}

double CompositeWaveFunction::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amp_) sum += std::norm(a);
  return sum * device_.dx() * system_.dx();
}

Grid default_device_grid(const Grid& system, const CouplingSpec& spec, std::size_t device_n) {
  if (!(spec.g > 0.0) || !std::isfinite(spec.g)) throw Error(module_name::kPointer, "coupling g must be positive");
  if (!(spec.delta_device > 0.0)) throw Error(module_name::kPointer, "device width must be positive");
  const double sigma = std::sqrt(0.5 * spec.delta_device);
  const double reach = std::max(std::abs(system.x_min()), std::abs(system.x_last()));
  const double half_width = spec.g * reach + 8.0 * sigma;
  try {
    return make_grid(device_n, -half_width, half_width);
  } catch (const Error& e) {
    throw Error(module_name::kPointer, std::string("device grid: ") + e.what());
  }
}

CompositeWaveFunction make_composite(const Grid& device_grid, double delta, const WaveFunction& psi_in) {
  const WaveFunction psi = in_basis(psi_in, Basis::Position);
  WaveFunction device = [&] {
    try {
      return coherent_state(device_grid, 0.0, 0.0, delta);
    } catch (const Error& e) {
      throw Error(module_name::kPointer, std::string("device squeezed vacuum: ") + e.what());
    }
  }();
  const std::size_t nd = device_grid.n();
  const std::size_t ns = psi.grid().n();
  std::vector<cplx> amp(nd * ns);
  for (std::size_t i = 0; i < nd; ++i) {
    for (std::size_t j = 0; j < ns; ++j) amp[i * ns + j] = device[i] * psi[j];
  }
  CompositeWaveFunction comp(device_grid, psi.grid(), std::move(amp));
  const double scale = 1.0 / std::sqrt(comp.norm_squared());
  std::vector<cplx> normalized(comp.amp().begin(), comp.amp().end());
  for (auto& a : normalized) a *= scale;
  return CompositeWaveFunction(device_grid, psi.grid(), std::move(normalized));
}

CompositeWaveFunction apply_interaction(const CompositeWaveFunction& comp, double g) {
  if (!std::isfinite(g)) throw Error(module_name::kPointer, "coupling g must be finite");
  if (g == 0.0) return comp;
  const Grid& dev = comp.device_grid();
  const Grid& sys = comp.system_grid();
  const std::size_t nd = dev.n();
  const std::size_t ns = sys.n();

  double peak = 0.0;
  for (const auto& a : comp.amp()) peak = std::max(peak, std::abs(a));
  const double threshold = kSupportThreshold * peak;
  for (std::size_t j = 0; j < ns; ++j) {
    std::size_t lo = nd;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < nd; ++i) {
      if (std::abs(comp.at(i, j)) > threshold) {
        lo = std::min(lo, i);
        hi = i;
      }
    }
    if (lo == nd) continue;
    const double shift = g * sys.x(j);
    if (dev.x(lo) + shift < dev.x_min() || dev.x(hi) + shift > dev.x_last()) {
      throw Error(module_name::kPointer,
                  "interaction with g = " + std::to_string(g) + " shifts the device state off its lattice " +
                      "(system column x = " + std::to_string(sys.x(j)) + ", device domain [" +
                      std::to_string(dev.x_min()) + ", " + std::to_string(dev.x_last()) + "])");
    }
  }

  const FourierKernel kernel(dev);
  std::vector<cplx> out(nd * ns);
  parallel_for(ns, [&](std::size_t j) {
    std::vector<cplx> column(nd);
    std::vector<cplx> momentum(nd);
    for (std::size_t i = 0; i < nd; ++i) column[i] = comp.at(i, j);
    kernel.to_momentum(column, momentum);
    const double shift = g * sys.x(j);
    for (std::size_t l = 0; l < nd; ++l) momentum[l] *= std::polar(1.0, -shift * dev.p(l));
    kernel.to_position(momentum, column);
    for (std::size_t i = 0; i < nd; ++i) out[i * ns + j] = column[i];
  });
  return CompositeWaveFunction(dev, sys, std::move(out));
}

PhaseSpaceGrid readout_joint(const CompositeWaveFunction& comp) {
  const Grid& dev = comp.device_grid();
  const Grid& sys = comp.system_grid();
  const std::size_t nd = dev.n();
  const std::size_t ns = sys.n();
  const FourierKernel kernel(sys);
  PhaseSpaceGrid out{x_axis_of(dev), p_axis_of(sys), DistKind::Husimi, 0.0, std::vector<double>(nd * ns),
                     "x_device", "p_system"};
  parallel_for(nd, [&](std::size_t i) {
    std::vector<cplx> momentum(ns);
    kernel.to_momentum(comp.amp().subspan(i * ns, ns), momentum);
    for (std::size_t j = 0; j < ns; ++j) out.values[i * ns + j] = std::norm(momentum[j]);
  });
  return out;
}

std::vector<double> device_marginal(const CompositeWaveFunction& comp) {
  const std::size_t nd = comp.device_grid().n();
  const std::size_t ns = comp.system_grid().n();
  std::vector<double> out(nd, 0.0);
  for (std::size_t i = 0; i < nd; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < ns; ++j) sum += std::norm(comp.at(i, j));
    out[i] = sum * comp.system_grid().dx();
  }
  return out;
}

PhaseSpaceGrid weak_rescale(const PhaseSpaceGrid& joint, double g) {
  if (!(g > 0.0) || !std::isfinite(g)) throw Error(module_name::kPointer, "weak_rescale needs g > 0");
  PhaseSpaceGrid out = joint;
  out.x = Axis{joint.x.start / g, joint.x.step / g, joint.x.count};
  for (auto& v : out.values) v *= g;
  out.x_label = "x_bar";
  return out;
}

PointerComparison compare_pointer_to_direct(const WaveFunction& psi, const CouplingSpec& spec,
                                            const Grid& device_grid) {
  if (!(spec.g > 0.0)) throw Error(module_name::kPointer, "coupling g must be positive");
  PointerComparison result;
  result.effective_delta = spec.delta_device / (spec.g * spec.g);
  const auto evolved = apply_interaction(make_composite(device_grid, spec.delta_device, psi), spec.g);
  result.pointer = weak_rescale(readout_joint(evolved), spec.g);
  result.pointer.delta = result.effective_delta;
  result.direct = successive_density(psi, result.effective_delta, result.pointer.x);
  double worst = 0.0;
  for (std::size_t i = 0; i < result.pointer.values.size(); ++i) {
    worst = std::max(worst, std::abs(result.pointer.values[i] - result.direct.values[i]));
  }
  result.deviation = worst;
  return result;
}

PointerComparison compare_pointer_to_direct(const WaveFunction& psi, const CouplingSpec& spec) {
  return compare_pointer_to_direct(psi, spec, default_device_grid(psi.grid(), spec));
}

double pointer_vs_direct(const WaveFunction& psi, const CouplingSpec& spec) {
  return compare_pointer_to_direct(psi, spec).deviation;
}

}  // namespace phasespace
