#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phasespace/distributions.hpp"
#include "phasespace/wavefunction.hpp"

namespace phasespace {

/// Coupling of the impulsive interaction exp(-i g x_sys p_dev) together with
/// the width of the device's initial squeezed vacuum.
struct CouplingSpec {
  double g = 1.0;
  double delta_device = 1.0;
};

/// Device (x_device) by system (x_system) amplitudes, row-major in the device
/// index: amp[i * system.n() + j].
class CompositeWaveFunction {
 public:
  CompositeWaveFunction(Grid device, Grid system, std::vector<cplx> amp);

  const Grid& device_grid() const noexcept { return device_; }
  const Grid& system_grid() const noexcept { return system_; }
  std::span<const cplx> amp() const noexcept { return amp_; }
  const cplx& at(std::size_t i, std::size_t j) const noexcept { return amp_[i * system_.n() + j]; }

  double norm_squared() const noexcept;

 private:
  Grid device_;
  Grid system_;
  std::vector<cplx> amp_;
};

inline constexpr std::size_t kDefaultDeviceN = 512;

/// Device lattice spanning g * (system extent) plus 8 standard deviations of
/// the device Gaussian on each side.
Grid default_device_grid(const Grid& system, const CouplingSpec& spec,
                         std::size_t device_n = kDefaultDeviceN);

/// |0; delta> (x) |psi>, normalized.
CompositeWaveFunction make_composite(const Grid& device_grid, double delta, const WaveFunction& psi);

/// exp(-i g x_sys p_dev): each system column j is shifted along the device
/// axis by g * x_j through the device momentum representation. Throws if any
/// non-negligible amplitude would be pushed past the device lattice.
CompositeWaveFunction apply_interaction(const CompositeWaveFunction& comp, double g);

/// |<x_dev| <p_sys| Psi>|^2 over (device lattice, system momentum lattice).
PhaseSpaceGrid readout_joint(const CompositeWaveFunction& comp);

/// Device position density sum_j |amp(i, j)|^2 dx_sys.
std::vector<double> device_marginal(const CompositeWaveFunction& comp);

/// Change of variables x_bar = x/g with Jacobian g on the density.
PhaseSpaceGrid weak_rescale(const PhaseSpaceGrid& joint, double g);

struct PointerComparison {
  double deviation = 0.0;  // L-infinity
  double effective_delta = 0.0;
  PhaseSpaceGrid pointer;  // rescaled joint
  PhaseSpaceGrid direct;   // successive_density on the same rows
};

/// Runs the pointer pipeline (with rescaling) and the direct successive
/// density at delta = delta_device/g^2 on the same outcome rows.
PointerComparison compare_pointer_to_direct(const WaveFunction& psi, const CouplingSpec& spec,
                                            const Grid& device_grid);
PointerComparison compare_pointer_to_direct(const WaveFunction& psi, const CouplingSpec& spec);

/// L-infinity deviation of compare_pointer_to_direct on the default device grid.
double pointer_vs_direct(const WaveFunction& psi, const CouplingSpec& spec);

}  // namespace phasespace
