#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phasespace/distributions.hpp"
#include "phasespace/wavefunction.hpp"

namespace phasespace {

/// One shot of the position-then-momentum measurement.
struct SampleRecord {
  double x = 0.0;
  double p = 0.0;
  std::uint64_t shot = 0;
  std::uint64_t stream_seed = 0;

  bool operator==(const SampleRecord&) const noexcept = default;
};

struct BinSpec {
  std::size_t x_bins = 32;
  std::size_t p_bins = 32;
};

struct SampleResult {
  std::vector<SampleRecord> records;
  PhaseSpaceGrid histogram;      // kind = Histogram, density-normalized
  std::uint64_t resampled = 0;   // outcomes redrawn after a deep-tail collapse
};

/// Seed of the per-shot random stream; a pure function of (seed, shot).
std::uint64_t shot_stream_seed(std::uint64_t seed, std::uint64_t shot) noexcept;

/// Draws `shots` outcome pairs: x* from <psi|M^2(x)|psi>, collapse by M(x*),
/// p* from the collapsed momentum density. Both draws invert the CDF of the
/// lattice density treated as piecewise constant over cells centred on the
/// lattice points. Deterministic in (seed, shot) for any thread count.
SampleResult sample_joint(const WaveFunction& psi, double delta, std::int64_t shots,
                          std::uint64_t seed, BinSpec bins = {});

/// Histogram axes covering the union of lattice cells of the grid.
Axis histogram_x_axis(const Grid& grid, std::size_t bins);
Axis histogram_p_axis(const Grid& grid, std::size_t bins);

/// Bins a lattice density into the histogram layout. Returned values are bin
/// probabilities (sum = dist.total()), not densities.
std::vector<double> coarsen_mass(const PhaseSpaceGrid& dist, const Axis& x_bins, const Axis& p_bins);

/// Histogram densities converted back to bin probabilities.
std::vector<double> histogram_mass(const PhaseSpaceGrid& histogram);

/// Half the L1 distance between two probability vectors.
double total_variation(const std::vector<double>& a, const std::vector<double>& b);

/// Shot-noise scale of the TV distance of an N-shot histogram:
/// sum_b sqrt(q_b (1 - q_b) / N) / 2. The expected TV is smaller by sqrt(2/pi).
double shot_noise_tv(const std::vector<double>& mass, std::int64_t shots);

}  // namespace phasespace
