#include "phasespace/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "phasespace/error.hpp"
#include "phasespace/measurement.hpp"
#include "phasespace/parallel.hpp"

namespace phasespace {
namespace {

constexpr double kCollapseNormFloor = 1e-12;
constexpr std::size_t kShotsPerChunk = 4096;
constexpr int kMaxRedraws = 1000;

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& gen) noexcept {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Piecewise-constant density over cells [c_k - h/2, c_k + h/2).
class CellSampler {
 public:
  void assign(double first_centre, double step, const std::vector<double>& density) {
    first_edge_ = first_centre - 0.5 * step;
    step_ = step;
    cumulative_.resize(density.size() + 1);
    cumulative_[0] = 0.0;
    for (std::size_t k = 0; k < density.size(); ++k) cumulative_[k + 1] = cumulative_[k] + density[k];
  }

  double total() const noexcept { return cumulative_.back(); }

  double draw(double u) const noexcept {
    const double target = u * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    std::size_t cell = static_cast<std::size_t>(it - cumulative_.begin());
    cell = std::clamp<std::size_t>(cell, 1, cumulative_.size() - 1) - 1;
    // Skip empty cells that upper_bound can land on at the boundaries.
    while (cumulative_[cell + 1] - cumulative_[cell] <= 0.0 && cell + 2 < cumulative_.size()) ++cell;
    const double mass = cumulative_[cell + 1] - cumulative_[cell];
    const double frac = mass > 0.0 ? std::clamp((target - cumulative_[cell]) / mass, 0.0, 1.0) : 0.5;
    return first_edge_ + (static_cast<double>(cell) + frac) * step_;
  }

 private:
  double first_edge_ = 0.0;
  double step_ = 1.0;
  std::vector<double> cumulative_;
};

std::size_t bin_of(double value, const Axis& axis) noexcept {
  const double lo = axis.start - 0.5 * axis.step;
  const double r = std::floor((value - lo) / axis.step);
  if (!(r > 0.0)) return 0;
  return std::min(static_cast<std::size_t>(r), axis.count - 1);
}

}  // namespace

std::uint64_t shot_stream_seed(std::uint64_t seed, std::uint64_t shot) noexcept {
  return splitmix64(splitmix64(seed) ^ (shot * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
}

Axis histogram_x_axis(const Grid& grid, std::size_t bins) {
  const double width = static_cast<double>(grid.n()) * grid.dx() / static_cast<double>(bins);
  return Axis{grid.x_min() - 0.5 * grid.dx() + 0.5 * width, width, bins};
}

Axis histogram_p_axis(const Grid& grid, std::size_t bins) {
  const double width = static_cast<double>(grid.n()) * grid.dp() / static_cast<double>(bins);
  return Axis{grid.p_min() - 0.5 * grid.dp() + 0.5 * width, width, bins};
}

SampleResult sample_joint(const WaveFunction& psi_in, double delta, std::int64_t shots, std::uint64_t seed,
                          BinSpec bins) {
  if (shots < 0) throw Error(module_name::kMeasurement, "shot count must be non-negative");
  if (bins.x_bins == 0 || bins.p_bins == 0) throw Error(module_name::kMeasurement, "histogram needs at least one bin");
  const WaveFunction psi = in_basis(psi_in, Basis::Position);
  const Grid& grid = psi.grid();
  const std::size_t n = grid.n();

  const Axis xb = histogram_x_axis(grid, bins.x_bins);
  const Axis pb = histogram_p_axis(grid, bins.p_bins);
  SampleResult result;
  result.histogram = PhaseSpaceGrid{xb, pb, DistKind::Histogram, delta,
                                    std::vector<double>(bins.x_bins * bins.p_bins, 0.0)};
  const auto total_shots = static_cast<std::size_t>(shots);
  if (total_shots == 0) {
    validate(GaussianMeasurement{0.0, delta}, grid);
    return result;
  }

  CellSampler x_sampler;
  x_sampler.assign(grid.x(0), grid.dx(), m_density(psi, delta));
  const FourierKernel kernel(grid);

  result.records.resize(total_shots);
  const std::size_t chunks = (total_shots + kShotsPerChunk - 1) / kShotsPerChunk;
  std::vector<std::uint64_t> redraws(chunks, 0);

  parallel_for(chunks, [&](std::size_t chunk) {
    std::vector<cplx> collapsed(n);
    std::vector<cplx> momentum(n);
    std::vector<double> p_density(n);
    CellSampler p_sampler;
    const std::size_t begin = chunk * kShotsPerChunk;
    const std::size_t end = std::min(total_shots, begin + kShotsPerChunk);
    for (std::size_t shot = begin; shot < end; ++shot) {
      const std::uint64_t stream = shot_stream_seed(seed, shot);
      std::mt19937_64 gen(stream);
      double x_star = 0.0;
      double norm2 = 0.0;
      for (int attempt = 0;; ++attempt) {
        if (attempt > kMaxRedraws) {
          throw Error(module_name::kMeasurement, "sampler could not draw a compatible position outcome");
        }
        x_star = x_sampler.draw(uniform01(gen));
        const GaussianMeasurement meas{x_star, delta};
        norm2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          collapsed[k] = measurement_weight(meas, grid.x(k)) * psi[k];
          norm2 += std::norm(collapsed[k]);
        }
        norm2 *= grid.dx();
        if (std::sqrt(norm2) > kCollapseNormFloor) break;
        ++redraws[chunk];
      }
      kernel.to_momentum(collapsed, momentum);
      for (std::size_t j = 0; j < n; ++j) p_density[j] = std::norm(momentum[j]);
      p_sampler.assign(grid.p(0), grid.dp(), p_density);
      const double p_star = p_sampler.draw(uniform01(gen));
      result.records[shot] = SampleRecord{x_star, p_star, shot, stream};
    }
  });

  for (auto r : redraws) result.resampled += r;
  std::vector<std::uint64_t> counts(bins.x_bins * bins.p_bins, 0);
  for (const auto& rec : result.records) ++counts[bin_of(rec.x, xb) * bins.p_bins + bin_of(rec.p, pb)];
  const double scale = 1.0 / (static_cast<double>(total_shots) * xb.step * pb.step);
  for (std::size_t b = 0; b < counts.size(); ++b) result.histogram.values[b] = static_cast<double>(counts[b]) * scale;
  return result;
}

std::vector<double> coarsen_mass(const PhaseSpaceGrid& dist, const Axis& x_bins, const Axis& p_bins) {
  std::vector<double> mass(x_bins.count * p_bins.count, 0.0);
  const double xlo = x_bins.start - 0.5 * x_bins.step;
  const double xhi = xlo + static_cast<double>(x_bins.count) * x_bins.step;
  const double plo = p_bins.start - 0.5 * p_bins.step;
  const double phi = plo + static_cast<double>(p_bins.count) * p_bins.step;
  const double w = dist.weight();
  for (std::size_t i = 0; i < dist.x.count; ++i) {
    const double x = dist.x.at(i);
    if (x < xlo || x >= xhi) continue;
    const std::size_t bx = bin_of(x, x_bins);
    for (std::size_t j = 0; j < dist.p.count; ++j) {
      const double p = dist.p.at(j);
      if (p < plo || p >= phi) continue;
      mass[bx * p_bins.count + bin_of(p, p_bins)] += dist.at(i, j) * w;
    }
  }
  return mass;
}

std::vector<double> histogram_mass(const PhaseSpaceGrid& histogram) {
  std::vector<double> mass(histogram.values.size());
  const double area = histogram.weight();
  for (std::size_t b = 0; b < mass.size(); ++b) mass[b] = histogram.values[b] * area;
  return mass;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw Error(module_name::kMeasurement, "TV distance between vectors of different size");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

double shot_noise_tv(const std::vector<double>& mass, std::int64_t shots) {
  if (shots <= 0) return 0.0;
  double sum = 0.0;
  for (double q : mass) {
    const double qc = std::clamp(q, 0.0, 1.0);
    sum += std::sqrt(qc * (1.0 - qc) / static_cast<double>(shots));
  }
  return 0.5 * sum;
}

}  // namespace phasespace
