#include "phasespace/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <utility>

#include "phasespace/error.hpp"

namespace phasespace {
namespace {

// FFTW planning is not thread-safe; execution with the new-array interface is.
// Plans are in-place and unaligned so that any std::complex buffer may be used.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan get(int n0, int n1, int sign) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(n0, n1, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    const std::size_t total = static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1 > 0 ? n1 : 1);
    auto* scratch = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * total));
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan = n1 > 0 ? fftw_plan_dft_2d(n0, n1, scratch, scratch, sign, flags)
                            : fftw_plan_dft_1d(n0, scratch, scratch, sign, flags);
    fftw_free(scratch);
    if (plan == nullptr) throw Error(module_name::kCore, "FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

  PlanCache(const PlanCache&) = delete;
  PlanCache& operator=(const PlanCache&) = delete;

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

}  // namespace

void fft_inplace(std::span<cplx> data, FftSign sign) {
  if (data.empty()) return;
  fftw_plan plan = PlanCache::instance().get(static_cast<int>(data.size()), 0, static_cast<int>(sign));
  fftw_execute_dft(plan, as_fftw(data.data()), as_fftw(data.data()));
}

void fft2_inplace(std::span<cplx> data, std::size_t rows, std::size_t cols, FftSign sign) {
  if (data.size() != rows * cols) {
    throw Error(module_name::kCore, "fft2 buffer does not match rows x cols");
  }
  if (data.empty()) return;
  fftw_plan plan = PlanCache::instance().get(static_cast<int>(rows), static_cast<int>(cols),
                                             static_cast<int>(sign));
  fftw_execute_dft(plan, as_fftw(data.data()), as_fftw(data.data()));
}

// With x_k = x_min + k dx and p_j = (j - n/2) dp, dx dp = 2 pi / n:
//   exp(-i x_k p_j) = exp(-i x_min p_j) (-1)^k exp(-2 pi i j k / n)
FourierKernel::FourierKernel(const Grid& grid) : grid_(grid), edge_phase_(grid.n()) {
  for (std::size_t j = 0; j < grid.n(); ++j) {
    edge_phase_[j] = std::polar(1.0, -grid.x_min() * grid.p(j));
  }
}

void FourierKernel::to_momentum(std::span<const cplx> position, std::span<cplx> momentum) const {
  const std::size_t n = grid_.n();
  if (position.size() != n || momentum.size() != n) {
    throw Error(module_name::kCore, "Fourier kernel buffer size mismatch");
  }
  for (std::size_t k = 0; k < n; ++k) momentum[k] = (k & 1U) ? -position[k] : position[k];
  fft_inplace(momentum, FftSign::Forward);
  const double scale = grid_.dx() / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t j = 0; j < n; ++j) momentum[j] *= scale * edge_phase_[j];
}

void FourierKernel::to_position(std::span<const cplx> momentum, std::span<cplx> position) const {
  const std::size_t n = grid_.n();
  if (position.size() != n || momentum.size() != n) {
    throw Error(module_name::kCore, "Fourier kernel buffer size mismatch");
  }
  for (std::size_t j = 0; j < n; ++j) position[j] = momentum[j] * std::conj(edge_phase_[j]);
  fft_inplace(position, FftSign::Backward);
  const double scale = grid_.dp() / std::sqrt(2.0 * std::numbers::pi);
  for (std::size_t k = 0; k < n; ++k) position[k] *= (k & 1U) ? -scale : scale;
}

}  // namespace phasespace
