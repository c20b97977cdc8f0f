#pragma once

#include <complex>
#include <span>
#include <vector>

#include "phasespace/grid.hpp"

namespace phasespace {

using cplx = std::complex<double>;

enum class FftSign { Forward = -1, Backward = +1 };

/// Unnormalized in-place DFT: out_j = sum_k in_k exp(sign * 2*pi*i*j*k/n).
/// Plans are cached per (n, sign); execution is thread-safe.
void fft_inplace(std::span<cplx> data, FftSign sign);

/// Unnormalized in-place 2D DFT over a row-major rows x cols array.
void fft2_inplace(std::span<cplx> data, std::size_t rows, std::size_t cols, FftSign sign);

/// Continuous-kernel Fourier transform between a Grid's position and momentum
/// lattices, using <p|x> = exp(-i x p)/sqrt(2 pi):
///
///   psi~(p_j) = dx/sqrt(2 pi) * sum_k exp(-i x_k p_j) psi(x_k)
///   psi(x_k)  = dp/sqrt(2 pi) * sum_j exp(+i x_k p_j) psi~(p_j)
///
/// The pair is exactly unitary with respect to the quadrature norms
/// sum |.|^2 dx and sum |.|^2 dp. Construction precomputes the phase tables;
/// the object is immutable and may be shared across threads.
class FourierKernel {
 public:
  explicit FourierKernel(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }

  void to_momentum(std::span<const cplx> position, std::span<cplx> momentum) const;
  void to_position(std::span<const cplx> momentum, std::span<cplx> position) const;

 private:
  Grid grid_;
  std::vector<cplx> edge_phase_;  // exp(-i x_min p_j)
};

}  // namespace phasespace
