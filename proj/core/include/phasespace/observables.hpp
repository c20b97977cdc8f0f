#pragma once

#include <string_view>

#include "phasespace/wavefunction.hpp"

namespace phasespace {

/// Low-order polynomial observables used for expectation identities.
/// Number is (X2 + P2 - 1)/2.
enum class Observable1D { X, P, X2, P2, Number };

inline constexpr Observable1D kAllObservables[] = {
    Observable1D::X, Observable1D::P, Observable1D::X2, Observable1D::P2, Observable1D::Number};

std::string_view to_string(Observable1D obs) noexcept;
Observable1D observable_from_string(std::string_view name);

/// Reference expectation in the direct basis: X and X2 from position
/// quadrature, P and P2 from momentum quadrature.
double expectation(const WaveFunction& psi, Observable1D obs);

/// Classical polynomial obs(x, p) whose Weyl quantization is the observable.
double weyl_symbol(Observable1D obs, double x, double p) noexcept;

}  // namespace phasespace
