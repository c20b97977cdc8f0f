// Checks the quadrature oracles against closed forms. The constants asserted
// here are the frozen expected values used by the implementation tests.

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace {

using oracle::kPi;

TEST(Oracle, HermiteFunctionsAreOrthonormal) {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const auto v = oracle::overlap([a](double x) { return oracle::cplx(oracle::fock(a, x)); },
                                     [b](double x) { return oracle::cplx(oracle::fock(b, x)); });
      EXPECT_NEAR(v.real(), a == b ? 1.0 : 0.0, 1e-12) << a << "," << b;
    }
  }
}

TEST(Oracle, WignerAtOrigin) {
  const auto vac = [](double x) { return oracle::cplx(oracle::fock(0, x)); };
  const auto one = [](double x) { return oracle::cplx(oracle::fock(1, x)); };
  EXPECT_NEAR(oracle::wigner_direct(vac, 0, 0), 1.0 / kPi, 1e-12);
  EXPECT_NEAR(oracle::wigner_direct(one, 0, 0), -1.0 / kPi, 1e-12);
}

TEST(Oracle, HusimiOfVacuumAtOrigin) {
  const auto vac = [](double x) { return oracle::cplx(oracle::fock(0, x)); };
  EXPECT_NEAR(oracle::husimi_direct(vac, 0, 0, 1.0), 1.0 / (2.0 * kPi), 1e-12);
  // Off-origin value follows exp(-(x^2 + p^2)/2)/(2 pi).
  EXPECT_NEAR(oracle::husimi_direct(vac, 1.0, -0.5, 1.0), std::exp(-0.625) / (2.0 * kPi), 1e-12);
}

TEST(Oracle, CoherentOverlapAndMoments) {
  const auto c0 = [](double x) { return oracle::coherent(x, 0, 0, 1); };
  const auto c3 = [](double x) { return oracle::coherent(x, 3, 0, 1); };
  EXPECT_NEAR(oracle::overlap(c0, c3).real(), std::exp(-9.0 / 4.0), 1e-12);
  const auto wide = [](double x) { return oracle::coherent(x, 0, 0, 4); };
  EXPECT_NEAR(oracle::position_moment(wide, 2), 2.0, 1e-12);
  EXPECT_NEAR(oracle::position_moment(c0, 2), 0.5, 1e-12);
  const auto one = [](double x) { return oracle::cplx(oracle::fock(1, x)); };
  EXPECT_NEAR(oracle::position_moment(one, 2), 1.5, 1e-12);  // <n=1|x^2|n=1> = 3/2
}

TEST(Oracle, SmoothedVacuumDensityHasUnitVariance) {
  const auto vac = [](double x) { return oracle::cplx(oracle::fock(0, x)); };
  for (double x : {0.0, 0.7, -1.9}) {
    EXPECT_NEAR(oracle::smoothed_density(vac, x, 1.0), std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi), 1e-12);
  }
}

}  // namespace
