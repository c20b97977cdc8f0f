#include <gtest/gtest.h>

#include <cmath>

#include "phasespace/error.hpp"
#include "phasespace/measurement.hpp"
#include "phasespace/pointer.hpp"
#include "phasespace/states.hpp"

namespace {

using namespace phasespace;

const Grid kGrid = default_grid();

TEST(Composite, ProductStateIsNormalized) {
  const Grid dev = make_grid(128, -10, 10);
  const auto comp = make_composite(dev, 1.0, cat_state(kGrid, 2, 1));
  EXPECT_NEAR(comp.norm_squared(), 1.0, 1e-12);
  EXPECT_EQ(comp.amp().size(), 128u * kGrid.n());
}

TEST(Composite, RejectsMismatchedAmplitudes) {
  EXPECT_THROW(CompositeWaveFunction(kGrid, kGrid, std::vector<cplx>(10)), Error);
}

TEST(DeviceGrid, CoversShiftedSupport) {
  const Grid dev = default_device_grid(kGrid, {0.5, 2.0});
  EXPECT_EQ(dev.n(), kDefaultDeviceN);
  EXPECT_LE(dev.x_min(), -0.5 * 16 - 8.0);
  EXPECT_GE(dev.x_last(), 0.5 * 16 + 7.9);
  EXPECT_THROW(default_device_grid(kGrid, {0.0, 1.0}), Error);
  EXPECT_THROW(default_device_grid(kGrid, {1.0, -1.0}), Error);
}

TEST(Interaction, PreservesNormAndShiftsPointer) {
  const WaveFunction psi = coherent_state(kGrid, 2.0, 0.0, 0.5);
  const CouplingSpec spec{0.5, 1.0};
  const Grid dev = default_device_grid(kGrid, spec);
  const auto evolved = apply_interaction(make_composite(dev, 1.0, psi), spec.g);
  EXPECT_NEAR(evolved.norm_squared(), 1.0, 1e-10);
  const auto rho = device_marginal(evolved);
  double mean = 0, mass = 0;
  for (std::size_t i = 0; i < dev.n(); ++i) {
    mean += dev.x(i) * rho[i];
    mass += rho[i];
  }
  EXPECT_NEAR(mass * dev.dx(), 1.0, 1e-10);
  EXPECT_NEAR(mean / mass, spec.g * 2.0, 1e-8);
}

TEST(Interaction, ZeroCouplingIsIdentity) {
  const Grid dev = make_grid(128, -10, 10);
  const auto comp = make_composite(dev, 1.0, fock_state(kGrid, 1));
  const auto same = apply_interaction(comp, 0.0);
  for (std::size_t i = 0; i < comp.amp().size(); ++i) ASSERT_NEAR(std::abs(same.amp()[i] - comp.amp()[i]), 0.0, 1e-12);
}

TEST(Interaction, RejectsShiftsOffTheDeviceLattice) {
  const Grid dev = make_grid(128, -8, 8);
  const auto comp = make_composite(dev, 1.0, cat_state(kGrid, 4, 1));
  EXPECT_THROW(apply_interaction(comp, 2.0), Error);
  try {
    apply_interaction(comp, 2.0);
  } catch (const Error& e) {
    EXPECT_EQ(e.module(), "pointer-model");
  }
}

TEST(Readout, JointMarginalsAreConsistent) {
  const Grid dev = make_grid(256, -14, 14);
  const auto evolved = apply_interaction(make_composite(dev, 1.0, cat_state(kGrid, 2, 1)), 1.0);
  const auto joint = readout_joint(evolved);
  EXPECT_EQ(joint.x_label, "x_device");
  EXPECT_EQ(joint.p_label, "p_system");
  EXPECT_NEAR(joint.total(), 1.0, 1e-10);
  const auto over_p = marginal(joint, MarginalAxis::OverP);
  const auto rho = device_marginal(evolved);
  for (std::size_t i = 0; i < dev.n(); ++i) ASSERT_NEAR(over_p[i], rho[i], 1e-10);
}

TEST(WeakRescale, JacobianAndLabels) {
  const Grid dev = make_grid(256, -14, 14);
  const auto joint = readout_joint(apply_interaction(make_composite(dev, 1.0, vacuum(kGrid)), 0.5));
  const auto bar = weak_rescale(joint, 0.5);
  EXPECT_EQ(bar.x_label, "x_bar");
  EXPECT_DOUBLE_EQ(bar.x.step, joint.x.step / 0.5);
  EXPECT_NEAR(bar.total(), joint.total(), 1e-12);
  EXPECT_THROW(weak_rescale(joint, 0.0), Error);
}

TEST(PointerModel, ReproducesHusimiAtEffectiveWidth) {
  for (double g : {1.0, 0.5, 2.0}) {
    const CouplingSpec spec{g, 1.0};
    const auto cmp = compare_pointer_to_direct(fock_state(kGrid, 1), spec);
    EXPECT_DOUBLE_EQ(cmp.effective_delta, 1.0 / (g * g));
    EXPECT_LT(cmp.deviation, 1e-5) << "g=" << g;
  }
}

TEST(PointerModel, DeviceWidthSetsEffectiveWidth) {
  const CouplingSpec spec{0.7, 2.0};
  const auto cmp = compare_pointer_to_direct(cat_state(kGrid, 2, 1), spec);
  EXPECT_NEAR(cmp.effective_delta, 2.0 / 0.49, 1e-12);
  EXPECT_LT(cmp.deviation, 1e-5);
}

TEST(PointerModel, LatticeAlignedDeviceMatchesHusimiRows) {
  // Device spacing g*dx: rescaled row 128 + k lands on system position k.
  const Grid dev = make_grid_with_spacing(512, -16, 0.5 * kGrid.dx());
  const WaveFunction psi = cat_state(kGrid, 2, 1);
  const auto cmp = compare_pointer_to_direct(psi, {0.5, 0.25}, dev);
  EXPECT_DOUBLE_EQ(cmp.effective_delta, 1.0);
  const auto q = husimi(psi, 1.0);
  for (std::size_t k : {96u, 128u, 150u}) {
    EXPECT_NEAR(cmp.pointer.x.at(128 + k), kGrid.x(k), 1e-12);
    for (std::size_t j = 0; j < kGrid.n(); ++j) ASSERT_NEAR(cmp.pointer.at(128 + k, j), q.at(k, j), 1e-5);
  }
}

TEST(PointerModel, UnitCouplingJointIsHusimi) {
  const Grid dev = make_grid_with_spacing(512, -32, kGrid.dx());
  const WaveFunction psi = superpose(1.0, fock_state(kGrid, 2), cplx(0, 1), coherent_state(kGrid, 1, -1, 1));
  for (double delta : {0.5, 1.0, 2.0}) {
    const auto joint = readout_joint(apply_interaction(make_composite(dev, delta, psi), 1.0));
    const auto q = husimi(psi, delta);
    double worst = 0;
    for (std::size_t k = 0; k < kGrid.n(); ++k) {
      for (std::size_t j = 0; j < kGrid.n(); ++j) worst = std::max(worst, std::abs(joint.at(k + 128, j) - q.at(k, j)));
    }
    EXPECT_LT(worst, 1e-6) << "delta=" << delta;
  }
}

}  // namespace
