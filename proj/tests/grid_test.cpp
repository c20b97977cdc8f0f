#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "phasespace/error.hpp"
#include "phasespace/grid.hpp"

namespace {

using namespace phasespace;

TEST(Grid, DefaultDomain) {
  const Grid g = make_grid(256, -16, 16);
  EXPECT_DOUBLE_EQ(g.dx(), 0.125);
  EXPECT_NEAR(g.dp(), 2 * std::numbers::pi / 32, 1e-15);
  EXPECT_NEAR(g.dp(), 0.19635, 1e-5);
  EXPECT_NEAR(g.dx() * g.dp() * static_cast<double>(g.n()), 2 * std::numbers::pi, 1e-14);
  EXPECT_EQ(g, default_grid());
}

TEST(Grid, SmallDomain) {
  const Grid g = make_grid(16, -4, 4);
  EXPECT_DOUBLE_EQ(g.dx(), 0.5);
  EXPECT_NEAR(g.dp(), std::numbers::pi / 4, 1e-15);
}

TEST(Grid, MomentumLatticeIsOrderedAndCentred) {
  const Grid g = make_grid(64, -8, 8);
  EXPECT_NEAR(g.p_min(), -std::numbers::pi / g.dx(), 1e-12);
  EXPECT_DOUBLE_EQ(g.p(32), 0.0);
  for (std::size_t j = 1; j < g.n(); ++j) EXPECT_GT(g.p(j), g.p(j - 1));
  EXPECT_LT(g.p_last(), std::numbers::pi / g.dx());
}

TEST(Grid, RejectsBadSizes) {
  EXPECT_THROW(make_grid(100, -8, 8), Error);
  EXPECT_THROW(make_grid(8, -8, 8), Error);
  EXPECT_THROW(make_grid(0, -8, 8), Error);
}

TEST(Grid, RejectsDomainsWithoutOrigin) {
  EXPECT_THROW(make_grid(64, 1, 8), Error);
  EXPECT_THROW(make_grid(64, -8, 0), Error);
  EXPECT_THROW(make_grid(64, 8, -8), Error);
}

TEST(Grid, NearestIndices) {
  const Grid g = default_grid();
  EXPECT_EQ(g.nearest_x(0.0), 128u);
  EXPECT_EQ(g.nearest_x(-100.0), 0u);
  EXPECT_EQ(g.nearest_x(100.0), 255u);
  EXPECT_EQ(g.nearest_p(0.0), 128u);
  EXPECT_EQ(g.nearest_p(g.p(40) + 0.4 * g.dp()), 40u);
}

TEST(Grid, ErrorCarriesModuleLabel) {
  try {
    make_grid(100, -8, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.module(), "qgrid-core");
  }
}

}  // namespace
