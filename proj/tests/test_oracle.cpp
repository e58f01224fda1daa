#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace polysimp;
using testsupport::all_ps;

namespace {
const Variant kVariants[] = {Variant::LocalHausdorff, Variant::LocalFrechet,
                             Variant::GlobalFrechet};
}

TEST(Oracle, Examples) {
  const Polyline seg{{0, 0}, {3, 1}};
  const Polyline zig{{0, 0}, {1, 1}, {2, 0}};
  const Polyline line{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  for (Variant v : kVariants) {
    for (double delta : {0.0, 1.0, 10.0})
      EXPECT_EQ(brute_force_min_simplification(seg, delta, LpNorm(2), v).size, 2u);
    EXPECT_EQ(brute_force_min_simplification(zig, 0.5, LpNorm(2), v).size, 3u);
    EXPECT_EQ(brute_force_min_simplification(line, 0.0, LpNorm(2), v).size, 2u);
  }
}

TEST(Oracle, SizeCap) {
  Polyline P(1);
  for (std::size_t i = 0; i <= kOracleMaxSegments + 1; ++i)
    P.push_back(Point{static_cast<double>(i)});
  EXPECT_THROW(brute_force_min_simplification(P, 0.0, LpNorm(2), Variant::GlobalFrechet),
               std::invalid_argument);
}

TEST(Oracle, LexicographicFirstWitness) {
  // unit square walk: [0,1,3] and [0,2,3] both work at 0.75, [0,3] does not
  const Polyline P{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (Variant v : kVariants) {
    const auto r = brute_force_min_simplification(P, 0.75, LpNorm(2), v);
    EXPECT_EQ(r.indices, (std::vector<std::size_t>{0, 1, 3}));
    EXPECT_TRUE(simplification_valid(P, {0, 2, 3}, 0.75, LpNorm(2), v));
  }
}

TEST(Oracle, MonotoneInDeltaAndOrdered) {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 100; ++it) {
    const LpNorm norm(all_ps()[it % all_ps().size()]);
    const Polyline P = testsupport::random_grid_polyline(rng, 7, 2);
    std::size_t prev[3] = {100, 100, 100};
    for (double delta : {0.25, 0.75, 1.5, 2.5, 4.0}) {
      std::size_t s[3];
      for (int v = 0; v < 3; ++v) {
        const auto r = brute_force_min_simplification(P, delta, norm, kVariants[v]);
        s[v] = r.size;
        EXPECT_TRUE(simplification_valid(P, r.indices, delta, norm, kVariants[v]));
        EXPECT_LE(s[v], prev[v]);
        prev[v] = s[v];
      }
      EXPECT_LE(s[0], s[1]);
      EXPECT_LE(s[2], s[1]);
    }
  }
}

TEST(SimplificationValid, Shape) {
  const Polyline zig{{0, 0}, {1, 1}, {2, 0}};
  EXPECT_FALSE(simplification_valid(zig, {}, 5.0, LpNorm(2), Variant::GlobalFrechet));
  EXPECT_FALSE(simplification_valid(zig, {0, 0, 2}, 5.0, LpNorm(2), Variant::GlobalFrechet));
  EXPECT_FALSE(simplification_valid(zig, {0, 1}, 5.0, LpNorm(2), Variant::GlobalFrechet));
  EXPECT_TRUE(simplification_valid(zig, {0, 2}, 1.0, LpNorm(2), Variant::GlobalFrechet));
  EXPECT_FALSE(simplification_valid(zig, {0, 2}, 0.9, LpNorm(2), Variant::GlobalFrechet));
}
