#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"

using namespace polysimp;

namespace {

// expected ||c_i - mid(a_j, b_k)||_p^p for one coordinate gadget
double table_value(double p, bool all_ones) {
  if (p < 2.0)
    return all_ones ? std::pow(2.0, p) * (std::pow(2.0, p - 1.0) - 1.0) : std::pow(2.0, p);
  return all_ones ? std::pow(2.0, p + 2.0) - 8.0 : std::pow(2.0, 2.0 * p) - 8.0;
}

Point minus(PointView x, PointView y) {
  Point out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = x[i] - y[i];
  return out;
}

OVInstance single(const char *a, const char *b, const char *c) {
  auto bits = [](const char *s) {
    BitVector v;
    for (; *s; ++s)
      v.push_back(static_cast<std::uint8_t>(*s - '0'));
    return v;
  };
  return {{bits(a)}, {bits(b)}, {bits(c)}};
}

} // namespace

TEST(CountCommonOnes, Examples) {
  EXPECT_EQ(count_common_ones({1, 1}, {1, 1}, {1, 1}), 2u);
  EXPECT_EQ(count_common_ones({0, 0, 0}, {0, 0, 0}, {0, 0, 0}), 0u);
  EXPECT_EQ(count_common_ones({1, 0}, {1, 1}, {0, 1}), 0u);
  EXPECT_THROW(count_common_ones({1}, {1, 1}, {1, 1}), std::invalid_argument);
}

TEST(SolveOV, Examples) {
  EXPECT_TRUE(solve_ov_bruteforce(single("0", "0", "0")));
  EXPECT_FALSE(solve_ov_bruteforce(single("1", "1", "1")));
  EXPECT_TRUE(solve_ov_bruteforce(single("10", "11", "01")));
}

TEST(OVInstance, Validation) {
  OVInstance bad = single("10", "11", "0");
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  OVInstance nonbinary = single("12", "11", "01");
  EXPECT_THROW(nonbinary.validate(), std::invalid_argument);
  OVInstance uneven = single("1", "1", "1");
  uneven.A.push_back({0});
  EXPECT_THROW(uneven.validate(), std::invalid_argument);
}

TEST(GadgetParams, Examples) {
  const auto g3 = gadget_params(3.0, 1);
  EXPECT_DOUBLE_EQ(g3.beta1, 24.0);
  EXPECT_DOUBLE_EQ(g3.beta2, 56.0);

  const auto g1 = gadget_params(1.0, 2);
  EXPECT_DOUBLE_EQ(g1.theta[0], 0.0);
  EXPECT_DOUBLE_EQ(g1.theta[1], 0.0);
  EXPECT_DOUBLE_EQ(g1.theta[2], 1.0);
  EXPECT_DOUBLE_EQ(g1.theta[3], 0.0);
  EXPECT_DOUBLE_EQ(g1.theta[4], 1.0);
  EXPECT_DOUBLE_EQ(g1.beta1, 0.0);
  EXPECT_DOUBLE_EQ(g1.beta2, 2.0);
  EXPECT_DOUBLE_EQ(g1.eta1, 1.0);
  EXPECT_DOUBLE_EQ(g1.eta2, 72.0);
  EXPECT_DOUBLE_EQ(g1.gamma1, 144.0);
  EXPECT_NEAR(g1.delta, 146.0, 1e-9);
  EXPECT_NEAR(g1.gamma2, 5400.0, 1e-6);

  EXPECT_THROW(gadget_params(2.0, 1), std::invalid_argument);
  EXPECT_THROW(gadget_params(std::numeric_limits<double>::infinity(), 1), std::invalid_argument);
  EXPECT_THROW(gadget_params(0.5, 1), std::invalid_argument);
  EXPECT_THROW(gadget_params(1.0, 0), std::invalid_argument);
  EXPECT_THROW(gadget_params(8.0, 4), std::invalid_argument);
}

TEST(GadgetParams, Invariants) {
  for (double p : {1.0, 1.25, 1.5, 1.9, 2.5, 3.0, 4.0})
    for (std::size_t d : {1u, 2u, 5u})
      for (double slack : {0.0, kHardCurveSlack}) {
        const auto g = gadget_params(p, d, slack);
        EXPECT_LT(g.beta1, g.beta2);
        EXPECT_DOUBLE_EQ(g.eta2, 36.0 * static_cast<double>(d) * g.eta1);
        const double far = std::pow(std::pow(g.gamma1, p) + static_cast<double>(d) * g.beta2, 1 / p);
        EXPECT_GE(g.gamma2, 4 * g.delta);
        EXPECT_GE(g.gamma2 * (1 + 1e-12), g.eta2 * (1 + far / (far - g.delta)));
        const double exact = std::pow(std::pow(g.gamma1, p) + static_cast<double>(d) * g.beta2 -
                                          (g.beta2 - g.beta1),
                                      1 / p);
        EXPECT_NEAR(g.delta_exact, exact, 1e-9 * exact);
        EXPECT_GE(g.delta, g.delta_exact);
        EXPECT_LT(g.delta, far);
        EXPECT_LT(g.eta2, g.gamma1);
        EXPECT_LE(g.gamma1, g.delta);
      }
}

TEST(CoordinateGadget, Examples) {
  const auto g1 = gadget_params(1.0, 1);
  EXPECT_EQ(coordinate_gadget(GadgetRole::A, 0, g1), (Point{0, 0, 0, 0, 1, 2, 0, 0, 0}));
  for (double p : {1.0, 1.5, 3.0}) {
    const auto g = gadget_params(p, 1);
    EXPECT_EQ(coordinate_gadget(GadgetRole::C, 0, g), (Point{0, 0, 0, 0, 0, 0, 0, 0, g.theta[4]}));
  }
  const Point mid = segment_point(coordinate_gadget(GadgetRole::A, 1, g1),
                                  coordinate_gadget(GadgetRole::B, 1, g1), 0.0);
  EXPECT_EQ(mid, (Point{0, 0, 0, 0, -1, 0, 0, 0, 0}));
  const Point c1 = coordinate_gadget(GadgetRole::C, 1, g1);
  EXPECT_DOUBLE_EQ(pth_power_norm(minus(c1, mid), 1.0), 0.0);
  EXPECT_THROW(coordinate_gadget(GadgetRole::A, 2, g1), std::invalid_argument);
}

TEST(CoordinateGadget, DistanceTable) {
  for (double p : {1.0, 1.5, 3.0, 4.0}) {
    const auto g = gadget_params(p, 1);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          const Point mid = segment_point(coordinate_gadget(GadgetRole::A, j, g),
                                          coordinate_gadget(GadgetRole::B, k, g), 0.0);
          const double got = pth_power_norm(minus(coordinate_gadget(GadgetRole::C, i, g), mid), p);
          const double want = table_value(p, i && j && k);
          EXPECT_NEAR(got, want, 1e-9 * std::max(1.0, std::abs(want)))
              << "p=" << p << " ijk=" << i << j << k;
        }
  }
}

TEST(BlockDecomposition, PowerNormAdds) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-5, 5);
  for (double p : {1.0, 1.5, 3.0, 4.0})
    for (int it = 0; it < 100; ++it) {
      Point whole;
      double sum = 0.0;
      for (int b = 0; b < 4; ++b) {
        Point block(9);
        for (auto &x : block)
          x = u(rng);
        sum += pth_power_norm(block, p);
        whole.insert(whole.end(), block.begin(), block.end());
      }
      EXPECT_NEAR(pth_power_norm(whole, p), sum, 1e-9 * sum);
    }
}

TEST(HardCurve, Shape) {
  const auto h = build_hard_curve(single("1", "0", "1"), 1.0);
  ASSERT_EQ(h.Q.size(), 5u);
  EXPECT_EQ(h.Q.dim(), 12u);
  EXPECT_TRUE(std::equal(h.Q[0].begin(), h.Q[0].end(), h.Q[4].begin()));
  EXPECT_EQ(h.origin.front().first, 'S');
  EXPECT_EQ(h.origin[1].first, 'A');
  EXPECT_EQ(h.origin[2].first, 'C');
  EXPECT_EQ(h.origin[3].first, 'B');
  EXPECT_THROW(build_hard_curve(single("1", "0", "1"), 2.0), std::invalid_argument);
}

TEST(HardCurve, MidpointDistanceCountsCommonOnes) {
  std::mt19937_64 rng(67);
  for (double p : {1.0, 3.0})
    for (int it = 0; it < 20; ++it) {
      const std::size_t d = 1 + it % 4;
      const OVInstance inst = random_ov_instance(1, d, 0.6, rng);
      const auto h = build_hard_curve(inst, p);
      const auto &g = h.params;
      const Point mid = segment_point(h.Q[1], h.Q[3], 0.0);
      const double got = pth_power_norm(minus(h.Q[2], mid), p);
      const double common = static_cast<double>(count_common_ones(inst.A[0], inst.B[0], inst.C[0]));
      const double want = std::pow(g.gamma1, p) + g.beta2 * static_cast<double>(d) -
                          (g.beta2 - g.beta1) * common;
      EXPECT_NEAR(got, want, 1e-9 * want);
    }
}

TEST(HardCurve, IntraClusterClose) {
  std::mt19937_64 rng(71);
  for (double p : {1.0, 1.5, 3.0})
    for (int it = 0; it < 20; ++it) {
      const OVInstance inst = random_ov_instance(4, 3, 0.5, rng);
      const auto h = build_hard_curve(inst, p);
      const LpNorm norm(p);
      for (std::size_t block = 0; block < 3; ++block)
        for (std::size_t r = 0; r < 4; ++r)
          for (std::size_t s = r + 1; s < 4; ++s) {
            const double dist = lp_dist(h.Q[1 + 4 * block + r], h.Q[1 + 4 * block + s], norm);
            EXPECT_LE(dist, h.params.eta2);
          }
      EXPECT_LT(h.params.eta2, h.params.gamma1);
      EXPECT_LE(h.params.gamma1, h.delta);
    }
}

TEST(VerifyGadgets, RandomInstancesPass) {
  std::mt19937_64 rng(73);
  for (double p : {1.0, 3.0}) {
    const OVInstance inst = random_ov_instance(3, 3, 0.5, rng);
    const auto rep = verify_gadget_properties(inst, p, 200);
    ASSERT_EQ(rep.properties.size(), 6u);
    for (const auto &c : rep.properties) {
      EXPECT_TRUE(c.pass) << c.name;
      EXPECT_GT(c.worst_margin, 0.0) << c.name;
    }
  }
}

TEST(VerifyGadgets, CommonOneStaysWithinDelta) {
  // a = b = c = (1): the midpoint sits strictly inside the delta ball
  const auto h = build_hard_curve(single("1", "1", "1"), 1.0);
  const Point mid = segment_point(h.Q[1], h.Q[3], 0.0);
  EXPECT_LE(lp_dist(h.Q[2], mid, LpNorm(1.0)), h.delta);
  EXPECT_TRUE(verify_gadget_properties(single("1", "1", "1"), 1.0, 100).all_pass());
}

TEST(VerifyGadgets, RejectsLargeInstances) {
  std::mt19937_64 rng(79);
  EXPECT_THROW(verify_gadget_properties(random_ov_instance(kVerifyMaxN + 1, 2, 0.5, rng), 1.0),
               std::invalid_argument);
  EXPECT_THROW(verify_gadget_properties(random_ov_instance(2, kVerifyMaxD + 1, 0.5, rng), 1.0),
               std::invalid_argument);
}

TEST(Reduction, SmallInstancesAllSolvers) {
  std::mt19937_64 rng(83);
  for (int it = 0; it < 12; ++it) {
    const double p = it % 2 ? 3.0 : 1.0;
    const OVInstance inst = random_ov_instance(1 + it % 3, 1 + it % 4, 0.6, rng);
    const auto h = build_hard_curve(inst, p);
    const std::size_t want = solve_ov_bruteforce(inst) ? 5 : 4;
    const LpNorm norm(p);
    EXPECT_EQ(simplify_global_frechet(h.Q, h.delta, norm).size, want);
    EXPECT_EQ(simplify_local(h.Q, h.delta, norm, LocalMeasure::Frechet).size, want);
    EXPECT_EQ(simplify_local(h.Q, h.delta, norm, LocalMeasure::Hausdorff).size, want);
  }
}
