#pragma once

// Timing harness: seeded random walks in the plane, delta fixed at the 25th
// percentile of pairwise vertex distances.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysimp/lp_geometry.hpp"
#include "polysimp/solver.hpp"

namespace polysimp {

inline constexpr std::size_t kReferenceMaxSegments = 64;

/// A polyline with `vertices` points whose heading drifts smoothly.
inline Polyline random_walk(std::size_t vertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> turn(0.0, 0.6);
  std::uniform_real_distribution<double> step(0.5, 1.5);
  Polyline P(2);
  double x = 0.0, y = 0.0, heading = 0.0;
  for (std::size_t i = 0; i < vertices; ++i) {
    P.push_back(Point{x, y});
    heading += turn(rng);
    const double len = step(rng);
    x += len * std::cos(heading);
    y += len * std::sin(heading);
  }
  return P;
}

/// q-quantile (0..1) of all pairwise vertex distances.
inline double pairwise_distance_quantile(const Polyline &P, const LpNorm &norm, double q) {
  std::vector<double> d;
  d.reserve(P.size() * (P.size() - 1) / 2);
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t k = i + 1; k < P.size(); ++k)
      d.push_back(lp_dist(P[i], P[k], norm));
  if (d.empty())
    return 0.0;
  const auto at = static_cast<std::size_t>(q * static_cast<double>(d.size() - 1));
  std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(at), d.end());
  return d[at];
}

struct BenchRow {
  std::size_t size = 0; // number of segments n
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double millis = 0.0;
  std::size_t result_size = 0;
};

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t size, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(size), static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

inline std::vector<BenchRow> run_scaling_bench(Algorithm algo, const std::vector<std::size_t> &sizes,
                                               std::size_t trials, std::uint64_t seed,
                                               const LpNorm &norm = LpNorm(2.0),
                                               double tol = kDefaultTolerance) {
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    if (sizes[r] == 0)
      throw std::invalid_argument("bench: sizes must be positive");
    if (r > 0 && !(sizes[r - 1] < sizes[r]))
      throw std::invalid_argument("bench: sizes must be strictly increasing");
    if (algo == Algorithm::GlobalFrechetReference && sizes[r] > kReferenceMaxSegments)
      throw std::invalid_argument("bench: reference algorithm is capped at n <= " +
                                  std::to_string(kReferenceMaxSegments));
    if (algo == Algorithm::Oracle && sizes[r] > kOracleMaxSegments)
      throw std::invalid_argument("bench: oracle is capped at n <= " +
                                  std::to_string(kOracleMaxSegments));
  }
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes)
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = trial_seed(seed, n, t);
      const Polyline P = random_walk(n + 1, s);
      const double delta = pairwise_distance_quantile(P, norm, 0.25);
      const auto start = std::chrono::steady_clock::now();
      const auto res = run_algorithm(algo, P, delta, norm, tol);
      const auto stop = std::chrono::steady_clock::now();
      rows.push_back({n, t, s, std::chrono::duration<double, std::milli>(stop - start).count(),
                      res.size});
    }
  return rows;
}

inline double median(std::vector<double> v) {
  if (v.empty())
    throw std::invalid_argument("median of empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

} // namespace polysimp
