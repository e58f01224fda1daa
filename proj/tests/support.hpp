#pragma once

// Shared helpers for the test suite: random instances and independent
// brute-force oracles.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "polysimp/polysimp.hpp"

namespace testsupport {

using namespace polysimp;

inline const std::vector<double> &all_ps() {
  static const std::vector<double> ps{1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};
  return ps;
}

inline Polyline random_grid_polyline(std::mt19937_64 &rng, std::size_t vertices, std::size_t d,
                                     int radius = 3) {
  std::uniform_int_distribution<int> coord(-radius, radius);
  Polyline P(d);
  for (std::size_t i = 0; i < vertices; ++i) {
    Point p(d);
    for (auto &x : p)
      x = coord(rng);
    P.push_back(p);
  }
  return P;
}

inline Polyline random_real_polyline(std::mt19937_64 &rng, std::size_t vertices, std::size_t d,
                                     double radius = 3.0) {
  std::uniform_real_distribution<double> coord(-radius, radius);
  Polyline P(d);
  for (std::size_t i = 0; i < vertices; ++i) {
    Point p(d);
    for (auto &x : p)
      x = coord(rng);
    P.push_back(p);
  }
  return P;
}

/// Dense sampling of a polyline: `per_segment` samples per segment plus the end.
inline std::vector<Point> sample(const Polyline &P, std::size_t per_segment) {
  std::vector<Point> out;
  if (P.segments() == 0) {
    out.push_back(P.at(0.0));
    return out;
  }
  for (std::size_t i = 0; i < P.segments(); ++i)
    for (std::size_t s = 0; s < per_segment; ++s)
      out.push_back(P.at(static_cast<double>(i) + static_cast<double>(s) / per_segment));
  out.push_back(P.at(static_cast<double>(P.segments())));
  return out;
}

/// Monotone BFS over the discretised free space of two sampled curves
/// (discrete Frechet decision on dense samples).  Converges to the continuous
/// answer away from the decision boundary.
inline bool grid_frechet(const Polyline &P, const Polyline &Q, double delta, const LpNorm &norm,
                         std::size_t per_segment = 64) {
  const auto a = sample(P, per_segment), b = sample(Q, per_segment);
  const std::size_t n = a.size(), m = b.size();
  std::vector<char> reach(n * m, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (!(lp_dist(a[i], b[j], norm) <= delta))
        continue;
      if (i == 0 && j == 0)
        reach[0] = 1;
      else
        reach[i * m + j] = (i > 0 && reach[(i - 1) * m + j]) || (j > 0 && reach[i * m + j - 1]) ||
                           (i > 0 && j > 0 && reach[(i - 1) * m + j - 1]);
    }
  return reach[n * m - 1] != 0;
}

/// Grid estimate of the earliest arrival on each segment of P at the end of
/// segment ab, starting at parameter tstart.
inline std::vector<double> grid_arrivals(const Polyline &P, PointView a, PointView b, double tstart,
                                         double delta, const LpNorm &norm, std::size_t steps) {
  const std::size_t n = P.segments();
  const std::size_t rows = n * steps + 1, cols = steps + 1;
  auto t_of = [&](std::size_t r) { return static_cast<double>(r) / steps; };
  std::vector<char> reach(rows * cols, 0);
  Point x(a.size());
  for (std::size_t r = 0; r < rows; ++r) {
    const double t = t_of(r);
    if (t + 1e-12 < tstart)
      continue;
    const Point y = P.at(t);
    for (std::size_t c = 0; c < cols; ++c) {
      const double s = static_cast<double>(c) / steps;
      for (std::size_t k = 0; k < a.size(); ++k)
        x[k] = (1 - s) * a[k] + s * b[k];
      if (!(lp_dist(x, y, norm) <= delta))
        continue;
      const bool start = c == 0 && std::abs(t - tstart) <= 0.5 / steps;
      reach[r * cols + c] = start || (r > 0 && reach[(r - 1) * cols + c]) ||
                            (c > 0 && reach[r * cols + c - 1]) ||
                            (r > 0 && c > 0 && reach[(r - 1) * cols + c - 1]);
    }
  }
  std::vector<double> out(n, kInfeasible);
  for (std::size_t r = 0; r < rows; ++r)
    if (reach[r * cols + cols - 1]) {
      const double t = t_of(r);
      for (std::size_t j = 0; j < n; ++j)
        if (t >= j && t <= j + 1 && t < out[j])
          out[j] = t;
    }
  return out;
}

/// Every per-shortcut decision (both measures) and the oracle sizes of all
/// three variants.  Two deltas with equal signatures bracket no decision
/// boundary the oracles depend on.
struct DecisionSignature {
  std::vector<char> hausdorff, frechet;
  std::size_t local_h = 0, local_f = 0, global_f = 0;
  bool operator==(const DecisionSignature &) const = default;
};

inline DecisionSignature decision_signature(const Polyline &P, double delta, const LpNorm &norm) {
  DecisionSignature s;
  const std::size_t n = P.segments();
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t k = i + 1; k <= n; ++k) {
      s.hausdorff.push_back(shortcut_admissible(P, i, k, delta, norm, LocalMeasure::Hausdorff));
      s.frechet.push_back(shortcut_admissible(P, i, k, delta, norm, LocalMeasure::Frechet));
    }
  s.local_h = brute_force_min_simplification(P, delta, norm, Variant::LocalHausdorff).size;
  s.local_f = brute_force_min_simplification(P, delta, norm, Variant::LocalFrechet).size;
  s.global_f = brute_force_min_simplification(P, delta, norm, Variant::GlobalFrechet).size;
  return s;
}

inline constexpr double kCertifiedMargin = 1e-6;

/// Draws delta until the decisions at delta - margin and delta + margin agree.
inline std::optional<double> certified_delta(const Polyline &P, const LpNorm &norm,
                                             std::mt19937_64 &rng, double lo, double hi,
                                             int attempts = 20) {
  std::uniform_real_distribution<double> pick(lo, hi);
  for (int a = 0; a < attempts; ++a) {
    const double delta = pick(rng);
    if (decision_signature(P, delta - kCertifiedMargin, norm) ==
        decision_signature(P, delta + kCertifiedMargin, norm))
      return delta;
  }
  return std::nullopt;
}

inline CellReachInstance random_cellreach(std::mt19937_64 &rng, std::size_t cells,
                                          double empty_prob = 0.1, double infeasible_prob = 0.2) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<Cost> cost(1, static_cast<Cost>(cells));
  CellReachInstance inst;
  for (std::size_t j = 0; j + 1 < cells; ++j) {
    if (u(rng) < empty_prob) {
      inst.passages.push_back(UnitInterval::empty());
    } else {
      double a = u(rng), b = u(rng);
      if (a > b)
        std::swap(a, b);
      // occasional point passages and full passages
      const double r = u(rng);
      if (r < 0.05)
        b = a;
      else if (r < 0.1)
        a = 0.0, b = 1.0;
      inst.passages.push_back(UnitInterval::closed(a, b));
    }
  }
  for (std::size_t j = 0; j < cells; ++j)
    inst.entry_costs.push_back(u(rng) < infeasible_prob ? kInfeasibleCost : cost(rng));
  return inst;
}

/// The figure instance: passages between cells 1-2, 2-3, 3-4 and entry costs
/// 1, 4, 8 (the top cell's cost plays no role).
inline CellReachInstance figure_instance() {
  return {{UnitInterval::closed(0.6, 0.85), UnitInterval::closed(0.3, 0.65),
           UnitInterval::closed(0.1, 0.4)},
          {1, 4, 8, kInfeasibleCost}};
}

} // namespace testsupport
