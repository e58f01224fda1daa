#pragma once

// Free-space decision procedures.
//
// Free space of a polyline P (vertical axis, parameter y in [0,n]) against a
// segment ab (horizontal axis, x in [0,1]).  Cell j is [0,1] x [j,j+1]; its
// left edge is the free interval of a on segment j (ver_j), its bottom edge
// the free interval of v_j on ab (hor_j).  Every cell is convex, so an entry
// point and an exit point of one cell are joined by a straight free segment.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polysimp/lp_geometry.hpp"

namespace polysimp {

namespace detail {

/// Lowest parameter index whose cell contains t.
inline std::size_t cell_of(double t, std::size_t n) {
  if (n == 0)
    return 0;
  const auto j = static_cast<std::size_t>(std::floor(t));
  return std::min(j, n - 1);
}

} // namespace detail

/// Earliest parameter on each segment j of P at which the right edge (x = 1)
/// of the free space FS(P, ab) can be reached from (0, tstart) by a monotone
/// path.  Entry j is in [j, j+1] or kInfeasible.
inline std::vector<double> earliest_arrivals(const Polyline &P, PointView a, PointView b,
                                             double tstart, double delta, const LpNorm &norm,
                                             double tol = kDefaultTolerance) {
  const std::size_t n = P.segments();
  if (n == 0)
    throw std::invalid_argument("earliest_arrivals: polyline needs at least one segment");
  if (!(tstart >= -tol && tstart <= static_cast<double>(n) + tol))
    throw std::invalid_argument("earliest_arrivals: tstart outside [0, n]");
  tstart = std::clamp(tstart, 0.0, static_cast<double>(n));
  {
    const double d0 = lp_dist(P.at(tstart), a, norm);
    if (!(d0 <= delta * (1.0 + 1e-9) + tol))
      throw std::invalid_argument("earliest_arrivals: start point not in free space");
  }

  std::vector<double> arrival(n, kInfeasible);
  const std::size_t j0 = detail::cell_of(tstart, n);

  // (1, j0) directly on the starting boundary row: only when tstart == j0
  // lies on a vertex and the whole row y = j0 is free.
  if (j0 > 0 && tstart == static_cast<double>(j0)) {
    if (lp_dist(P[j0], b, norm) <= delta)
      arrival[j0 - 1] = static_cast<double>(j0);
  }

  bool left_alive = true;     // some point of the left edge of cell j is reachable
  double left_low = tstart;   // lowest reachable point on that edge
  double bottom_x = kInfeasible; // leftmost reachable x on the bottom edge of cell j

  for (std::size_t j = j0; j < n; ++j) {
    const double base = static_cast<double>(j);
    const auto right = ball_segment_interval(b, P[j], P[j + 1], delta, norm, tol);
    if (!right.is_empty()) {
      const double t = base + right.lo, s = base + right.hi;
      double best = kInfeasible;
      if (is_feasible(bottom_x))
        best = t;
      if (left_alive && left_low <= s + tol)
        best = std::min(best, std::max(left_low, t));
      arrival[j] = best;
    }
    if (j + 1 == n)
      break;

    const auto top = ball_segment_interval(P[j + 1], a, b, delta, norm, tol);
    double next_bottom = kInfeasible;
    if (!top.is_empty()) {
      if (left_alive)
        next_bottom = top.lo;
      else if (is_feasible(bottom_x) && bottom_x <= top.hi + tol)
        next_bottom = std::max(bottom_x, top.lo);
    }
    if (left_alive) {
      const auto ver = ball_segment_interval(a, P[j], P[j + 1], delta, norm, tol);
      left_alive = !ver.is_empty() && ver.hi >= 1.0 - tol;
      left_low = base + 1.0;
    }
    bottom_x = next_bottom;
    if (!left_alive && !is_feasible(bottom_x)) {
      // nothing reachable any more
      break;
    }
  }
  return arrival;
}

/// delta_F(P[t0..t1], ab) <= delta.
inline bool frechet_segment_decide(const Polyline &P, double t0, double t1, PointView a,
                                   PointView b, double delta, const LpNorm &norm,
                                   double tol = kDefaultTolerance) {
  const std::size_t n = P.segments();
  if (!(t0 <= t1) || t0 < 0.0 || t1 > static_cast<double>(n))
    throw std::invalid_argument("frechet_segment_decide: need 0 <= t0 <= t1 <= n");
  if (!(lp_dist(P.at(t0), a, norm) <= delta) || !(lp_dist(P.at(t1), b, norm) <= delta))
    return false;
  if (t0 == t1 || n == 0) {
    // a single point against the segment: every point of ab must be close
    return lp_dist(P.at(t0), a, norm) <= delta && lp_dist(P.at(t0), b, norm) <= delta;
  }
  const auto arr = earliest_arrivals(P, a, b, t0, delta, norm, tol);
  // (1, t1) is reached from an arrival in its own cell by moving up the
  // convex right edge; when t1 is a vertex the cell below also ends there.
  const std::size_t hi = detail::cell_of(t1, n);
  if (arr[hi] <= t1 + tol)
    return true;
  return hi > 0 && t1 == static_cast<double>(hi) && arr[hi - 1] <= t1 + tol;
}

/// Directed Hausdorff distance from P[t0..t1] to the segment ab: the maximum is
/// attained at a vertex of the subcurve because point-to-segment distance is
/// convex along every edge.
inline double hausdorff_to_segment(const Polyline &P, double t0, double t1, PointView a,
                                   PointView b, const LpNorm &norm) {
  const std::size_t n = P.segments();
  if (!(t0 <= t1) || t0 < 0.0 || t1 > static_cast<double>(n))
    throw std::invalid_argument("hausdorff_to_segment: need 0 <= t0 <= t1 <= n");
  double best = std::max(point_segment_dist(P.at(t0), a, b, norm),
                         point_segment_dist(P.at(t1), a, b, norm));
  for (double k = std::floor(t0) + 1.0; k < t1; k += 1.0)
    best = std::max(best, point_segment_dist(P[static_cast<std::size_t>(k)], a, b, norm));
  return best;
}

/// delta_F(P, Q) <= delta by the standard free-space propagation in O(nm).
inline bool frechet_decide_polylines(const Polyline &P, const Polyline &Q, double delta,
                                     const LpNorm &norm, double tol = kDefaultTolerance) {
  if (P.empty() || Q.empty())
    throw std::invalid_argument("frechet_decide_polylines: empty polyline");
  if (P.dim() != Q.dim())
    throw std::invalid_argument("frechet_decide_polylines: dimension mismatch");
  const std::size_t n = P.segments(), m = Q.segments();
  if (!(lp_dist(P[0], Q[0], norm) <= delta) || !(lp_dist(P[n], Q[m], norm) <= delta))
    return false;
  if (n == 0 || m == 0) {
    // a point against a curve: every vertex (hence every point) must be close
    const Polyline &pt = n == 0 ? P : Q;
    const Polyline &curve = n == 0 ? Q : P;
    for (std::size_t k = 0; k < curve.size(); ++k)
      if (!(lp_dist(pt[0], curve[k], norm) <= delta))
        return false;
    return true;
  }

  // left[i][j]: reachable part of the vertical edge x = i, y in segment j of Q
  // bottom[i][j]: reachable part of the horizontal edge y = j, x in segment i of P
  std::vector<UnitInterval> left((n + 1) * m), bottom(n * (m + 1));
  auto L = [&](std::size_t i, std::size_t j) -> UnitInterval & { return left[i * m + j]; };
  auto B = [&](std::size_t i, std::size_t j) -> UnitInterval & {
    return bottom[i * (m + 1) + j];
  };

  bool alive = true;
  for (std::size_t j = 0; j < m; ++j) {
    auto iv = ball_segment_interval(P[0], Q[j], Q[j + 1], delta, norm, tol);
    if (alive && !iv.is_empty() && iv.lo <= tol) {
      L(0, j) = iv;
      alive = iv.hi >= 1.0 - tol;
    } else {
      L(0, j) = UnitInterval::empty();
      alive = false;
    }
  }
  alive = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto iv = ball_segment_interval(Q[0], P[i], P[i + 1], delta, norm, tol);
    if (alive && !iv.is_empty() && iv.lo <= tol) {
      B(i, 0) = iv;
      alive = iv.hi >= 1.0 - tol;
    } else {
      B(i, 0) = UnitInterval::empty();
      alive = false;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const UnitInterval &lr = L(i, j);
      const UnitInterval &br = B(i, j);
      const bool from_left = !lr.is_empty();
      const bool from_bottom = !br.is_empty();

      // right edge x = i+1, y in segment j
      auto right = ball_segment_interval(P[i + 1], Q[j], Q[j + 1], delta, norm, tol);
      UnitInterval right_reach = UnitInterval::empty();
      if (!right.is_empty()) {
        if (from_bottom)
          right_reach = right;
        else if (from_left && lr.lo <= right.hi + tol)
          // clamp: lo may exceed hi by up to tol
          right_reach = UnitInterval::closed(std::min(std::max(lr.lo, right.lo), right.hi), right.hi);
      }
      L(i + 1, j) = right_reach;

      // top edge y = j+1, x in segment i
      auto top = ball_segment_interval(Q[j + 1], P[i], P[i + 1], delta, norm, tol);
      UnitInterval top_reach = UnitInterval::empty();
      if (!top.is_empty()) {
        if (from_left)
          top_reach = top;
        else if (from_bottom && br.lo <= top.hi + tol)
          top_reach = UnitInterval::closed(std::min(std::max(br.lo, top.lo), top.hi), top.hi);
      }
      B(i, j + 1) = top_reach;
    }
  }
  const auto &end_right = L(n, m - 1);
  const auto &end_top = B(n - 1, m);
  return (!end_right.is_empty() && end_right.hi >= 1.0 - tol) ||
         (!end_top.is_empty() && end_top.hi >= 1.0 - tol);
}

/// Directed Hausdorff distance from P to Q is at most delta: every segment of P
/// must be covered by the union of the (convex) delta-neighbourhoods of Q's
/// segments, intersected with it.
inline bool hausdorff_decide_polylines(const Polyline &P, const Polyline &Q, double delta,
                                       const LpNorm &norm, double tol = kDefaultTolerance) {
  if (P.empty() || Q.empty())
    throw std::invalid_argument("hausdorff_decide_polylines: empty polyline");
  if (P.dim() != Q.dim())
    throw std::invalid_argument("hausdorff_decide_polylines: dimension mismatch");
  auto dist_to_q = [&](PointView x) {
    double best = lp_dist(x, Q[0], norm);
    for (std::size_t j = 0; j + 1 < Q.size(); ++j)
      best = std::min(best, point_segment_dist(x, Q[j], Q[j + 1], norm));
    return best;
  };
  if (P.segments() == 0)
    return dist_to_q(P[0]) <= delta;
  for (std::size_t i = 0; i < P.segments(); ++i) {
    auto a = P[i], b = P[i + 1];
    std::vector<UnitInterval> cover;
    if (Q.segments() == 0) {
      cover.push_back(ball_segment_interval(Q[0], a, b, delta, norm, tol));
    } else {
      for (std::size_t j = 0; j < Q.segments(); ++j) {
        auto qa = Q[j], qb = Q[j + 1];
        auto f = [&](double t) {
          Point x(a.size());
          for (std::size_t k = 0; k < a.size(); ++k)
            x[k] = (1.0 - t) * a[k] + t * b[k];
          return point_segment_dist(x, qa, qb, norm);
        };
        cover.push_back(detail::convex_sublevel(f, delta));
      }
    }
    std::erase_if(cover, [](const UnitInterval &u) { return u.is_empty(); });
    std::sort(cover.begin(), cover.end(),
              [](const UnitInterval &x, const UnitInterval &y) { return x.lo < y.lo; });
    double reached = 0.0;
    bool started = false;
    for (const auto &u : cover) {
      if (!started) {
        if (u.lo > tol)
          return false;
        started = true;
      } else if (u.lo > reached + tol) {
        return false;
      }
      reached = std::max(reached, u.hi);
    }
    if (!started || reached < 1.0 - tol)
      return false;
  }
  return true;
}

} // namespace polysimp
