#pragma once

// Points, polylines and L_p distances.
//
// Everything downstream reduces to one geometric primitive: the set of
// parameters t in [0,1] for which the point (1-t)a + tb lies inside the
// closed L_p ball of radius delta around c.  Because t -> ||(1-t)a + tb - c||_p
// is convex that set is always an interval (possibly empty).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polysimp {

using PointView = std::span<const double>;
using Point = std::vector<double>;

/// Default boundary tolerance for parameter comparisons.
inline constexpr double kDefaultTolerance = 1e-9;

/// Parameter value along a polyline, or kInfeasible.  Infinity keeps the
/// natural total order (INFEASIBLE above every finite value).
inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

inline bool is_feasible(double t) { return t != kInfeasible; }

/// The exponent p of an L_p norm; p >= 1 or infinity.
class LpNorm {
public:
  enum class Kind { L1, L2, LInf, General };

  LpNorm() : LpNorm(2.0) {}
  explicit LpNorm(double p) : p_(p) {
    if (!(p >= 1.0))
      throw std::invalid_argument("L_p exponent must satisfy p >= 1");
    if (std::isinf(p))
      kind_ = Kind::LInf;
    else if (p == 1.0)
      kind_ = Kind::L1;
    else if (p == 2.0)
      kind_ = Kind::L2;
    else
      kind_ = Kind::General;
  }

  static LpNorm inf() { return LpNorm(std::numeric_limits<double>::infinity()); }

  double p() const { return p_; }
  Kind kind() const { return kind_; }
  bool is_inf() const { return kind_ == Kind::LInf; }

  std::string to_string() const {
    if (is_inf())
      return "inf";
    std::string s = std::to_string(p_);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.')
      s.pop_back();
    return s;
  }

  friend bool operator==(const LpNorm &a, const LpNorm &b) { return a.p_ == b.p_; }

private:
  double p_;
  Kind kind_ = Kind::L2;
};

/// Closed sub-interval [lo, hi] of [0,1], or empty.
struct UnitInterval {
  double lo = 1.0;
  double hi = 0.0;

  static UnitInterval empty() { return {}; }
  static UnitInterval closed(double lo, double hi) { return {lo, hi}; }
  static UnitInterval full() { return {0.0, 1.0}; }

  bool is_empty() const { return !(lo <= hi); }
  bool contains(double t, double tol = 0.0) const {
    return !is_empty() && t >= lo - tol && t <= hi + tol;
  }
  friend bool operator==(const UnitInterval &, const UnitInterval &) = default;
};

// ---------------------------------------------------------------------------
// norms

namespace detail {

inline void check_same_dim(PointView x, PointView y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) +
                                " vs " + std::to_string(y.size()));
}

/// ||v||_p of an explicit difference vector given as a callable coord(i).
template <typename Coord>
double norm_of(std::size_t d, const LpNorm &norm, Coord coord) {
  switch (norm.kind()) {
  case LpNorm::Kind::L1: {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      s += std::abs(coord(i));
    return s;
  }
  case LpNorm::Kind::L2: {
    // scaled to avoid overflow on the very large hardness coordinates
    double scale = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      scale = std::max(scale, std::abs(coord(i)));
    if (scale == 0.0)
      return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double r = coord(i) / scale;
      s += r * r;
    }
    return scale * std::sqrt(s);
  }
  case LpNorm::Kind::LInf: {
    double m = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      m = std::max(m, std::abs(coord(i)));
    return m;
  }
  case LpNorm::Kind::General:
  default: {
    double scale = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      scale = std::max(scale, std::abs(coord(i)));
    if (scale == 0.0)
      return 0.0;
    const double p = norm.p();
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      s += std::pow(std::abs(coord(i)) / scale, p);
    return scale * std::pow(s, 1.0 / p);
  }
  }
}

} // namespace detail

/// ||x - y||_p.
inline double lp_dist(PointView x, PointView y, const LpNorm &norm) {
  detail::check_same_dim(x, y);
  return detail::norm_of(x.size(), norm, [&](std::size_t i) { return x[i] - y[i]; });
}

/// ||x||_p.
inline double lp_norm(PointView x, const LpNorm &norm) {
  return detail::norm_of(x.size(), norm, [&](std::size_t i) { return x[i]; });
}

/// Distance from c to the point (1-t)a + tb.
inline double dist_along(PointView c, PointView a, PointView b, double t,
                         const LpNorm &norm) {
  return detail::norm_of(c.size(), norm, [&](std::size_t i) {
    return (1.0 - t) * a[i] + t * b[i] - c[i];
  });
}

// ---------------------------------------------------------------------------
// polyline

/// Vertex sequence v_0..v_n in R^d, parametrized over [0, n].
class Polyline {
public:
  Polyline() = default;

  explicit Polyline(std::size_t dim) : dim_(dim) {
    if (dim == 0)
      throw std::invalid_argument("polyline dimension must be >= 1");
  }

  Polyline(std::initializer_list<std::initializer_list<double>> pts) {
    for (const auto &p : pts)
      push_back(std::vector<double>(p));
  }

  explicit Polyline(const std::vector<Point> &pts) {
    for (const auto &p : pts)
      push_back(p);
  }

  void push_back(PointView p) {
    if (dim_ == 0) {
      if (p.empty())
        throw std::invalid_argument("points must have dimension >= 1");
      dim_ = p.size();
    }
    if (p.size() != dim_)
      throw std::invalid_argument("polyline vertices must share one dimension");
    for (double c : p)
      if (!std::isfinite(c))
        throw std::invalid_argument("polyline coordinates must be finite");
    coords_.insert(coords_.end(), p.begin(), p.end());
  }
  void push_back(const Point &p) { push_back(PointView(p)); }

  std::size_t dim() const { return dim_; }
  /// Number of vertices (n+1).
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return size() == 0; }
  /// Number of segments n.
  std::size_t segments() const { return size() == 0 ? 0 : size() - 1; }

  PointView vertex(std::size_t i) const {
    return PointView(coords_.data() + i * dim_, dim_);
  }
  PointView operator[](std::size_t i) const { return vertex(i); }

  /// P[t] = (1-lambda) v_i + lambda v_{i+1} for t = i + lambda.
  Point at(double t) const {
    const std::size_t n = segments();
    if (!(t >= 0.0 && t <= static_cast<double>(n)))
      throw std::out_of_range("parameter outside [0, n]");
    Point out(dim_);
    if (n == 0) {
      std::copy_n(vertex(0).begin(), dim_, out.begin());
      return out;
    }
    std::size_t i = std::min(static_cast<std::size_t>(t), n - 1);
    const double lam = t - static_cast<double>(i);
    auto a = vertex(i), b = vertex(i + 1);
    for (std::size_t k = 0; k < dim_; ++k)
      out[k] = (1.0 - lam) * a[k] + lam * b[k];
    return out;
  }

  /// Sub-polyline P[t0..t1] as an explicit vertex list.
  Polyline subcurve(double t0, double t1) const;

  /// Polyline through the given vertex indices.
  Polyline select(std::span<const std::size_t> indices) const {
    Polyline out(dim_);
    for (auto i : indices)
      out.push_back(vertex(i));
    return out;
  }

  std::vector<Point> points() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < size(); ++i)
      out.emplace_back(vertex(i).begin(), vertex(i).end());
    return out;
  }

  friend bool operator==(const Polyline &a, const Polyline &b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }

private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

inline Polyline Polyline::subcurve(double t0, double t1) const {
  if (!(t0 <= t1))
    throw std::invalid_argument("subcurve requires t0 <= t1");
  Polyline out(dim_);
  out.push_back(at(t0));
  const double first = std::floor(t0) + 1.0;
  for (double k = first; k < t1; k += 1.0)
    out.push_back(vertex(static_cast<std::size_t>(k)));
  out.push_back(at(t1));
  return out;
}

// ---------------------------------------------------------------------------
// ball / segment intersection

namespace detail {

/// Minimizer of a convex function on [0,1] by golden-section search.  Stops
/// early at any point whose value is <= stop_at.
template <typename F>
double convex_argmin(F &&f, int iterations = 120,
                     double stop_at = -std::numeric_limits<double>::infinity()) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.0, hi = 1.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iterations && hi - lo > 1e-17; ++it) {
    if (f1 <= stop_at)
      return x1;
    if (f2 <= stop_at)
      return x2;
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    }
  }
  double best = f1 <= f2 ? x1 : x2;
  double fb = std::min(f1, f2);
  if (f(0.0) <= fb)
    best = 0.0, fb = f(0.0);
  if (f(1.0) < fb)
    best = 1.0;
  return best;
}

/// Boundary between inside (f <= delta) at `in` and outside at `out`.
/// Returns the last parameter known to be inside, to full double precision.
template <typename F> double bisect_boundary(F &&f, double in, double out, double delta) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (in + out);
    if (mid == in || mid == out)
      break;
    if (f(mid) <= delta)
      in = mid;
    else
      out = mid;
  }
  return in;
}

/// Sublevel set {t in [0,1] : f(t) <= delta} of a convex f.
template <typename F> UnitInterval convex_sublevel(F &&f, double delta) {
  const double f0 = f(0.0), f1 = f(1.0);
  if (f0 <= delta && f1 <= delta)
    return UnitInterval::full();
  if (f0 <= delta)
    return UnitInterval::closed(0.0, bisect_boundary(f, 0.0, 1.0, delta));
  if (f1 <= delta)
    return UnitInterval::closed(bisect_boundary(f, 1.0, 0.0, delta), 1.0);
  const double m = convex_argmin(f, 120, delta);
  if (!(f(m) <= delta))
    return UnitInterval::empty();
  return UnitInterval::closed(bisect_boundary(f, m, 0.0, delta),
                              bisect_boundary(f, m, 1.0, delta));
}

inline UnitInterval ball_segment_l2(PointView c, PointView a, PointView b, double delta) {
  // |a - c + t(b - a)|^2 <= delta^2, quadratic in t
  double A = 0.0, B = 0.0, C = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double u = b[i] - a[i];
    const double w = a[i] - c[i];
    A += u * u;
    B += u * w;
    C += w * w;
  }
  // A t^2 + 2 B t + (C - delta^2) <= 0 ; minimizer t* = -B / A
  const double tstar = -B / A;
  const double minval = C - B * B / A; // squared distance to the line
  const double d2 = delta * delta;
  if (minval > d2) {
    // guard against cancellation: confirm at the clamped minimizer
    const double tc = std::clamp(tstar, 0.0, 1.0);
    if (!(dist_along(c, a, b, tc, LpNorm(2.0)) <= delta))
      return UnitInterval::empty();
    return UnitInterval::closed(tc, tc);
  }
  const double half = std::sqrt(std::max(0.0, (d2 - minval) / A));
  double lo = tstar - half, hi = tstar + half;
  lo = std::max(lo, 0.0);
  hi = std::min(hi, 1.0);
  if (lo > hi)
    return UnitInterval::empty();
  return UnitInterval::closed(lo, hi);
}

inline UnitInterval ball_segment_linf(PointView c, PointView a, PointView b, double delta) {
  double lo = 0.0, hi = 1.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double w = a[i] - c[i];
    const double u = b[i] - a[i];
    // -delta <= w + t u <= delta
    if (u == 0.0) {
      if (std::abs(w) > delta)
        return UnitInterval::empty();
      continue;
    }
    double t1 = (-delta - w) / u, t2 = (delta - w) / u;
    if (t1 > t2)
      std::swap(t1, t2);
    lo = std::max(lo, t1);
    hi = std::min(hi, t2);
    if (lo > hi)
      return UnitInterval::empty();
  }
  return UnitInterval::closed(lo, hi);
}

/// f(t) = sum_i |w_i + t u_i| is piecewise linear; the breakpoints are exact.
inline UnitInterval ball_segment_l1(PointView c, PointView a, PointView b, double delta) {
  const std::size_t d = c.size();
  std::vector<double> knots{0.0, 1.0};
  for (std::size_t i = 0; i < d; ++i) {
    const double u = b[i] - a[i];
    if (u != 0.0) {
      const double z = -(a[i] - c[i]) / u;
      if (z > 0.0 && z < 1.0)
        knots.push_back(z);
    }
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  auto f = [&](double t) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      s += std::abs(a[i] - c[i] + t * (b[i] - a[i]));
    return s;
  };
  std::vector<double> vals(knots.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < knots.size(); ++k) {
    vals[k] = f(knots[k]);
    if (vals[k] < vals[best])
      best = k;
  }
  if (!(vals[best] <= delta))
    return UnitInterval::empty();
  // f is linear between consecutive knots
  auto crossing = [&](std::size_t inside, std::size_t outside) {
    const double t0 = knots[inside], t1 = knots[outside];
    const double f0 = vals[inside], f1 = vals[outside];
    double t = t0 + (delta - f0) / (f1 - f0) * (t1 - t0);
    return std::clamp(t, std::min(t0, t1), std::max(t0, t1));
  };
  std::size_t l = best;
  while (l > 0 && vals[l - 1] <= delta)
    --l;
  std::size_t r = best;
  while (r + 1 < knots.size() && vals[r + 1] <= delta)
    ++r;
  const double lo = l == 0 ? knots[0] : crossing(l, l - 1);
  const double hi = r + 1 == knots.size() ? knots[r] : crossing(r, r + 1);
  return UnitInterval::closed(lo, hi);
}

} // namespace detail

namespace detail {

// General p: F(t) = sum |a_k - c_k + t u_k|^p on a common scale, compared with
// delta^p.  F is convex and differentiable, so an inside point comes from a
// sign search on F', and each boundary from Newton steps started outside,
// which approach the root from one side without overshooting.
inline UnitInterval ball_segment_general(PointView c, PointView a, PointView b, double delta,
                                         double p) {
  const std::size_t d = c.size();
  double scale = delta;
  for (std::size_t k = 0; k < d; ++k)
    scale = std::max({scale, std::abs(a[k] - c[k]), std::abs(b[k] - c[k])});
  if (scale == 0.0)
    return UnitInterval::full();
  std::vector<double> r0(d), u(d);
  for (std::size_t k = 0; k < d; ++k) {
    r0[k] = (a[k] - c[k]) / scale;
    u[k] = (b[k] - a[k]) / scale;
  }
  const double target = std::pow(delta / scale, p);
  auto F = [&](double t) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k)
      s += std::pow(std::abs(r0[k] + t * u[k]), p);
    return s;
  };
  auto dF = [&](double t) {
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double r = r0[k] + t * u[k];
      if (r != 0.0)
        s += std::copysign(std::pow(std::abs(r), p - 1.0), r) * u[k];
    }
    return p * s;
  };

  const double f0 = F(0.0), f1 = F(1.0);
  double inside;
  if (f0 <= target) {
    inside = 0.0;
  } else if (f1 <= target) {
    inside = 1.0;
  } else {
    double lo = 0.0, hi = 1.0, flo = f0, fhi = f1, dlo = dF(lo), dhi = dF(hi);
    if (dlo >= 0.0 || dhi <= 0.0)
      return UnitInterval::empty();
    inside = -1.0;
    for (int it = 0; it < 200; ++it) {
      // the tangents at lo and hi bound F from below on [lo, hi]
      const double cross = (fhi - flo + dlo * lo - dhi * hi) / (dlo - dhi);
      if (flo + dlo * (cross - lo) > target * (1.0 + 1e-12))
        break;
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi)
        break;
      const double fm = F(mid), dm = dF(mid);
      if (fm <= target) {
        inside = mid;
        break;
      }
      if (dm < 0.0)
        lo = mid, flo = fm, dlo = dm;
      else
        hi = mid, fhi = fm, dhi = dm;
    }
    if (inside < 0.0)
      return UnitInterval::empty();
  }

  // last inside parameter between `in` and `out`
  auto boundary = [&](double in, double out) {
    if (F(out) <= target)
      return out;
    double x = out;
    for (int it = 0; it < 100; ++it) {
      const double g = F(x) - target, slope = dF(x);
      double next = x - g / slope;
      if (!std::isfinite(next))
        break;
      next = in < out ? std::clamp(next, in, x) : std::clamp(next, x, in);
      if (next == x)
        break;
      if (F(next) <= target) {
        in = next;
        break;
      }
      x = next;
    }
    // x is outside and within rounding noise of the root unless Newton
    // stalled; a short inward walk usually lands inside
    double y = x;
    for (int it = 0; it < 4; ++it) {
      y = std::nextafter(y, in);
      if (y == in || F(y) <= target)
        return y;
    }
    return bisect_boundary(F, in, y, target);
  };
  const double lo = inside == 0.0 ? 0.0 : boundary(inside, 0.0);
  const double hi = inside == 1.0 ? 1.0 : boundary(inside, 1.0);
  return UnitInterval::closed(lo, hi);
}

} // namespace detail

/// {t in [0,1] : ||(1-t)a + tb - c||_p <= delta}.  Closed forms for p in
/// {1, 2, inf}; otherwise bisection on the convex distance function, which
/// resolves boundaries to full double precision (well below `tol`).
inline UnitInterval ball_segment_interval(PointView c, PointView a, PointView b,
                                          double delta, const LpNorm &norm,
                                          double tol = kDefaultTolerance) {
  detail::check_same_dim(c, a);
  detail::check_same_dim(a, b);
  if (!(tol > 0.0))
    throw std::invalid_argument("tolerance must be positive");
  if (!(delta >= 0.0))
    throw std::invalid_argument("delta must be non-negative");
  const bool at_a = lp_dist(c, a, norm) <= delta, at_b = lp_dist(c, b, norm) <= delta;
  if (at_a && at_b)
    return UnitInterval::full();
  if (std::equal(a.begin(), a.end(), b.begin()))
    return UnitInterval::empty();
  UnitInterval iv;
  switch (norm.kind()) {
  case LpNorm::Kind::L2:
    iv = detail::ball_segment_l2(c, a, b, delta);
    break;
  case LpNorm::Kind::LInf:
    iv = detail::ball_segment_linf(c, a, b, delta);
    break;
  case LpNorm::Kind::L1:
    iv = detail::ball_segment_l1(c, a, b, delta);
    break;
  default:
    iv = detail::ball_segment_general(c, a, b, delta, norm.p());
    break;
  }
  // endpoints decided by the direct distance, so a vertex exactly on the
  // sphere is never lost to rounding in the root computation
  if (at_a)
    return UnitInterval::closed(0.0, iv.is_empty() ? 0.0 : std::max(0.0, iv.hi));
  if (at_b)
    return UnitInterval::closed(iv.is_empty() ? 1.0 : std::min(1.0, iv.lo), 1.0);
  return iv;
}

/// The same sublevel set, always via the generic bisection route.
inline UnitInterval ball_segment_interval_bisection(PointView c, PointView a, PointView b,
                                                    double delta, const LpNorm &norm) {
  detail::check_same_dim(c, a);
  detail::check_same_dim(a, b);
  if (std::equal(a.begin(), a.end(), b.begin()))
    return lp_dist(c, a, norm) <= delta ? UnitInterval::full() : UnitInterval::empty();
  return detail::convex_sublevel([&](double t) { return dist_along(c, a, b, t, norm); },
                                 delta);
}

/// min_{t in [0,1]} ||(1-t)a + tb - c||_p.
inline double point_segment_dist(PointView c, PointView a, PointView b, const LpNorm &norm) {
  detail::check_same_dim(c, a);
  detail::check_same_dim(a, b);
  const std::size_t d = c.size();
  if (std::equal(a.begin(), a.end(), b.begin()))
    return lp_dist(c, a, norm);
  auto f = [&](double t) { return dist_along(c, a, b, t, norm); };
  switch (norm.kind()) {
  case LpNorm::Kind::L2: {
    double A = 0.0, B = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      A += (b[i] - a[i]) * (b[i] - a[i]);
      B += (b[i] - a[i]) * (c[i] - a[i]);
    }
    return f(std::clamp(B / A, 0.0, 1.0));
  }
  case LpNorm::Kind::L1: {
    // minimum of a piecewise linear convex function sits on a knot
    double best = std::min(f(0.0), f(1.0));
    for (std::size_t i = 0; i < d; ++i) {
      const double u = b[i] - a[i];
      if (u == 0.0)
        continue;
      const double z = (c[i] - a[i]) / u;
      if (z > 0.0 && z < 1.0)
        best = std::min(best, f(z));
    }
    return best;
  }
  case LpNorm::Kind::LInf: {
    // max of |w_i + t u_i|: optimum at an endpoint, a zero, or a crossing
    double best = std::min(f(0.0), f(1.0));
    auto consider = [&](double t) {
      if (t > 0.0 && t < 1.0)
        best = std::min(best, f(t));
    };
    for (std::size_t i = 0; i < d; ++i) {
      const double wi = a[i] - c[i], ui = b[i] - a[i];
      if (ui != 0.0)
        consider(-wi / ui);
      for (std::size_t k = i + 1; k < d; ++k) {
        const double wk = a[k] - c[k], uk = b[k] - a[k];
        if (ui != uk)
          consider((wk - wi) / (ui - uk));
        if (ui != -uk)
          consider(-(wk + wi) / (ui + uk));
      }
    }
    return best;
  }
  default:
    return f(detail::convex_argmin(f));
  }
}

/// Segment endpoints of the free interval of v_i on segment j, shifted by j.
struct ParamRange {
  double first = kInfeasible;
  double last = kInfeasible;
  bool feasible() const { return is_feasible(first); }
};

/// (t_{i,j}, s_{i,j}): first and last parameter on segment j within delta of v_i.
inline ParamRange t_s_values(const Polyline &P, std::size_t i, std::size_t j, double delta,
                             const LpNorm &norm, double tol = kDefaultTolerance) {
  if (i >= P.size() || j >= P.segments())
    throw std::out_of_range("t_s_values: index out of range");
  const auto iv = ball_segment_interval(P[i], P[j], P[j + 1], delta, norm, tol);
  if (iv.is_empty())
    return {};
  const double base = static_cast<double>(j);
  return {base + iv.lo, base + iv.hi};
}

} // namespace polysimp
