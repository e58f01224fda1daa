#pragma once

// Hard instances from forall-forall-exists Orthogonal Vectors.
//
// Each bit becomes a nine-coordinate gadget such that the midpoint of an
// (a, b) gadget pair is closer to the c gadget exactly when all three bits are
// one.  Concatenating gadgets over the d bits and appending three control
// coordinates gives the curve
//   Q = <s, a~_1..a~_n, c~_1..c~_n, b~_1..b~_n, s>
// whose minimum simplification has size 4 if some pair (a, b) is non-orthogonal
// to every c, and size 5 otherwise.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polysimp/lp_geometry.hpp"

namespace polysimp {

using BitVector = std::vector<std::uint8_t>;

struct OVInstance {
  std::vector<BitVector> A, B, C;

  std::size_t n() const { return A.size(); }
  std::size_t d() const { return A.empty() ? 0 : A.front().size(); }

  void validate() const {
    if (A.empty() || A.size() != B.size() || A.size() != C.size())
      throw std::invalid_argument("OV instance: A, B, C must have the same size n >= 1");
    const std::size_t dim = d();
    if (dim == 0)
      throw std::invalid_argument("OV instance: dimension must be >= 1");
    for (const auto *set : {&A, &B, &C})
      for (const auto &v : *set) {
        if (v.size() != dim)
          throw std::invalid_argument("OV instance: vectors of different dimension");
        for (auto bit : v)
          if (bit > 1)
            throw std::invalid_argument("OV instance: entries must be 0 or 1");
      }
  }
};

/// Number of coordinates where a, b and c are all one.
inline std::size_t count_common_ones(const BitVector &a, const BitVector &b, const BitVector &c) {
  if (a.size() != b.size() || a.size() != c.size())
    throw std::invalid_argument("count_common_ones: dimension mismatch");
  std::size_t k = 0;
  for (std::size_t l = 0; l < a.size(); ++l)
    k += (a[l] & b[l] & c[l]) != 0;
  return k;
}

/// For all a, for all b, some c has no common one with both.
inline bool solve_ov_bruteforce(const OVInstance &inst) {
  for (const auto &a : inst.A)
    for (const auto &b : inst.B) {
      bool found = false;
      for (const auto &c : inst.C)
        if (count_common_ones(a, b, c) == 0) {
          found = true;
          break;
        }
      if (!found)
        return false;
    }
  return true;
}

inline OVInstance random_ov_instance(std::size_t n, std::size_t d, double density,
                                     std::mt19937_64 &rng) {
  std::bernoulli_distribution bit(density);
  OVInstance inst;
  for (auto *set : {&inst.A, &inst.B, &inst.C}) {
    set->resize(n, BitVector(d));
    for (auto &v : *set)
      for (auto &x : v)
        x = bit(rng) ? 1 : 0;
  }
  return inst;
}

struct GadgetParams {
  double p = 1.0;
  std::size_t d = 1;
  std::array<double, 5> theta{};
  double beta1 = 0.0, beta2 = 0.0;
  double eta1 = 0.0, eta2 = 0.0;
  double gamma1 = 0.0, gamma2 = 0.0;
  /// Threshold delta actually used, and the value at which a single common
  /// one lands exactly on the boundary.
  double delta = 0.0, delta_exact = 0.0;
};

/// Fraction of the gap between the one-common-one distance and the
/// orthogonal distance at which delta is placed by build_hard_curve.
inline constexpr double kHardCurveSlack = 0.5;

inline GadgetParams gadget_params(double p, std::size_t d, double slack = 0.0) {
  if (!(p >= 1.0) || std::isinf(p))
    throw std::invalid_argument("gadget_params: p must lie in [1, inf)");
  if (p == 2.0)
    throw std::invalid_argument("gadget_params: p = 2 admits no coordinate gadget");
  if (d == 0)
    throw std::invalid_argument("gadget_params: d must be >= 1");
  if (!(slack >= 0.0 && slack < 1.0))
    throw std::invalid_argument("gadget_params: slack must lie in [0, 1)");
  GadgetParams g;
  g.p = p;
  g.d = d;
  const double two_p = std::pow(2.0, p);
  if (p < 2.0) {
    g.theta = {std::pow(two_p / 2.0 - 1.0, 1.0 / p), 0.0, 1.0, 0.0,
               std::pow(2.0, (p - 1.0) / p)};
    g.beta1 = two_p * (two_p / 2.0 - 1.0);
    g.beta2 = two_p;
  } else {
    const double r = std::pow(two_p - 2.0, 1.0 / p);
    g.theta = {0.0, r, std::pow(two_p - 4.0, 1.0 / p), r,
               std::pow(two_p * two_p - 3.0 * two_p, 1.0 / p)};
    g.beta1 = 4.0 * two_p - 8.0;
    g.beta2 = two_p * two_p - 8.0;
  }
  g.eta1 = *std::max_element(g.theta.begin(), g.theta.end());
  g.eta2 = 36.0 * static_cast<double>(d) * g.eta1;
  g.gamma1 = 2.0 * g.eta2;
  const double base = std::pow(g.gamma1, p) + static_cast<double>(d) * g.beta2;
  const double far = std::pow(base, 1.0 / p);
  g.delta_exact = std::pow(base - (g.beta2 - g.beta1), 1.0 / p);
  // for large p and d the two distances agree to nearly every bit
  if (!(far - g.delta_exact > 1e-12 * far))
    throw std::invalid_argument("gadget_params: threshold gap below double precision for this p and d");
  g.delta = g.delta_exact + slack * (far - g.delta_exact);
  g.gamma2 = std::max(4.0 * g.delta, g.eta2 * (1.0 + far / (far - g.delta)));
  return g;
}

enum class GadgetRole { A, B, C };

/// The nine-coordinate gadget for one bit.
inline Point coordinate_gadget(GadgetRole role, int bit, const GadgetParams &g) {
  if (g.p == 2.0 || !(g.p >= 1.0) || std::isinf(g.p))
    throw std::invalid_argument("coordinate_gadget: unsupported p");
  if (bit != 0 && bit != 1)
    throw std::invalid_argument("coordinate_gadget: bit must be 0 or 1");
  const auto [t1, t2, t3, t4, t5] = g.theta;
  switch (role) {
  // coordinates 5-6 of the one-bit rows are chosen so that the four (a, b)
  // midpoints come out as (t3, 0), (0, -t3), (-t3, 0), (0, t3) there
  case GadgetRole::A:
    return bit == 0 ? Point{-t1, 0, -t2, 0, t3, 2 * t3, t4, -2 * t4, 0}
                    : Point{t1, 2 * t1, t2, -2 * t2, -t3, 0, -t4, 0, 0};
  case GadgetRole::B:
    return bit == 0 ? Point{-t1, 0, t2, 2 * t2, t3, -2 * t3, -t4, 0, 0}
                    : Point{t1, -2 * t1, -t2, 0, -t3, 0, t4, 2 * t4, 0};
  case GadgetRole::C:
    return bit == 0 ? Point{0, 0, 0, 0, 0, 0, 0, 0, t5}
                    : Point{-t1, 0, -t2, 0, -t3, 0, -t4, 0, 0};
  }
  return {};
}

/// (1/2 - alpha) x + (1/2 + alpha) y for alpha in [-1/2, 1/2].
inline Point segment_point(PointView x, PointView y, double alpha) {
  Point out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k)
    out[k] = (0.5 - alpha) * x[k] + (0.5 + alpha) * y[k];
  return out;
}

/// sum |x_k|^p.
inline double pth_power_norm(PointView x, double p) {
  double s = 0.0;
  for (double v : x)
    s += std::pow(std::abs(v), p);
  return s;
}

struct HardCurve {
  Polyline Q;
  double delta = 0.0;
  GadgetParams params;
  /// Per vertex of Q: 'S', 'A', 'B' or 'C' and the index within that set.
  std::vector<std::pair<char, std::size_t>> origin;
};

namespace detail {

inline Point vector_gadget(GadgetRole role, const BitVector &v, const GadgetParams &g) {
  Point out;
  out.reserve(9 * v.size() + 3);
  for (auto bit : v) {
    const Point block = coordinate_gadget(role, bit, g);
    out.insert(out.end(), block.begin(), block.end());
  }
  switch (role) {
  case GadgetRole::A:
    out.insert(out.end(), {g.gamma1, 0.0, 0.0});
    break;
  case GadgetRole::B:
    out.insert(out.end(), {g.gamma1, g.gamma2, 0.0});
    break;
  case GadgetRole::C:
    out.insert(out.end(), {0.0, g.gamma2 / 2.0, 0.0});
    break;
  }
  return out;
}

inline Point start_point(const GadgetParams &g) {
  Point s(9 * g.d + 3, 0.0);
  s[9 * g.d + 1] = g.gamma2 / 2.0;
  s[9 * g.d + 2] = g.gamma2;
  return s;
}

} // namespace detail

inline HardCurve build_hard_curve(const OVInstance &inst, double p,
                                  double slack = kHardCurveSlack) {
  inst.validate();
  HardCurve h;
  h.params = gadget_params(p, inst.d(), slack);
  h.delta = h.params.delta;
  const Point s = detail::start_point(h.params);
  h.Q = Polyline(s.size());
  h.Q.push_back(s);
  h.origin.emplace_back('S', 0);
  const std::pair<GadgetRole, const std::vector<BitVector> *> order[] = {
      {GadgetRole::A, &inst.A}, {GadgetRole::C, &inst.C}, {GadgetRole::B, &inst.B}};
  for (const auto &[role, set] : order) {
    const char tag = role == GadgetRole::A ? 'A' : role == GadgetRole::B ? 'B' : 'C';
    for (std::size_t r = 0; r < set->size(); ++r) {
      h.Q.push_back(detail::vector_gadget(role, (*set)[r], h.params));
      h.origin.emplace_back(tag, r);
    }
  }
  h.Q.push_back(s);
  h.origin.emplace_back('S', 0);
  return h;
}

struct PropertyCheck {
  std::string name;
  bool pass = true;
  /// Smallest slack by which the property held (negative when violated).
  double worst_margin = std::numeric_limits<double>::infinity();
};

struct GadgetReport {
  std::vector<PropertyCheck> properties;
  bool all_pass() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyCheck &c) { return c.pass; });
  }
};

inline constexpr std::size_t kVerifyMaxN = 8;
inline constexpr std::size_t kVerifyMaxD = 6;

/// Numerically checks P1..P6 on the curve built from `inst`.
inline GadgetReport verify_gadget_properties(const OVInstance &inst, double p,
                                             std::size_t grid = 1000,
                                             double slack = kHardCurveSlack) {
  inst.validate();
  if (inst.n() > kVerifyMaxN || inst.d() > kVerifyMaxD)
    throw std::invalid_argument("verify_gadget_properties: instance too large (n <= 8, d <= 6)");
  const HardCurve h = build_hard_curve(inst, p, slack);
  const double delta = h.delta;
  const LpNorm norm(p);
  const std::size_t n = inst.n();

  std::vector<double> alphas;
  for (std::size_t r = 0; r <= grid; ++r)
    alphas.push_back(-0.5 + static_cast<double>(r) / static_cast<double>(std::max<std::size_t>(grid, 1)));
  for (double a : {-0.5, -1.0 / 6.0, 0.0, 0.5})
    alphas.push_back(a);

  auto vertex = [&](char set, std::size_t r) -> PointView {
    switch (set) {
    case 'A':
      return h.Q[1 + r];
    case 'C':
      return h.Q[1 + n + r];
    case 'B':
      return h.Q[1 + 2 * n + r];
    default:
      return h.Q[0];
    }
  };
  // min over the alpha grid of ||x - P_{y1 y2}(alpha)||
  Point buf(h.Q.dim());
  auto grid_min = [&](PointView x, PointView y1, PointView y2) {
    double best = std::numeric_limits<double>::infinity();
    for (double a : alphas) {
      for (std::size_t k = 0; k < buf.size(); ++k)
        buf[k] = x[k] - ((0.5 - a) * y1[k] + (0.5 + a) * y2[k]);
      best = std::min(best, lp_norm(buf, norm));
    }
    return best;
  };
  auto record = [](PropertyCheck &c, double margin) {
    c.worst_margin = std::min(c.worst_margin, margin);
    c.pass = c.pass && margin > 0.0;
  };

  PropertyCheck p1{"P1"}, p2{"P2"}, p3{"P3"}, p4{"P4"}, p5{"P5"}, p6{"P6"};

  for (std::size_t ia = 0; ia < n; ++ia)
    for (std::size_t ib = 0; ib < n; ++ib)
      for (std::size_t ic = 0; ic < n; ++ic) {
        const PointView a = vertex('A', ia), b = vertex('B', ib), c = vertex('C', ic);
        const double mid = lp_dist(c, segment_point(a, b, 0.0), norm);
        const bool near = count_common_ones(inst.A[ia], inst.B[ib], inst.C[ic]) > 0;
        // P2: the midpoint is within delta exactly for non-orthogonal triples
        record(p2, near ? delta - mid : mid - delta);
        // P1: when the midpoint is far, the whole segment is far
        if (mid > delta)
          record(p1, std::min(grid_min(c, a, b), point_segment_dist(c, a, b, norm)) - delta);
        else
          record(p1, std::numeric_limits<double>::infinity());
      }

  for (char set : {'A', 'B', 'C'})
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = r + 1; q < n; ++q)
        record(p3, delta - lp_dist(vertex(set, r), vertex(set, q), norm));
  if (n == 1)
    record(p3, delta);

  auto far_from_segments = [&](PropertyCheck &check, const std::vector<PointView> &ends,
                               char target, bool pairs) {
    for (std::size_t u = 0; u < ends.size(); ++u)
      for (std::size_t v = pairs ? u : 0; v < (pairs ? ends.size() : 1); ++v) {
        const PointView y1 = pairs ? ends[u] : h.Q[0];
        const PointView y2 = pairs ? ends[v] : ends[u];
        for (std::size_t r = 0; r < n; ++r) {
          const PointView x = vertex(target, r);
          const double m = std::min({grid_min(x, y1, y2), lp_dist(x, y1, norm),
                                     lp_dist(x, y2, norm)});
          record(check, m - delta);
        }
      }
  };
  std::vector<PointView> sbc{h.Q[0]}, sac{h.Q[0]}, ab;
  for (std::size_t r = 0; r < n; ++r) {
    sbc.push_back(vertex('B', r));
    sbc.push_back(vertex('C', r));
    sac.push_back(vertex('A', r));
    sac.push_back(vertex('C', r));
    ab.push_back(vertex('A', r));
    ab.push_back(vertex('B', r));
  }
  far_from_segments(p4, sbc, 'A', true);
  far_from_segments(p5, sac, 'B', true);
  far_from_segments(p6, ab, 'C', false);

  return {{p1, p2, p3, p4, p5, p6}};
}

} // namespace polysimp
