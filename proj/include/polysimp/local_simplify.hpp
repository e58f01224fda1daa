#pragma once

// Local-Hausdorff / Local-Frechet simplification: shortcut graph plus a
// minimum-hop path from 0 to n.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "polysimp/frechet.hpp"
#include "polysimp/lp_geometry.hpp"
#include "polysimp/simplification.hpp"

namespace polysimp {

enum class LocalMeasure { Hausdorff, Frechet };

inline Variant variant_of(LocalMeasure m) {
  return m == LocalMeasure::Hausdorff ? Variant::LocalHausdorff : Variant::LocalFrechet;
}

/// Whether P[i..k] may be replaced by the segment v_i v_k.
inline bool shortcut_admissible(const Polyline &P, std::size_t i, std::size_t k, double delta,
                                const LpNorm &norm, LocalMeasure measure,
                                double tol = kDefaultTolerance) {
  const double t0 = static_cast<double>(i), t1 = static_cast<double>(k);
  if (measure == LocalMeasure::Hausdorff)
    return hausdorff_to_segment(P, t0, t1, P[i], P[k], norm) <= delta;
  return frechet_segment_decide(P, t0, t1, P[i], P[k], delta, norm, tol);
}

/// Forward edges (i, k), i < k, stored as one bit row per source vertex.
class ShortcutGraph {
public:
  explicit ShortcutGraph(std::size_t nodes)
      : nodes_(nodes), words_((nodes + 63) / 64), bits_(nodes * words_, 0) {}

  std::size_t nodes() const { return nodes_; }

  void set(std::size_t i, std::size_t k) { bits_[i * words_ + k / 64] |= bit(k); }
  bool has(std::size_t i, std::size_t k) const {
    return (bits_[i * words_ + k / 64] & bit(k)) != 0;
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto w : bits_)
      c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

private:
  static std::uint64_t bit(std::size_t k) { return std::uint64_t{1} << (k % 64); }

  std::size_t nodes_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

inline ShortcutGraph build_shortcut_graph(const Polyline &P, double delta, const LpNorm &norm,
                                          LocalMeasure measure,
                                          double tol = kDefaultTolerance) {
  if (!(delta >= 0.0))
    throw std::invalid_argument("delta must be non-negative");
  const std::size_t nodes = P.size();
  ShortcutGraph g(nodes);
  for (std::size_t i = 0; i < nodes; ++i)
    for (std::size_t k = i + 1; k < nodes; ++k)
      if (k == i + 1 || shortcut_admissible(P, i, k, delta, norm, measure, tol))
        g.set(i, k);
  return g;
}

/// Lexicographically smallest minimum-hop path 0 -> n.
inline std::vector<std::size_t> shortest_path(const ShortcutGraph &g) {
  const std::size_t nodes = g.nodes();
  if (nodes == 0)
    return {};
  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  // hop distance to the last vertex, by BFS over reversed edges
  std::vector<std::size_t> to_end(nodes, kUnreached);
  std::queue<std::size_t> q;
  to_end[nodes - 1] = 0;
  q.push(nodes - 1);
  while (!q.empty()) {
    const std::size_t k = q.front();
    q.pop();
    for (std::size_t i = 0; i < k; ++i)
      if (to_end[i] == kUnreached && g.has(i, k)) {
        to_end[i] = to_end[k] + 1;
        q.push(i);
      }
  }
  if (to_end[0] == kUnreached)
    throw std::logic_error("shortcut graph has no path to the last vertex");
  std::vector<std::size_t> path{0};
  std::size_t cur = 0;
  while (cur != nodes - 1) {
    std::size_t next = cur + 1;
    for (; next < nodes; ++next)
      if (g.has(cur, next) && to_end[next] + 1 == to_end[cur])
        break;
    path.push_back(next);
    cur = next;
  }
  return path;
}

inline SimplificationResult simplify_local(const Polyline &P, double delta, const LpNorm &norm,
                                           LocalMeasure measure,
                                           double tol = kDefaultTolerance) {
  if (P.empty())
    throw std::invalid_argument("simplify_local: empty polyline");
  if (P.segments() == 0)
    return trivial_result(variant_of(measure), delta, norm);
  auto path = shortest_path(build_shortcut_graph(P, delta, norm, measure, tol));
  const std::size_t size = path.size();
  return {size, std::move(path), variant_of(measure), delta, norm};
}

/// Re-checks every consecutive index pair of a Local-* witness.
inline bool local_witness_valid(const Polyline &P, const std::vector<std::size_t> &indices,
                                double delta, const LpNorm &norm, LocalMeasure measure,
                                double tol = kDefaultTolerance) {
  if (indices.empty() || indices.front() != 0 || indices.back() + 1 != P.size())
    return false;
  for (std::size_t r = 0; r + 1 < indices.size(); ++r) {
    if (!(indices[r] < indices[r + 1]))
      return false;
    if (!shortcut_admissible(P, indices[r], indices[r + 1], delta, norm, measure, tol))
      return false;
  }
  return true;
}

} // namespace polysimp
