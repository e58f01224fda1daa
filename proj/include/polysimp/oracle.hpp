#pragma once

// Exhaustive minimum simplification for small inputs: subsets of interior
// vertices by increasing size, lexicographic within a size, each certified by
// the full decision procedure.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "polysimp/frechet.hpp"
#include "polysimp/local_simplify.hpp"
#include "polysimp/lp_geometry.hpp"
#include "polysimp/simplification.hpp"

namespace polysimp {

inline constexpr std::size_t kOracleMaxSegments = 22;

namespace detail {

// Advances `idx` (strictly increasing values in [lo, hi]) to the next
// combination in lexicographic order; false when exhausted.
inline bool next_combination(std::vector<std::size_t> &idx, std::size_t lo, std::size_t hi) {
  const std::size_t m = idx.size();
  for (std::size_t r = m; r-- > 0;) {
    if (idx[r] < hi - (m - 1 - r)) {
      ++idx[r];
      for (std::size_t s = r + 1; s < m; ++s)
        idx[s] = idx[s - 1] + 1;
      return true;
    }
  }
  (void)lo;
  return false;
}

} // namespace detail

/// Whether the index sequence is a simplification within delta under `variant`.
inline bool simplification_valid(const Polyline &P, const std::vector<std::size_t> &indices,
                                 double delta, const LpNorm &norm, Variant variant,
                                 double tol = kDefaultTolerance) {
  if (indices.empty() || indices.front() != 0 || indices.back() + 1 != P.size())
    return false;
  for (std::size_t r = 0; r + 1 < indices.size(); ++r)
    if (!(indices[r] < indices[r + 1]))
      return false;
  switch (variant) {
  case Variant::LocalHausdorff:
    return local_witness_valid(P, indices, delta, norm, LocalMeasure::Hausdorff, tol);
  case Variant::LocalFrechet:
    return local_witness_valid(P, indices, delta, norm, LocalMeasure::Frechet, tol);
  case Variant::GlobalFrechet:
    return frechet_decide_polylines(P, P.select(indices), delta, norm, tol);
  }
  return false;
}

inline SimplificationResult brute_force_min_simplification(const Polyline &P, double delta,
                                                           const LpNorm &norm, Variant variant,
                                                           double tol = kDefaultTolerance) {
  if (P.empty())
    throw std::invalid_argument("oracle: empty polyline");
  if (!(delta >= 0.0))
    throw std::invalid_argument("delta must be non-negative");
  const std::size_t n = P.segments();
  if (n > kOracleMaxSegments)
    throw std::invalid_argument("oracle: instance too large (n = " + std::to_string(n) +
                                ", limit " + std::to_string(kOracleMaxSegments) + ")");
  if (n == 0)
    return trivial_result(variant, delta, norm);

  // per-shortcut answers are shared by all candidates of the local variants
  std::vector<std::optional<bool>> memo((n + 1) * (n + 1));
  auto edge = [&](std::size_t i, std::size_t k) {
    auto &slot = memo[i * (n + 1) + k];
    if (!slot) {
      const auto m = variant == Variant::LocalHausdorff ? LocalMeasure::Hausdorff
                                                         : LocalMeasure::Frechet;
      slot = shortcut_admissible(P, i, k, delta, norm, m, tol);
    }
    return *slot;
  };
  auto accepts = [&](const std::vector<std::size_t> &cand) {
    if (variant == Variant::GlobalFrechet)
      return frechet_decide_polylines(P, P.select(cand), delta, norm, tol);
    for (std::size_t r = 0; r + 1 < cand.size(); ++r)
      if (!edge(cand[r], cand[r + 1]))
        return false;
    return true;
  };

  for (std::size_t interior = 0; interior < n; ++interior) {
    std::vector<std::size_t> inner(interior);
    for (std::size_t r = 0; r < interior; ++r)
      inner[r] = r + 1;
    do {
      std::vector<std::size_t> cand;
      cand.reserve(interior + 2);
      cand.push_back(0);
      cand.insert(cand.end(), inner.begin(), inner.end());
      cand.push_back(n);
      if (accepts(cand))
        return {cand.size(), std::move(cand), variant, delta, norm};
    } while (interior > 0 && detail::next_combination(inner, 1, n - 1));
  }
  // every vertex kept: distance zero under all three measures
  std::vector<std::size_t> all(n + 1);
  for (std::size_t r = 0; r <= n; ++r)
    all[r] = r;
  return {all.size(), std::move(all), variant, delta, norm};
}

} // namespace polysimp
