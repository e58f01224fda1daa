#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polysimp/lp_geometry.hpp"

namespace polysimp {

enum class Variant { LocalHausdorff, LocalFrechet, GlobalFrechet };

inline std::string_view to_string(Variant v) {
  switch (v) {
  case Variant::LocalHausdorff:
    return "local-hausdorff";
  case Variant::LocalFrechet:
    return "local-frechet";
  case Variant::GlobalFrechet:
    return "global-frechet";
  }
  return "?";
}

inline Variant variant_from_string(std::string_view s) {
  if (s == "local-hausdorff")
    return Variant::LocalHausdorff;
  if (s == "local-frechet")
    return Variant::LocalFrechet;
  if (s == "global-frechet")
    return Variant::GlobalFrechet;
  throw std::invalid_argument("unknown variant: " + std::string(s));
}

/// A minimum-size simplification: vertex indices 0 = i_0 < ... < i_m = n.
struct SimplificationResult {
  std::size_t size = 0;
  std::vector<std::size_t> indices;
  Variant variant = Variant::GlobalFrechet;
  double delta = 0.0;
  LpNorm norm;
};

/// Identity result for a single-vertex polyline.
inline SimplificationResult trivial_result(Variant v, double delta, const LpNorm &norm) {
  return {1, {0}, v, delta, norm};
}

} // namespace polysimp
