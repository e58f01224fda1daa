#pragma once

// Name-based dispatch over every simplification algorithm.

#include <stdexcept>
#include <string>
#include <string_view>

#include "polysimp/global_frechet.hpp"
#include "polysimp/local_simplify.hpp"
#include "polysimp/oracle.hpp"
#include "polysimp/simplification.hpp"

namespace polysimp {

enum class Algorithm { LocalHausdorff, LocalFrechet, GlobalFrechet, GlobalFrechetReference, Oracle };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
  case Algorithm::LocalHausdorff:
    return "local-hausdorff";
  case Algorithm::LocalFrechet:
    return "local-frechet";
  case Algorithm::GlobalFrechet:
    return "global-frechet";
  case Algorithm::GlobalFrechetReference:
    return "global-frechet-ref";
  case Algorithm::Oracle:
    return "oracle";
  }
  return "?";
}

inline Algorithm algorithm_from_string(std::string_view s) {
  for (auto a : {Algorithm::LocalHausdorff, Algorithm::LocalFrechet, Algorithm::GlobalFrechet,
                 Algorithm::GlobalFrechetReference, Algorithm::Oracle})
    if (to_string(a) == s)
      return a;
  throw std::invalid_argument("unknown algorithm: " + std::string(s));
}

/// The oracle needs to know which measure to certify; the other algorithms
/// determine it themselves.
inline SimplificationResult run_algorithm(Algorithm algo, const Polyline &P, double delta,
                                          const LpNorm &norm, double tol = kDefaultTolerance,
                                          Variant oracle_variant = Variant::GlobalFrechet) {
  switch (algo) {
  case Algorithm::LocalHausdorff:
    return simplify_local(P, delta, norm, LocalMeasure::Hausdorff, tol);
  case Algorithm::LocalFrechet:
    return simplify_local(P, delta, norm, LocalMeasure::Frechet, tol);
  case Algorithm::GlobalFrechet:
    return simplify_global_frechet(P, delta, norm, {tol, false});
  case Algorithm::GlobalFrechetReference:
    return simplify_global_frechet_reference(P, delta, norm, tol);
  case Algorithm::Oracle:
    return brute_force_min_simplification(P, delta, norm, oracle_variant, tol);
  }
  throw std::logic_error("unreachable");
}

} // namespace polysimp
