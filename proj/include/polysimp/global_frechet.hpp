#pragma once

// Global-Frechet simplification.
//
// DP(k, i, j) is the earliest parameter t on segment j of P such that some
// simplification of P[0..i] with at most k vertices (ending in v_i) is within
// Frechet distance delta of P[0..t].  kappa(i, j) is the smallest k for which
// DP(k, i, j) is finite; the answer is kappa(n, n-1).
//
// The cubic solver splits every transition into paths entering cell j of
// FS(P, v_i' v_i) from its left edge (same segment j, handled by a running
// minimum over i') and paths entering from below (earlier segment, where only
// kappa of the predecessor matters and a Cell Reachability instance per i'
// answers all j at once).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysimp/cell_reachability.hpp"
#include "polysimp/frechet.hpp"
#include "polysimp/lp_geometry.hpp"
#include "polysimp/simplification.hpp"

namespace polysimp {

/// (t_{i,j}, s_{i,j}) for every vertex i and segment j.
class EndpointTable {
public:
  EndpointTable() = default;
  EndpointTable(const Polyline &P, double delta, const LpNorm &norm, double tol)
      : segments_(P.segments()), data_(P.size() * P.segments()) {
    for (std::size_t i = 0; i < P.size(); ++i)
      for (std::size_t j = 0; j < segments_; ++j)
        data_[i * segments_ + j] = t_s_values(P, i, j, delta, norm, tol);
  }

  const ParamRange &operator()(std::size_t i, std::size_t j) const {
    return data_[i * segments_ + j];
  }

private:
  std::size_t segments_ = 0;
  std::vector<ParamRange> data_;
};

/// kappa(i, j) for vertices i in [0, n] and segments j in [0, n).
class KappaTable {
public:
  KappaTable() = default;
  KappaTable(std::size_t vertices, std::size_t segments)
      : segments_(segments), data_(vertices * segments, kInfeasibleCost) {}

  Cost &operator()(std::size_t i, std::size_t j) { return data_[i * segments_ + j]; }
  Cost operator()(std::size_t i, std::size_t j) const { return data_[i * segments_ + j]; }

  std::size_t segments() const { return segments_; }
  std::size_t vertices() const { return segments_ == 0 ? 0 : data_.size() / segments_; }

  bool row_feasible(std::size_t i) const {
    for (std::size_t j = 0; j < segments_; ++j)
      if ((*this)(i, j) != kInfeasibleCost)
        return true;
    return false;
  }

  friend bool operator==(const KappaTable &, const KappaTable &) = default;

private:
  std::size_t segments_ = 0;
  std::vector<Cost> data_;
};

struct Kappa2Entry {
  Cost value = kInfeasibleCost;
  std::size_t from_vertex = kNoCell;  // i'
  std::size_t from_segment = kNoCell; // j'
};

/// kappa2(i, j) for all j: the fewest vertices of a simplification ending in
/// v_i whose last segment v_i' v_i is matched entering segment j from below.
/// Requires kappa(i', .) final for all i' < i.
inline std::vector<Kappa2Entry> kappa2_subroutine(const Polyline &P, std::size_t i,
                                                  const KappaTable &kappa,
                                                  const EndpointTable &ends, double delta,
                                                  const LpNorm &norm,
                                                  double tol = kDefaultTolerance) {
  const std::size_t n = P.segments();
  std::vector<Kappa2Entry> out(n);
  if (n == 0 || i == 0)
    return out;
  std::size_t last_target = n;
  for (std::size_t j = 0; j < n; ++j)
    if (ends(i, j).feasible())
      last_target = j;
  if (last_target == n)
    return out;

  std::vector<Cost> entry(n);
  for (std::size_t ip = 0; ip < i; ++ip) {
    if (!kappa.row_feasible(ip))
      continue;
    for (std::size_t j = 0; j <= last_target; ++j) {
      const Cost k = kappa(ip, j);
      entry[j] = k == kInfeasibleCost ? kInfeasibleCost : k + 1;
    }
    // passage into cell j: free part of the bottom edge hor_j of FS(P, v_i' v_i),
    // widened by tol so that passages touching at a single rounded point
    // still connect; the solver itself compares exactly
    auto passage = [&](std::size_t m) {
      const auto iv = ball_segment_interval(P[m + 1], P[ip], P[i], delta, norm, tol);
      return iv.is_empty() ? iv
                           : UnitInterval::closed(std::max(0.0, iv.lo - tol),
                                                  std::min(1.0, iv.hi + tol));
    };
    const ExitCosts mu = solve_cell_reachability_lazy(last_target + 1, entry, passage);
    for (std::size_t j = 0; j <= last_target; ++j) {
      if (!ends(i, j).feasible() || mu.mu[j] >= out[j].value)
        continue;
      out[j] = {mu.mu[j], ip, mu.witness[j]};
    }
  }
  return out;
}

struct GlobalFrechetOptions {
  double tol = kDefaultTolerance;
  /// Assert the DP shape invariants after every (i, j) update.
  bool check_invariants = false;
};

/// Cubic-time minimum-size Global-Frechet simplification.
class GlobalFrechetSolver {
public:
  GlobalFrechetSolver(const Polyline &P, double delta, LpNorm norm,
                      GlobalFrechetOptions opts = {})
      : P_(P), delta_(delta), norm_(norm), opts_(opts) {
    if (P.empty())
      throw std::invalid_argument("global frechet: empty polyline");
    if (!(delta >= 0.0))
      throw std::invalid_argument("delta must be non-negative");
  }

  SimplificationResult solve();

  Cost kappa(std::size_t i, std::size_t j) const { return kappa_(i, j); }
  Cost kappa1(std::size_t i, std::size_t j) const { return kappa1_(i, j); }
  Cost kappa2(std::size_t i, std::size_t j) const { return kappa2_(i, j); }
  const KappaTable &kappa_table() const { return kappa_; }
  const EndpointTable &endpoints() const { return ends_; }
  /// Number of stored staircase steps (memory used for witness recovery).
  std::size_t staircase_steps() const { return steps_.size(); }

private:
  enum class Via : std::uint8_t { Base, Vertical, Horizontal };

  // DP(., i, j) is a staircase in k; each step remembers how it was reached.
  struct Step {
    Cost k;
    double t;
    Via via;
    std::uint32_t prev_vertex;
    std::uint32_t prev_segment;
  };

  void check_column(std::size_t i, std::size_t j, const std::vector<double> &dp) const;
  std::vector<std::size_t> backtrack(Cost levels) const;

  const Polyline &P_;
  double delta_;
  LpNorm norm_;
  GlobalFrechetOptions opts_;

  std::size_t n_ = 0;
  std::size_t levels_ = 0; // k in [0, n+1]
  EndpointTable ends_;
  KappaTable kappa_, kappa1_, kappa2_;
  std::vector<Step> steps_;
  std::vector<std::size_t> step_begin_; // per (i, j), plus one sentinel
};

inline void GlobalFrechetSolver::check_column(std::size_t i, std::size_t j,
                                              const std::vector<double> &dp) const {
  const ParamRange &ts = ends_(i, j);
  const Cost kap = kappa_(i, j);
  auto fail = [&](const char *what) {
    throw std::logic_error(std::string("DP invariant violated (") + what + ") at i=" +
                           std::to_string(i) + " j=" + std::to_string(j));
  };
  double prev = kInfeasible;
  bool at_floor = false;
  for (std::size_t k = 1; k < levels_; ++k) {
    const double v = dp[j * levels_ + k];
    if (v > prev)
      fail("non-increasing in k");
    if ((static_cast<Cost>(k) < kap) != !is_feasible(v))
      fail("infeasible exactly below kappa");
    if (is_feasible(v) && (v < ts.first || v > ts.last + opts_.tol))
      fail("within [t, s]");
    if (at_floor && v != ts.first)
      fail("constant once at t");
    at_floor = at_floor || (is_feasible(v) && v == ts.first);
    prev = v;
  }
  if (kap != std::min(kappa1_(i, j), kappa2_(i, j)))
    fail("kappa = min(kappa1, kappa2)");
}

inline SimplificationResult GlobalFrechetSolver::solve() {
  const double tol = opts_.tol;
  n_ = P_.segments();
  if (n_ == 0)
    return trivial_result(Variant::GlobalFrechet, delta_, norm_);
  const std::size_t n = n_;
  levels_ = n + 2;
  ends_ = EndpointTable(P_, delta_, norm_, tol);
  kappa_ = KappaTable(n + 1, n);
  kappa1_ = KappaTable(n + 1, n);
  kappa2_ = KappaTable(n + 1, n);
  steps_.clear();
  step_begin_.assign((n + 1) * n + 1, 0);

  // rolling slices indexed [j * levels + k], contiguous in k
  std::vector<double> dp_prev(levels_ * n, kInfeasible), dp_cur(levels_ * n, kInfeasible);
  std::vector<double> bar1(levels_ * n, kInfeasible); // min_{i' < i} DP(k-1, i', j)
  std::vector<std::uint32_t> bar1_arg(levels_ * n, 0);

  // i = 0: the one-vertex simplification <v_0> covers P[0..j] while all of
  // v_0..v_j stay within delta of v_0.
  std::size_t reach0 = 0;
  while (reach0 + 1 < n && lp_dist(P_[0], P_[reach0 + 1], norm_) <= delta_)
    ++reach0;
  const bool base_ok = true; // v_0 is always within delta of itself
  for (std::size_t j = 0; j < n; ++j) {
    step_begin_[j] = steps_.size();
    if (base_ok && j <= reach0 && ends_(0, j).feasible()) {
      for (std::size_t k = 1; k < levels_; ++k)
        dp_prev[j * levels_ + k] = static_cast<double>(j);
      kappa_(0, j) = kappa1_(0, j) = 1;
      steps_.push_back({1, static_cast<double>(j), Via::Base, 0, 0});
    }
  }

  for (std::size_t i = 1; i <= n; ++i) {
    const auto k2 = kappa2_subroutine(P_, i, kappa_, ends_, delta_, norm_, tol);
    for (std::size_t j = 0; j < n; ++j) {
      step_begin_[i * n + j] = steps_.size();
      const ParamRange &ts = ends_(i, j);
      kappa2_(i, j) = k2[j].value;
      Cost kap1 = kInfeasibleCost;
      double last = kInfeasible;
      for (std::size_t k = 1; k < levels_; ++k) {
        const std::size_t at = j * levels_ + k;
        const double from_prev = dp_prev[at - 1];
        if (from_prev < bar1[at]) {
          bar1[at] = from_prev;
          bar1_arg[at] = static_cast<std::uint32_t>(i - 1);
        }
        double dp1 = kInfeasible, dp2 = kInfeasible;
        if (ts.feasible()) {
          if (bar1[at] <= ts.last + tol)
            dp1 = std::max(bar1[at], ts.first);
          if (static_cast<Cost>(k) >= k2[j].value)
            dp2 = ts.first;
        }
        if (kap1 == kInfeasibleCost && is_feasible(dp1))
          kap1 = static_cast<Cost>(k);
        const double v = std::min(dp1, dp2);
        dp_cur[at] = v;
        if (v < last) {
          if (dp2 <= dp1)
            steps_.push_back({static_cast<Cost>(k), v, Via::Horizontal,
                              static_cast<std::uint32_t>(k2[j].from_vertex),
                              static_cast<std::uint32_t>(k2[j].from_segment)});
          else
            steps_.push_back({static_cast<Cost>(k), v, Via::Vertical, bar1_arg[at],
                              static_cast<std::uint32_t>(j)});
          last = v;
        }
      }
      kappa1_(i, j) = kap1;
      kappa_(i, j) = std::min(kap1, k2[j].value);
      if (opts_.check_invariants)
        check_column(i, j, dp_cur);
    }
    std::swap(dp_prev, dp_cur);
  }
  step_begin_[(n + 1) * n] = steps_.size();

  const Cost best = kappa_(n, n - 1);
  if (best == kInfeasibleCost)
    throw std::logic_error("global frechet: no simplification found (identity must be feasible)");
  auto indices = backtrack(best);
  if (opts_.check_invariants && static_cast<Cost>(indices.size()) != best)
    throw std::logic_error("global frechet: witness size differs from kappa(n, n-1)");
  return {indices.size(), std::move(indices), Variant::GlobalFrechet, delta_, norm_};
}

inline std::vector<std::size_t> GlobalFrechetSolver::backtrack(Cost level) const {
  const std::size_t n = n_;
  std::vector<std::size_t> out;
  std::size_t i = n, j = n - 1;
  for (;;) {
    out.push_back(i);
    const std::size_t b = step_begin_[i * n + j], e = step_begin_[i * n + j + 1];
    const Step *chosen = nullptr;
    for (std::size_t s = b; s < e; ++s)
      if (steps_[s].k <= level)
        chosen = &steps_[s];
    if (chosen == nullptr)
      throw std::logic_error("global frechet: broken predecessor chain");
    if (chosen->via == Via::Base)
      break;
    if (chosen->via == Via::Vertical) {
      i = chosen->prev_vertex;
      level = chosen->k - 1;
    } else {
      i = chosen->prev_vertex;
      j = chosen->prev_segment;
      level = kappa_(i, j);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline SimplificationResult simplify_global_frechet(const Polyline &P, double delta,
                                                    const LpNorm &norm,
                                                    GlobalFrechetOptions opts = {}) {
  GlobalFrechetSolver solver(P, delta, norm, opts);
  return solver.solve();
}

// ---------------------------------------------------------------------------

/// The straightforward DP: every table entry minimizes over all predecessor
/// vertices i' and segments j' <= j with one free-space sweep each.
class GlobalFrechetReference {
public:
  GlobalFrechetReference(const Polyline &P, double delta, LpNorm norm,
                         double tol = kDefaultTolerance)
      : P_(P), delta_(delta), norm_(norm), tol_(tol) {
    if (P.empty())
      throw std::invalid_argument("global frechet reference: empty polyline");
    if (!(delta >= 0.0))
      throw std::invalid_argument("delta must be non-negative");
  }

  /// Computes levels until the answer is known, or all n+1 levels when
  /// `all_levels` is set.
  SimplificationResult solve(bool all_levels = false);

  std::size_t levels() const { return dp_.size(); }
  /// DP(k, i, j) for 1 <= k <= levels().
  double dp(std::size_t k, std::size_t i, std::size_t j) const {
    return dp_[k - 1][i * n_ + j];
  }
  /// Smallest computed k with DP(k, i, j) finite.
  Cost kappa(std::size_t i, std::size_t j) const {
    for (std::size_t k = 1; k <= dp_.size(); ++k)
      if (is_feasible(dp(k, i, j)))
        return static_cast<Cost>(k);
    return kInfeasibleCost;
  }

private:
  struct Pred {
    std::uint32_t vertex;
    std::uint32_t segment;
  };

  const Polyline &P_;
  double delta_;
  LpNorm norm_;
  double tol_;
  std::size_t n_ = 0;
  std::vector<std::vector<double>> dp_;
  std::vector<std::vector<Pred>> pred_;
};

inline SimplificationResult GlobalFrechetReference::solve(bool all_levels) {
  n_ = P_.segments();
  if (n_ == 0)
    return trivial_result(Variant::GlobalFrechet, delta_, norm_);
  const std::size_t n = n_;
  const std::size_t cells = (n + 1) * n;
  dp_.clear();
  pred_.clear();

  // level 1: only <v_0>
  {
    std::vector<double> level(cells, kInfeasible);
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (std::size_t v = 0; v <= j && ok; ++v)
        ok = lp_dist(P_[0], P_[v], norm_) <= delta_;
      if (ok)
        level[j] = static_cast<double>(j);
    }
    dp_.push_back(std::move(level));
    pred_.emplace_back(cells, Pred{0, 0});
  }

  Cost answer = is_feasible(dp_[0][n * n + n - 1]) ? 1 : kInfeasibleCost;
  for (std::size_t k = 2; k <= n + 1; ++k) {
    if (answer != kInfeasibleCost && !all_levels)
      break;
    const auto &prev = dp_.back();
    std::vector<double> level(cells, kInfeasible);
    std::vector<Pred> pred(cells, Pred{0, 0});
    // the one-vertex prefix stays available at every level
    for (std::size_t j = 0; j < n; ++j)
      level[j] = dp_[0][j];
    for (std::size_t ip = 0; ip < n; ++ip) {
      for (std::size_t jp = 0; jp < n; ++jp) {
        const double start = prev[ip * n + jp];
        if (!is_feasible(start))
          continue;
        for (std::size_t i = ip + 1; i <= n; ++i) {
          if (!(lp_dist(P_.at(start), P_[ip], norm_) <= delta_ * (1.0 + 1e-9) + tol_))
            continue;
          const auto arr = earliest_arrivals(P_, P_[ip], P_[i], start, delta_, norm_, tol_);
          for (std::size_t j = jp; j < n; ++j) {
            if (arr[j] < level[i * n + j]) {
              level[i * n + j] = arr[j];
              pred[i * n + j] = {static_cast<std::uint32_t>(ip),
                                 static_cast<std::uint32_t>(jp)};
            }
          }
        }
      }
    }
    dp_.push_back(std::move(level));
    pred_.push_back(std::move(pred));
    if (answer == kInfeasibleCost && is_feasible(dp_.back()[n * n + n - 1]))
      answer = static_cast<Cost>(k);
  }
  if (answer == kInfeasibleCost)
    throw std::logic_error("global frechet reference: no simplification found");

  std::vector<std::size_t> out;
  std::size_t i = n, j = n - 1;
  for (auto k = static_cast<std::size_t>(answer); ; --k) {
    out.push_back(i);
    if (i == 0 || k == 1)
      break;
    const Pred p = pred_[k - 1][i * n + j];
    i = p.vertex;
    j = p.segment;
  }
  std::reverse(out.begin(), out.end());
  return {out.size(), std::move(out), Variant::GlobalFrechet, delta_, norm_};
}

inline SimplificationResult simplify_global_frechet_reference(const Polyline &P, double delta,
                                                              const LpNorm &norm,
                                                              double tol = kDefaultTolerance) {
  GlobalFrechetReference ref(P, delta, norm, tol);
  return ref.solve();
}

} // namespace polysimp
