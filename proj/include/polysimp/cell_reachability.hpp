#pragma once

// Cell Reachability.
//
// n unit cells stacked vertically (cells 0..n-1 here), passage m joining
// cell m and cell m+1 as a horizontal interval [a, b] on their common edge,
// and an entry cost per cell.  Cell j is reachable from a lower cell j' when
// points x_{j'+1} <= ... <= x_j can be chosen inside the passages in between.
// The exit cost mu_j is the cheapest entry cost of a cell that reaches j.
//
// The linear-time solver keeps the staircase t_j(k) -- the leftmost point on
// the passage into cell j reachable from a cell of entry cost <= k -- as a
// deque of breakpoints (k descending, t ascending) terminated by (0, inf).

#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysimp/lp_geometry.hpp"

namespace polysimp {

/// Integer cost, or kInfeasibleCost.
using Cost = std::int64_t;
inline constexpr Cost kInfeasibleCost = std::numeric_limits<Cost>::max();

inline constexpr std::size_t kNoCell = std::numeric_limits<std::size_t>::max();

struct CellReachInstance {
  /// passages[m] joins cell m and cell m+1; empty intervals block everything.
  std::vector<UnitInterval> passages;
  /// Positive entry cost per cell, or kInfeasibleCost.
  std::vector<Cost> entry_costs;

  std::size_t cells() const { return entry_costs.size(); }

  void validate() const {
    if (entry_costs.empty())
      throw std::invalid_argument("cell reachability: need at least one cell");
    if (passages.size() + 1 != entry_costs.size())
      throw std::invalid_argument("cell reachability: expected " +
                                  std::to_string(entry_costs.size() - 1) + " passages, got " +
                                  std::to_string(passages.size()));
    for (Cost c : entry_costs)
      if (c <= 0)
        throw std::invalid_argument("cell reachability: entry costs must be positive");
    for (const auto &p : passages)
      if (!p.is_empty() && !(p.lo <= p.hi))
        throw std::invalid_argument("cell reachability: malformed passage");
  }
};

struct ExitCosts {
  std::vector<Cost> mu;
  /// The cell whose entry cost attains mu[j], or kNoCell.
  std::vector<std::size_t> witness;
};

/// One step of the staircase t_j(.): from entry cost `k` on, the leftmost
/// reachable point on the current passage is `t`.
struct Breakpoint {
  Cost k;
  double t;
  std::size_t source; // cell providing the entry cost k
};

struct CellReachStats {
  std::size_t pushes = 0;
  std::size_t pops = 0;
};

namespace detail {

inline bool staircase_well_formed(const std::deque<Breakpoint> &list) {
  if (list.empty() || list.back().k != 0 || is_feasible(list.back().t))
    return false;
  for (std::size_t i = 0; i + 1 < list.size(); ++i)
    if (!(list[i].k > list[i + 1].k && list[i].t < list[i + 1].t))
      return false;
  return true;
}


// The sweep over cells 0..n-1.  `passage_at(m)` yields the passage joining
// cell m and m+1 and is skipped while nothing is reachable and the cell below
// has no entry cost, since the passage cannot matter then.
template <typename PassageAt, typename Observer>
ExitCosts sweep_cells(std::size_t n, const std::vector<Cost> &entry_costs, PassageAt &&passage_at,
                      CellReachStats &st, Observer &&observe) {
  ExitCosts out{std::vector<Cost>(n, kInfeasibleCost), std::vector<std::size_t>(n, kNoCell)};
  std::deque<Breakpoint> list;
  auto reset = [&] {
    st.pops += list.size();
    list.clear();
    list.push_back({0, kInfeasible, kNoCell});
    ++st.pushes;
  };
  reset();
  observe(std::size_t{0}, static_cast<const std::deque<Breakpoint> &>(list));

  for (std::size_t j = 1; j < n; ++j) {
    const Cost below = entry_costs[j - 1];
    if (list.size() == 1 && below == kInfeasibleCost) {
      observe(j, static_cast<const std::deque<Breakpoint> &>(list));
      continue;
    }
    const UnitInterval pass = passage_at(j - 1);
    if (pass.is_empty()) {
      reset();
      observe(j, static_cast<const std::deque<Breakpoint> &>(list));
      continue;
    }
    // Direct entry from the cell right below costs its entry cost; every
    // k >= that cost, and every k whose old arrival is already left of the
    // passage, now arrives at the passage's left end.
    Cost k_left = below;
    std::size_t src_left = below == kInfeasibleCost ? kNoCell : j - 1;
    while (!list.empty() && (list.front().k >= below || list.front().t <= pass.lo)) {
      if (list.front().k < k_left) {
        k_left = list.front().k;
        src_left = list.front().source;
      }
      list.pop_front();
      ++st.pops;
    }
    if (k_left != kInfeasibleCost) {
      list.push_front({k_left, pass.lo, src_left});
      ++st.pushes;
    }
    // Old arrivals right of the passage are cut off.
    while (!list.empty() && list.back().t > pass.hi) {
      list.pop_back();
      ++st.pops;
    }
    if (!list.empty()) {
      out.mu[j] = list.back().k;
      out.witness[j] = list.back().source;
    }
    list.push_back({0, kInfeasible, kNoCell});
    ++st.pushes;
    observe(j, static_cast<const std::deque<Breakpoint> &>(list));
  }
  return out;
}

} // namespace detail

/// Linear-time exit costs.  `observe`, when given, is called after every cell
/// update with (cell index, current breakpoint list).
template <typename Observer>
ExitCosts solve_cell_reachability(const CellReachInstance &inst, CellReachStats *stats,
                                  Observer &&observe) {
  inst.validate();
  CellReachStats local;
  return detail::sweep_cells(
      inst.cells(), inst.entry_costs, [&](std::size_t m) { return inst.passages[m]; },
      stats ? *stats : local, observe);
}

inline ExitCosts solve_cell_reachability(const CellReachInstance &inst,
                                         CellReachStats *stats = nullptr) {
  return solve_cell_reachability(inst, stats, [](std::size_t, const auto &) {});
}

/// The same over the first `cells` cells, with passages computed on demand.
template <typename PassageAt>
ExitCosts solve_cell_reachability_lazy(std::size_t cells, const std::vector<Cost> &entry_costs,
                                       PassageAt &&passage_at, CellReachStats *stats = nullptr) {
  if (cells == 0 || entry_costs.size() < cells)
    throw std::invalid_argument("cell reachability: need 1 <= cells <= entry_costs.size()");
  CellReachStats local;
  return detail::sweep_cells(cells, entry_costs, passage_at, stats ? *stats : local,
                             [](std::size_t, const auto &) {});
}

/// Quadratic reference: forward clamping from every source cell.
inline ExitCosts solve_cell_reachability_bruteforce(const CellReachInstance &inst) {
  inst.validate();
  const std::size_t n = inst.cells();
  ExitCosts out{std::vector<Cost>(n, kInfeasibleCost), std::vector<std::size_t>(n, kNoCell)};
  for (std::size_t src = 0; src + 1 < n; ++src) {
    const Cost cost = inst.entry_costs[src];
    if (cost == kInfeasibleCost)
      continue;
    double x = 0.0;
    for (std::size_t j = src + 1; j < n; ++j) {
      const UnitInterval &pass = inst.passages[j - 1];
      if (pass.is_empty())
        break;
      x = std::max(x, pass.lo);
      if (x > pass.hi)
        break;
      if (cost < out.mu[j]) {
        out.mu[j] = cost;
        out.witness[j] = src;
      }
    }
  }
  return out;
}

/// True when cell `to` is reachable from the lower cell `from`.
inline bool cell_reachable(const CellReachInstance &inst, std::size_t from, std::size_t to) {
  if (!(from < to) || to >= inst.cells())
    return false;
  double x = 0.0;
  for (std::size_t j = from + 1; j <= to; ++j) {
    const UnitInterval &pass = inst.passages[j - 1];
    if (pass.is_empty())
      return false;
    x = std::max(x, pass.lo);
    if (x > pass.hi)
      return false;
  }
  return true;
}

/// Expands a breakpoint list into t(k) for k = 0..kmax.
inline std::vector<double> expand_staircase(const std::deque<Breakpoint> &list, Cost kmax) {
  std::vector<double> t(static_cast<std::size_t>(kmax) + 1, kInfeasible);
  for (Cost k = 0; k <= kmax; ++k)
    for (const auto &bp : list)
      if (bp.k <= k) {
        t[static_cast<std::size_t>(k)] = bp.t;
        break;
      }
  return t;
}

} // namespace polysimp
