// Acceptance run: one PASS/FAIL line per criterion.  Optional arguments select
// criteria by number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

using namespace polysimp;
using testsupport::all_ps;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CorpusEntry {
  Polyline P;
  double delta;
  LpNorm norm;
};

std::vector<CorpusEntry> g_corpus;

template <typename... Args> std::string fmt(const char *f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> seg(3, 10), dim(1, 3);
  std::size_t mismatches = 0, invalid = 0, redrawn = 0;
  std::string first;
  while (g_corpus.size() < 500) {
    const LpNorm norm(all_ps()[g_corpus.size() % all_ps().size()]);
    const Polyline P = testsupport::random_grid_polyline(rng, seg(rng) + 1, dim(rng));
    const auto delta = testsupport::certified_delta(P, norm, rng, 0.2, 4.0);
    if (!delta) {
      ++redrawn;
      continue;
    }
    g_corpus.push_back({P, *delta, norm});
    const struct {
      Variant v;
      SimplificationResult r;
    } runs[] = {
        {Variant::LocalHausdorff, simplify_local(P, *delta, norm, LocalMeasure::Hausdorff)},
        {Variant::LocalFrechet, simplify_local(P, *delta, norm, LocalMeasure::Frechet)},
        {Variant::GlobalFrechet, simplify_global_frechet(P, *delta, norm)},
    };
    for (const auto &run : runs) {
      const auto want = brute_force_min_simplification(P, *delta, norm, run.v);
      if (run.r.size != want.size) {
        ++mismatches;
        if (first.empty())
          first = fmt(" first mismatch: instance %zu %s got %zu want %zu", g_corpus.size() - 1,
                      std::string(to_string(run.v)).c_str(), run.r.size, want.size);
      }
      if (!simplification_valid(P, run.r.indices, *delta, norm, run.v))
        ++invalid;
    }
  }
  return {mismatches == 0 && invalid == 0,
          fmt("500 instances x 3 variants, %zu size mismatches, %zu invalid witnesses, %zu "
              "uncertified draws skipped",
              mismatches, invalid, redrawn) +
              first};
}

Outcome reference_equivalence() {
  std::mt19937_64 rng(7777);
  std::uniform_int_distribution<std::size_t> seg(5, 40), dim(1, 3);
  std::uniform_real_distribution<double> quant(0.05, 0.4);
  std::size_t mismatches = 0, invalid = 0, largest = 0;
  for (int it = 0; it < 100; ++it) {
    const LpNorm norm(all_ps()[it % all_ps().size()]);
    const std::size_t n = it < 10 ? 40 : seg(rng);
    largest = std::max(largest, n);
    const Polyline P = testsupport::random_real_polyline(rng, n + 1, dim(rng));
    const double delta = pairwise_distance_quantile(P, norm, quant(rng));
    const auto fast = simplify_global_frechet(P, delta, norm);
    const auto ref = simplify_global_frechet_reference(P, delta, norm);
    mismatches += fast.size != ref.size;
    invalid += !simplification_valid(P, fast.indices, delta, norm, Variant::GlobalFrechet);
  }
  return {mismatches == 0 && invalid == 0,
          fmt("100 instances (n up to %zu), %zu size mismatches, %zu invalid witnesses", largest,
              mismatches, invalid)};
}

Outcome cell_reachability() {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> cells(1, 200);
  std::size_t mismatches = 0, over_budget = 0;
  for (int it = 0; it < 10000; ++it) {
    const auto inst = testsupport::random_cellreach(rng, cells(rng));
    CellReachStats st;
    const auto fast = solve_cell_reachability(inst, &st);
    mismatches += fast.mu != solve_cell_reachability_bruteforce(inst).mu;
    over_budget += st.pushes > 2 * inst.cells() || st.pops > st.pushes;
  }
  const auto fig = solve_cell_reachability(testsupport::figure_instance());
  const bool fig_ok = fig.mu[3] == 4;
  return {mismatches == 0 && over_budget == 0 && fig_ok,
          fmt("10000 instances, %zu mismatches, %zu runs over the 2n push budget; figure mu_4 = %lld",
              mismatches, over_budget, static_cast<long long>(fig.mu[3]))};
}

Outcome gadget_table() {
  double worst = 0.0;
  for (double p : {1.0, 1.5, 3.0, 4.0}) {
    const auto g = gadget_params(p, 1);
    const double small = p < 2 ? std::pow(2.0, p) * (std::pow(2.0, p - 1) - 1) : std::pow(2.0, p + 2) - 8;
    const double big = p < 2 ? std::pow(2.0, p) : std::pow(2.0, 2 * p) - 8;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
          const Point c = coordinate_gadget(GadgetRole::C, i, g);
          const Point mid = segment_point(coordinate_gadget(GadgetRole::A, j, g),
                                          coordinate_gadget(GadgetRole::B, k, g), 0.0);
          Point diff(c.size());
          for (std::size_t r = 0; r < c.size(); ++r)
            diff[r] = c[r] - mid[r];
          const double want = (i && j && k) ? small : big;
          const double got = pth_power_norm(diff, p);
          worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
        }
  }
  return {worst <= 1e-9, fmt("p in {1, 1.5, 3, 4} x 8 bit-triples, worst relative error %.2e", worst)};
}

Outcome reduction() {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> nn(1, 5), dd(1, 4);
  std::size_t wrong = 0, failed_verify = 0, yes = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 100; ++it) {
    const double p = it % 2 ? 3.0 : 1.0;
    const OVInstance inst = random_ov_instance(nn(rng), dd(rng), it % 4 < 2 ? 0.5 : 0.75, rng);
    const bool ov = solve_ov_bruteforce(inst);
    yes += ov;
    const std::size_t want = ov ? 5 : 4;
    const auto h = build_hard_curve(inst, p);
    const LpNorm norm(p);
    wrong += simplify_global_frechet(h.Q, h.delta, norm).size != want;
    wrong += simplify_local(h.Q, h.delta, norm, LocalMeasure::Frechet).size != want;
    wrong += simplify_local(h.Q, h.delta, norm, LocalMeasure::Hausdorff).size != want;
    const auto rep = verify_gadget_properties(inst, p, 1000);
    failed_verify += !rep.all_pass();
    for (const auto &c : rep.properties)
      worst_margin = std::min(worst_margin, c.worst_margin);
  }
  return {wrong == 0 && failed_verify == 0 && worst_margin > 0,
          fmt("100 instances (%zu with answer true), %zu wrong sizes, %zu failed property checks, "
              "worst margin %.3g",
              yes, wrong, failed_verify, worst_margin)};
}

Outcome scaling() {
  const auto rows = run_scaling_bench(Algorithm::GlobalFrechet, {256, 512}, 5, 99);
  std::vector<double> small, large;
  for (const auto &r : rows)
    (r.size == 256 ? small : large).push_back(r.millis);
  const double m256 = median(small), m512 = median(large);
  const double ratio = m512 / m256;
  return {ratio <= 10.0 && m512 <= 60000.0,
          fmt("median %.0f ms at n=256, %.0f ms at n=512, ratio %.2f", m256, m512, ratio)};
}

Outcome structural() {
  if (g_corpus.empty())
    oracle_equivalence();
  std::size_t mono = 0, order_g = 0, order_h = 0, shortcut = 0;
  for (const auto &e : g_corpus) {
    std::size_t prev[3] = {SIZE_MAX, SIZE_MAX, SIZE_MAX};
    for (double scale : {0.25, 0.5, 1.0, 1.5, 2.0, 4.0}) {
      const double delta = e.delta * scale;
      const std::size_t s[3] = {
          simplify_local(e.P, delta, e.norm, LocalMeasure::Hausdorff).size,
          simplify_local(e.P, delta, e.norm, LocalMeasure::Frechet).size,
          simplify_global_frechet(e.P, delta, e.norm).size};
      for (int v = 0; v < 3; ++v) {
        mono += s[v] > prev[v];
        prev[v] = s[v];
      }
      order_g += s[2] > s[1];
      order_h += s[0] > s[1];
    }
    for (std::size_t i = 0; i < e.P.size(); ++i)
      for (std::size_t k = i + 1; k < e.P.size(); ++k)
        if (shortcut_admissible(e.P, i, k, e.delta, e.norm, LocalMeasure::Frechet))
          shortcut += hausdorff_to_segment(e.P, static_cast<double>(i), static_cast<double>(k),
                                           e.P[i], e.P[k], e.norm) > e.delta + kDefaultTolerance;
  }
  return {mono + order_g + order_h + shortcut == 0,
          fmt("%zu instances x 6 deltas: %zu monotonicity, %zu global>local-frechet, %zu "
              "hausdorff>frechet size, %zu shortcut violations",
              g_corpus.size(), mono, order_g, order_h, shortcut)};
}

} // namespace

int main(int argc, char **argv) {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"reference equivalence", reference_equivalence},
      {"cell reachability", cell_reachability},
      {"gadget distance table", gadget_table},
      {"reduction end-to-end", reduction},
      {"cubic scaling", scaling},
      {"structural properties", structural},
  };
  std::set<int> wanted;
  for (int a = 1; a < argc; ++a)
    wanted.insert(std::stoi(argv[a]));
  bool all = true;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    if (!wanted.empty() && !wanted.count(id))
      continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s: %s (%.1f s) %s\n", id, o.pass ? "PASS" : "FAIL",
                criteria[c].first, secs, o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
