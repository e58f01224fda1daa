// polysimp command-line front end.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysimp/polysimp.hpp"

using namespace polysimp;
using nlohmann::ordered_json;

namespace {

// Configuration errors discovered after flag parsing; reported with exit 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

LpNorm parse_norm(const std::string &s) {
  if (s == "inf" || s == "INF" || s == "infinity")
    return LpNorm::inf();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(s, &used);
  } catch (const std::exception &) {
    throw ConfigError("--p: expected a number >= 1 or 'inf', got '" + s + "'");
  }
  if (used != s.size())
    throw ConfigError("--p: expected a number >= 1 or 'inf', got '" + s + "'");
  try {
    return LpNorm(p);
  } catch (const std::invalid_argument &e) {
    throw ConfigError(std::string("--p: ") + e.what());
  }
}

ordered_json p_to_json(const LpNorm &norm) {
  return norm.is_inf() ? ordered_json("inf") : ordered_json(norm.p());
}

ordered_json cost_json(Cost c) { return c == kInfeasibleCost ? ordered_json(nullptr) : ordered_json(c); }

OVInstance load_or_generate_ov(const std::string &path, std::size_t n, std::size_t d, double density,
                               std::uint64_t seed) {
  if (!path.empty())
    return parse_ov_instance(read_file(path));
  if (n == 0 || d == 0)
    throw ConfigError("need --ov FILE or positive --n and --d");
  std::mt19937_64 rng(seed);
  return random_ov_instance(n, d, density, rng);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Minimum-vertex polyline simplification under Frechet and Hausdorff measures"};
  app.require_subcommand(1);

  double tolerance = kDefaultTolerance;
  app.add_option("--tolerance", tolerance, "comparison tolerance")
      ->envname("POLYSIMP_TOLERANCE")
      ->check(CLI::PositiveNumber);

  // simplify
  std::string in_path, out_path, variant_name = "global-frechet", measure_name = "global-frechet";
  std::string p_text = "2";
  double delta = -1.0;
  auto *simplify = app.add_subcommand("simplify", "minimum-size simplification of a polyline");
  simplify->add_option("-i,--input", in_path, "polyline file")->required();
  simplify->add_option("--variant", variant_name,
                       "local-hausdorff | local-frechet | global-frechet | global-frechet-ref | oracle");
  simplify->add_option("--measure", measure_name, "measure certified by --variant oracle");
  simplify->add_option("--p", p_text, "norm exponent (number >= 1 or inf)");
  simplify->add_option("--delta", delta, "distance threshold")->required();
  simplify->add_option("-o,--output", out_path, "write the simplified polyline here");

  // distance
  std::string first_path, second_path, dist_measure = "frechet";
  auto *distance = app.add_subcommand("distance", "decide whether two polylines are within delta");
  distance->add_option("first", first_path, "first polyline file")->required();
  distance->add_option("second", second_path, "second polyline file")->required();
  distance->add_option("--measure", dist_measure, "frechet | hausdorff (directed, first to second)");
  distance->add_option("--p", p_text, "norm exponent");
  distance->add_option("--delta", delta, "distance threshold")->required();

  // cellreach
  std::string cr_path;
  bool cr_brute = false;
  auto *cellreach = app.add_subcommand("cellreach", "exit costs of a Cell Reachability instance");
  cellreach->add_option("-i,--input", cr_path, "JSON instance")->required();
  cellreach->add_flag("--brute-force", cr_brute, "use the quadratic reference solver");

  // gen-hard / verify-hard
  std::string ov_path, hard_out, delta_out;
  std::size_t ov_n = 0, ov_d = 0, grid = 1000;
  double density = 0.5, hard_p = 1.0;
  std::uint64_t seed = 1;
  auto *gen = app.add_subcommand("gen-hard", "hard simplification instance from an OV instance");
  auto *verify = app.add_subcommand("verify-hard", "check the gadget properties numerically");
  for (auto *sub : {gen, verify}) {
    sub->add_option("--ov", ov_path, "OV instance file (three 0/1 blocks)");
    sub->add_option("--n", ov_n, "random instance: vectors per set");
    sub->add_option("--d", ov_d, "random instance: dimension");
    sub->add_option("--density", density, "random instance: probability of a one")
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--seed", seed, "random instance seed");
    sub->add_option("--p", hard_p, "norm exponent in [1, inf), not 2");
  }
  gen->add_option("-o,--output", hard_out, "write the curve here")->required();
  gen->add_option("--delta-output", delta_out, "also write delta to this file");
  verify->add_option("--grid", grid, "alpha grid size")->check(CLI::PositiveNumber);

  // bench
  std::string algo_name = "global-frechet";
  std::vector<std::size_t> sizes;
  std::size_t trials = 3;
  auto *bench = app.add_subcommand("bench", "time an algorithm on seeded random walks (CSV)");
  bench->add_option("--algo", algo_name, "algorithm name as for simplify --variant");
  bench->add_option("--sizes", sizes, "segment counts, strictly increasing")
      ->delimiter(',')
      ->required();
  bench->add_option("--trials", trials, "trials per size")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--p", p_text, "norm exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*simplify) {
      const LpNorm norm = parse_norm(p_text);
      if (!(delta >= 0.0))
        throw ConfigError("--delta must be >= 0");
      const Polyline P = parse_polyline(read_file(in_path));
      Algorithm algo;
      Variant certify;
      try {
        algo = algorithm_from_string(variant_name);
        certify = variant_from_string(measure_name);
      } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
      }
      const SimplificationResult res = run_algorithm(algo, P, delta, norm, tolerance, certify);
      if (!simplification_valid(P, res.indices, delta, norm, res.variant, tolerance)) {
        std::cerr << "error: witness failed re-validation\n";
        return 1;
      }
      ordered_json out;
      out["size"] = res.size;
      out["indices"] = res.indices;
      out["variant"] = std::string(to_string(algo));
      out["delta"] = delta;
      out["p"] = p_to_json(norm);
      std::cout << out.dump() << '\n';
      if (!out_path.empty())
        write_file(out_path, format_polyline(P.select(res.indices)));
    } else if (*distance) {
      const LpNorm norm = parse_norm(p_text);
      if (!(delta >= 0.0))
        throw ConfigError("--delta must be >= 0");
      const Polyline P = parse_polyline(read_file(first_path));
      const Polyline Q = parse_polyline(read_file(second_path));
      bool within;
      if (dist_measure == "frechet")
        within = frechet_decide_polylines(P, Q, delta, norm, tolerance);
      else if (dist_measure == "hausdorff")
        within = hausdorff_decide_polylines(P, Q, delta, norm, tolerance);
      else
        throw ConfigError("--measure must be frechet or hausdorff");
      ordered_json out;
      out["measure"] = dist_measure;
      out["delta"] = delta;
      out["p"] = p_to_json(norm);
      out["within"] = within;
      std::cout << out.dump() << '\n';
    } else if (*cellreach) {
      const CellReachInstance inst = parse_cellreach(read_file(cr_path));
      CellReachStats stats;
      const ExitCosts mu =
          cr_brute ? solve_cell_reachability_bruteforce(inst) : solve_cell_reachability(inst, &stats);
      ordered_json out;
      out["mu"] = ordered_json::array();
      out["witness"] = ordered_json::array();
      for (std::size_t j = 0; j < mu.mu.size(); ++j) {
        out["mu"].push_back(cost_json(mu.mu[j]));
        out["witness"].push_back(mu.witness[j] == kNoCell ? ordered_json(nullptr)
                                                          : ordered_json(mu.witness[j]));
      }
      if (!cr_brute) {
        out["pushes"] = stats.pushes;
        out["pops"] = stats.pops;
      }
      std::cout << out.dump() << '\n';
    } else if (*gen) {
      const OVInstance inst = load_or_generate_ov(ov_path, ov_n, ov_d, density, seed);
      const HardCurve h = build_hard_curve(inst, hard_p);
      write_file(hard_out, format_polyline(h.Q));
      std::ostringstream d;
      d << std::setprecision(17) << h.delta << '\n';
      if (!delta_out.empty())
        write_file(delta_out, d.str());
      const bool ov = solve_ov_bruteforce(inst);
      ordered_json out;
      out["delta"] = h.delta;
      out["p"] = hard_p;
      out["vertices"] = h.Q.size();
      out["dim"] = h.Q.dim();
      out["ov"] = ov;
      out["expected_size"] = ov ? 5 : 4;
      std::cout << out.dump() << '\n';
    } else if (*verify) {
      const OVInstance inst = load_or_generate_ov(ov_path, ov_n, ov_d, density, seed);
      const GadgetReport rep = verify_gadget_properties(inst, hard_p, grid);
      ordered_json out;
      out["p"] = hard_p;
      out["pass"] = rep.all_pass();
      out["properties"] = ordered_json::array();
      for (const auto &c : rep.properties)
        out["properties"].push_back(
            ordered_json{{"name", c.name}, {"pass", c.pass}, {"worst_margin", c.worst_margin}});
      std::cout << out.dump() << '\n';
      return rep.all_pass() ? 0 : 1;
    } else if (*bench) {
      const LpNorm norm = parse_norm(p_text);
      Algorithm algo;
      try {
        algo = algorithm_from_string(algo_name);
      } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
      }
      const auto rows = run_scaling_bench(algo, sizes, trials, seed, norm, tolerance);
      std::cout << "size,trial,seed,millis,result_size\n";
      for (const auto &r : rows)
        std::cout << r.size << ',' << r.trial << ',' << r.seed << ',' << std::fixed
                  << std::setprecision(3) << r.millis << std::defaultfloat << ','
                  << r.result_size << '\n';
    }
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
