#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kdisp/bounds.hpp"
#include "kdisp/certify.hpp"
#include "kdisp/errors.hpp"
#include "kdisp/experiment.hpp"
#include "kdisp/generators.hpp"
#include "kdisp/partition.hpp"
#include "kdisp/pointset_io.hpp"
#include "kdisp/search.hpp"
#include "kdisp/solver.hpp"

// Exit codes: 0 success, 2 precondition violation, 3 budget exceeded,
// 4 I/O error.

namespace {

using namespace kdisp;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::vector<std::uint64_t> parse_list(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string item = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!item.empty()) out.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"k-dispersion toolkit: exact and heuristic largest nearly-empty box "
               "computations, point-set generators, certificates, and bound evaluators"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a point set");
  std::string gen_kind = "uniform", gen_out;
  unsigned gen_m = 2, gen_nu = 7;
  std::uint64_t gen_n = 16, gen_seed = 0;
  std::size_t gen_d = 2;
  gen->add_option("--kind", gen_kind, "mesh | uniform | fibonacci")
      ->check(CLI::IsMember({"mesh", "uniform", "fibonacci"}));
  gen->add_option("--m", gen_m, "mesh level");
  gen->add_option("--d", gen_d, "dimension");
  gen->add_option("--n", gen_n, "number of points / draws");
  gen->add_option("--nu", gen_nu, "Fibonacci index");
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // disp
  auto* disp = app.add_subcommand("disp", "exact k-dispersion of a point set");
  std::string disp_in;
  std::uint64_t disp_k = 0, disp_budget = 100'000'000;
  bool disp_grid = false;
  disp->add_option("--in", disp_in, "point-set file")->required();
  disp->add_option("--k", disp_k, "allowed interior points");
  disp->add_option("--budget", disp_budget, "candidate-box budget");
  disp->add_flag("--grid", disp_grid, "search the full dyadic grid (mesh-tagged sets)");

  // search
  auto* search = app.add_subcommand("search", "stochastic lower bound");
  std::string search_in;
  std::uint64_t search_k = 0, search_trials = 200, search_seed = 0;
  search->add_option("--in", search_in, "point-set file")->required();
  search->add_option("--k", search_k, "allowed interior points");
  search->add_option("--trials", search_trials, "random restarts");
  search->add_option("--seed", search_seed, "RNG seed");

  // certify
  auto* certify = app.add_subcommand("certify", "sign-matrix column-pair certificate");
  std::string certify_in;
  std::uint64_t certify_k = 0;
  certify->add_option("--in", certify_in, "point-set file")->required();
  certify->add_option("--k", certify_k, "allowed interior points");

  // partition-verify
  auto* pv = app.add_subcommand("partition-verify", "box-class enumeration and grid lemma check");
  unsigned pv_m = 1;
  std::size_t pv_d = 1;
  std::uint64_t pv_budget = 50'000'000;
  pv->add_option("--m", pv_m, "level")->required();
  pv->add_option("--d", pv_d, "dimension")->required();
  pv->add_option("--budget", pv_budget, "cell enumeration budget");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate closed-form bounds");
  std::uint64_t b_n = 16, b_d = 2, b_k = 0;
  double b_C = 1.0, b_c = 1.0;
  bounds->add_option("--n", b_n)->required();
  bounds->add_option("--d", b_d)->required();
  bounds->add_option("--k", b_k);
  bounds->add_option("--C", b_C, "shape constant for thm_a_upper");
  bounds->add_option("--c", b_c, "shape constant for uv_upper");

  // experiment
  auto* exp = app.add_subcommand("experiment", "reproducible experiment harnesses");
  exp->require_subcommand(1);
  auto* thma = exp->add_subcommand("thm-a", "random mesh multisets vs the 2^-m threshold");
  unsigned thma_m = 2;
  std::size_t thma_d = 2;
  std::uint64_t thma_k = 0, thma_reps = 100, thma_seed = 0;
  std::optional<std::uint64_t> thma_n;
  std::string thma_out;
  thma->add_option("--m", thma_m)->required();
  thma->add_option("--d", thma_d)->required();
  thma->add_option("--k", thma_k);
  thma->add_option("--reps", thma_reps);
  thma->add_option("--seed", thma_seed);
  thma->add_option("--n", thma_n, "override the sufficient sample count");
  thma->add_option("--out", thma_out, "CSV output file (default stdout)");

  auto* sweep = exp->add_subcommand("sweep", "dispersion vs bounds over a parameter grid");
  std::string sweep_kind = "uniform", sweep_ns, sweep_ds, sweep_nus, sweep_out;
  unsigned sweep_m = 2;
  std::uint64_t sweep_k = 0, sweep_seed = 0, sweep_trials = 200;
  sweep->add_option("--kind", sweep_kind, "mesh | uniform | fibonacci")
      ->check(CLI::IsMember({"mesh", "uniform", "fibonacci"}));
  sweep->add_option("--ns", sweep_ns, "comma list of n values");
  sweep->add_option("--ds", sweep_ds, "comma list of d values");
  sweep->add_option("--nus", sweep_nus, "comma list of Fibonacci indices");
  sweep->add_option("--m", sweep_m, "mesh level (kind=mesh)");
  sweep->add_option("--k", sweep_k);
  sweep->add_option("--seed", sweep_seed);
  sweep->add_option("--trials", sweep_trials, "stochastic fallback restarts");
  sweep->add_option("--out", sweep_out, "CSV output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    PointMultiset points = [&] {
      if (gen_kind == "mesh") return mesh_random_multiset({gen_m, gen_d, gen_n}, gen_seed);
      if (gen_kind == "fibonacci") return fibonacci_lattice(gen_nu);
      return uniform_random(gen_n, gen_d, gen_seed);
    }();
    write_output(pointset_to_json(points) + "\n", gen_out);
    return 0;
  }

  if (disp->parsed()) {
    const PointMultiset points = load_pointset(disp_in);
    SearchLimits limits;
    limits.max_boxes = disp_budget;
    const DispersionResult result = disp_grid ? grid_exhaustive(points, disp_k, limits)
                                              : exact_k_dispersion(points, disp_k, limits);
    std::cout << describe(result);
    return result.complete ? 0 : 3;
  }

  if (search->parsed()) {
    const PointMultiset points = load_pointset(search_in);
    SearchConfig config;
    config.trials = search_trials;
    config.seed = search_seed;
    std::cout << describe(stochastic_lower_bound(points, search_k, config));
    return 0;
  }

  if (certify->parsed()) {
    const PointMultiset points = load_pointset(certify_in);
    const SignMatrix matrix = sign_matrix(points);
    const auto cert = find_column_pair(matrix, certify_k);
    if (!cert) {
      std::cout << "certificate: none\n";
      return 0;
    }
    std::cout << "certificate: " << (cert->flipped ? "disagree" : "agree") << "\n";
    std::cout << "columns: " << cert->j1 << " " << cert->j2 << "\n";
    std::cout << "mismatch_rows:";
    for (std::size_t r : cert->mismatch_rows) std::cout << " " << r;
    std::cout << "\n";
    const AxisBox box = certificate_box(points, *cert);
    std::cout << "box: " << box_to_string(box) << "\n";
    std::cout << "interior_count: " << count_inside(points, box) << "\n";
    return 0;
  }

  if (pv->parsed()) {
    const auto cells = enumerate_index_set(pv_m, pv_d, pv_budget);
    const LemmaReport report = verify_lemma_probability(pv_m, pv_d, pv_budget);
    const double log_bound = index_set_log_bound(pv_m, pv_d);
    const bool card_ok = std::log(static_cast<double>(cells.size())) <= log_bound;
    unsigned max_a = 0;
    for (const auto& cell : cells) max_a = std::max(max_a, a_m_of_s(cell.s, pv_m));
    std::cout << "m: " << pv_m << "\nd: " << pv_d << "\n";
    std::cout << "cells: " << cells.size() << "\n";
    std::cout << "a_m_cap: " << a_m_cap(pv_m, pv_d) << "\n";
    std::cout << "max_a_m: " << max_a << "\n";
    std::cout << "cardinality_log_bound: " << format_double(log_bound) << "\n";
    std::cout << "cardinality_holds: " << (card_ok ? "true" : "false") << "\n";
    std::cout << "min_probability: " << report.min_probability.str() << "\n";
    std::cout << "probability_bound: " << report.bound.str() << "\n";
    std::cout << "lemma_holds: " << (report.holds ? "true" : "false") << "\n";
    return report.holds && card_ok ? 0 : 1;
  }

  if (bounds->parsed()) {
    std::cout << describe(bound_report(b_n, b_d, b_k, b_C, b_c));
    return 0;
  }

  if (thma->parsed()) {
    const ThmAResult result =
        run_thm_a_experiment(thma_m, thma_d, thma_k, thma_reps, thma_seed, thma_n);
    write_output(thm_a_to_csv(result), thma_out);
    std::cerr << "successes: " << result.successes << "/" << result.rows.size() << "\n";
    return 0;
  }

  if (sweep->parsed()) {
    SweepConfig config;
    config.k = sweep_k;
    config.seed = sweep_seed;
    config.trials = sweep_trials;
    if (sweep_kind == "fibonacci") {
      for (std::uint64_t nu : parse_list(sweep_nus))
        config.cells.push_back({"fibonacci", std::nullopt, static_cast<unsigned>(nu), 0, 2});
    } else {
      const auto ns = parse_list(sweep_ns);
      const auto ds = parse_list(sweep_ds);
      if (ns.empty() || ds.empty())
        throw std::invalid_argument("sweep: --ns and --ds are required for this kind");
      for (std::uint64_t d : ds)
        for (std::uint64_t n : ns)
          config.cells.push_back({sweep_kind,
                                  sweep_kind == "mesh" ? std::optional<unsigned>(sweep_m)
                                                       : std::nullopt,
                                  std::nullopt, n, static_cast<std::size_t>(d)});
    }
    write_output(run_scaling_sweep(config), sweep_out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kdisp::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const kdisp::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
