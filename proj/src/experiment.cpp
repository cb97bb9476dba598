#include "kdisp/experiment.hpp"

#include <cmath>
#include <sstream>

#include "kdisp/bounds.hpp"
#include "kdisp/errors.hpp"
#include "kdisp/generators.hpp"
#include "kdisp/pointset_io.hpp"
#include "kdisp/rng.hpp"
#include "kdisp/search.hpp"

namespace kdisp {

ThmAResult run_thm_a_experiment(unsigned m, std::size_t d, std::uint64_t k,
                                std::uint64_t repetitions, std::uint64_t seed,
                                std::optional<std::uint64_t> n_override,
                                const SearchLimits& limits) {
  if (repetitions < 1) throw std::invalid_argument("run_thm_a_experiment: repetitions >= 1");
  const std::uint64_t side = (std::uint64_t(1) << m) + 1;
  const std::uint64_t pairs = side * (side - 1) / 2;
  unsigned __int128 total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    total *= pairs;
    if (total > limits.max_boxes)
      throw BudgetExceeded("run_thm_a_experiment: grid search beyond budget");
  }

  ThmAResult result;
  result.m = m;
  result.d = d;
  result.k = k;
  result.n = n_override ? *n_override : sufficient_n(m, d, k);
  result.seed = seed;
  const Rational threshold = pow2_inverse(m);

  for (std::uint64_t rep = 0; rep < repetitions; ++rep) {
    const PointMultiset sample =
        mesh_random_multiset({m, d, result.n}, CounterRng::mix(seed) + rep);
    const DispersionResult disp = grid_exhaustive(sample, k, limits);
    const bool success = *disp.exact_value <= threshold;
    result.rows.push_back({rep, result.n, *disp.exact_value, success});
    if (success) ++result.successes;
  }
  return result;
}

std::string thm_a_to_csv(const ThmAResult& result) {
  std::ostringstream out;
  out << "version,m,d,k,n,seed,repetition,value,success\n";
  for (const auto& row : result.rows) {
    out << "1," << result.m << "," << result.d << "," << result.k << "," << row.n << ","
        << result.seed << "," << row.repetition << "," << row.value.str() << ","
        << (row.success ? "1" : "0") << "\n";
  }
  return out.str();
}

std::string run_scaling_sweep(const SweepConfig& config) {
  std::ostringstream out;
  out << kSweepCsvHeader << "\n";
  std::uint64_t cell_index = 0;
  for (const auto& cell : config.cells) {
    std::optional<PointMultiset> points;
    std::string status = "ok";
    if (cell.kind == "mesh") {
      if (!cell.m) throw std::invalid_argument("sweep: mesh cell requires m");
      points = mesh_random_multiset({*cell.m, cell.d, cell.n},
                                    CounterRng::mix(config.seed) + cell_index);
    } else if (cell.kind == "uniform") {
      points = uniform_random(cell.n, cell.d, CounterRng::mix(config.seed) + cell_index);
    } else if (cell.kind == "fibonacci") {
      if (!cell.nu) throw std::invalid_argument("sweep: fibonacci cell requires nu");
      points = fibonacci_lattice(*cell.nu);
    } else {
      throw std::invalid_argument("sweep: unknown kind " + cell.kind);
    }

    // Exact search when the a-priori candidate-box count fits the budget.
    long double apriori = 1.0L;
    for (std::size_t j = 0; j < points->dim(); ++j) {
      const long double c =
          static_cast<long double>(candidate_coordinates(*points, j).size());
      apriori *= c * (c - 1) / 2;
    }
    std::string method;
    double value = 0.0;
    std::optional<Rational> exact;
    if (points->dim() <= 8 && apriori <= static_cast<long double>(config.limits.max_boxes)) {
      DispersionResult r = exact_k_dispersion(*points, config.k, config.limits);
      method = "exact";
      value = r.value;
      exact = r.exact_value;
      if (!r.complete) status = "budget";
    } else {
      SearchConfig sc;
      sc.trials = config.trials;
      sc.seed = CounterRng::mix(config.seed ^ 0x9E3779B97F4A7C15ULL) + cell_index;
      sc.threads = config.limits.threads;
      DispersionResult r = stochastic_lower_bound(*points, config.k, sc);
      method = "stochastic";
      value = r.value;
    }

    const std::uint64_t n = points->total_size();
    out << "1," << cell.kind << "," << (cell.m ? std::to_string(*cell.m) : "") << ","
        << (cell.nu ? std::to_string(*cell.nu) : "") << "," << n << "," << points->dim() << ","
        << config.k << "," << config.seed << "," << method << "," << format_double(value) << ","
        << (exact ? exact->str() : "") << ","
        << format_double(thm_b_lower(n, points->dim(), config.k)) << ","
        << format_double(ahr_lower(n, points->dim())) << "," << status << "\n";
    ++cell_index;
  }
  return out.str();
}

}  // namespace kdisp
