#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdisp/rational.hpp"
#include "kdisp/solver.hpp"

namespace kdisp {

struct ThmARow {
  std::uint64_t repetition;
  std::uint64_t n;
  Rational value;
  bool success;  // value <= 2^-m, exact comparison
};

struct ThmAResult {
  unsigned m;
  std::size_t d;
  std::uint64_t k;
  std::uint64_t n;
  std::uint64_t seed;
  std::vector<ThmARow> rows;
  std::uint64_t successes = 0;
};

// Samples mesh multisets of size n = sufficient_n(m, d, k) (or n_override)
// and checks, exactly, whether every box of volume above 2^-m holds more
// than k points. Repetition r uses the stream (seed, r).
ThmAResult run_thm_a_experiment(unsigned m, std::size_t d, std::uint64_t k,
                                std::uint64_t repetitions, std::uint64_t seed,
                                std::optional<std::uint64_t> n_override = std::nullopt,
                                const SearchLimits& limits = {});

std::string thm_a_to_csv(const ThmAResult& result);

struct SweepCell {
  std::string kind;  // mesh | uniform | fibonacci
  std::optional<unsigned> m;
  std::optional<unsigned> nu;
  std::uint64_t n = 0;
  std::size_t d = 0;
};

struct SweepConfig {
  std::vector<SweepCell> cells;
  std::uint64_t k = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 200;  // stochastic fallback
  SearchLimits limits;
};

// One generated instance per cell, solved exactly when the candidate-box
// budget allows and by stochastic search otherwise. CSV header is
// versioned; exact values render as fractions.
std::string run_scaling_sweep(const SweepConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "version,kind,m,nu,n,d,k,seed,method,value,value_exact,thm_b_lower,ahr_lower,status";

}  // namespace kdisp
