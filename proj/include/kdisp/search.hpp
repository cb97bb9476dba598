#pragma once

#include <cstdint>

#include "kdisp/solver.hpp"

namespace kdisp {

struct SearchConfig {
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  // Trials converge on their own (every round either moves a face or stops);
  // the cap exists for callers that want a hard bound on sweep work.
  std::uint32_t max_rounds_per_trial = 0xFFFFFFFFu;
  std::size_t threads = 0;
};

// Randomized lower bound on the k-dispersion: each trial grows a box from a
// uniform random center by coordinate ascent (sweep axes in random order,
// advance each face one candidate position when the interior count stays
// <= k) until no face can move. Trial randomness is a pure function of
// (seed, trial index), so the result is independent of scheduling.
// Returned boxes are maximal; value never exceeds the exact supremum.
DispersionResult stochastic_lower_bound(const PointMultiset& points, std::uint64_t k,
                                        const SearchConfig& config = {});

}  // namespace kdisp
