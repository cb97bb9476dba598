#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdisp/geometry.hpp"
#include "kdisp/rational.hpp"

namespace kdisp {

struct SearchLimits {
  std::uint64_t max_boxes = 100'000'000;  // candidate-box budget
  std::size_t threads = 0;                // 0: KDISP_THREADS or hardware
};

// Result of a dispersion search. Invariants: count_inside(X, witness) <= k
// and volume(witness) == value. exact_value is set on the dyadic path.
// complete == false means the budget truncated the search and value is
// only a lower bound; budget echoes the cap that applied.
struct DispersionResult {
  double value;
  std::optional<Rational> exact_value;
  AxisBox witness;
  std::uint64_t boxes_examined;
  std::uint64_t pruned;
  bool complete;
  std::uint64_t budget;
};

// {0, 1} plus the distinct axis coordinates of X, ascending.
std::vector<double> candidate_coordinates(const PointMultiset& points, std::size_t axis);

// Largest volume of an axis-parallel box whose open interior holds at most
// k points of X. Searches all boxes with faces at candidate coordinates;
// depth-first over axes with volume pruning. Witness ties resolve to the
// lexicographically smallest concatenated (lo, hi) vector. Requires d <= 8.
DispersionResult exact_k_dispersion(const PointMultiset& points, std::uint64_t k,
                                    const SearchLimits& limits = {});

// Same search restricted to the level-m dyadic grid {0, 1/2^m, ..., 1} on
// every axis; X must be mesh-tagged. All arithmetic is exact; cost depends
// on (m, d) only, not on the number of points.
DispersionResult grid_exhaustive(const PointMultiset& points, std::uint64_t k,
                                 const SearchLimits& limits = {});

// Deterministic multi-line rendering (CLI output and byte-level tests).
std::string describe(const DispersionResult& result);
std::string box_to_string(const AxisBox& box);

}  // namespace kdisp
