#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kdisp/geometry.hpp"
#include "kdisp/rational.hpp"

namespace kdisp {

// Index pair (s, p) of a box class at level m. Boxes in the class satisfy,
// per axis: width in (s/2^m, (s+1)/2^m] and lower endpoint in
// [p - 1/2^m, p). p is stored as its numerator: p = p_num/2^m.
struct PartitionCell {
  unsigned m = 1;
  std::vector<std::uint32_t> s;
  std::vector<std::uint32_t> p_num;

  bool operator==(const PartitionCell& other) const {
    return m == other.m && s == other.s && p_num == other.p_num;
  }
  bool operator<(const PartitionCell& other) const {
    if (s != other.s) return s < other.s;
    return p_num < other.p_num;
  }
};

// The intersection of every box in the cell's class:
// prod_l [p_l, p_l + (s_l - 1)/2^m], a closed dyadic box. A cell with some
// s_l = 0 has an empty class and no core box.
AxisBox core_box(const PartitionCell& cell);

// The unique cell whose defining inequalities the box satisfies, or nullopt
// when volume(box) <= 2^-m (the box belongs to no class at this level).
std::optional<PartitionCell> classify_box(const AxisBox& box, unsigned m);

// Number of axes with s_l < 2^m - 1, and its cap min{floor(ln(2) m 2^m), d}.
unsigned a_m_of_s(const std::vector<std::uint32_t>& s, unsigned m);
unsigned a_m_cap(unsigned m, std::size_t d);

// All admissible cells (nonempty box classes), lexicographic in (s, p).
// Admissibility is an exact per-axis feasibility check: s_l >= 1,
// p_l + s_l <= 2^m, and the maximal achievable volume exceeds 2^-m.
std::vector<PartitionCell> enumerate_index_set(unsigned m, std::size_t d,
                                               std::uint64_t budget = 50'000'000);

struct LemmaReport {
  unsigned m;
  std::size_t d;
  std::uint64_t cells;
  Rational min_probability;  // min over cells of P(uniform mesh point in core box)
  Rational bound;            // 1 / 2^(m+4)
  bool holds;
};

// Exhaustive check that every admissible cell's core box captures a uniform
// mesh point with probability at least 1/2^(m+4). Probabilities are exact:
// per-axis integer counts of mesh points in the closed core interval,
// multiplied across axes, over (2^m-1)^d.
LemmaReport verify_lemma_probability(unsigned m, std::size_t d,
                                     std::uint64_t budget = 50'000'000);

// log of the admissible-cell cardinality bound: m 2^m ln(2^(m+3) d).
double index_set_log_bound(unsigned m, std::size_t d);

}  // namespace kdisp
