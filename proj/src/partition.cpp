#include "kdisp/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "kdisp/errors.hpp"

namespace kdisp {

namespace {

void check_cell(const PartitionCell& cell) {
  if (cell.m < 1 || cell.m > 30) throw std::invalid_argument("PartitionCell: m out of range");
  if (cell.s.empty() || cell.s.size() != cell.p_num.size())
    throw std::invalid_argument("PartitionCell: s/p size mismatch");
  const std::uint32_t top = (1u << cell.m);
  for (std::size_t l = 0; l < cell.s.size(); ++l) {
    if (cell.s[l] >= top) throw std::invalid_argument("PartitionCell: s component out of range");
    if (cell.p_num[l] < 1 || cell.p_num[l] >= top)
      throw std::invalid_argument("PartitionCell: p component out of range");
  }
}

}  // namespace

AxisBox core_box(const PartitionCell& cell) {
  check_cell(cell);
  const std::size_t d = cell.s.size();
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t l = 0; l < d; ++l) {
    if (cell.s[l] < 1)
      throw std::invalid_argument("core_box: inadmissible cell (s component is 0)");
    lo[l] = cell.p_num[l];
    hi[l] = cell.p_num[l] + cell.s[l] - 1;
  }
  return AxisBox::from_numerators(lo, hi, cell.m);
}

std::optional<PartitionCell> classify_box(const AxisBox& box, unsigned m) {
  if (m < 1 || m > 30) throw std::invalid_argument("classify_box: m out of range");
  const double threshold = std::ldexp(1.0, -static_cast<int>(m));
  if (!(volume(box) > threshold)) return std::nullopt;

  const double scale = std::ldexp(1.0, static_cast<int>(m));
  PartitionCell cell;
  cell.m = m;
  cell.s.resize(box.dim());
  cell.p_num.resize(box.dim());
  for (std::size_t l = 0; l < box.dim(); ++l) {
    const double w = box.hi(l) - box.lo(l);
    // s/2^m < w <= (s+1)/2^m  and  inf in [p - 1/2^m, p)
    cell.s[l] = static_cast<std::uint32_t>(std::ceil(w * scale)) - 1;
    cell.p_num[l] = static_cast<std::uint32_t>(std::floor(box.lo(l) * scale)) + 1;
  }
  return cell;
}

unsigned a_m_of_s(const std::vector<std::uint32_t>& s, unsigned m) {
  const std::uint32_t top = (1u << m) - 1;
  unsigned count = 0;
  for (std::uint32_t v : s)
    if (v < top) ++count;
  return count;
}

unsigned a_m_cap(unsigned m, std::size_t d) {
  const double cap = std::floor(std::log(2.0) * m * std::ldexp(1.0, static_cast<int>(m)));
  return static_cast<unsigned>(std::min<double>(cap, static_cast<double>(d)));
}

namespace {

// Walks all (s, p) combinations with s_l in [1, 2^m-1], p_l in [1, 2^m - s_l]
// (the per-axis feasibility range) and keeps those whose maximal achievable
// volume, prod_l (s_l + 1) in units of 2^-m per axis, exceeds 2^(m(d-1)).
template <typename Fn>
std::uint64_t for_each_admissible(unsigned m, std::size_t d, std::uint64_t budget, Fn&& fn) {
  const std::uint64_t side = (std::uint64_t(1) << m) - 1;
  unsigned __int128 combos = 1;
  for (std::size_t l = 0; l < 2 * d; ++l) {
    combos *= side;
    if (combos > budget)
      throw BudgetExceeded("index-set enumeration: (2^m-1)^(2d) exceeds budget");
  }

  PartitionCell cell;
  cell.m = m;
  cell.s.assign(d, 1);
  cell.p_num.assign(d, 1);
  const std::uint64_t volume_floor = std::uint64_t(1) << (m * (d - 1));  // in 2^-md units
  std::uint64_t count = 0;

  // odometer over (s_1..s_d, p_1..p_d)
  while (true) {
    bool feasible = true;
    std::uint64_t max_volume = 1;
    for (std::size_t l = 0; l < d; ++l) {
      if (cell.p_num[l] + cell.s[l] > (std::uint64_t(1) << m)) {
        feasible = false;
        break;
      }
      max_volume *= cell.s[l] + 1;
    }
    if (feasible && max_volume > volume_floor) {
      ++count;
      fn(cell);
    }

    std::size_t pos = 2 * d;
    while (pos > 0) {
      --pos;
      std::uint32_t& v = pos < d ? cell.s[pos] : cell.p_num[pos - d];
      if (v < side) {
        ++v;
        break;
      }
      v = 1;
      if (pos == 0) return count;
    }
  }
}

}  // namespace

std::vector<PartitionCell> enumerate_index_set(unsigned m, std::size_t d, std::uint64_t budget) {
  if (m < 1 || m > 30 || d < 1) throw std::invalid_argument("enumerate_index_set: bad m or d");
  if (m * d > 60) throw std::invalid_argument("enumerate_index_set: m*d too large");
  std::vector<PartitionCell> cells;
  // The odometer emits (s_1..s_d, p_1..p_d) with the last digit fastest,
  // i.e. already in lexicographic (s, p) order.
  for_each_admissible(m, d, budget, [&](const PartitionCell& cell) { cells.push_back(cell); });
  return cells;
}

LemmaReport verify_lemma_probability(unsigned m, std::size_t d, std::uint64_t budget) {
  if (m < 1 || m > 30 || d < 1) throw std::invalid_argument("verify_lemma_probability: bad m or d");
  if (m * d > 60) throw std::invalid_argument("verify_lemma_probability: m*d too large");

  const std::int64_t side = (std::int64_t(1) << m) - 1;
  std::int64_t grid_total = 1;
  for (std::size_t l = 0; l < d; ++l) grid_total *= side;

  bool first = true;
  Rational min_probability(1, 1);
  const std::uint64_t cells = for_each_admissible(m, d, budget, [&](const PartitionCell& cell) {
    // Mesh points of the closed core interval [p, p + (s-1)/2^m], per axis:
    // numerators t in [p, p+s-1] intersected with [1, 2^m-1].
    std::int64_t hits = 1;
    for (std::size_t l = 0; l < d; ++l) {
      const std::int64_t lo = std::max<std::int64_t>(cell.p_num[l], 1);
      const std::int64_t hi = std::min<std::int64_t>(cell.p_num[l] + cell.s[l] - 1, side);
      hits *= hi >= lo ? hi - lo + 1 : 0;
    }
    const Rational prob(hits, grid_total);
    if (first || prob < min_probability) {
      min_probability = prob;
      first = false;
    }
  });

  const Rational bound = pow2_inverse(m + 4);
  return {m, d, cells, min_probability, bound, !first && min_probability >= bound};
}

double index_set_log_bound(unsigned m, std::size_t d) {
  return m * std::ldexp(1.0, static_cast<int>(m)) *
         std::log(std::ldexp(static_cast<double>(d), static_cast<int>(m) + 3));
}

}  // namespace kdisp
