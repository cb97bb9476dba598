#include "kdisp/solver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kdisp/errors.hpp"
#include "kdisp/pointset_io.hpp"
#include "kdisp/threads.hpp"

namespace kdisp {

namespace {

struct AxisCand {
  std::vector<double> pos;        // sorted, unique
  std::vector<std::int64_t> num;  // parallel numerators (dyadic mode only)
};

struct BranchOutcome {
  bool found = false;
  double value = -1.0;
  std::uint64_t value_num = 0;  // numerator at exponent m*d (dyadic mode)
  std::vector<double> lo, hi;   // witness, original axis order
  std::uint64_t boxes = 0;
  std::uint64_t pruned = 0;
  bool complete = true;
};

// true when (a_lo, a_hi) precedes (b_lo, b_hi) in the concatenated
// lexicographic order used for witness tie-breaking.
bool key_less(const std::vector<double>& a_lo, const std::vector<double>& a_hi,
              const std::vector<double>& b_lo, const std::vector<double>& b_hi) {
  for (std::size_t j = 0; j < a_lo.size(); ++j) {
    if (a_lo[j] != b_lo[j]) return a_lo[j] < b_lo[j];
  }
  for (std::size_t j = 0; j < a_hi.size(); ++j) {
    if (a_hi[j] != b_hi[j]) return a_hi[j] < b_hi[j];
  }
  return false;
}

// Depth-first search over one top-level branch (a fixed interval choice on
// the first search axis). The branch owns its incumbent: pruning never
// consults other branches, so explored node counts are identical for every
// thread schedule.
class BranchExplorer {
 public:
  BranchExplorer(const PointMultiset& points, std::uint64_t k,
                 const std::vector<AxisCand>& cands, const std::vector<std::size_t>& order,
                 std::optional<unsigned> level, std::uint64_t budget)
      : points_(points),
        k_(k),
        cands_(cands),
        order_(order),
        level_(level),
        budget_(budget),
        d_(points.dim()) {
    alive_.resize(d_ + 1);
    alive_mult_.assign(d_ + 1, 0);
    partial_f_.assign(d_ + 1, 1.0);
    partial_n_.assign(d_ + 1, 1);
    choice_lo_.assign(d_, 0);
    choice_hi_.assign(d_, 0);
    alive_[0].resize(points.entry_count());
    std::iota(alive_[0].begin(), alive_[0].end(), 0u);
    alive_mult_[0] = points.total_size();
  }

  BranchOutcome run(std::size_t pair_lo, std::size_t pair_hi) {
    descend(0, pair_lo, pair_hi);
    return std::move(best_);
  }

 private:
  void descend(std::size_t depth, std::size_t i, std::size_t j) {
    const AxisCand& cand = cands_[order_[depth]];
    const double width = cand.pos[j] - cand.pos[i];
    const double pf = partial_f_[depth] * width;
    std::uint64_t pn = 1;
    if (level_) {
      pn = partial_n_[depth] * static_cast<std::uint64_t>(cand.num[j] - cand.num[i]);
    }
    // Remaining axes contribute a factor of at most 1, so pf bounds every
    // completion. Strict comparison: equal-volume completions must survive
    // for the lexicographic tie-break.
    if (best_.found && bound_below_best(pf, pn, depth)) {
      ++best_.pruned;
      return;
    }

    choice_lo_[depth] = i;
    choice_hi_[depth] = j;
    partial_f_[depth + 1] = pf;
    partial_n_[depth + 1] = pn;
    filter_alive(depth, cand.pos[i], cand.pos[j]);
    explore(depth + 1);
  }

  void explore(std::size_t depth) {
    if (stopped_) return;
    if (depth == d_ || alive_mult_[depth] <= k_) {
      // Either a fully specified box, or every completion already has at
      // most k interior points and the full-extent completion dominates.
      evaluate(depth);
      return;
    }
    const AxisCand& cand = cands_[order_[depth]];
    const std::size_t c = cand.pos.size();
    for (std::size_t i = 0; i + 1 < c; ++i) {
      for (std::size_t j = i + 1; j < c; ++j) {
        descend(depth, i, j);
        if (stopped_) return;
      }
    }
  }

  bool bound_below_best(double pf, std::uint64_t pn, std::size_t depth) const {
    if (level_) {
      const unsigned shift = *level_ * static_cast<unsigned>(d_ - depth - 1);
      return (pn << shift) < best_.value_num;
    }
    return pf < best_.value;
  }

  void filter_alive(std::size_t depth, double lo, double hi) {
    const std::size_t axis = order_[depth];
    auto& next = alive_[depth + 1];
    next.clear();
    std::uint64_t mult = 0;
    for (std::uint32_t idx : alive_[depth]) {
      const double x = points_.coord(idx, axis);
      if (lo < x && x < hi) {
        next.push_back(idx);
        mult += points_.multiplicity(idx);
      }
    }
    alive_mult_[depth + 1] = mult;
  }

  void evaluate(std::size_t depth) {
    if (best_.boxes >= budget_) {
      best_.complete = false;
      stopped_ = true;
      return;
    }
    ++best_.boxes;
    if (depth == d_ && alive_mult_[d_] > k_) return;

    const double value = partial_f_[depth];
    std::uint64_t value_num = 0;
    if (level_) {
      const unsigned shift = *level_ * static_cast<unsigned>(d_ - depth);
      value_num = partial_n_[depth] << shift;
    }
    if (best_.found) {
      if (level_ ? value_num < best_.value_num : value < best_.value) return;
    }
    // Materialize the candidate: fixed axes take their chosen faces, the
    // rest span [0,1].
    std::vector<double> lo(d_, 0.0), hi(d_, 1.0);
    for (std::size_t t = 0; t < depth; ++t) {
      const AxisCand& cand = cands_[order_[t]];
      lo[order_[t]] = cand.pos[choice_lo_[t]];
      hi[order_[t]] = cand.pos[choice_hi_[t]];
    }
    const bool better =
        !best_.found || (level_ ? value_num > best_.value_num : value > best_.value) ||
        key_less(lo, hi, best_.lo, best_.hi);
    if (!better) return;
    best_.found = true;
    best_.value = value;
    best_.value_num = value_num;
    best_.lo = std::move(lo);
    best_.hi = std::move(hi);
  }

  const PointMultiset& points_;
  const std::uint64_t k_;
  const std::vector<AxisCand>& cands_;
  const std::vector<std::size_t>& order_;
  const std::optional<unsigned> level_;
  const std::uint64_t budget_;
  const std::size_t d_;

  std::vector<std::vector<std::uint32_t>> alive_;
  std::vector<std::uint64_t> alive_mult_;
  std::vector<double> partial_f_;
  std::vector<std::uint64_t> partial_n_;
  std::vector<std::size_t> choice_lo_, choice_hi_;
  BranchOutcome best_;
  bool stopped_ = false;
};

DispersionResult run_search(const PointMultiset& points, std::uint64_t k,
                            const std::vector<AxisCand>& cands,
                            std::optional<unsigned> level, const SearchLimits& limits) {
  const std::size_t d = points.dim();

  if (points.total_size() <= k) {
    AxisBox cube = AxisBox::unit_cube(d);
    std::optional<Rational> exact;
    if (level) exact = Rational(1, 1);
    return {1.0, exact, std::move(cube), 1, 0, true, limits.max_boxes};
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cands[a].pos.size() > cands[b].pos.size();
  });

  const std::size_t c0 = cands[order[0]].pos.size();
  std::vector<std::pair<std::size_t, std::size_t>> branches;
  branches.reserve(c0 * (c0 - 1) / 2);
  for (std::size_t i = 0; i + 1 < c0; ++i)
    for (std::size_t j = i + 1; j < c0; ++j) branches.emplace_back(i, j);

  const std::uint64_t branch_budget =
      (limits.max_boxes + branches.size() - 1) / branches.size();

  std::vector<BranchOutcome> outcomes(branches.size());
  parallel_for_index(branches.size(), resolve_threads(limits.threads), [&](std::size_t b) {
    BranchExplorer explorer(points, k, cands, order, level, branch_budget);
    outcomes[b] = explorer.run(branches[b].first, branches[b].second);
  });

  BranchOutcome best;
  std::uint64_t boxes = 0, pruned = 0;
  bool complete = true;
  for (auto& out : outcomes) {
    boxes += out.boxes;
    pruned += out.pruned;
    complete = complete && out.complete;
    if (!out.found) continue;
    const bool better =
        !best.found || (level ? out.value_num > best.value_num : out.value > best.value) ||
        ((level ? out.value_num == best.value_num : out.value == best.value) &&
         key_less(out.lo, out.hi, best.lo, best.hi));
    if (better) best = std::move(out);
  }

  if (!best.found) {
    // Only reachable by budget truncation before any candidate qualified.
    return {0.0, level ? std::optional<Rational>(Rational(0, 1)) : std::nullopt,
            AxisBox(std::vector<double>(d, 0.0), std::vector<double>(d, 0.0), level),
            boxes, pruned, false, limits.max_boxes};
  }

  std::optional<Rational> exact;
  std::optional<unsigned> box_level;
  if (level) {
    exact = Rational(static_cast<std::int64_t>(best.value_num),
                     std::int64_t(1) << (*level * d));
    box_level = level;
  }
  AxisBox witness(std::move(best.lo), std::move(best.hi), box_level);
  // The search multiplies widths in search-axis order; report the product
  // in natural order so value == volume(witness) bit-exactly.
  const double value = volume(witness);
  return {value, exact, std::move(witness), boxes, pruned, complete, limits.max_boxes};
}

std::vector<AxisCand> point_candidates(const PointMultiset& points,
                                       std::optional<unsigned> level) {
  const std::size_t d = points.dim();
  std::vector<AxisCand> cands(d);
  for (std::size_t j = 0; j < d; ++j) {
    auto& c = cands[j];
    c.pos = candidate_coordinates(points, j);
    if (level) {
      c.num.reserve(c.pos.size());
      for (double x : c.pos) c.num.push_back(*dyadic::numerator(x, *level));
    }
  }
  return cands;
}

}  // namespace

std::vector<double> candidate_coordinates(const PointMultiset& points, std::size_t axis) {
  if (axis >= points.dim()) throw std::invalid_argument("candidate_coordinates: axis out of range");
  std::vector<double> out;
  out.reserve(points.entry_count() + 2);
  out.push_back(0.0);
  out.push_back(1.0);
  for (std::size_t i = 0; i < points.entry_count(); ++i) out.push_back(points.coord(i, axis));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DispersionResult exact_k_dispersion(const PointMultiset& points, std::uint64_t k,
                                    const SearchLimits& limits) {
  const std::size_t d = points.dim();
  if (d > 8) throw std::invalid_argument("exact_k_dispersion: d > 8 is not supported");
  std::optional<unsigned> level = points.mesh_level();
  if (level && static_cast<std::uint64_t>(*level) * d > 62) level.reset();  // fall back to floats
  return run_search(points, k, point_candidates(points, level), level, limits);
}

DispersionResult grid_exhaustive(const PointMultiset& points, std::uint64_t k,
                                 const SearchLimits& limits) {
  if (!points.mesh_level())
    throw std::invalid_argument("grid_exhaustive: point set is not mesh-tagged");
  const unsigned m = *points.mesh_level();
  const std::size_t d = points.dim();
  if (static_cast<std::uint64_t>(m) * d > 62)
    throw std::invalid_argument("grid_exhaustive: m*d too large for exact arithmetic");

  const std::uint64_t side = (std::uint64_t(1) << m) + 1;
  const std::uint64_t pairs = side * (side - 1) / 2;
  unsigned __int128 total = 1;
  for (std::size_t j = 0; j < d; ++j) {
    total *= pairs;
    if (total > limits.max_boxes)
      throw BudgetExceeded("grid_exhaustive: " + std::to_string(pairs) + "^" +
                           std::to_string(d) + " candidate boxes exceed the budget of " +
                           std::to_string(limits.max_boxes));
  }

  std::vector<AxisCand> cands(d);
  for (std::size_t j = 0; j < d; ++j) {
    auto& c = cands[j];
    c.pos.reserve(side);
    c.num.reserve(side);
    for (std::uint64_t t = 0; t <= (std::uint64_t(1) << m); ++t) {
      c.num.push_back(static_cast<std::int64_t>(t));
      c.pos.push_back(dyadic::to_double(static_cast<std::int64_t>(t), m));
    }
  }
  return run_search(points, k, cands, m, limits);
}

std::string box_to_string(const AxisBox& box) {
  std::ostringstream out;
  for (std::size_t j = 0; j < box.dim(); ++j) {
    if (j > 0) out << " x ";
    out << "[" << format_double(box.lo(j)) << ", " << format_double(box.hi(j)) << "]";
  }
  return out.str();
}

std::string describe(const DispersionResult& result) {
  std::ostringstream out;
  out << "value: " << format_double(result.value) << "\n";
  if (result.exact_value) out << "value_exact: " << result.exact_value->str() << "\n";
  out << "witness: " << box_to_string(result.witness) << "\n";
  out << "boxes_examined: " << result.boxes_examined << "\n";
  out << "pruned: " << result.pruned << "\n";
  out << "complete: " << (result.complete ? "true" : "false") << "\n";
  if (!result.complete) out << "budget: " << result.budget << "\n";
  return out.str();
}

}  // namespace kdisp
