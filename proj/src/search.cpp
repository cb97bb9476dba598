#include "kdisp/search.hpp"

#include <algorithm>
#include <numeric>

#include "kdisp/rng.hpp"
#include "kdisp/threads.hpp"

namespace kdisp {

namespace {

struct TrialResult {
  double value = -1.0;
  std::vector<double> lo, hi;
};

// Moves one face a single candidate step outward when the grown box keeps
// at most k interior points; returns the new position (current position if
// the face is blocked). Two deliberate choices make restarts effective:
// axes still at zero width impose no constraint when collecting active
// points (counting a degenerate interval as open would blow every first
// sweep up to the full cube), and faces advance one candidate per sweep so
// that tight faces on different axes can interlock instead of one axis
// irreversibly overshooting while the others are still unconstrained.
// Admissible positions for a face form a contiguous run (the count only
// grows outward), so single steps reach exactly the same maximal boxes.
double grow_face(const PointMultiset& points, std::uint64_t k,
                 const std::vector<std::vector<double>>& cands,
                 const std::vector<double>& lo, const std::vector<double>& hi,
                 std::size_t axis, bool lower_face) {
  const std::size_t d = points.dim();
  double pos;
  if (lower_face) {
    auto it = std::lower_bound(cands[axis].begin(), cands[axis].end(), lo[axis]);
    if (it == cands[axis].begin()) return lo[axis];
    pos = *std::prev(it);
  } else {
    auto it = std::upper_bound(cands[axis].begin(), cands[axis].end(), hi[axis]);
    if (it == cands[axis].end()) return hi[axis];
    pos = *it;
  }

  const double new_lo = lower_face ? pos : lo[axis];
  const double new_hi = lower_face ? hi[axis] : pos;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < points.entry_count(); ++i) {
    const double x = points.coord(i, axis);
    if (!(new_lo < x && x < new_hi)) continue;
    bool inside = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == axis || lo[j] == hi[j]) continue;
      const double y = points.coord(i, j);
      if (!(lo[j] < y && y < hi[j])) {
        inside = false;
        break;
      }
    }
    if (inside) {
      count += points.multiplicity(i);
      if (count > k) return lower_face ? lo[axis] : hi[axis];
    }
  }
  return pos;
}

// A face can pass a blocking point only while that point sits on a face of
// some other axis, so boxes whose faces block each other mutually are
// reachable only when some faces wait for the others to grow past their
// blockers first. Each face therefore draws a per-trial eagerness and skips
// a visit with the complementary probability; a round that skipped every
// movable face forces one move, so trials still terminate exactly at
// maximal boxes.
TrialResult run_trial(const PointMultiset& points, std::uint64_t k,
                      const std::vector<std::vector<double>>& cands, std::uint64_t seed,
                      std::uint64_t trial, std::uint32_t max_rounds) {
  const std::size_t d = points.dim();
  CounterRng rng(seed, trial);

  TrialResult out;
  out.lo.resize(d);
  out.hi.resize(d);
  for (std::size_t j = 0; j < d; ++j) out.lo[j] = out.hi[j] = rng.next_double();

  std::vector<double> eagerness(2 * d);
  for (auto& e : eagerness) e = std::ldexp(1.0, -static_cast<int>(rng.next_below(4)));

  // face 2j is the lower face of axis j, face 2j+1 the upper
  std::vector<std::size_t> faces(2 * d);
  std::iota(faces.begin(), faces.end(), 0);

  const auto try_face = [&](std::size_t face) {
    const std::size_t axis = face / 2;
    const bool lower = face % 2 == 0;
    const double pos = grow_face(points, k, cands, out.lo, out.hi, axis, lower);
    double& current = lower ? out.lo[axis] : out.hi[axis];
    if (pos == current) return false;
    current = pos;
    return true;
  };

  for (std::uint32_t round = 0; round < max_rounds; ++round) {
    for (std::size_t j = 2 * d; j > 1; --j)
      std::swap(faces[j - 1], faces[rng.next_below(j)]);
    bool moved = false;
    std::ptrdiff_t skipped_movable = -1;
    for (std::size_t face : faces) {
      const std::size_t axis = face / 2;
      const bool lower = face % 2 == 0;
      const double pos = grow_face(points, k, cands, out.lo, out.hi, axis, lower);
      double& current = lower ? out.lo[axis] : out.hi[axis];
      if (pos == current) continue;
      if (rng.next_double() < eagerness[face]) {
        current = pos;
        moved = true;
      } else if (skipped_movable < 0) {
        skipped_movable = static_cast<std::ptrdiff_t>(face);
      }
    }
    if (!moved) {
      // nothing moved: either the box is maximal, or everything movable was
      // skipped and the first such face advances to guarantee progress
      if (skipped_movable < 0) break;
      try_face(static_cast<std::size_t>(skipped_movable));
    }
  }

  out.value = 1.0;
  for (std::size_t j = 0; j < d; ++j) out.value *= out.hi[j] - out.lo[j];
  return out;
}

}  // namespace

DispersionResult stochastic_lower_bound(const PointMultiset& points, std::uint64_t k,
                                        const SearchConfig& config) {
  if (config.trials == 0) throw std::invalid_argument("stochastic_lower_bound: trials must be >= 1");
  const std::size_t d = points.dim();

  std::vector<std::vector<double>> cands(d);
  for (std::size_t j = 0; j < d; ++j) cands[j] = candidate_coordinates(points, j);

  std::vector<TrialResult> trials(config.trials);
  parallel_for_index(config.trials, resolve_threads(config.threads), [&](std::size_t t) {
    trials[t] = run_trial(points, k, cands, config.seed, t, config.max_rounds_per_trial);
  });

  const auto key_less = [d](const TrialResult& a, const TrialResult& b) {
    for (std::size_t j = 0; j < d; ++j)
      if (a.lo[j] != b.lo[j]) return a.lo[j] < b.lo[j];
    for (std::size_t j = 0; j < d; ++j)
      if (a.hi[j] != b.hi[j]) return a.hi[j] < b.hi[j];
    return false;
  };
  const TrialResult* best = &trials[0];
  for (std::size_t t = 1; t < trials.size(); ++t) {
    const TrialResult& cur = trials[t];
    if (cur.value > best->value || (cur.value == best->value && key_less(cur, *best)))
      best = &cur;
  }

  AxisBox witness(best->lo, best->hi);
  return {best->value, std::nullopt, std::move(witness), config.trials, 0, true, config.trials};
}

}  // namespace kdisp
