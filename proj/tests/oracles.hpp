#pragma once

// Brute-force reference computations, kept independent of the library's
// search path: boxes are enumerated straight from their lattice face
// positions and interiors counted point by point.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kdisp/geometry.hpp"

namespace kdisp::oracle {

// Interior count of (lo, hi) computed straight off the definition.
inline std::uint64_t naive_count(const PointMultiset& points, const std::vector<double>& lo,
                                 const std::vector<double>& hi) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < points.entry_count(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < points.dim(); ++j) {
      const double x = points.coord(i, j);
      if (!(lo[j] < x && x < hi[j])) {
        inside = false;
        break;
      }
    }
    if (inside) total += points.multiplicity(i);
  }
  return total;
}

// Largest-volume box with faces on the lattice {0, 1/R, ..., 1} and at most
// k interior points. Exhaustive over the face choices of all axes but the
// last; on the last axis the widest admissible window per left edge is found
// by a monotone sweep. Points sitting exactly on lattice lines are handled
// by keeping their mass separate from the open cells.
class LatticeSolver {
 public:
  LatticeSolver(const PointMultiset& points, unsigned resolution)
      : points_(points), r_(resolution) {
    if (points.dim() < 1 || points.dim() > 3)
      throw std::invalid_argument("LatticeSolver: dimension not supported");
  }

  double best(std::uint64_t k) const {
    const auto all = everything();
    const double unit = 1.0 / static_cast<double>(r_);
    if (points_.dim() == 1) return widest_window(all, 0, k) * unit;
    if (points_.dim() == 2) {
      std::uint64_t best_area = 0;
      for (unsigned a = 0; a < r_; ++a)
        for (unsigned b = a + 1; b <= r_; ++b) {
          if (static_cast<std::uint64_t>(b - a) * r_ <= best_area) continue;
          const auto inside = filter(all, 0, a, b);
          best_area = std::max<std::uint64_t>(
              best_area, static_cast<std::uint64_t>(b - a) * widest_window(inside, 1, k));
        }
      return static_cast<double>(best_area) * unit * unit;
    }
    std::uint64_t best_volume = 0;
    for (unsigned a = 0; a < r_; ++a)
      for (unsigned b = a + 1; b <= r_; ++b) {
        const auto inside_x = filter(all, 0, a, b);
        for (unsigned c = 0; c < r_; ++c)
          for (unsigned e = c + 1; e <= r_; ++e) {
            const std::uint64_t base = static_cast<std::uint64_t>(b - a) * (e - c);
            if (base * r_ <= best_volume) continue;
            const auto inside_xy = filter(inside_x, 1, c, e);
            best_volume =
                std::max<std::uint64_t>(best_volume, base * widest_window(inside_xy, 2, k));
          }
      }
    return static_cast<double>(best_volume) * unit * unit * unit;
  }

 private:
  std::vector<std::uint32_t> everything() const {
    std::vector<std::uint32_t> all(points_.entry_count());
    for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }

  // Points of `subset` strictly inside (a/R, b/R) on `axis`.
  std::vector<std::uint32_t> filter(const std::vector<std::uint32_t>& subset, std::size_t axis,
                                    unsigned a, unsigned b) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i : subset) {
      const double u = points_.coord(i, axis) * r_;
      if (static_cast<double>(a) < u && u < static_cast<double>(b)) out.push_back(i);
    }
    return out;
  }

  // Widest window (c/R, e/R) on `axis` holding at most k points of subset.
  unsigned widest_window(const std::vector<std::uint32_t>& subset, std::size_t axis,
                         std::uint64_t k) const {
    // Mass inside each open cell (t/R, (t+1)/R) and on each lattice line.
    std::vector<std::uint64_t> open_prefix(r_ + 1, 0), lattice_prefix(r_ + 2, 0);
    for (std::uint32_t i : subset) {
      const double u = points_.coord(i, axis) * r_;
      const double f = std::floor(u);
      if (u == f)
        lattice_prefix[static_cast<std::size_t>(f) + 1] += points_.multiplicity(i);
      else
        open_prefix[static_cast<std::size_t>(f) + 1] += points_.multiplicity(i);
    }
    for (unsigned t = 0; t < r_; ++t) open_prefix[t + 1] += open_prefix[t];
    for (unsigned g = 0; g <= r_; ++g) lattice_prefix[g + 1] += lattice_prefix[g];

    // count of (c/R, e/R): open cells c..e-1 plus lattice lines c+1..e-1
    const auto count = [&](unsigned c, unsigned e) {
      return (open_prefix[e] - open_prefix[c]) + (lattice_prefix[e] - lattice_prefix[c + 1]);
    };

    unsigned best_width = 0, e = 1;
    for (unsigned c = 0; c < r_; ++c) {
      if (e <= c) e = c + 1;
      while (e < r_ && count(c, e + 1) <= k) ++e;
      if (count(c, e) <= k) best_width = std::max(best_width, e - c);
    }
    return best_width;
  }

  const PointMultiset& points_;
  unsigned r_;
};

}  // namespace kdisp::oracle
