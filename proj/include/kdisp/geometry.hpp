#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kdisp/rational.hpp"

namespace kdisp {

// Dyadic coordinate helpers. A value num/2^m converts to double without
// rounding for m <= 52, so doubles tagged with a mesh level are a lossless
// encoding of the dyadic pair and numerators can be recovered exactly.
namespace dyadic {

inline double to_double(std::int64_t num, unsigned level) {
  return std::ldexp(static_cast<double>(num), -static_cast<int>(level));
}

// Exact numerator of x at level m, or nullopt when x is not on the grid.
std::optional<std::int64_t> numerator(double x, unsigned level);

}  // namespace dyadic

// Axis-parallel box inside [0,1]^d. Counting semantics are open-interior:
// a point on a face is outside. A box may carry a dyadic level tag meaning
// every face coordinate is num/2^level; volumes are then exact rationals.
class AxisBox {
 public:
  AxisBox(std::vector<double> lo, std::vector<double> hi,
          std::optional<unsigned> level = std::nullopt);

  // All faces at dyadic numerators (in units of 1/2^level).
  static AxisBox from_numerators(const std::vector<std::int64_t>& lo_num,
                                 const std::vector<std::int64_t>& hi_num,
                                 unsigned level);

  static AxisBox unit_cube(std::size_t dim);

  std::size_t dim() const { return lo_.size(); }
  double lo(std::size_t axis) const { return lo_[axis]; }
  double hi(std::size_t axis) const { return hi_[axis]; }
  std::span<const double> lo() const { return lo_; }
  std::span<const double> hi() const { return hi_; }
  std::optional<unsigned> level() const { return level_; }

  bool operator==(const AxisBox& other) const {
    return lo_ == other.lo_ && hi_ == other.hi_;
  }

 private:
  std::vector<double> lo_, hi_;
  std::optional<unsigned> level_;
};

// Point multiset in [0,1]^d. Entries are (point, multiplicity) pairs;
// duplicate entries are allowed. A set tagged with mesh_level m asserts
// every coordinate is k/2^m with 1 <= k <= 2^m - 1 (checked).
class PointMultiset {
 public:
  PointMultiset(std::size_t dim, std::vector<std::vector<double>> points,
                std::vector<std::uint64_t> multiplicities = {},
                std::optional<unsigned> mesh_level = std::nullopt);

  // Mesh-tagged construction from integer numerators at level m.
  static PointMultiset from_numerators(std::size_t dim, unsigned mesh_level,
                                       const std::vector<std::vector<std::int64_t>>& numerators,
                                       std::vector<std::uint64_t> multiplicities = {});

  std::size_t dim() const { return dim_; }
  std::size_t entry_count() const { return mults_.size(); }
  std::uint64_t total_size() const { return total_; }
  std::optional<unsigned> mesh_level() const { return mesh_level_; }

  double coord(std::size_t entry, std::size_t axis) const {
    return coords_[entry * dim_ + axis];
  }
  std::uint64_t multiplicity(std::size_t entry) const { return mults_[entry]; }
  std::span<const double> point(std::size_t entry) const {
    return {coords_.data() + entry * dim_, dim_};
  }
  std::int64_t coord_numerator(std::size_t entry, std::size_t axis) const;

  // A copy with one extra point appended (multiplicity 1, tag dropped
  // unless the point is on the mesh).
  PointMultiset with_point(const std::vector<double>& point) const;

 private:
  PointMultiset() = default;
  std::size_t dim_ = 0;
  std::vector<double> coords_;  // row-major, entry_count x dim
  std::vector<std::uint64_t> mults_;
  std::uint64_t total_ = 0;
  std::optional<unsigned> mesh_level_;
};

// Volume of the box; exact rational value when the box carries a dyadic
// level with level*dim small enough for int64.
double volume(const AxisBox& box);
std::optional<Rational> volume_exact(const AxisBox& box);

// Multiplicity-weighted number of points strictly inside the box.
std::uint64_t count_inside(const PointMultiset& points, const AxisBox& box);

bool is_k_empty(const PointMultiset& points, const AxisBox& box, std::uint64_t k);

}  // namespace kdisp
