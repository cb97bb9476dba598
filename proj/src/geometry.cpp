#include "kdisp/geometry.hpp"

#include <stdexcept>
#include <string>

namespace kdisp {

namespace dyadic {

std::optional<std::int64_t> numerator(double x, unsigned level) {
  if (level > 52) return std::nullopt;
  const double scaled = std::ldexp(x, static_cast<int>(level));
  const double rounded = std::nearbyint(scaled);
  if (scaled != rounded) return std::nullopt;
  if (rounded < 0 || rounded > static_cast<double>(std::int64_t(1) << level)) return std::nullopt;
  return static_cast<std::int64_t>(rounded);
}

}  // namespace dyadic

AxisBox::AxisBox(std::vector<double> lo, std::vector<double> hi, std::optional<unsigned> level)
    : lo_(std::move(lo)), hi_(std::move(hi)), level_(level) {
  if (lo_.size() != hi_.size() || lo_.empty())
    throw std::invalid_argument("AxisBox: lo/hi size mismatch or empty");
  for (std::size_t j = 0; j < lo_.size(); ++j) {
    if (!(0.0 <= lo_[j] && lo_[j] <= hi_[j] && hi_[j] <= 1.0))
      throw std::invalid_argument("AxisBox: requires 0 <= lo <= hi <= 1 on every axis");
    if (level_ && (!dyadic::numerator(lo_[j], *level_) || !dyadic::numerator(hi_[j], *level_)))
      throw std::invalid_argument("AxisBox: face not on the dyadic grid for the given level");
  }
}

AxisBox AxisBox::from_numerators(const std::vector<std::int64_t>& lo_num,
                                 const std::vector<std::int64_t>& hi_num, unsigned level) {
  std::vector<double> lo(lo_num.size()), hi(hi_num.size());
  for (std::size_t j = 0; j < lo_num.size(); ++j) lo[j] = dyadic::to_double(lo_num[j], level);
  for (std::size_t j = 0; j < hi_num.size(); ++j) hi[j] = dyadic::to_double(hi_num[j], level);
  return AxisBox(std::move(lo), std::move(hi), level);
}

AxisBox AxisBox::unit_cube(std::size_t dim) {
  return AxisBox(std::vector<double>(dim, 0.0), std::vector<double>(dim, 1.0), 0u);
}

PointMultiset::PointMultiset(std::size_t dim, std::vector<std::vector<double>> points,
                             std::vector<std::uint64_t> multiplicities,
                             std::optional<unsigned> mesh_level)
    : dim_(dim), mesh_level_(mesh_level) {
  if (dim_ == 0) throw std::invalid_argument("PointMultiset: dimension must be >= 1");
  if (multiplicities.empty()) multiplicities.assign(points.size(), 1);
  if (multiplicities.size() != points.size())
    throw std::invalid_argument("PointMultiset: multiplicity count != point count");
  coords_.reserve(points.size() * dim_);
  for (const auto& p : points) {
    if (p.size() != dim_) throw std::invalid_argument("PointMultiset: point dimension mismatch");
    for (double x : p) {
      if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("PointMultiset: coordinate outside [0,1]");
      if (mesh_level_) {
        const auto num = dyadic::numerator(x, *mesh_level_);
        if (!num || *num < 1 || *num > (std::int64_t(1) << *mesh_level_) - 1)
          throw std::invalid_argument("PointMultiset: coordinate not in the level-" +
                                      std::to_string(*mesh_level_) + " mesh");
      }
      coords_.push_back(x);
    }
  }
  for (std::uint64_t m : multiplicities) {
    if (m == 0) throw std::invalid_argument("PointMultiset: multiplicities must be positive");
    total_ += m;
  }
  mults_ = std::move(multiplicities);
}

PointMultiset PointMultiset::from_numerators(std::size_t dim, unsigned mesh_level,
                                             const std::vector<std::vector<std::int64_t>>& numerators,
                                             std::vector<std::uint64_t> multiplicities) {
  std::vector<std::vector<double>> pts(numerators.size());
  for (std::size_t i = 0; i < numerators.size(); ++i) {
    pts[i].reserve(numerators[i].size());
    for (std::int64_t num : numerators[i]) pts[i].push_back(dyadic::to_double(num, mesh_level));
  }
  return PointMultiset(dim, std::move(pts), std::move(multiplicities), mesh_level);
}

std::int64_t PointMultiset::coord_numerator(std::size_t entry, std::size_t axis) const {
  if (!mesh_level_) throw std::logic_error("PointMultiset: not mesh-tagged");
  return *dyadic::numerator(coord(entry, axis), *mesh_level_);
}

PointMultiset PointMultiset::with_point(const std::vector<double>& point) const {
  if (point.size() != dim_) throw std::invalid_argument("with_point: dimension mismatch");
  PointMultiset out;
  out.dim_ = dim_;
  out.coords_ = coords_;
  out.coords_.insert(out.coords_.end(), point.begin(), point.end());
  out.mults_ = mults_;
  out.mults_.push_back(1);
  out.total_ = total_ + 1;
  out.mesh_level_ = mesh_level_;
  if (out.mesh_level_) {
    for (double x : point) {
      const auto num = dyadic::numerator(x, *out.mesh_level_);
      if (!num || *num < 1 || *num > (std::int64_t(1) << *out.mesh_level_) - 1) {
        out.mesh_level_.reset();
        break;
      }
    }
  }
  return out;
}

double volume(const AxisBox& box) {
  double v = 1.0;
  for (std::size_t j = 0; j < box.dim(); ++j) v *= box.hi(j) - box.lo(j);
  return v;
}

std::optional<Rational> volume_exact(const AxisBox& box) {
  if (!box.level()) return std::nullopt;
  const unsigned m = *box.level();
  if (m > 62) return std::nullopt;
  const std::int64_t den = std::int64_t(1) << m;
  try {
    Rational v(1, 1);
    for (std::size_t j = 0; j < box.dim(); ++j) {
      const std::int64_t w =
          *dyadic::numerator(box.hi(j), m) - *dyadic::numerator(box.lo(j), m);
      v = v * Rational(w, den);  // reduces each step; overflow only if the
                                 // reduced value itself cannot fit
    }
    return v;
  } catch (const std::overflow_error&) {
    return std::nullopt;
  }
}

std::uint64_t count_inside(const PointMultiset& points, const AxisBox& box) {
  if (points.dim() != box.dim())
    throw std::invalid_argument("count_inside: dimension mismatch");
  std::uint64_t total = 0;
  const std::size_t d = points.dim();
  for (std::size_t i = 0; i < points.entry_count(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < d; ++j) {
      const double x = points.coord(i, j);
      if (!(box.lo(j) < x && x < box.hi(j))) {
        inside = false;
        break;
      }
    }
    if (inside) total += points.multiplicity(i);
  }
  return total;
}

bool is_k_empty(const PointMultiset& points, const AxisBox& box, std::uint64_t k) {
  return count_inside(points, box) <= k;
}

}  // namespace kdisp
