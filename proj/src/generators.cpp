#include "kdisp/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "kdisp/rng.hpp"

namespace kdisp {

PointMultiset mesh_random_multiset(const MeshSpec& spec, std::uint64_t seed) {
  if (spec.m < 1 || spec.m > 52) throw std::invalid_argument("mesh_random_multiset: m out of range");
  if (spec.d < 1) throw std::invalid_argument("mesh_random_multiset: d must be >= 1");
  if (spec.n < 1) throw std::invalid_argument("mesh_random_multiset: n must be >= 1");

  const std::uint64_t side = (std::uint64_t(1) << spec.m) - 1;
  CounterRng rng(seed, 0);
  std::map<std::vector<std::int64_t>, std::uint64_t> tally;
  std::vector<std::int64_t> draw(spec.d);
  for (std::uint64_t i = 0; i < spec.n; ++i) {
    for (std::size_t j = 0; j < spec.d; ++j)
      draw[j] = 1 + static_cast<std::int64_t>(rng.next_below(side));
    ++tally[draw];
  }

  std::vector<std::vector<std::int64_t>> numerators;
  std::vector<std::uint64_t> mults;
  numerators.reserve(tally.size());
  mults.reserve(tally.size());
  for (auto& [point, mult] : tally) {
    numerators.push_back(point);
    mults.push_back(mult);
  }
  return PointMultiset::from_numerators(spec.d, spec.m, numerators, std::move(mults));
}

PointMultiset perturb_to_set(const PointMultiset& points, double delta, std::uint64_t seed) {
  if (!(delta > 0.0)) throw std::invalid_argument("perturb_to_set: delta must be positive");
  const std::size_t d = points.dim();
  CounterRng rng(seed, 1);
  std::vector<std::vector<double>> out;
  out.reserve(points.total_size());
  for (std::size_t i = 0; i < points.entry_count(); ++i) {
    for (std::uint64_t rep = 0; rep < points.multiplicity(i); ++rep) {
      std::vector<double> p(d);
      for (std::size_t j = 0; j < d; ++j) {
        const double noise = (2.0 * rng.next_double() - 1.0) * delta;
        p[j] = std::clamp(points.coord(i, j) + noise, 0.0, 1.0);
      }
      out.push_back(std::move(p));
    }
  }
  return PointMultiset(d, std::move(out));
}

PointMultiset uniform_random(std::uint64_t n, std::size_t d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("uniform_random: d must be >= 1");
  CounterRng rng(seed, 2);
  std::vector<std::vector<double>> pts;
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<double> p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = rng.next_double();
    pts.push_back(std::move(p));
  }
  return PointMultiset(d, std::move(pts));
}

std::uint64_t fibonacci_number(unsigned nu) {
  if (nu < 1 || nu > 92) throw std::invalid_argument("fibonacci_number: index out of range");
  std::uint64_t a = 1, b = 1;  // F_1, F_2
  for (unsigned i = 2; i < nu; ++i) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return b;
}

PointMultiset fibonacci_lattice(unsigned nu) {
  if (nu < 3) throw std::invalid_argument("fibonacci_lattice: requires nu >= 3");
  const std::uint64_t fn = fibonacci_number(nu);
  const std::uint64_t fprev = fibonacci_number(nu - 1);
  std::vector<std::vector<double>> pts;
  pts.reserve(fn);
  for (std::uint64_t i = 0; i < fn; ++i) {
    // {i*F_{nu-1}/F_nu} computed in integers for an exact fractional part
    const std::uint64_t rem =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(i) * fprev) % fn);
    pts.push_back({static_cast<double>(i) / static_cast<double>(fn),
                   static_cast<double>(rem) / static_cast<double>(fn)});
  }
  return PointMultiset(2, std::move(pts));
}

}  // namespace kdisp
