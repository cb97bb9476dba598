#pragma once

#include <cstdint>

#include "kdisp/geometry.hpp"

namespace kdisp {

struct MeshSpec {
  unsigned m = 1;       // mesh level; grid points are {1/2^m, ..., (2^m-1)/2^m}
  std::size_t d = 1;    // dimension
  std::uint64_t n = 1;  // number of independent draws
};

// n independent uniform draws from the (2^m-1)^d mesh grid; repeated draws
// accumulate multiplicity. Output is mesh-tagged and sorted by numerator.
PointMultiset mesh_random_multiset(const MeshSpec& spec, std::uint64_t seed);

// Independent uniform noise from [-delta, delta]^d added to every point
// occurrence, clamped to [0,1]^d. Multiplicities expand to separate
// entries; the mesh tag is dropped.
PointMultiset perturb_to_set(const PointMultiset& points, double delta, std::uint64_t seed);

// n independent uniform points in [0,1]^d.
PointMultiset uniform_random(std::uint64_t n, std::size_t d, std::uint64_t seed);

// Two-dimensional Fibonacci lattice {(i/F_nu, {i*F_{nu-1}/F_nu}) : 0 <= i < F_nu}
// with F_1 = F_2 = 1; the i=0 point sits at the origin. Requires nu >= 3.
PointMultiset fibonacci_lattice(unsigned nu);

std::uint64_t fibonacci_number(unsigned nu);

}  // namespace kdisp
