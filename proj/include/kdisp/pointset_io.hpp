#pragma once

#include <iosfwd>
#include <string>

#include "kdisp/geometry.hpp"

namespace kdisp {

// Point-set file format (JSON): {"d": int, "points": [[...], ...],
// "multiplicity": [ints] (optional, default all ones),
// "mesh_level": int (optional)}. When mesh_level is present, coordinates
// are stored as integer numerators, so dyadic sets round-trip bit-exactly.
std::string pointset_to_json(const PointMultiset& points);
PointMultiset pointset_from_json(const std::string& text);

void save_pointset(const PointMultiset& points, const std::string& path);
PointMultiset load_pointset(const std::string& path);

// Shortest-round-trip decimal rendering; identical bytes for identical
// doubles on every run.
std::string format_double(double v);

}  // namespace kdisp
