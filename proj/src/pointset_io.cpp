#include "kdisp/pointset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kdisp/errors.hpp"

namespace kdisp {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string pointset_to_json(const PointMultiset& points) {
  json doc;
  doc["d"] = points.dim();
  if (points.mesh_level()) doc["mesh_level"] = *points.mesh_level();
  json pts = json::array();
  for (std::size_t i = 0; i < points.entry_count(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < points.dim(); ++j) {
      if (points.mesh_level())
        row.push_back(points.coord_numerator(i, j));
      else
        row.push_back(points.coord(i, j));
    }
    pts.push_back(std::move(row));
  }
  doc["points"] = std::move(pts);
  json mults = json::array();
  bool all_ones = true;
  for (std::size_t i = 0; i < points.entry_count(); ++i) {
    mults.push_back(points.multiplicity(i));
    if (points.multiplicity(i) != 1) all_ones = false;
  }
  if (!all_ones) doc["multiplicity"] = std::move(mults);
  return doc.dump();
}

PointMultiset pointset_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("point-set parse error: ") + e.what());
  }
  try {
    const std::size_t d = doc.at("d").get<std::size_t>();
    std::optional<unsigned> level;
    if (doc.contains("mesh_level")) level = doc["mesh_level"].get<unsigned>();
    std::vector<std::uint64_t> mults;
    if (doc.contains("multiplicity")) mults = doc["multiplicity"].get<std::vector<std::uint64_t>>();
    if (level) {
      std::vector<std::vector<std::int64_t>> nums;
      for (const auto& row : doc.at("points")) nums.push_back(row.get<std::vector<std::int64_t>>());
      return PointMultiset::from_numerators(d, *level, nums, std::move(mults));
    }
    std::vector<std::vector<double>> pts;
    for (const auto& row : doc.at("points")) pts.push_back(row.get<std::vector<double>>());
    return PointMultiset(d, std::move(pts), std::move(mults));
  } catch (const json::exception& e) {
    throw IoError(std::string("point-set field error: ") + e.what());
  }
}

void save_pointset(const PointMultiset& points, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << pointset_to_json(points) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

PointMultiset load_pointset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return pointset_from_json(buf.str());
}

}  // namespace kdisp
