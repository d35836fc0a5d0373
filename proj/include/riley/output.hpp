// Serialisation: CSV and SVG writers and JSON views of the reports. All
// numbers are written with 17 significant digits in the C locale.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "riley/limit.hpp"
#include "riley/scan.hpp"

namespace riley {

using ojson = nlohmann::ordered_json;

std::string fmt17(double v);

void write_csv(std::ostream& os, const RegionScan& s);
// region colour map with the traced curves of the Z boundary and P on top
void write_region_svg(std::ostream& os, const RegionScan& s, int curve_samples = 400);
// projection discs of I_k^{+/-} for |k| <= k_range; tangent pairs are marked
void write_spheres_svg(std::ostream& os, const Params& p, int k_range);

// labels of the discs overlapping the projection of I_0^+ (centre distance < 2)
std::vector<std::string> disc_neighbours(const Params& p, int k_range, double e = 1e-9);
// pairs of discs whose centres are exactly 2 apart
std::vector<std::pair<std::string, std::string>> tangent_discs(const Params& p, int k_range, double e = 1e-9);

ojson lift_json(const Lift& p);
ojson matrix_json(const Mat3& m);
ojson classify_json(const Params& p);
ojson region_json(const RegionScan& s);
ojson octahedron_json(const Octahedron& oct);

// writes text to path, throwing std::ios_base::failure on error
void write_file(const std::string& path, const std::string& text);

}  // namespace riley
