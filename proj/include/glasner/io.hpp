#pragma once

// File formats.
//
// Point sets:  {"dim": d, "exact": true,  "points": [["num/den", ...], ...]}
//              {"dim": d, "exact": false, "points": [["0.125", ...], ...]}
// Families:    {"n": ..., "m": ..., "mode": "independent"|"single",
//               "entries": [["c0/d0", "c1/d1", ...], ...]}   row-major,
//              coefficients ascending.

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "glasner/family.hpp"
#include "glasner/search.hpp"
#include "glasner/torus.hpp"

namespace glasner {

using Json = nlohmann::ordered_json;

using AnyPointSet = std::variant<ExactPointSet, FloatPointSet>;

Json point_set_to_json(const ExactPointSet& s);
Json point_set_to_json(const FloatPointSet& s);
AnyPointSet point_set_from_json(const Json& j);
AnyPointSet load_point_set(const std::string& path);
void save_point_set(const AnyPointSet& s, const std::string& path);

Json family_to_json(const MatrixFamily& fam);
MatrixFamily family_from_json(const Json& j);
MatrixFamily load_family(const std::string& path);
void save_family(const MatrixFamily& fam, const std::string& path);

Json to_json(const DensityReport& rep);
Json to_json(const SearchReport& rep);
Json to_json(const ExponentScanResult& res);

std::string metric_name(Metric m);
Metric metric_from_name(const std::string& name);
std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

}  // namespace glasner
