#pragma once

#include <string>

#include <json.hpp>

#include "divr/circum.hpp"
#include "divr/diversity.hpp"
#include "divr/geom.hpp"
#include "divr/vec.hpp"

namespace divr {

using json = nlohmann::json;

/// Deterministic serialization: keys sorted (nlohmann's default object is an
/// ordered map), floating-point numbers printed with 17 significant digits,
/// two-space indentation when `indent` is true. Rejects non-finite numbers.
std::string canonical_dump(const json& j, bool indent = true);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

/// {"dim": n, "generators": [[...], ...]} -- signs implicit.
SymmetricPolytope polytope_from_json(const json& j);
json polytope_to_json(const SymmetricPolytope& c);

/// {"dim": n, "points": [[...], ...], "labels": [...] (optional)}.
struct PointSet {
    std::size_t dim = 0;
    std::vector<Vec> points;
    std::vector<std::string> labels;
};
PointSet pointset_from_json(const json& j);

/// {"ground": [...], "values": {"x1": 0, "x1,x2": 2.0, ...}}; keys are
/// comma-joined label subsets, any order, duplicates rejected, all nonempty
/// subsets required.
DiversityTable diversity_from_json(const json& j);
json diversity_to_json(const DiversityTable& t);

json vec_to_json(const Vec& v);
json circum_to_json(const CircumResult& r);
json certificate_to_json(const OptimalityCertificate& c);

} // namespace divr
