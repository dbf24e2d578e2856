#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "poisres/blowup.hpp"
#include "poisres/resgraph.hpp"

namespace poisres::jsonio {

using nlohmann::json;

// Serializers produce canonical documents: alphabetical keys (nlohmann's
// default object ordering), exact rational strings, graded-lex polynomial
// text, and deterministically sorted arrays. parse(dump(x)) re-dumps to the
// same bytes.

json to_json(const exactalg::Rational& r);
json to_json(const poisson::Bivector& theta);
json to_json(const blowup::Center& c);
json to_json(const blowup::LiftReport& report);
json to_json(const resgraph::DualGraph& g);
json to_json(const resgraph::StrictTransform& d);
json to_json(const std::vector<exactalg::Rational>& coeffs);

// Parsers throw std::invalid_argument with a readable message on any shape,
// type, or value problem.
exactalg::Rational rational_from_json(const json& j);
poisson::Bivector bivector_from_json(const json& j);
blowup::Center center_from_json(const json& j);
resgraph::DualGraph graph_from_json(const json& j);
resgraph::StrictTransform strict_transform_from_json(const json& j,
                                                     int expected_size);

// Scene envelope: { "version": 1, "kind": "bivector"|"lift"|"graph"|"decide",
// ... payload keys per kind ... }.
struct Scene {
    int version;
    std::string kind;
    json payload;  // the full document, for kind-specific extraction
};

Scene scene_from_json(const json& j);
Scene load_scene_file(const std::string& path);  // throws on I/O and parse

}  // namespace poisres::jsonio
