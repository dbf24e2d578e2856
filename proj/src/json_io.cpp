#include "poisres/json_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "poisres/poly_parser.hpp"

namespace poisres::jsonio {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scene: " + what);
}

const json& field(const json& j, const char* key) {
    if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
    const auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& f = field(j, key);
    if (!f.is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
    return f.get<int>();
}

std::string string_field(const json& j, const char* key) {
    const json& f = field(j, key);
    if (!f.is_string()) fail(std::string("field \"") + key + "\" must be a string");
    return f.get<std::string>();
}

const json& array_field(const json& j, const char* key) {
    const json& f = field(j, key);
    if (!f.is_array()) fail(std::string("field \"") + key + "\" must be an array");
    return f;
}

exactalg::Polynomial poly_field(const json& j, const char* key, int nvars) {
    const std::string text = string_field(j, key);
    try {
        return exactalg::parse_poly(text, nvars);
    } catch (const exactalg::ParseError& e) {
        fail(std::string("bad polynomial \"") + text + "\": " + e.what());
    }
}

}  // namespace

json to_json(const exactalg::Rational& r) { return r.str(); }

json to_json(const poisson::Bivector& theta) {
    json coeffs = json::array();
    for (const auto& [key, g] : theta.coeffs())
        coeffs.push_back({{"s", key.first}, {"t", key.second}, {"poly", g.str()}});
    return {{"nvars", theta.nvars()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const blowup::Center& c) {
    return {{"nvars", c.nvars}, {"k", c.k}};
}

json to_json(const blowup::LiftReport& report) {
    json charts = json::array();
    for (const blowup::ChartFlag& f : report.charts)
        charts.push_back({{"j", f.j}, {"holomorphic", f.holomorphic}});
    json violations = json::array();
    for (const blowup::Violation& v : report.violations)
        violations.push_back(
            {{"kind", v.kind}, {"indices", v.indices}, {"witness", v.witness}});
    return {{"verdict", report.verdict},
            {"charts", std::move(charts)},
            {"violations", std::move(violations)}};
}

json to_json(const resgraph::DualGraph& g) {
    json vertices = json::array();
    for (const resgraph::Vertex& v : g.vertices())
        vertices.push_back(
            {{"name", v.name}, {"self_int", v.self_int}, {"genus", v.genus}});
    json edges = json::array();
    for (const auto& [key, w] : g.edges())
        edges.push_back({{"a", g.vertices()[key.first].name},
                         {"b", g.vertices()[key.second].name},
                         {"w", w}});
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json to_json(const resgraph::StrictTransform& d) {
    json meets = json::array();
    for (const exactalg::Rational& m : d.meets) meets.push_back(m.str());
    return {{"name", d.name}, {"meets", std::move(meets)}};
}

json to_json(const std::vector<exactalg::Rational>& coeffs) {
    json out = json::array();
    for (const exactalg::Rational& c : coeffs) out.push_back(c.str());
    return out;
}

exactalg::Rational rational_from_json(const json& j) {
    if (!j.is_string()) fail("rationals are exact strings like \"3/4\"");
    try {
        return exactalg::Rational::from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(std::string("bad rational \"") + j.get<std::string>() + "\": " + e.what());
    }
}

poisson::Bivector bivector_from_json(const json& j) {
    const int nvars = int_field(j, "nvars");
    if (nvars < 1) fail("\"nvars\" must be positive");
    poisson::Bivector theta(nvars);
    std::set<std::pair<int, int>> seen;
    for (const json& entry : array_field(j, "coeffs")) {
        const int s = int_field(entry, "s");
        const int t = int_field(entry, "t");
        if (s < 1 || t > nvars || s >= t)
            fail("coefficient indices must satisfy 1 <= s < t <= nvars");
        if (!seen.insert({s, t}).second) fail("duplicate coefficient slot");
        theta.set(s, t, poly_field(entry, "poly", nvars));
    }
    return theta;
}

blowup::Center center_from_json(const json& j) {
    const int nvars = int_field(j, "nvars");
    const int k = int_field(j, "k");
    try {
        return blowup::Center(nvars, k);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

resgraph::DualGraph graph_from_json(const json& j) {
    std::vector<resgraph::Vertex> vertices;
    for (const json& v : array_field(j, "vertices"))
        vertices.push_back(
            {string_field(v, "name"), int_field(v, "self_int"), int_field(v, "genus")});
    std::vector<resgraph::Edge> edges;
    for (const json& e : array_field(j, "edges"))
        edges.push_back({string_field(e, "a"), string_field(e, "b"), int_field(e, "w")});
    try {
        return resgraph::DualGraph(std::move(vertices), std::move(edges));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

resgraph::StrictTransform strict_transform_from_json(const json& j,
                                                     int expected_size) {
    resgraph::StrictTransform d;
    d.name = string_field(j, "name");
    for (const json& m : array_field(j, "meets")) {
        const exactalg::Rational r = rational_from_json(m);
        if (r.sign() < 0) fail("meets entries must be >= 0");
        d.meets.push_back(r);
    }
    if (static_cast<int>(d.meets.size()) != expected_size)
        fail("meets length must match the number of graph vertices");
    return d;
}

Scene scene_from_json(const json& j) {
    Scene scene;
    scene.version = int_field(j, "version");
    if (scene.version != 1) fail("unsupported scene version");
    scene.kind = string_field(j, "kind");
    if (scene.kind != "bivector" && scene.kind != "lift" && scene.kind != "graph" &&
        scene.kind != "decide")
        fail("unknown scene kind \"" + scene.kind + "\"");
    scene.payload = j;
    return scene;
}

Scene load_scene_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return scene_from_json(j);
}

}  // namespace poisres::jsonio
