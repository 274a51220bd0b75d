#include "divr/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace divr {
namespace {

std::string format_double(double v) {
    if (!std::isfinite(v)) throw ParseError("non-finite number in output document");
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump_rec(const json& j, std::string& out, int depth, bool indent) {
    const auto pad = [&](int d) {
        if (indent) {
            out += '\n';
            out.append(static_cast<std::size_t>(2 * d), ' ');
        }
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                out += json(key).dump();
                out += indent ? ": " : ":";
                dump_rec(value, out, depth + 1, indent);
            }
            pad(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ',';
                first = false;
                pad(depth + 1);
                dump_rec(value, out, depth + 1, indent);
            }
            pad(depth);
            out += ']';
            return;
        }
        case json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

double number_at(const json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
    return j.get<double>();
}

} // namespace

std::string canonical_dump(const json& j, bool indent) {
    std::string out;
    dump_rec(j, out, 0, indent);
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << contents;
    if (!out) throw ParseError("write failed for " + path);
}

namespace {

Vec vec_from_json(const json& j, std::size_t dim, const char* what) {
    if (!j.is_array() || j.size() != dim)
        throw ParseError(std::string(what) + ": expected an array of " + std::to_string(dim) +
                         " numbers");
    Vec v(dim);
    for (std::size_t d = 0; d < dim; ++d) v[d] = number_at(j[d], what);
    if (!v.finite()) throw ParseError(std::string(what) + ": non-finite coordinate");
    return v;
}

} // namespace

SymmetricPolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
        throw ParseError("polytope document needs \"dim\" and \"generators\"");
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim < 1 || dim > 16) throw ParseError("polytope dim out of range");
    const json& gens = j.at("generators");
    if (!gens.is_array() || gens.empty()) throw ParseError("\"generators\" must be a nonempty array");
    std::vector<Vec> g;
    for (const json& row : gens) g.push_back(vec_from_json(row, dim, "generator"));
    return SymmetricPolytope(dim, std::move(g));
}

json polytope_to_json(const SymmetricPolytope& c) {
    json gens = json::array();
    for (const Vec& g : c.generators()) gens.push_back(vec_to_json(g));
    return json{{"dim", c.dim()}, {"generators", gens}};
}

PointSet pointset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw ParseError("point-set document needs \"dim\" and \"points\"");
    PointSet ps;
    ps.dim = j.at("dim").get<std::size_t>();
    if (ps.dim < 1 || ps.dim > 16) throw ParseError("point-set dim out of range");
    const json& pts = j.at("points");
    if (!pts.is_array() || pts.empty()) throw ParseError("\"points\" must be a nonempty array");
    for (const json& row : pts) ps.points.push_back(vec_from_json(row, ps.dim, "point"));
    if (j.contains("labels")) {
        const json& labels = j.at("labels");
        if (!labels.is_array() || labels.size() != ps.points.size())
            throw ParseError("\"labels\" must match the number of points");
        for (const json& l : labels) ps.labels.push_back(l.get<std::string>());
    }
    return ps;
}

DiversityTable diversity_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("values"))
        throw ParseError("diversity document needs \"ground\" and \"values\"");
    std::vector<std::string> ground;
    for (const json& l : j.at("ground")) ground.push_back(l.get<std::string>());
    if (ground.empty() || ground.size() > 16) throw ParseError("ground size out of range");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        if (!index.emplace(ground[i], i).second)
            throw InvalidDiversity("duplicate label: " + ground[i]);
    }

    std::vector<double> values(std::size_t{1} << ground.size(), 0.0);
    std::vector<bool> seen(values.size(), false);
    for (const auto& [key, val] : j.at("values").items()) {
        std::uint32_t mask = 0;
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
            const auto it = index.find(part);
            if (it == index.end()) throw ParseError("unknown label in key: " + part);
            const std::uint32_t bit = 1u << it->second;
            if (mask & bit) throw InvalidDiversity("duplicate label in key: " + key);
            mask |= bit;
        }
        if (mask == 0) throw ParseError("empty subset key");
        if (seen[mask]) throw InvalidDiversity("subset listed twice: " + key);
        seen[mask] = true;
        values[mask] = number_at(val, "subset value");
    }
    for (std::uint32_t mask = 1; mask < values.size(); ++mask) {
        if (!seen[mask]) {
            std::string key;
            for (std::size_t i = 0; i < ground.size(); ++i)
                if (mask & (1u << i)) {
                    if (!key.empty()) key += ',';
                    key += ground[i];
                }
            throw IncompleteTable("missing subset: " + key);
        }
    }
    return DiversityTable(std::move(ground), std::move(values));
}

json diversity_to_json(const DiversityTable& t) {
    json values = json::object();
    for (std::uint32_t mask = 1; mask <= t.full_mask(); ++mask)
        values[t.key(mask)] = t.value(mask);
    return json{{"ground", t.ground()}, {"values", values}};
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (double x : v.c) arr.push_back(x);
    return arr;
}

json circum_to_json(const CircumResult& r) {
    json contacts = json::array();
    for (const Contact& c : r.contacts)
        contacts.push_back(json{{"index", c.index}, {"gauge", c.gauge}});
    return json{{"radius", r.radius}, {"center", vec_to_json(r.center)}, {"contacts", contacts}};
}

json certificate_to_json(const OptimalityCertificate& c) {
    json points = json::array(), normals = json::array(), weights = json::array();
    for (const Vec& p : c.touching_points) points.push_back(vec_to_json(p));
    for (const Vec& u : c.normals) normals.push_back(vec_to_json(u));
    for (double w : c.weights) weights.push_back(w);
    return json{{"touching_points", points}, {"normals", normals}, {"weights", weights}};
}

} // namespace divr
