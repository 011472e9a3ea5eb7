#include <cstdio>

#include "polygraph/geometry.hpp"

namespace polygraph::geometry {

using nlohmann::json;

namespace {

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

std::string fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

std::string polytope_hash(const Polytope& p) {
    json v = json::array();
    for (const auto& x : p.config.points) v.push_back(vec_json(x));
    return fnv(v.dump());
}

json polytope_to_json(const Polytope& p) {
    json j;
    j["name"] = p.name;
    j["dim"] = p.dim;
    j["ambient_dim"] = p.config.dim;
    json v = json::array();
    for (const auto& x : p.config.points) v.push_back(vec_json(x));
    j["vertices"] = v;
    json fs = json::array();
    for (const auto& f : p.facets)
        fs.push_back({{"vertices", f.vertices}, {"normal", vec_json(f.plane.normal)}, {"offset", to_string(f.plane.offset)}});
    j["facets"] = fs;
    j["hash"] = polytope_hash(p);
    return j;
}

Polytope polytope_from_json(const json& j) {
    PointConfig cfg;
    cfg.dim = j.at("ambient_dim").get<int>();
    for (const auto& row : j.at("vertices")) {
        Vec v;
        for (const auto& x : row) v.push_back(parse_rat(x.get<std::string>()));
        cfg.points.push_back(v);
    }
    HullOptions opt;
    opt.cap = std::max<std::size_t>(opt.cap, cfg.points.size());
    Polytope p = convex_hull_facets(cfg, opt);
    p.name = j.value("name", "");
    return p;
}

json lattice_to_json(const FaceLattice& l) {
    json j;
    j["dim"] = l.dim;
    json levels = json::array();
    for (const auto& level : l.faces) {
        json lv = json::array();
        for (const auto& f : level) lv.push_back(f.to_vector());
        levels.push_back(lv);
    }
    j["levels"] = levels;
    j["f_vector"] = l.f_vector();
    return j;
}

}  // namespace polygraph::geometry
