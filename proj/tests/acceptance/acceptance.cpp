// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "polygraph/algorithms.hpp"
#include "polygraph/cli.hpp"
#include "polygraph/generators.hpp"
#include "polygraph/geometry.hpp"
#include "polygraph/obstructions.hpp"

using namespace polygraph;
namespace ob = polygraph::obstructions;
namespace geo = polygraph::geometry;
using nlohmann::json;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> failures;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

bool iso(const Graph& a, const Graph& b) { return are_isomorphic(a, b).has_value(); }

std::string set_str(const std::vector<int>& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

const ob::DimensionVerdict* verdict_at(const ob::ObstructionReport& r, int d) {
    for (const auto& v : r.verdicts)
        if (v.d == d) return &v;
    return nullptr;
}

std::string rule_of(const ob::DimensionVerdict* v) {
    if (!v || !v->certificate.is_object() || !v->certificate.contains("rule")) return "";
    return v->certificate["rule"].get<std::string>();
}

bool all_certificates_verify(const Graph& g, const ob::ObstructionReport& r, std::string* why) {
    for (const auto& v : r.verdicts) {
        if (v.status == ob::Status::Unknown) continue;
        std::string w;
        if (!ob::verify_verdict(g, v, &w)) {
            if (why) *why = "d=" + std::to_string(v.d) + ": " + w;
            return false;
        }
    }
    return true;
}

// brute-force vertex connectivity: smallest removal set that disconnects g
// (or leaves a single vertex)
int brute_kappa(const Graph& g) {
    const int n = g.order();
    for (int k = 0; k <= n - 2; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            Bitset removed(static_cast<std::size_t>(n));
            for (int i : idx) removed.set(static_cast<std::size_t>(i));
            if (count_components(g, removed) > 1) return k;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return n - 1;
}

// ---------------------------------------------------------------- A1

Check a1() {
    Check c;
    std::ostringstream out, err;
    int rc = cli::run({"table", "--max-n", "8"}, out, err);
    c.expect(rc == 0, "table exit code " + std::to_string(rc));
    if (rc != 0) return c;
    json t = json::parse(out.str());

    const std::map<std::string, std::vector<int>> expected = {
        {"C2(1)", {1}},          {"C3(1)", {2}},       {"C4(1)", {2}},         {"C4(1,2)", {3}},
        {"C5(1)", {2}},          {"C5(1,2)", {4}},     {"C6(1)", {2}},         {"C6(1,2)", {3}},
        {"C6(1,2,3)", {4, 5}},   {"C6(1,3)", {}},      {"C6(2,3)", {3}},       {"C7(1)", {2}},
        {"C7(1,2)", {}},         {"C7(1,2,3)", {4, 5, 6}},                     {"C8(1)", {2}},
        {"C8(1,2)", {3}},        {"C8(1,2,3)", {4, 5}}, {"C8(1,2,3,4)", {4, 5, 6, 7}},
        {"C8(1,2,4)", {}},       {"C8(1,3)", {}},      {"C8(1,3,4)", {}},      {"C8(1,4)", {}},
    };
    std::set<std::string> seen;
    int unknown = 0;
    for (const auto& row : t["rows"]) {
        auto name = row["graph"].get<std::string>();
        seen.insert(name);
        auto range = row["range"].get<std::vector<int>>();
        auto it = expected.find(name);
        if (it == expected.end()) {
            c.expect(false, "unexpected row " + name);
            continue;
        }
        c.expect(range == it->second, name + " range " + set_str(range) + " != " + set_str(it->second));
        for (const auto& v : row["verdicts"])
            if (v["status"] == "UNKNOWN") ++unknown;
    }
    c.expect(seen.size() == expected.size(), "row count " + std::to_string(seen.size()));
    c.expect(unknown == 0, std::to_string(unknown) + " UNKNOWN verdicts");

    // complete graphs: d=3 excluded by nonplanarity, 4..n-1 confirmed
    for (int n : {6, 7, 8}) {
        std::vector<int> S;
        for (int s = 1; s <= n / 2; ++s) S.push_back(s);
        auto g = circulant(n, S);
        auto r = ob::polytopality_range(g);
        std::vector<int> want;
        for (int d = 4; d < n; ++d) want.push_back(d);
        c.expect(r.confirmed == want, "K" + std::to_string(n) + " confirmed " + set_str(r.confirmed));
        c.expect(rule_of(verdict_at(r, 3)) == "steinitz", "K" + std::to_string(n) + " d=3 rule");
    }

    // Gamma_8(1,2,3): d=6 excluded by PSP
    {
        auto g = circulant(8, {1, 2, 3});
        auto r = ob::polytopality_range(g);
        c.expect(rule_of(verdict_at(r, 6)) == "R4-psp", "C8(1,2,3) d=6 rule " + rule_of(verdict_at(r, 6)));
        std::string why;
        c.expect(all_certificates_verify(g, r, &why), "C8(1,2,3) certificate: " + why);
    }

    // Gamma_8(1,2,4), Gamma_8(1,3,4): refuted by facet search at d=4 and simple-mode d=5
    for (const auto& S : {std::vector<int>{1, 2, 4}, std::vector<int>{1, 3, 4}}) {
        auto g = circulant(8, S);
        auto r = ob::polytopality_range(g);
        std::string name = "C8" + set_str(S);
        c.expect(r.open.empty(), name + " open " + set_str(r.open));
        const auto* v4 = verdict_at(r, 4);
        c.expect(v4 && v4->status == ob::Status::Excluded && rule_of(v4) == "facet-search" &&
                     v4->certificate.value("mode", "") == "general",
                 name + " d=4 facet-search certificate");
        const auto* v5 = verdict_at(r, 5);
        bool simple5 = false;
        if (v5 && v5->status == ob::Status::Excluded) {
            const auto& cert = v5->certificate;
            auto is_simple_search = [](const json& j) {
                return j.is_object() && j.value("rule", "") == "R5-facet-search" && j.value("mode", "") == "simple";
            };
            simple5 = is_simple_search(cert) || (cert.contains("corroboration") && is_simple_search(cert["corroboration"]));
        }
        c.expect(simple5, name + " d=5 simple-mode facet-search certificate");
        std::string why;
        c.expect(all_certificates_verify(g, r, &why), name + " certificate: " + why);
    }

    // odd antiprism graphs: nonplanar and no principal subdivision for d=4
    for (int n : {7, 9}) {
        auto g = circulant(n, {1, 2});
        auto r = ob::polytopality_range(g);
        c.expect(r.open.empty(), "C" + std::to_string(n) + "(1,2) open " + set_str(r.open));
        c.expect(rule_of(verdict_at(r, 3)) == "steinitz" && rule_of(verdict_at(r, 4)) == "R4-psp",
                 "C" + std::to_string(n) + "(1,2) rules");
    }
    c.detail = std::to_string(seen.size()) + " circulant classes, " + std::to_string(unknown) + " UNKNOWN";
    return c;
}

// ---------------------------------------------------------------- A2

Check a2() {
    Check c;
    for (int m = 5; m <= 12; ++m)
        c.expect(ob::cyclic_facet_count(4, m) == static_cast<long>(m) * (m - 3) / 2, "C4(" + std::to_string(m) + ")");
    int pairs = 0;
    for (int d = 2; d <= 5; ++d)
        for (int n = d + 1; n <= 9; ++n) {
            long gale = ob::cyclic_facet_count(d, n);
            long hull = static_cast<long>(geo::cyclic_polytope(d, n).facets.size());
            c.expect(gale == hull, "C" + std::to_string(d) + "(" + std::to_string(n) + ") gale " + std::to_string(gale) +
                                       " hull " + std::to_string(hull));
            ++pairs;
        }
    c.detail = "m=5..12, " + std::to_string(pairs) + " (d,n) pairs";
    return c;
}

// ---------------------------------------------------------------- A3

Check a3() {
    Check c;
    std::vector<std::pair<std::string, Graph>> gs = {
        {"K2", complete_graph(2)},         {"P2", path_graph(2)},          {"K3", complete_graph(3)},
        {"C4", cycle_graph(4)},            {"C5", cycle_graph(5)},         {"K4", complete_graph(4)},
        {"K2,3", complete_bipartite(2, 3)}, {"octahedron", cocktail_party(3)}, {"prism3", prism_graph(3)},
    };
    int pairs = 0;
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i; j < gs.size(); ++j) {
            const auto& [an, a] = gs[i];
            const auto& [bn, b] = gs[j];
            if (a.order() * b.order() > 36) continue;
            auto p = cartesian_product(a, b);
            int ka = brute_kappa(a), kb = brute_kappa(b);
            int formula = std::min({ka * b.order(), kb * a.order(), a.min_degree() + b.min_degree()});
            int brute = brute_kappa(p);
            c.expect(brute == formula, an + "x" + bn + ": brute " + std::to_string(brute) + " formula " +
                                           std::to_string(formula));
            c.expect(vertex_connectivity(p).kappa == brute, an + "x" + bn + ": vertex_connectivity");
            ++pairs;
        }
    c.expect(pairs >= 20, "only " + std::to_string(pairs) + " graph pairs");

    std::vector<std::pair<std::string, geo::Polytope>> ps = {
        {"segment", geo::segment()},   {"triangle", geo::simplex(2)}, {"square", geo::cube(2)},
        {"pentagon", geo::polygon(5)}, {"simplex3", geo::simplex(3)}, {"octahedron", geo::octahedron()},
        {"cube3", geo::cube(3)},
    };
    int ppairs = 0;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i; j < ps.size(); ++j) {
            const auto& [an, a] = ps[i];
            const auto& [bn, b] = ps[j];
            if (a.dim + b.dim > 5) continue;
            auto prod = geo::product_polytope(a, b);
            bool ok = iso(geo::skeleton_graph(prod), cartesian_product(geo::skeleton_graph(a), geo::skeleton_graph(b)));
            c.expect(ok, an + "x" + bn + " skeleton");
            ++ppairs;
        }
    c.expect(ppairs >= 10, "only " + std::to_string(ppairs) + " polytope pairs");
    c.detail = std::to_string(pairs) + " kappa pairs, " + std::to_string(ppairs) + " polytope pairs";
    return c;
}

// ---------------------------------------------------------------- A4

Check a4() {
    Check c;
    auto g = klee_stacked(4, 6);
    auto r = ob::polytopality_range(g);
    const auto* v3 = verdict_at(r, 3);
    c.expect(v3 && v3->status == ob::Status::Excluded && rule_of(v3) == "R4-separation", "d=3 rule " + rule_of(v3));
    if (v3 && rule_of(v3) == "R4-separation") {
        c.expect(v3->certificate["components"] == 9, "components");
        c.expect(v3->certificate["bound"] == 8, "bound");
    }
    c.expect(g.min_degree() == 4, "stacked vertex degree");
    for (const auto& v : r.verdicts)
        if (v.d > 4) c.expect(v.status == ob::Status::Excluded, "d=" + std::to_string(v.d) + " not excluded");
    c.expect(r.open == std::vector<int>{4}, "open " + set_str(r.open));
    std::string why;
    c.expect(all_certificates_verify(g, r, &why), why);
    c.detail = "d=3 9 vs 8, open " + set_str(r.open);
    return c;
}

// ---------------------------------------------------------------- A5

Check a5() {
    Check c;
    for (int n = 1; n <= 3; ++n) {
        auto g = marc_antonio(n);
        std::string name = "MA(" + std::to_string(n) + ")";
        c.expect(ob::balinski_check(g, 4).pass, name + " balinski");
        c.expect(ob::psp_check(g, 4).status == ob::PspStatus::Witness, name + " psp");
        c.expect(ob::separation_check(g, 4, 8).status == ob::SeparationResult::Status::Pass, name + " separation");
        auto r = ob::polytopality_range(g);
        c.expect(r.open.empty(), name + " open " + set_str(r.open));
        c.expect(rule_of(verdict_at(r, 3)) == "steinitz", name + " d=3");
        std::string why;
        c.expect(all_certificates_verify(g, r, &why), name + " " + why);
    }
    for (int n = 3; n <= 5; ++n) {
        auto g = davidsstar_starred(n);
        std::string name = "ds*(" + std::to_string(n) + ")";
        auto r = ob::polytopality_range(g);
        c.expect(r.open.empty(), name + " open " + set_str(r.open));
        bool r6c = false;
        for (const auto& v : r.verdicts) r6c = r6c || rule_of(&v) == "R6c";
        c.expect(r6c, name + " no R6c verdict");
        std::string why;
        c.expect(all_certificates_verify(g, r, &why), name + " " + why);
    }
    c.detail = "MA(1..3), ds*(3..5) fully excluded";
    return c;
}

// ---------------------------------------------------------------- A6

Check a6() {
    Check c;
    const std::map<std::string, Graph> product_graph = {
        {"triangle-path", cartesian_product(complete_graph(3), path_graph(2))},
        {"segment-square", cartesian_product(complete_graph(2), make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}))},
        {"segment-octahedron-star", cartesian_product(complete_graph(2), star_clique(cocktail_party(3), 0))},
        {"domino-domino", cartesian_product(domino_graph(2), domino_graph(2))},
    };
    int n = 0;
    for (const auto& name : geo::lifted_product_witnesses()) {
        auto w = geo::lifted_product_witness(name);
        auto m = geo::verify_graph(w.polytope, w.expected);
        c.expect(m.bijection.has_value(), name + ": " + m.mismatch);
        c.expect(iso(w.expected, product_graph.at(name)), name + " expected graph");
        ++n;
    }
    c.expect(n == 4, "witness count");
    c.detail = std::to_string(n) + " witnesses";
    return c;
}

// ---------------------------------------------------------------- A7

Check a7() {
    Check c;
    auto rs = geo::prism_octahedron_realizations();
    c.expect(rs.size() >= 4, "realizations " + std::to_string(rs.size()));
    Graph target = cartesian_product(complete_graph(2), circulant(6, {1, 2}));
    for (std::size_t i = 0; i < rs.size(); ++i)
        c.expect(geo::verify_graph(rs[i], target).bijection.has_value(), "realization " + std::to_string(i) + " skeleton");
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
            bool distinct = geo::face_lattice(rs[i]).f_vector() != geo::face_lattice(rs[j]).f_vector() ||
                            !geo::combinatorially_equivalent(rs[i], rs[j]);
            c.expect(distinct, "realizations " + std::to_string(i) + "," + std::to_string(j) + " equivalent");
        }
    c.detail = std::to_string(rs.size()) + " realizations";
    return c;
}

// ---------------------------------------------------------------- A8

Check a8() {
    Check c;
    std::vector<std::pair<std::string, geo::Polytope>> ps = {
        {"simplex3", geo::simplex(3)},
        {"cube3", geo::cube(3)},
        {"prism5", geo::prism(5)},
        {"square x square", geo::product_polytope(geo::cube(2), geo::cube(2))},
    };
    int checked = 0;
    for (const auto& [name, p] : ps) {
        auto g = geo::skeleton_graph(p);
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) != p.dim) continue;
            auto t = geo::truncate_vertex(p, v);
            c.expect(iso(geo::skeleton_graph(t), star_clique(g, v)), name + " vertex " + std::to_string(v));
            ++checked;
        }
    }
    c.expect(checked == 4 + 8 + 10 + 16, "simple vertices checked " + std::to_string(checked));
    c.detail = std::to_string(checked) + " vertices";
    return c;
}

// ---------------------------------------------------------------- A9

Check a9() {
    Check c;
    {
        auto g = cartesian_product(complete_graph(2), complete_bipartite(3, 3));
        auto r = ob::polytopality_range(g);
        const auto* v = verdict_at(r, 4);
        c.expect(v && v->status == ob::Status::Excluded && rule_of(v) == "R6b", "K2xK3,3 d=4 rule " + rule_of(v));
        c.expect(r.open.empty(), "K2xK3,3 open " + set_str(r.open));
        std::string why;
        c.expect(all_certificates_verify(g, r, &why), "K2xK3,3 " + why);
    }
    std::vector<int> unknown;
    {
        auto g = cartesian_product(petersen_graph(), petersen_graph());
        auto r = ob::polytopality_range(g);
        const auto* v = verdict_at(r, 6);
        c.expect(v && v->status == ob::Status::Excluded && rule_of(v) == "R6e", "Pet^2 d=6 rule " + rule_of(v));
        for (const auto& x : r.verdicts)
            if (x.status == ob::Status::Unknown) unknown.push_back(x.d);
        c.expect(unknown == std::vector<int>{4, 5}, "Pet^2 UNKNOWN at " + set_str(unknown));
        c.expect(r.confirmed.empty(), "Pet^2 confirmed " + set_str(r.confirmed));
        std::string why;
        c.expect(all_certificates_verify(g, r, &why), "Pet^2 " + why);
    }
    c.detail = "K2xK3,3 R6b, Pet^2 R6e, UNKNOWN " + set_str(unknown);
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
        {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9},
    };
    int failed = 0;
    for (const auto& [id, fn] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::ostringstream line;
        line << id << ' ' << (c.ok ? "PASS" : "FAIL");
        if (!c.detail.empty()) line << "  " << c.detail;
        line.precision(2);
        line << std::fixed << "  (" << secs << "s)";
        std::cout << line.str() << '\n';
        for (const auto& f : c.failures) std::cout << "    " << f << '\n';
        std::cout.flush();
        if (!c.ok) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
    return failed ? 1 : 0;
}
