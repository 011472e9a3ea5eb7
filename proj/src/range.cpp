#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

#include "polygraph/generators.hpp"
#include "polygraph/geometry.hpp"
#include "polygraph/io.hpp"
#include "polygraph/obstructions.hpp"
#include "polygraph/simple_check.hpp"

namespace polygraph::obstructions {

using nlohmann::json;

namespace {

json edges_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back({e.u, e.v});
    return a;
}

json gjson(const Graph& g) {
    json j = graph_to_json(g);
    j["graph6"] = to_graph6(g);
    return j;
}

Graph gfrom(const json& j) { return parse_graph6(j.at("graph6").get<std::string>()); }

// closed form of the cyclic polytope facet count (saturates at a large value)
long cyclic_facets_closed(int d, int k) {
    auto binom = [](long a, long b) -> long {
        if (b < 0 || b > a) return 0;
        long r = 1;
        for (long i = 1; i <= b; ++i) {
            r = r * (a - b + i) / i;
            if (r > (1L << 40)) return 1L << 40;
        }
        return r;
    };
    int m = d / 2;
    if (d % 2 == 0) return binom(k - m, m) * k / (k - m);
    return 2 * binom(k - m - 1, m);
}

// the general 3-face pool is all connected induced subgraphs; past this order
// its enumeration cannot complete within any sane budget
constexpr int kGeneralSearchOrder = 24;

struct Realizer {
    int dim;
    std::string rule;
    std::string construction;
    std::function<geometry::Polytope()> build;  // empty for a single point
};

std::optional<Factorization> factor(const Graph& g) {
    if (g.order() < 4) return std::nullopt;
    auto f = prime_factorization(g);
    if (!f || f->factors.size() < 2) return std::nullopt;
    return f;
}

bool is_cocktail(const Graph& g, int& m) {
    if (g.order() % 2 || g.order() < 4) return false;
    m = g.order() / 2;
    auto r = g.regular_degree();
    if (!r || *r != 2 * m - 2) return false;
    return static_cast<bool>(are_isomorphic(g, cocktail_party(m)));
}

std::vector<Realizer> realizers(const Graph& h, int max_dim, int depth) {
    std::vector<Realizer> out;
    int n = h.order();
    if (n == 1) {
        out.push_back({0, "R7", "point", {}});
        return out;
    }
    if (!is_connected(h)) return out;
    if (n == 2) {
        out.push_back({1, "R7", "segment", [] { return geometry::segment(); }});
        return out;
    }
    if (is_cycle(h)) out.push_back({2, "R7", "polygon(" + std::to_string(n) + ")", [n] { return geometry::polygon(n); }});
    if (is_complete(h)) {
        for (int d = 3; d <= std::min(n - 1, max_dim); ++d) {
            if (d == n - 1) out.push_back({d, "R7", "simplex(" + std::to_string(d) + ")", [d] { return geometry::simplex(d); }});
            else if (d >= 4)
                out.push_back({d, "R7", "cyclic(" + std::to_string(d) + "," + std::to_string(n) + ")",
                               [d, n] { return geometry::cyclic_polytope(d, n); }});
        }
    }
    if (n >= 4 && steinitz_decide(h).yes) out.push_back({3, "R7", "steinitz", [h] { return geometry::steinitz_realization(h); }});
    int m = 0;
    if (is_cocktail(h, m) && m <= max_dim)
        out.push_back({m, "R7", "cross(" + std::to_string(m) + ")", [m] { return geometry::cross_polytope(m); }});
    for (int d = 3; d <= std::min(max_dim, n); ++d)
        for (int k = d + 1; k < n; ++k) {
            long total = k + cyclic_facets_closed(d, k);
            if (total > n) break;
            if (total != n || k + cyclic_facet_count(d, k) != n) continue;
            if (are_isomorphic(h, klee_stacked(d, k)))
                out.push_back({d, "R7", "klee_stacked(" + std::to_string(d) + "," + std::to_string(k) + ")",
                               [d, k] { return geometry::klee_stacked_polytope(d, k); }});
        }
    if (depth <= 0) return out;
    if (auto f = factor(h)) {
        std::size_t k = f->factors.size();
        for (unsigned mask = 1; mask < (1U << (k - 1)); ++mask) {
            std::vector<Graph> a, b;
            for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1U ? a : b).push_back(f->factors[i]);
            Graph ga = cartesian_product(a), gb = cartesian_product(b);
            auto ra = realizers(ga, max_dim, depth - 1);
            auto rb = realizers(gb, max_dim, depth - 1);
            for (const auto& x : ra)
                for (const auto& y : rb) {
                    if (x.dim < 1 || y.dim < 1 || x.dim + y.dim > max_dim) continue;
                    auto bx = x.build, by = y.build;
                    out.push_back({x.dim + y.dim, "R7", "product(" + x.construction + "," + y.construction + ")",
                                   [bx, by] { return geometry::product_polytope(bx(), by()); }});
                }
        }
    }
    if (!is_complete(h)) {
        auto comps = components(h.complement(), Bitset());
        std::size_t k = comps.size();
        if (k >= 2 && k <= 12) {
            for (unsigned mask = 1; mask < (1U << (k - 1)); ++mask) {
                std::vector<Vertex> va, vb;
                for (std::size_t i = 0; i < k; ++i)
                    for (Vertex v : comps[i]) ((mask >> i) & 1U ? va : vb).push_back(v);
                std::sort(va.begin(), va.end());
                std::sort(vb.begin(), vb.end());
                auto ra = realizers(h.induced(va), max_dim, depth - 1);
                auto rb = realizers(h.induced(vb), max_dim, depth - 1);
                for (const auto& x : ra)
                    for (const auto& y : rb) {
                        int dim = x.dim + y.dim + 1;
                        if (dim > max_dim || (!x.build && !y.build)) continue;
                        auto bx = x.build, by = y.build;
                        std::function<geometry::Polytope()> build;
                        if (!bx) build = [by] { return geometry::pyramid(by(), 1); };
                        else if (!by) build = [bx] { return geometry::pyramid(bx(), 1); };
                        else build = [bx, by] { return geometry::join_polytope(bx(), by()); };
                        out.push_back({dim, "R7", "join(" + x.construction + "," + y.construction + ")", build});
                    }
            }
        }
    }
    return out;
}

struct Global {
    const Graph& g;
    RangeBudget b;
    int n = 0;
    int delta = 0;
    std::optional<int> reg;
    bool k2 = false, cycle = false;
    SteinitzResult steinitz;
    int low_dim = 0;  // 1, 2 or 3 when realized there
    std::optional<Factorization> fact;
    std::optional<json> global_exclusion;
    std::string global_reason;
    std::optional<simple::ProductRuleOutcome> product;
    std::vector<Realizer> catalog;

    Global(const Graph& g_, const RangeBudget& b_) : g(g_), b(b_) {
        n = g.order();
        delta = n ? g.min_degree() : 0;
        reg = g.regular_degree();
        k2 = n == 2 && g.size() == 1;
        cycle = n >= 3 && is_cycle(g);
        steinitz = steinitz_decide(g);
        low_dim = k2 ? 1 : cycle ? 2 : steinitz.yes ? 3 : 0;
        if (!is_connected(g) || n < 2) return;
        fact = factor(g);
        if (low_dim) return;
        if (auto s = complete_bipartite_sides(g); s && s->first >= 3 && s->second >= 3) {
            global_exclusion = json{{"rule", "R6a"}, {"sides", {s->first, s->second}}};
            global_reason = "complete bipartite K" + std::to_string(s->first) + "," + std::to_string(s->second) +
                            " with both sides >= 3 is not polytopal";
            return;
        }
        if (fact && fact->factors.size() == 2) {
            const Graph& a = fact->factors[0];
            const Graph& c = fact->factors[1];
            if (c.order() == 2) {
                auto s = complete_bipartite_sides(a);
                if (s && s->first == s->second && s->first >= 3) {
                    global_exclusion = json{{"rule", "R6b"}, {"factors", {gjson(c), gjson(a)}}, {"n", s->first}};
                    global_reason = "K2 x K" + std::to_string(s->first) + "," + std::to_string(s->first) + " is not polytopal";
                    return;
                }
            }
        }
        if (auto ch = star_clique_obstruction(g)) {
            global_exclusion = json{{"rule", "R6c"}, {"cliques", ch->cliques}, {"final_graph", gjson(ch->final_graph)}};
            global_reason = "reverse star-clique contractions reach a 4-regular 3-polytopal graph";
            return;
        }
        if (fact && fact->factors.size() == 2 && fact->factors[1].order() == 2) {
            const Graph& h = fact->factors[0];
            if (h.regular_degree() == 3) {
                auto s = steinitz_decide(h);
                if (!s.yes) {
                    global_exclusion = json{{"rule", "R6d"}, {"factor", gjson(h)}, {"factor_reason", s.reason}};
                    global_reason = "K2 x H with H 3-regular and not polytopal";
                    return;
                }
            }
        }
    }
};

json psp_cert(const PspResult& p, int d, std::uint64_t budget) {
    return {{"rule", "R4-psp"}, {"d", d}, {"vertex", p.failing}, {"exhausted", p.exhausted}, {"nodes", p.nodes},
            {"budget", budget}};
}

json search_cert(const simple::SearchResult& s, const std::string& rule) {
    return {{"rule", rule},
            {"mode", s.mode},
            {"layer", s.layer},
            {"nodes", s.nodes},
            {"transcript", s.transcript},
            {"transcript_hash", s.transcript_hash}};
}

bool facet_search_applies(const Global& G, int d) { return d >= 4 && (d == 4 || (G.reg && *G.reg == d)); }

DimensionVerdict excluded(int d, std::string reason, json cert) {
    return {d, Status::Excluded, std::move(reason), std::move(cert)};
}

DimensionVerdict eval_dim(Global& G, int d) {
    const Graph& g = G.g;
    auto confirm_from = [&](const std::vector<Realizer>& rs) -> std::optional<DimensionVerdict> {
        for (const auto& r : rs) {
            if (r.dim != d || !r.build) continue;
            geometry::Polytope p;
            try {
                p = r.build();
            } catch (const Error&) {
                continue;
            }
            if (p.vertex_count() > static_cast<int>(G.b.hull_cap)) continue;
            auto m = geometry::verify_graph(p, g);
            if (!m.bijection || p.dim != d) continue;
            json cert{{"rule", r.rule},
                      {"construction", r.construction},
                      {"polytope_hash", geometry::polytope_hash(p)},
                      {"polytope", geometry::polytope_to_json(p)},
                      {"bijection", *m.bijection}};
            return DimensionVerdict{d, Status::Confirmed, "realized by " + r.construction, cert};
        }
        return std::nullopt;
    };
    if (d == 1) {
        if (G.k2) return *confirm_from(G.catalog);
        return excluded(d, "only K2 is the graph of a 1-polytope",
                        {{"rule", "R1"}, {"vertices", G.n}, {"edges", g.size()}});
    }
    if (d == 2) {
        if (G.cycle) return *confirm_from(G.catalog);
        return excluded(d, "2-polytope graphs are exactly the cycles", {{"rule", "R2"}, {"is_cycle", false}});
    }
    if (G.low_dim && d != G.low_dim)
        return excluded(d, "graph is " + std::to_string(G.low_dim) + "-polytopal, and such a realization is unique",
                        {{"rule", "R3"}, {"realized_dimension", G.low_dim}});
    if (G.low_dim == 3 && d == 3) {
        if (auto v = confirm_from(G.catalog)) return *v;
    }
    if (G.global_exclusion) return excluded(d, G.global_reason, *G.global_exclusion);
    if (G.reg && *G.reg == d && G.product && G.product->excluded_dimension == d) {
        json fs = json::array();
        for (const auto& f : G.product->factors)
            fs.push_back({{"graph", gjson(f.factor)}, {"degree", f.degree}, {"status", f.status}, {"reason", f.reason}});
        return excluded(d, "a factor of this regular product is not simply polytopal",
                        {{"rule", "R6e"}, {"d", d}, {"factors", fs}});
    }
    auto bal = balinski_check(g, d);
    if (!bal.pass) return excluded(d, bal.reason, {{"rule", "R4-balinski"}, {"d", d}, {"cut", bal.cut}, {"kappa", bal.kappa}});
    PspOptions po;
    po.node_budget = G.b.psp_nodes;
    auto psp = psp_check(g, d, std::nullopt, po);
    if (psp.status == PspStatus::Failed) return excluded(d, psp.reason, psp_cert(psp, d, G.b.psp_nodes));
    int cap = std::min(G.b.sep_cap, G.n);
    SeparationResult sep;
    if (cap >= d + 1) {
        sep = separation_check(g, d, cap);
        if (sep.status == SeparationResult::Status::Fail)
            return excluded(d,
                            "removing " + std::to_string(sep.separator.size()) + " vertices leaves " +
                                std::to_string(sep.components) + " components > " + std::to_string(sep.bound),
                            {{"rule", "R4-separation"},
                             {"d", d},
                             {"separator", sep.separator},
                             {"components", sep.components},
                             {"bound", sep.bound},
                             {"cap", cap}});
    }
    if (d == 3) {
        const auto& s = G.steinitz;
        json c{{"rule", "steinitz"}, {"reason", s.reason}};
        if (!s.planarity.planar) {
            c["kuratowski"] = edges_json(s.planarity.kuratowski);
            c["kind"] = s.planarity.kind == PlanarityResult::Kind::K5 ? "K5" : "K33";
        } else {
            c["cut"] = s.cut;
        }
        return excluded(d, s.reason, c);
    }
    simple::SearchBudget sb;
    sb.nodes = G.b.search_nodes;
    std::string search_note;
    if (G.reg && *G.reg == d) {
        auto s = simple::facet_complex_search(g, d, sb);
        if (s.outcome == simple::Outcome::Refuted && s.transcript_complete)
            return excluded(d, "no simple " + std::to_string(d) + "-polytope: " + s.layer + " layer refuted",
                            search_cert(s, "R5-facet-search"));
        search_note = "simple facet search " + simple::outcome_name(s.outcome);
        if (auto o = simple::simple_obstructions(g, d)) {
            return excluded(d, "simple-polytope obstruction " + o->id,
                            {{"rule", "R5-simple"}, {"d", d}, {"obstruction", o->id}, {"witness", o->witness},
                             {"witness2", o->witness2}});
        }
    }
    if (auto v = confirm_from(G.catalog)) return *v;
    if (d == 4 && !(G.reg && *G.reg == 4) && G.n > kGeneralSearchOrder) {
        search_note = "facet search skipped above " + std::to_string(kGeneralSearchOrder) + " vertices";
    } else if (d == 4 && !(G.reg && *G.reg == 4)) {
        auto s = simple::facet_complex_search(g, d, sb);
        if (s.outcome == simple::Outcome::Refuted && s.transcript_complete)
            return excluded(d, "no complex of 3-faces satisfies the facet constraints", search_cert(s, "facet-search"));
        search_note = "facet search " + simple::outcome_name(s.outcome) + " after " + std::to_string(s.nodes) + " nodes";
    }
    std::string why = "necessary conditions hold";
    if (psp.status == PspStatus::Budget) why = "PSP budget exhausted";
    if (sep.status == SeparationResult::Status::Incomplete) why += "; separation subset budget exhausted";
    else if (cap >= d + 1) why += "; separation checked up to " + std::to_string(cap) + " vertices";
    if (!search_note.empty()) why += "; " + search_note;
    return {d, Status::Unknown, why, nullptr};
}

}  // namespace

json ObstructionReport::to_json() const {
    json j;
    j["graph"] = gjson(graph);
    json vs = json::array();
    for (const auto& v : verdicts)
        vs.push_back({{"d", v.d}, {"status", status_name(v.status)}, {"reason", v.reason}, {"certificate", v.certificate}});
    j["verdicts"] = vs;
    j["confirmed"] = confirmed;
    j["open"] = open;
    return j;
}

ObstructionReport polytopality_range(const Graph& g, const RangeBudget& budget) {
    ObstructionReport rep;
    rep.graph = g;
    if (g.order() < 2 || !is_connected(g)) {
        // no polytope of dimension >= 1 has a disconnected graph
        for (int d = 1; d <= (g.order() ? g.min_degree() : 0); ++d)
            rep.verdicts.push_back(excluded(d, "graph is disconnected", {{"rule", "R4-balinski"}, {"d", d}, {"cut", json::array()}, {"kappa", 0}}));
        return rep;
    }
    Global G(g, budget);
    G.catalog = realizers(g, G.delta, 2);
    if (G.reg && *G.reg >= 4 && !G.global_exclusion && !G.low_dim) {
        simple::SearchBudget sb;
        sb.nodes = budget.search_nodes;
        G.product = simple::product_factor_check(g, nullptr, sb);
    }
    std::vector<DimensionVerdict> out(static_cast<std::size_t>(G.delta));
    unsigned threads = std::max(1U, budget.threads);
    if (threads == 1) {
        for (int d = 1; d <= G.delta; ++d) out[d - 1] = eval_dim(G, d);
    } else {
        std::vector<std::future<DimensionVerdict>> fut;
        int next = 1;
        while (next <= G.delta) {
            fut.clear();
            int first = next;
            for (unsigned t = 0; t < threads && next <= G.delta; ++t, ++next)
                fut.push_back(std::async(std::launch::async, [&G, d = next] { return eval_dim(G, d); }));
            for (std::size_t i = 0; i < fut.size(); ++i) out[first - 1 + i] = fut[i].get();
        }
    }
    // independent facet-search evidence for excluded dimensions on small graphs
    for (auto& v : out) {
        if (v.status != Status::Excluded || !facet_search_applies(G, v.d) || G.n > 16) continue;
        std::string rule = v.certificate.value("rule", "");
        if (rule == "R5-facet-search" || rule == "facet-search") continue;
        simple::SearchBudget sb;
        sb.nodes = budget.search_nodes;
        auto s = simple::facet_complex_search(g, v.d, sb);
        if (s.outcome == simple::Outcome::Refuted && s.transcript_complete)
            v.certificate["corroboration"] = search_cert(s, G.reg && *G.reg == v.d ? "R5-facet-search" : "facet-search");
    }
    for (auto& v : out) {
        if (v.status == Status::Confirmed) {
            // cross-audit: a realized dimension must pass the cheap necessary conditions
            if (!balinski_check(g, v.d).pass) throw Error("internal: confirmed dimension fails Balinski");
            if (v.d >= 2 && psp_check(g, v.d).status == PspStatus::Failed)
                throw Error("internal: confirmed dimension fails PSP");
            rep.confirmed.push_back(v.d);
        }
        if (v.status != Status::Excluded) rep.open.push_back(v.d);
    }
    rep.verdicts = std::move(out);
    return rep;
}

namespace {

bool fail(std::string* why, const std::string& m) {
    if (why) *why = m;
    return false;
}

bool verify_search(const Graph& g, const json& c, std::string* why) {
    auto lines = c.at("transcript").get<std::vector<std::string>>();
    auto r = simple::replay_transcript(g, lines);
    if (!r.valid) return fail(why, "transcript replay failed: " + r.message);
    if (r.claimed != simple::Outcome::Refuted) return fail(why, "transcript does not refute");
    if (c.value("transcript_hash", "") != simple::hash_lines(lines)) return fail(why, "transcript hash mismatch");
    return true;
}

bool induced_match(const Graph& g, const Graph& pat, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != pat.order()) return false;
    std::set<int> distinct(map.begin(), map.end());
    if (static_cast<int>(distinct.size()) != pat.order()) return false;
    for (int i = 0; i < pat.order(); ++i)
        for (int j = i + 1; j < pat.order(); ++j) {
            if (map[i] < 0 || map[i] >= g.order() || map[j] < 0 || map[j] >= g.order()) return false;
            if (pat.adjacent(i, j) != g.adjacent(map[i], map[j])) return false;
        }
    return true;
}

}  // namespace

bool verify_verdict(const Graph& g, const DimensionVerdict& v, std::string* why) {
    if (v.status == Status::Unknown) {
        if (!v.certificate.is_null()) return fail(why, "UNKNOWN must not carry a certificate");
        return true;
    }
    if (v.certificate.is_null()) return fail(why, "missing certificate");
    const json& c = v.certificate;
    int d = v.d;
    std::string rule = c.value("rule", "");
    try {
        if (v.status == Status::Confirmed) {
            auto p = geometry::polytope_from_json(c.at("polytope"));
            if (geometry::polytope_hash(p) != c.value("polytope_hash", "")) return fail(why, "polytope hash mismatch");
            if (p.dim != d) return fail(why, "polytope has the wrong dimension");
            auto bij = c.at("bijection").get<std::vector<int>>();
            auto sk = geometry::skeleton_graph(p);
            if (static_cast<int>(bij.size()) != sk.order() || sk.order() != g.order() || sk.size() != g.size())
                return fail(why, "size mismatch between skeleton and graph");
            for (const auto& e : sk.edges())
                if (!g.adjacent(bij[e.u], bij[e.v])) return fail(why, "bijection does not preserve edges");
            std::set<int> img(bij.begin(), bij.end());
            if (static_cast<int>(img.size()) != g.order()) return fail(why, "bijection is not injective");
            return true;
        }
        bool ok = true;
        if (rule == "R1") ok = !(g.order() == 2 && g.size() == 1);
        else if (rule == "R2") ok = !is_cycle(g);
        else if (rule == "R3") {
            int r = c.at("realized_dimension").get<int>();
            bool low = r == 1 ? (g.order() == 2 && g.size() == 1) : r == 2 ? is_cycle(g) : steinitz_decide(g).yes;
            ok = low && r != d;
        } else if (rule == "R6a") {
            auto s = complete_bipartite_sides(g);
            ok = s && s->first >= 3 && s->second >= 3;
        } else if (rule == "R6b") {
            Graph k2 = gfrom(c.at("factors")[0]), h = gfrom(c.at("factors")[1]);
            auto s = complete_bipartite_sides(h);
            ok = k2.order() == 2 && k2.size() == 1 && s && s->first == s->second && s->first >= 3 &&
                 are_isomorphic(cartesian_product(k2, h), g).has_value();
        } else if (rule == "R6c") {
            Graph cur = g;
            if (g.regular_degree() != 4) return fail(why, "graph is not 4-regular");
            for (const auto& k : c.at("cliques")) {
                auto clique = k.get<std::vector<int>>();
                bool found = false;
                for (auto& con : reverse_star_clique(cur))
                    if (con.clique == clique) {
                        cur = con.contracted;
                        found = true;
                        break;
                    }
                if (!found) return fail(why, "clique contraction not available");
            }
            ok = !c.at("cliques").empty() && cur.regular_degree() == 4 && steinitz_decide(cur).yes &&
                 cur == gfrom(c.at("final_graph"));
        } else if (rule == "R6d") {
            Graph h = gfrom(c.at("factor"));
            ok = h.regular_degree() == 3 && !steinitz_decide(h).yes &&
                 are_isomorphic(cartesian_product(h, path_graph(1)), g).has_value();
        } else if (rule == "R6e") {
            std::vector<Graph> fs;
            for (const auto& f : c.at("factors")) fs.push_back(gfrom(f.at("graph")));
            auto r = simple::product_factor_check(g, &fs);
            ok = r.excluded_dimension == d;
        } else if (rule == "R4-balinski") {
            auto cut = c.at("cut").get<std::vector<int>>();
            if (static_cast<int>(cut.size()) >= d) return fail(why, "cut is not smaller than d");
            Bitset rm = Bitset::of(static_cast<std::size_t>(g.order()), cut);
            ok = g.order() - static_cast<int>(cut.size()) < 1 || count_components(g, rm) > 1 ||
                 g.order() < d + 1;
        } else if (rule == "R4-psp") {
            PspOptions po;
            po.node_budget = c.value("budget", po.node_budget);
            auto r = psp_check(g, d, c.at("vertex").get<int>(), po);
            ok = r.status == PspStatus::Failed;
        } else if (rule == "R4-separation") {
            auto s = c.at("separator").get<std::vector<int>>();
            int comps = count_components(g, Bitset::of(static_cast<std::size_t>(g.order()), s));
            long bound = d == 1 ? 2 : cyclic_facet_count(d, static_cast<int>(s.size()));
            ok = static_cast<int>(s.size()) > d && comps > bound && comps == c.at("components").get<int>();
        } else if (rule == "steinitz") {
            if (c.contains("kuratowski")) {
                std::vector<Edge> es;
                for (const auto& e : c.at("kuratowski")) es.push_back({e[0].get<int>(), e[1].get<int>()});
                ok = check_kuratowski(g, es) != PlanarityResult::Kind::None;
            } else {
                auto cut = c.at("cut").get<std::vector<int>>();
                ok = cut.size() < 3 && (g.order() < 4 || count_components(g, Bitset::of(static_cast<std::size_t>(g.order()), cut)) > 1);
            }
        } else if (rule == "R5-simple") {
            std::string id = c.at("obstruction");
            auto w = c.at("witness").get<std::vector<int>>();
            if (g.regular_degree() != d) return fail(why, "graph is not d-regular");
            if (id == "separating-cycle")
                ok = w.size() >= 3 && w.size() <= 5 && is_chordless_cycle(g, w) &&
                     count_components(g, Bitset::of(static_cast<std::size_t>(g.order()), w)) > 1;
            else if (id == "cycles-share-3") {
                auto w2 = c.at("witness2").get<std::vector<int>>();
                std::set<int> a(w.begin(), w.end()), shared;
                for (int x : w2)
                    if (a.count(x)) shared.insert(x);
                ok = is_chordless_cycle(g, w) && is_chordless_cycle(g, w2) && w.size() >= 4 && w.size() <= 5 &&
                     w2.size() >= 4 && w2.size() <= 5 && shared.size() >= 3;
            } else if (id == "induced-K23")
                ok = induced_match(g, complete_bipartite(2, 3), w);
            else if (id == "induced-petersen")
                ok = induced_match(g, petersen_graph(), w);
            else
                return fail(why, "unknown obstruction " + id);
        } else if (rule == "R5-facet-search" || rule == "facet-search") {
            if (!verify_search(g, c, why)) return false;
        } else {
            return fail(why, "unknown rule " + rule);
        }
        if (!ok) return fail(why, "certificate for " + rule + " does not check out");
        if (c.contains("corroboration") && !verify_search(g, c.at("corroboration"), why)) return false;
        return true;
    } catch (const std::exception& ex) {
        return fail(why, std::string("malformed certificate: ") + ex.what());
    }
}

}  // namespace polygraph::obstructions
