#include "polygraph/simple_check.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "json.hpp"
#include "polygraph/algorithms.hpp"
#include "polygraph/generators.hpp"
#include "polygraph/io.hpp"
#include "polygraph/obstructions.hpp"

namespace polygraph::simple {

using nlohmann::json;

namespace {

int require_regular(const Graph& g, int d, const char* who) {
    auto r = g.regular_degree();
    if (!r || *r != d) throw Error(std::string(who) + ": graph is not " + std::to_string(d) + "-regular");
    return *r;
}

std::vector<Vertex> shared_vertices(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> x(a), y(b), out;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

// two faces meet in nothing, a vertex or an edge
bool proper_small(const Graph& g, const Bitset& a, const Bitset& b) {
    Bitset i = a & b;
    auto c = i.count();
    if (c <= 1) return true;
    if (c > 2) return false;
    Vertex u = static_cast<Vertex>(i.first());
    Vertex v = static_cast<Vertex>(i.next(static_cast<std::size_t>(u) + 1));
    return g.adjacent(u, v);
}

}  // namespace

Required2Faces required_2faces(const Graph& g, int d) {
    require_regular(g, d, "required_2faces");
    Required2Faces r;
    r.cycles = induced_cycles(g, 5);
    std::vector<Bitset> sets;
    for (const auto& c : r.cycles) sets.push_back(Bitset::of(static_cast<std::size_t>(g.order()), c));
    for (std::size_t i = 0; i < r.cycles.size() && !r.conflict; ++i)
        for (std::size_t j = i + 1; j < r.cycles.size(); ++j)
            if (!proper_small(g, sets[i], sets[j])) {
                r.conflict = CycleConflict{r.cycles[i], r.cycles[j], shared_vertices(r.cycles[i], r.cycles[j])};
                break;
            }
    return r;
}

namespace {

std::optional<SimpleObstruction> check_separating(const Graph& g) {
    for (const auto& c : induced_cycles(g, 5)) {
        Bitset s = Bitset::of(static_cast<std::size_t>(g.order()), c);
        if (count_components(g, s) > 1) return SimpleObstruction{"separating-cycle", c, {}};
    }
    return std::nullopt;
}

std::optional<SimpleObstruction> check_share3(const Graph& g) {
    std::vector<std::vector<Vertex>> cs;
    for (auto& c : induced_cycles(g, 5))
        if (c.size() >= 4) cs.push_back(c);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (shared_vertices(cs[i], cs[j]).size() >= 3) return SimpleObstruction{"cycles-share-3", cs[i], cs[j]};
    return std::nullopt;
}

std::optional<SimpleObstruction> check_induced(const Graph& g, const Graph& pattern, const char* id) {
    if (auto m = contains_induced(g, pattern)) return SimpleObstruction{id, *m, {}};
    return std::nullopt;
}

}  // namespace

std::optional<SimpleObstruction> simple_obstructions(const Graph& g, int d) {
    require_regular(g, d, "simple_obstructions");
    if (auto o = check_separating(g)) return o;
    if (auto o = check_share3(g)) return o;
    if (auto o = check_induced(g, complete_bipartite(2, 3), "induced-K23")) return o;
    if (auto o = check_induced(g, petersen_graph(), "induced-petersen")) return o;
    return std::nullopt;
}

std::vector<SimpleObstruction> simple_obstructions_all(const Graph& g, int d) {
    require_regular(g, d, "simple_obstructions_all");
    std::vector<SimpleObstruction> out;
    if (auto o = check_separating(g)) out.push_back(*o);
    if (auto o = check_share3(g)) out.push_back(*o);
    if (auto o = check_induced(g, complete_bipartite(2, 3), "induced-K23")) out.push_back(*o);
    if (auto o = check_induced(g, petersen_graph(), "induced-petersen")) out.push_back(*o);
    return out;
}

// ---------------------------------------------------------------------------
// candidate facets

namespace {

struct Esu {
    const Graph& g;
    int cap;
    const EnumerationOptions& opt;
    CandidateList& out;
    std::vector<Bitset> closed;  // N[v]
    std::vector<Bitset> above;   // vertices > v
    bool stop = false;

    void test(const Bitset& sub, int size) {
        if (size < 4) return;
        bool tri = false;
        bool ok = true;
        int deg_sum = 0;
        sub.for_each([&](std::size_t x) {
            if (!ok) return;
            Bitset nx = g.row(static_cast<Vertex>(x)) & sub;
            auto k = static_cast<int>(nx.count());
            deg_sum += k;
            if (k < 3 || (opt.exact_degree > 0 && k != opt.exact_degree)) ok = false;
            if (!tri)
                nx.for_each([&](std::size_t y) {
                    if (!tri && (nx & g.row(static_cast<Vertex>(y))).any()) tri = true;
                });
        });
        if (!ok) return;
        // planar graphs have at most 3n-6 edges
        if (deg_sum > 2 * (3 * size - 6)) return;
        // a triangle-free 3-polytope has at least 8 vertices
        if (!tri && size < 8) {
            ++out.triangle_free_pruned;
            return;
        }
        auto vl = sub.to_vector();
        Graph h = g.induced(sub);
        if (!planar_test(h)) return;
        auto st = obstructions::steinitz_decide(h);
        if (!st.yes) return;
        CandidateFace f;
        f.vertices = sub;
        f.vlist = vl;
        f.kind = FaceKind::Face3;
        for (auto& face : obstructions::whitney_2faces(h)) {
            std::vector<Vertex> gf;
            for (Vertex x : face) gf.push_back(vl[x]);
            gf = canonical_cycle(gf);
            ++f.p_counts[static_cast<int>(gf.size())];
            f.two_faces.push_back(gf);
        }
        std::sort(f.two_faces.begin(), f.two_faces.end());
        for (int x = 0; x < h.order(); ++x) ++f.v_counts[h.degree(x)];
        out.faces.push_back(std::move(f));
    }

    void extend(const Bitset& sub, int size, Bitset ext, int v, const Bitset& nbhd) {
        if (stop) return;
        if (++out.nodes > opt.node_budget) {
            stop = true;
            out.complete = false;
            return;
        }
        test(sub, size);
        if (size == cap) return;
        while (ext.any()) {
            auto w = ext.first();
            ext.reset(w);
            Bitset excl = g.row(static_cast<Vertex>(w));
            excl.subtract(nbhd);
            excl &= above[v];
            Bitset sub2 = sub;
            sub2.set(w);
            extend(sub2, size + 1, ext | excl, v, nbhd | closed[w]);
            if (stop) return;
        }
    }
};

}  // namespace

CandidateList enumerate_candidate_facets(const Graph& g, int size_cap, const EnumerationOptions& opt) {
    if (size_cap > g.order()) throw Error("enumerate_candidate_facets: size cap exceeds the vertex count");
    CandidateList out;
    auto n = static_cast<std::size_t>(g.order());
    Esu e{g, size_cap, opt, out, {}, {}};
    for (int v = 0; v < g.order(); ++v) {
        Bitset c = g.row(v);
        c.set(v);
        e.closed.push_back(c);
        Bitset a(n);
        for (int u = v + 1; u < g.order(); ++u) a.set(u);
        e.above.push_back(a);
    }
    for (int v = 0; v < g.order() && !e.stop && size_cap >= 1; ++v) {
        Bitset sub(n);
        sub.set(v);
        e.extend(sub, 1, g.row(v) & e.above[v], v, e.closed[v]);
    }
    std::sort(out.faces.begin(), out.faces.end(), [](const CandidateFace& a, const CandidateFace& b) {
        if (a.vlist.size() != b.vlist.size()) return a.vlist.size() > b.vlist.size();
        return a.vlist < b.vlist;
    });
    return out;
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::RealizableComplex: return "REALIZABLE-COMPLEX";
        case Outcome::Refuted: return "REFUTED";
        default: return "UNKNOWN";
    }
}

std::string hash_lines(const std::vector<std::string>& lines) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](unsigned char c) {
        h ^= c;
        h *= 1099511628211ULL;
    };
    for (const auto& l : lines) {
        for (char c : l) mix(static_cast<unsigned char>(c));
        mix('\n');
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------
// facet complex engine

namespace {

std::string cycle_key(const std::vector<Vertex>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s;
}

struct Cand {
    FaceKind kind;
    Bitset vs;
    std::vector<Vertex> vlist;
    std::vector<int> items;       // items this candidate counts toward
    std::vector<int> need_face2;  // simple mode: Face2 ids that must be chosen
    std::vector<int> face_items;  // Face3: its 2-face items
    int self_face = -1;           // Face2 in simple d=4 mode: its 2-face item
};

struct Item {
    char kind;  // A angle, E edge, F two-face
    std::string key;
    int target;
    std::vector<int> cands;
    Bitset vs;  // F items
};

const char* constraint_of(char kind) {
    switch (kind) {
        case 'A': return "C-angle-unique";
        case 'E': return "C-edge-3";
        default: return "C-2face-exact";
    }
}

struct Engine {
    const Graph& g;
    int d;
    bool simple = false;
    bool layer3 = false;  // 3-faces take part
    bool pool_complete = true;
    std::uint64_t pool_nodes = 0;
    std::vector<Cand> cands;
    std::vector<Item> items;
    std::vector<int> forced;
    int n_angles = 0;
    std::optional<CycleConflict> conflict;
    std::uint64_t enum_budget = 0;
    std::size_t cycle_limit = 0;

    std::vector<char> chosen;
    std::vector<int> forbidden, blocked, count;
    int covered_angles = 0;

    Engine(const Graph& g_, int d_, const SearchBudget& b)
        : g(g_), d(d_), enum_budget(b.nodes), cycle_limit(b.cycle_limit) {
        auto reg = g.regular_degree();
        if (reg && *reg == d) simple = true;
        else if (d != 4) throw Error("facet_complex_search: d must be 4 or the regular degree");
        if (simple && d < 3) throw Error("facet_complex_search: simple mode needs d >= 3");
        layer3 = !simple || d == 4;
        int n = g.order();
        std::vector<std::vector<int>> edge_id(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        std::map<std::tuple<int, int, int>, int> angle_id;

        if (simple) {
            auto req = required_2faces(g, d);
            if (req.conflict) {
                conflict = req.conflict;
                return;
            }
            for (int v = 0; v < n; ++v) {
                const auto& nb = g.neighbors(v);
                for (std::size_t i = 0; i < nb.size(); ++i)
                    for (std::size_t j = i + 1; j < nb.size(); ++j) {
                        angle_id[{v, nb[i], nb[j]}] = static_cast<int>(items.size());
                        items.push_back({'A', "A:" + std::to_string(v) + ":" + std::to_string(nb[i]) + ":" +
                                                  std::to_string(nb[j]),
                                         1, {}, {}});
                    }
            }
            n_angles = static_cast<int>(items.size());
            auto angles_of = [&](const std::vector<Vertex>& c) {
                std::vector<int> out;
                for (std::size_t i = 0; i < c.size(); ++i) {
                    Vertex a = c[(i + c.size() - 1) % c.size()], v = c[i], w = c[(i + 1) % c.size()];
                    out.push_back(angle_id.at({v, std::min(a, w), std::max(a, w)}));
                }
                std::sort(out.begin(), out.end());
                return out;
            };
            // forced 2-faces; enlarge the pool only when they leave an angle open
            std::vector<char> cov(static_cast<std::size_t>(n_angles), 0);
            for (auto& c : req.cycles)
                for (int a : angles_of(c)) cov[a] = 1;
            std::vector<std::vector<Vertex>> pool = req.cycles;
            if (std::find(cov.begin(), cov.end(), 0) != cov.end()) {
                bool trunc = false;
                pool = induced_cycles_upto(g, n, b.cycle_limit, &trunc);
                pool_complete = !trunc;
            }
            std::set<std::vector<Vertex>> req_set(req.cycles.begin(), req.cycles.end());
            std::map<std::vector<Vertex>, int> face2_id;
            for (auto& c : pool) {
                Cand k{FaceKind::Face2, Bitset::of(static_cast<std::size_t>(n), c), c, angles_of(c), {}, {}, -1};
                face2_id[c] = static_cast<int>(cands.size());
                if (req_set.count(c)) forced.push_back(static_cast<int>(cands.size()));
                cands.push_back(std::move(k));
            }
            if (layer3) {
                for (auto& e : g.edges()) {
                    edge_id[e.u][e.v] = edge_id[e.v][e.u] = static_cast<int>(items.size());
                    items.push_back({'E', "E:" + std::to_string(e.u) + ":" + std::to_string(e.v), 3, {}, {}});
                }
                for (std::size_t i = 0; i < cands.size(); ++i) {
                    cands[i].self_face = static_cast<int>(items.size());
                    items.push_back({'F', "F:" + cycle_key(cands[i].vlist), 2, {}, cands[i].vs});
                }
                EnumerationOptions eo;
                eo.node_budget = b.nodes;
                eo.exact_degree = 3;
                auto cl = enumerate_candidate_facets(g, n - 1, eo);
                pool_nodes = cl.nodes;
                pool_complete = pool_complete && cl.complete;
                for (auto& f : cl.faces) {
                    Cand k{FaceKind::Face3, f.vertices, f.vlist, {}, {}, {}, -1};
                    bool ok = true;
                    for (auto& tf : f.two_faces) {
                        auto it = face2_id.find(tf);
                        if (it == face2_id.end()) {
                            ok = false;
                            break;
                        }
                        k.need_face2.push_back(it->second);
                        k.face_items.push_back(cands[it->second].self_face);
                    }
                    if (!ok) continue;
                    for (Vertex x : f.vlist)
                        for (Vertex y : f.vlist)
                            if (x < y && g.adjacent(x, y)) k.items.push_back(edge_id[x][y]);
                    for (int fi : k.face_items) k.items.push_back(fi);
                    cands.push_back(std::move(k));
                }
            }
        } else {
            for (auto& e : g.edges()) {
                edge_id[e.u][e.v] = edge_id[e.v][e.u] = static_cast<int>(items.size());
                items.push_back({'E', "E:" + std::to_string(e.u) + ":" + std::to_string(e.v), 3, {}, {}});
            }
            EnumerationOptions eo;
            eo.node_budget = b.nodes;
            auto cl = enumerate_candidate_facets(g, n - 1, eo);
            pool_nodes = cl.nodes;
            pool_complete = cl.complete;
            std::map<std::vector<Vertex>, int> face_item;
            std::set<std::vector<Vertex>> all_faces;
            for (auto& f : cl.faces) all_faces.insert(f.two_faces.begin(), f.two_faces.end());
            for (auto& c : all_faces) {
                face_item[c] = static_cast<int>(items.size());
                items.push_back({'F', "F:" + cycle_key(c), 2, {}, Bitset::of(static_cast<std::size_t>(n), c)});
            }
            for (auto& f : cl.faces) {
                Cand k{FaceKind::Face3, f.vertices, f.vlist, {}, {}, {}, -1};
                for (Vertex x : f.vlist)
                    for (Vertex y : f.vlist)
                        if (x < y && g.adjacent(x, y)) k.items.push_back(edge_id[x][y]);
                for (auto& tf : f.two_faces) {
                    k.face_items.push_back(face_item.at(tf));
                    k.items.push_back(face_item.at(tf));
                }
                cands.push_back(std::move(k));
            }
        }
        for (std::size_t c = 0; c < cands.size(); ++c)
            for (int it : cands[c].items) items[it].cands.push_back(static_cast<int>(c));
        chosen.assign(cands.size(), 0);
        forbidden.assign(cands.size(), 0);
        blocked.assign(cands.size(), 0);
        count.assign(items.size(), 0);
    }

    std::vector<std::string> pool_lines() const {
        std::vector<std::string> out;
        for (const auto& c : cands) out.push_back((c.kind == FaceKind::Face2 ? "2:" : "3:") + cycle_key(c.vlist));
        return out;
    }

    bool compatible(int a, int b) const {
        const Cand& x = cands[a];
        const Cand& y = cands[b];
        if (x.kind != y.kind) return true;
        if (x.kind == FaceKind::Face2) return proper_small(g, x.vs, y.vs);
        Bitset i = x.vs & y.vs;
        if (i.count() <= 2) return proper_small(g, x.vs, y.vs);
        for (int f : x.face_items)
            if (items[f].vs == i && std::find(y.face_items.begin(), y.face_items.end(), f) != y.face_items.end())
                return true;
        return false;
    }

    bool phase2() const { return covered_angles == n_angles; }

    bool deficient(int i) const {
        const Item& it = items[i];
        switch (it.kind) {
            case 'A': return count[i] < 1;
            case 'E': return (!simple || phase2()) && count[i] < 3;
            default:
                if (simple) {
                    // the 2-face item of Face2 candidate cands index
                    return phase2() && face_chosen(i) && count[i] < 2;
                }
                return count[i] >= 1 && count[i] < 2;
        }
    }

    std::vector<int> face_owner;  // simple mode: F item -> Face2 candidate
    bool face_chosen(int item) const { return chosen[face_owner[item]]; }

    void index_faces() {
        face_owner.assign(items.size(), -1);
        for (std::size_t c = 0; c < cands.size(); ++c)
            if (cands[c].self_face >= 0) face_owner[cands[c].self_face] = static_cast<int>(c);
    }

    bool eligible(int c) const {
        if (chosen[c] || forbidden[c] || blocked[c]) return false;
        const Cand& k = cands[c];
        if (k.kind == FaceKind::Face2) {
            for (int a : k.items)
                if (count[a] > 0) return false;
            return true;
        }
        for (int f : k.need_face2)
            if (!chosen[f]) return false;
        for (int it : k.items) {
            if (items[it].kind == 'F' && count[it] >= 2) return false;
            if (items[it].kind == 'E' && simple && count[it] >= 3) return false;
        }
        return true;
    }

    std::vector<int> options(int i) const {
        std::vector<int> out;
        for (int c : items[i].cands)
            if (eligible(c)) out.push_back(c);
        return out;
    }

    // MRV item among deficient ones; -1 when none
    int pick(std::vector<int>& opts) const {
        int best = -1;
        for (int i = 0; i < static_cast<int>(items.size()); ++i) {
            if (!deficient(i)) continue;
            auto o = options(i);
            if (best < 0 || o.size() < opts.size()) {
                best = i;
                opts = std::move(o);
                if (opts.empty()) break;
            }
        }
        return best;
    }

    void apply(int c) {
        chosen[c] = 1;
        for (int it : cands[c].items) {
            if (items[it].kind == 'A' && count[it] == 0) ++covered_angles;
            ++count[it];
        }
        for (int x = 0; x < static_cast<int>(cands.size()); ++x)
            if (x != c && !compatible(c, x)) ++blocked[x];
    }
    void unapply(int c) {
        chosen[c] = 0;
        for (int it : cands[c].items) {
            --count[it];
            if (items[it].kind == 'A' && count[it] == 0) --covered_angles;
        }
        for (int x = 0; x < static_cast<int>(cands.size()); ++x)
            if (x != c && !compatible(c, x)) --blocked[x];
    }

    json header(const std::string& layer) const {
        json h;
        h["event"] = "header";
        h["graph"] = to_graph6(g);
        h["d"] = d;
        h["mode"] = simple ? "simple" : "general";
        h["layer"] = layer;
        h["pool"] = cands.size();
        h["pool_hash"] = hash_lines(pool_lines());
        h["pool_complete"] = pool_complete;
        h["forced"] = forced;
        h["enum_budget"] = enum_budget;
        h["cycle_limit"] = cycle_limit;
        return h;
    }
};

struct Recorder {
    std::vector<std::string>& lines;
    std::size_t limit;
    bool truncated = false;
    void add(const json& j) {
        if (truncated) return;
        if (lines.size() + 2 >= limit) {
            truncated = true;
            lines.push_back(json{{"event", "truncated"}}.dump());
            return;
        }
        lines.push_back(j.dump());
    }
};

std::string layer_name(const Engine& e) {
    if (e.conflict) return "required";
    if (e.simple && !e.layer3) return "angles";
    return e.simple ? "angles+facets" : "facets";
}

}  // namespace

SearchResult facet_complex_search(const Graph& g, int d, const SearchBudget& budget) {
    Engine e(g, d, budget);
    e.index_faces();
    SearchResult res;
    res.mode = e.simple ? "simple" : "general";
    res.layer = layer_name(e);
    Recorder rec{res.transcript, budget.transcript_lines};
    rec.add(e.header(res.layer));
    auto finish = [&](Outcome o) {
        res.outcome = o;
        res.transcript_complete = !rec.truncated;
        res.transcript.push_back(json{{"event", "result"}, {"outcome", outcome_name(o)}, {"nodes", res.nodes}}.dump());
        res.transcript_hash = hash_lines(res.transcript);
        return res;
    };
    if (e.conflict) {
        rec.add({{"event", "conflict"},
                 {"a", e.conflict->a},
                 {"b", e.conflict->b},
                 {"shared", e.conflict->shared},
                 {"constraint", "C-required"}});
        return finish(Outcome::Refuted);
    }
    for (int c : e.forced) e.apply(c);
    bool out = false;
    std::function<bool()> node = [&]() -> bool {
        if (++res.nodes > budget.nodes) {
            out = true;
            return false;
        }
        std::vector<int> opts;
        int it = e.pick(opts);
        if (it < 0) {
            rec.add({{"event", "complete"}});
            return true;
        }
        if (opts.empty()) {
            rec.add({{"event", "prune"}, {"item", e.items[it].key}, {"constraint", constraint_of(e.items[it].kind)}});
            return false;
        }
        rec.add({{"event", "branch"}, {"item", e.items[it].key}, {"options", opts}});
        std::vector<int> forb;
        bool found = false;
        for (int c : opts) {
            rec.add({{"event", "choose"}, {"cand", c}});
            e.apply(c);
            if (node()) {
                found = true;
                break;
            }
            if (out) break;
            rec.add({{"event", "undo"}, {"cand", c}});
            e.unapply(c);
            ++e.forbidden[c];
            forb.push_back(c);
        }
        if (found) return true;
        for (int c : forb) --e.forbidden[c];
        return false;
    };
    bool ok = node();
    if (ok) {
        bool any3 = false;
        for (std::size_t c = 0; c < e.cands.size(); ++c)
            if (e.chosen[c] && e.cands[c].kind == FaceKind::Face3) any3 = true;
        for (std::size_t c = 0; c < e.cands.size(); ++c)
            if (e.chosen[c] && (e.cands[c].kind == FaceKind::Face3) == any3) res.complex.push_back(e.cands[c].vlist);
        std::sort(res.complex.begin(), res.complex.end());
        return finish(Outcome::RealizableComplex);
    }
    if (out) {
        rec.add({{"event", "budget"}});
        return finish(Outcome::Unknown);
    }
    if (!e.pool_complete) {
        rec.add({{"event", "pool-incomplete"}});
        return finish(Outcome::Unknown);
    }
    return finish(Outcome::Refuted);
}

ReplayResult replay_transcript(const Graph& g, const std::vector<std::string>& lines) {
    ReplayResult r;
    auto bad = [&](const std::string& m) {
        r.valid = false;
        r.message = m;
        return r;
    };
    if (lines.size() < 2) return bad("transcript too short");
    std::vector<json> ev;
    try {
        for (const auto& l : lines) ev.push_back(json::parse(l));
    } catch (const std::exception& ex) {
        return bad(std::string("unparsable line: ") + ex.what());
    }
    const json& h = ev.front();
    const json& last = ev.back();
    if (h.value("event", "") != "header") return bad("first line is not a header");
    if (last.value("event", "") != "result") return bad("last line is not a result");
    std::string claimed = last.value("outcome", "");
    r.claimed = claimed == "REFUTED" ? Outcome::Refuted
                : claimed == "REALIZABLE-COMPLEX" ? Outcome::RealizableComplex
                                                  : Outcome::Unknown;
    if (h.value("graph", "") != to_graph6(g)) return bad("graph differs from the transcript header");
    int d = h.value("d", 0);
    std::unique_ptr<Engine> ep;
    try {
        SearchBudget b;
        b.nodes = h.value("enum_budget", b.nodes);
        b.cycle_limit = h.value("cycle_limit", b.cycle_limit);
        ep = std::make_unique<Engine>(g, d, b);
    } catch (const std::exception& ex) {
        return bad(ex.what());
    }
    Engine& e = *ep;
    e.index_faces();
    if (h.value("mode", "") != (e.simple ? "simple" : "general")) return bad("mode mismatch");
    if (h.value("layer", "") != layer_name(e)) return bad("layer mismatch");
    if (e.conflict) {
        if (ev.size() != 3 || ev[1].value("event", "") != "conflict") return bad("expected a single conflict event");
        if (ev[1]["a"].get<std::vector<int>>() != e.conflict->a || ev[1]["b"].get<std::vector<int>>() != e.conflict->b)
            return bad("conflict pair differs from the recomputed one");
        if (r.claimed != Outcome::Refuted) return bad("conflict must refute");
        r.valid = true;
        r.message = "required 2-face conflict confirmed";
        return r;
    }
    if (h.value("pool", std::size_t{0}) != e.cands.size() || h.value("pool_hash", "") != hash_lines(e.pool_lines()))
        return bad("candidate pool differs from the recomputed one");
    if (h["forced"].get<std::vector<int>>() != e.forced) return bad("forced set differs");
    for (int c : e.forced) e.apply(c);

    struct Frame {
        int item;
        std::vector<int> opts;
        std::size_t idx = 0;
        std::vector<int> forb;
        bool applied = false;
    };
    std::vector<Frame> stack;
    enum { AtNode, InFrame, AfterChild } pos = AtNode;
    bool root_pruned = false, completed = false;
    auto pop_finished = [&]() {
        while (!stack.empty() && stack.back().idx == stack.back().opts.size() && !stack.back().applied) {
            for (int c : stack.back().forb) --e.forbidden[c];
            stack.pop_back();
        }
    };
    for (std::size_t k = 1; k + 1 < ev.size(); ++k) {
        const json& x = ev[k];
        std::string t = x.value("event", "");
        std::string where = "line " + std::to_string(k + 1) + ": ";
        if (t == "truncated" || t == "budget" || t == "pool-incomplete") {
            if (r.claimed == Outcome::Refuted) return bad(where + "refutation cannot stop early");
            r.valid = true;
            r.message = "partial transcript (" + t + "), consistent up to this point";
            return r;
        }
        if (t == "branch" || t == "prune" || t == "complete") {
            if (pos != AtNode) return bad(where + t + " outside a search node");
            std::vector<int> opts;
            int it = e.pick(opts);
            if (t == "complete") {
                if (it >= 0) return bad(where + "complete claimed with deficient item " + e.items[it].key);
                completed = true;
                pos = AfterChild;
                continue;
            }
            if (it < 0) return bad(where + "no deficient item, expected complete");
            if (x.value("item", "") != e.items[it].key) return bad(where + "item is not the selected one");
            if (t == "prune") {
                if (!opts.empty()) return bad(where + "pruned item still has options");
                if (x.value("constraint", "") != constraint_of(e.items[it].kind)) return bad(where + "wrong constraint id");
                if (stack.empty()) root_pruned = true;
                pos = AfterChild;
                continue;
            }
            if (x["options"].get<std::vector<int>>() != opts) return bad(where + "option list differs");
            stack.push_back({it, opts});
            pos = InFrame;
            continue;
        }
        if (t == "choose") {
            if (pos != InFrame || stack.empty()) return bad(where + "choose outside a frame");
            Frame& f = stack.back();
            if (f.idx >= f.opts.size() || x.value("cand", -1) != f.opts[f.idx]) return bad(where + "unexpected choice");
            e.apply(f.opts[f.idx]);
            f.applied = true;
            pos = AtNode;
            continue;
        }
        if (t == "undo") {
            if (pos != AfterChild) return bad(where + "undo before the subtree is closed");
            pop_finished();
            if (stack.empty()) return bad(where + "undo without a frame");
            Frame& f = stack.back();
            if (!f.applied || x.value("cand", -1) != f.opts[f.idx]) return bad(where + "undo does not match the choice");
            e.unapply(f.opts[f.idx]);
            ++e.forbidden[f.opts[f.idx]];
            f.forb.push_back(f.opts[f.idx]);
            f.applied = false;
            ++f.idx;
            pos = f.idx < f.opts.size() ? InFrame : AfterChild;
            continue;
        }
        return bad(where + "unknown event " + t);
    }
    if (r.claimed == Outcome::RealizableComplex) {
        if (!completed) return bad("no complete event");
        r.valid = true;
        r.message = "complex re-derived";
        return r;
    }
    if (r.claimed == Outcome::Refuted) {
        if (completed) return bad("refutation transcript contains a complete event");
        pop_finished();
        if (!stack.empty()) return bad("search tree not exhausted");
        if (!root_pruned && pos != AfterChild) return bad("root not explored");
        r.valid = true;
        r.message = "exhaustive refutation re-derived";
        return r;
    }
    r.valid = true;
    r.message = "unknown outcome, events consistent";
    return r;
}

ProductRuleOutcome product_factor_check(const Graph& g, const std::vector<Graph>* factors, const SearchBudget& budget) {
    ProductRuleOutcome out;
    std::vector<Graph> fs;
    if (factors) {
        if (factors->size() < 2) throw Error("product_factor_check: need at least two factors");
        if (!are_isomorphic(cartesian_product(*factors), g))
            throw Error("product_factor_check: factors do not multiply to the graph");
        fs = *factors;
    } else {
        auto f = prime_factorization(g);
        if (!f || f->factors.size() < 2) return out;
        fs = f->factors;
    }
    int total = 0;
    for (const auto& f : fs) {
        auto r = f.regular_degree();
        if (!r) return out;
        total += *r;
    }
    out.applicable = true;
    for (const auto& f : fs) {
        FactorVerdict v;
        v.factor = f;
        v.degree = *f.regular_degree();
        if (v.degree == 1 && f.order() == 2) {
            v.status = "simply-polytopal";
            v.reason = "segment";
        } else if (v.degree == 2 && is_cycle(f)) {
            v.status = "simply-polytopal";
            v.reason = "polygon";
        } else if (v.degree <= 2) {
            v.status = "refuted";
            v.reason = "disconnected low-degree factor";
        } else if (v.degree == 3) {
            auto s = obstructions::steinitz_decide(f);
            v.status = s.yes ? "simply-polytopal" : "refuted";
            v.reason = s.reason;
        } else if (auto o = simple_obstructions(f, v.degree)) {
            v.status = "refuted";
            v.reason = o->id;
        } else {
            auto s = facet_complex_search(f, v.degree, budget);
            v.status = s.outcome == Outcome::Refuted && s.transcript_complete ? "refuted" : "unknown";
            v.reason = "facet search " + outcome_name(s.outcome);
        }
        if (v.status == "refuted") out.excluded_dimension = total;
        out.factors.push_back(v);
    }
    return out;
}

}  // namespace polygraph::simple
