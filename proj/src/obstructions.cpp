#include "polygraph/obstructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "polygraph/generators.hpp"

namespace polygraph::obstructions {

BalinskiResult balinski_check(const Graph& g, int d) {
    if (d < 1) throw Error("balinski_check: d must be >= 1");
    BalinskiResult r;
    if (g.order() < d + 1) {
        r.reason = "needs at least " + std::to_string(d + 1) + " vertices, has " + std::to_string(g.order());
        return r;
    }
    auto m = vertex_connectivity(g);
    r.kappa = m.kappa;
    if (m.kappa >= d) {
        r.pass = true;
        return r;
    }
    r.cut = m.min_cut;
    r.reason = "vertex cut of size " + std::to_string(m.kappa) + " < " + std::to_string(d);
    return r;
}

bool verify_psp_witness(const Graph& g, int d, const PSPWitness& w, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    int n = g.order();
    if (w.principal < 0 || w.principal >= n) return fail("principal out of range");
    if (static_cast<int>(w.branch.size()) != d) return fail("branch size differs from d");
    std::set<Vertex> branch(w.branch.begin(), w.branch.end());
    if (static_cast<int>(branch.size()) != d) return fail("repeated branch vertex");
    for (Vertex b : w.branch)
        if (b < 0 || b >= n || !g.adjacent(w.principal, b)) return fail("branch vertex not adjacent to principal");
    std::size_t expect = static_cast<std::size_t>(d) * static_cast<std::size_t>(d - 1) / 2;
    if (w.paths.size() != expect) return fail("wrong number of paths");
    std::set<Vertex> interior;
    std::size_t k = 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++k) {
            const auto& p = w.paths[k];
            if (p.size() < 2 || p.front() != w.branch[i] || p.back() != w.branch[j]) return fail("path endpoints wrong");
            for (std::size_t t = 0; t + 1 < p.size(); ++t)
                if (p[t] < 0 || p[t] >= n || p[t + 1] < 0 || p[t + 1] >= n || !g.adjacent(p[t], p[t + 1]))
                    return fail("path uses a non-edge");
            for (std::size_t t = 1; t + 1 < p.size(); ++t) {
                if (p[t] == w.principal || branch.count(p[t])) return fail("path interior hits principal or branch");
                if (!interior.insert(p[t]).second) return fail("path interiors overlap");
            }
        }
    return true;
}

namespace {

struct PspSearch {
    const Graph& g;
    int d;
    const PspOptions& opt;
    std::uint64_t& nodes;
    std::mt19937_64* rng;
    bool out_of_budget = false;

    std::vector<std::pair<Vertex, Vertex>> pairs;  // nonadjacent pairs to route
    std::vector<std::vector<Vertex>> routed;
    Bitset blocked;  // principal, branch, used interiors

    bool reachable(Vertex a, Vertex b) const {
        Bitset seen(static_cast<std::size_t>(g.order()));
        seen.set(a);
        std::vector<Vertex> stack{a};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (y == b) return true;
                if (seen.test(y) || blocked.test(y)) continue;
                seen.set(y);
                stack.push_back(y);
            }
        }
        return false;
    }

    // all a-b paths with exactly len edges through unblocked vertices
    bool paths_of_length(Vertex a, Vertex b, int len, std::vector<Vertex>& path, std::size_t pi) {
        Vertex x = path.back();
        int have = static_cast<int>(path.size()) - 1;
        if (have == len - 1) {
            if (!g.adjacent(x, b)) return false;
            path.push_back(b);
            bool ok = try_path(path, pi);
            path.pop_back();
            return ok;
        }
        std::vector<Vertex> nb = g.neighbors(x);
        if (rng) std::shuffle(nb.begin(), nb.end(), *rng);
        for (Vertex y : nb) {
            if (blocked.test(y) || y == b) continue;
            if (std::find(path.begin(), path.end(), y) != path.end()) continue;
            path.push_back(y);
            bool ok = paths_of_length(a, b, len, path, pi);
            path.pop_back();
            if (ok || out_of_budget) return ok;
        }
        return false;
    }

    bool try_path(const std::vector<Vertex>& path, std::size_t pi) {
        if (++nodes > opt.node_budget) {
            out_of_budget = true;
            return false;
        }
        for (std::size_t t = 1; t + 1 < path.size(); ++t) blocked.set(path[t]);
        routed[pi] = path;
        bool ok = route(pi + 1);
        for (std::size_t t = 1; t + 1 < path.size(); ++t) blocked.reset(path[t]);
        return ok;
    }

    bool route(std::size_t pi) {
        if (pi == pairs.size()) return true;
        // every remaining pair must still be connectable
        for (std::size_t q = pi; q < pairs.size(); ++q)
            if (!reachable(pairs[q].first, pairs[q].second)) return false;
        auto [a, b] = pairs[pi];
        int free = 0;
        for (int v = 0; v < g.order(); ++v) free += !blocked.test(v);
        for (int len = 2; len <= free + 1; ++len) {
            std::vector<Vertex> path{a};
            if (paths_of_length(a, b, len, path, pi)) return true;
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

PspResult psp_check(const Graph& g, int d, std::optional<Vertex> v, const PspOptions& opt) {
    if (d < 2) throw Error("psp_check: d must be >= 2");
    PspResult res;
    std::optional<std::mt19937_64> rng;
    if (opt.shuffle_seed) rng.emplace(*opt.shuffle_seed);
    std::vector<Vertex> targets;
    if (v) {
        if (*v < 0 || *v >= g.order()) throw Error("psp_check: vertex out of range");
        targets.push_back(*v);
    } else {
        for (int x = 0; x < g.order(); ++x) targets.push_back(x);
    }
    bool any_budget = false;
    for (Vertex p : targets) {
        const auto& nb = g.neighbors(p);
        int deg = static_cast<int>(nb.size());
        if (deg < d) {
            res.status = PspStatus::Failed;
            res.failing = p;
            res.exhausted = true;
            res.reason = "vertex " + std::to_string(p) + " has degree " + std::to_string(deg) + " < " + std::to_string(d);
            return res;
        }
        // d-subsets of the neighbourhood, lexicographic
        std::vector<std::vector<Vertex>> subsets;
        std::vector<int> idx(static_cast<std::size_t>(d));
        std::function<void(int, int)> gen = [&](int start, int k) {
            if (k == d) {
                std::vector<Vertex> s;
                for (int i : idx) s.push_back(nb[i]);
                subsets.push_back(s);
                return;
            }
            for (int i = start; i <= deg - (d - k); ++i) {
                idx[k] = i;
                gen(i + 1, k + 1);
            }
        };
        gen(0, 0);
        if (rng) std::shuffle(subsets.begin(), subsets.end(), *rng);
        bool found = false, budget_hit = false;
        for (const auto& B : subsets) {
            PspSearch s{g, d, opt, res.nodes, rng ? &*rng : nullptr};
            s.blocked = Bitset(static_cast<std::size_t>(g.order()));
            s.blocked.set(p);
            for (Vertex b : B) s.blocked.set(b);
            std::vector<std::pair<int, int>> all;
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j) all.push_back({i, j});
            for (auto [i, j] : all)
                if (!g.adjacent(B[i], B[j])) s.pairs.push_back({B[i], B[j]});
            s.routed.assign(s.pairs.size(), {});
            if (s.route(0)) {
                PSPWitness w;
                w.principal = p;
                w.branch = B;
                std::size_t k = 0;
                for (auto [i, j] : all) {
                    if (g.adjacent(B[i], B[j])) w.paths.push_back({B[i], B[j]});
                    else w.paths.push_back(s.routed[k++]);
                }
                res.witnesses.push_back(w);
                found = true;
                break;
            }
            if (s.out_of_budget) {
                budget_hit = true;
                break;
            }
        }
        if (!found) {
            res.failing = p;
            if (budget_hit) {
                res.status = PspStatus::Budget;
                res.reason = "node budget exhausted at vertex " + std::to_string(p);
                any_budget = true;
                break;
            }
            res.status = PspStatus::Failed;
            res.exhausted = true;
            res.reason = "no principal subdivision at vertex " + std::to_string(p) + " (all " +
                         std::to_string(subsets.size()) + " neighbour subsets exhausted)";
            return res;
        }
    }
    if (!any_budget) res.status = PspStatus::Witness;
    return res;
}

long cyclic_facet_count(int d, int n) {
    if (d < 2 || n <= d) throw Error("cyclic_facet_count needs n > d >= 2");
    long count = 0;
    // subsets as bitmasks over 0..n-1
    std::vector<int> s(static_cast<std::size_t>(d));
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == d) {
            // interior blocks (not touching 0 or n-1) must have even size
            int i = 0;
            while (i < d) {
                int j = i;
                while (j + 1 < d && s[j + 1] == s[j] + 1) ++j;
                bool touches = s[i] == 0 || s[j] == n - 1;
                if (!touches && (j - i + 1) % 2 == 1) return;
                i = j + 1;
            }
            ++count;
            return;
        }
        for (int x = start; x <= n - (d - k); ++x) {
            s[k] = x;
            rec(x + 1, k + 1);
        }
    };
    rec(0, 0);
    return count;
}

SeparationResult separation_check(const Graph& g, int d, int cap, std::uint64_t subset_budget) {
    if (d < 1) throw Error("separation_check: d must be >= 1");
    if (cap < d + 1) throw Error("separation_check: cap must be >= d+1");
    if (cap > g.order()) throw Error("separation_check: cap exceeds the vertex count");
    SeparationResult r;
    r.cap = cap;
    int N = g.order();
    int kappa = N >= 2 ? vertex_connectivity(g).kappa : 0;
    std::vector<int> deg;
    for (int v = 0; v < N; ++v) deg.push_back(g.degree(v));
    std::sort(deg.rbegin(), deg.rend());
    std::uint64_t spent = 0;
    for (int n = d + 1; n <= cap; ++n) {
        SeparationLevel lv;
        lv.n = n;
        lv.bound = d == 1 ? 2 : cyclic_facet_count(d, n);
        long most = N - n;
        if (kappa >= 1) {
            long sum = 0;
            for (int i = 0; i < n; ++i) sum += deg[i];
            most = std::min(most, sum / kappa);
        }
        most = std::max(most, 1L);
        if (most <= lv.bound) {
            lv.method = "degree-bound";
            lv.worst = static_cast<int>(most);
            r.levels.push_back(lv);
            continue;
        }
        lv.method = "enumerated";
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[i] = i;
        bool done = false;
        while (!done) {
            if (++spent > subset_budget) {
                lv.method = "budget";
                r.levels.push_back(lv);
                r.status = SeparationResult::Status::Incomplete;
                return r;
            }
            Bitset S(static_cast<std::size_t>(N));
            for (int i : idx) S.set(i);
            int c = count_components(g, S);
            lv.worst = std::max(lv.worst, c);
            if (c > lv.bound) {
                r.status = SeparationResult::Status::Fail;
                r.separator = idx;
                r.components = c;
                r.bound = lv.bound;
                r.levels.push_back(lv);
                return r;
            }
            // next combination
            int i = n - 1;
            while (i >= 0 && idx[i] == N - n + i) --i;
            if (i < 0) {
                done = true;
            } else {
                ++idx[i];
                for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        r.levels.push_back(lv);
    }
    return r;
}

SteinitzResult steinitz_decide(const Graph& g) {
    SteinitzResult r;
    if (g.order() < 4) {
        r.reason = "fewer than 4 vertices";
        return r;
    }
    r.planarity = is_planar(g);
    if (!r.planarity.planar) {
        r.reason = std::string("nonplanar: ") +
                   (r.planarity.kind == PlanarityResult::Kind::K5 ? "K5" : "K3,3") + " subdivision";
        return r;
    }
    auto m = vertex_connectivity(g);
    if (m.kappa < 3) {
        r.cut = m.min_cut;
        r.reason = "not 3-connected (cut of size " + std::to_string(m.kappa) + ")";
        return r;
    }
    r.yes = true;
    r.reason = "planar and 3-connected";
    return r;
}

std::vector<std::vector<Vertex>> whitney_2faces(const Graph& g) {
    auto s = steinitz_decide(g);
    if (!s.yes) throw Error("whitney_2faces: graph is not 3-polytopal (" + s.reason + ")");
    auto faces = embedding_faces(g, s.planarity.rotation);
    for (auto& f : faces) f = canonical_cycle(f);
    std::sort(faces.begin(), faces.end());
    if (static_cast<long>(faces.size()) != static_cast<long>(g.size()) - g.order() + 2)
        throw Error("whitney_2faces: Euler audit failed");
    return faces;
}

std::vector<Contraction> reverse_star_clique(const Graph& g) {
    std::set<std::vector<Vertex>> seen;
    std::vector<Contraction> out;
    int n = g.order();
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d < 3) continue;
        for (Vertex x : g.neighbors(v)) {
            std::vector<Vertex> K{v};
            for (Vertex y : g.neighbors(v))
                if (y != x) K.push_back(y);
            std::sort(K.begin(), K.end());
            if (seen.count(K)) continue;
            bool ok = true;
            std::set<Vertex> outside;
            Bitset in = Bitset::of(static_cast<std::size_t>(n), K);
            for (Vertex a : K) {
                if (g.degree(a) != d) {
                    ok = false;
                    break;
                }
                for (Vertex b : K)
                    if (a != b && !g.adjacent(a, b)) ok = false;
                for (Vertex y : g.neighbors(a))
                    if (!in.test(y)) outside.insert(y);
            }
            // distinct outside neighbours keep the contraction simple
            if (!ok || static_cast<int>(outside.size()) != d) continue;
            seen.insert(K);
            // contract: keep K[0], drop the rest
            std::vector<int> pos(static_cast<std::size_t>(n), -1);
            int next = 0;
            for (int u = 0; u < n; ++u)
                if (!in.test(u) || u == K[0]) pos[u] = next++;
            std::vector<Edge> es;
            for (const auto& e : g.edges()) {
                int a = in.test(e.u) ? K[0] : e.u;
                int b = in.test(e.v) ? K[0] : e.v;
                if (a == b) continue;
                es.push_back({std::min(pos[a], pos[b]), std::max(pos[a], pos[b])});
            }
            out.push_back({K, make_graph(next, es)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Contraction& a, const Contraction& b) { return a.clique < b.clique; });
    return out;
}

std::optional<StarCliqueChain> star_clique_obstruction(const Graph& g, std::size_t max_states) {
    if (g.regular_degree() != 4) return std::nullopt;
    struct State {
        Graph graph;
        std::vector<std::vector<Vertex>> chain;
    };
    std::set<std::vector<Edge>> visited;
    std::vector<State> queue{{g, {}}};
    visited.insert(g.edges());
    for (std::size_t qi = 0; qi < queue.size() && qi < max_states; ++qi) {
        State cur = queue[qi];
        for (auto& c : reverse_star_clique(cur.graph)) {
            if (c.clique.size() != 4) continue;
            auto key = c.contracted.edges();
            if (!visited.insert(key).second) continue;
            auto chain = cur.chain;
            chain.push_back(c.clique);
            if (c.contracted.regular_degree() == 4 && steinitz_decide(c.contracted).yes)
                return StarCliqueChain{chain, c.contracted};
            queue.push_back({c.contracted, chain});
        }
    }
    return std::nullopt;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Excluded: return "EXCLUDED";
        case Status::Confirmed: return "CONFIRMED";
        default: return "UNKNOWN";
    }
}

}  // namespace polygraph::obstructions
