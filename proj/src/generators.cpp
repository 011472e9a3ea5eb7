#include "polygraph/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "polygraph/algorithms.hpp"
#include "polygraph/geometry.hpp"

namespace polygraph {

std::string describe_set(const std::vector<int>& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    return os.str();
}

Graph circulant(int n, const std::vector<int>& S) {
    if (n < 2) throw Error("circulant needs n >= 2");
    if (S.empty()) throw Error("circulant needs a nonempty connection set");
    std::set<int> s;
    for (int x : S) {
        if (x < 1 || x > n / 2) {
            std::ostringstream os;
            os << "circulant element " << x << " outside 1.." << n / 2;
            throw Error(os.str());
        }
        s.insert(x);
    }
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int x : s) {
            int j = (i + x) % n;
            if (i < j || (x * 2 != n && j < i)) es.push_back({std::min(i, j), std::max(i, j)});
        }
    std::vector<int> sorted(s.begin(), s.end());
    std::vector<std::string> ignore;
    return make_graph(n, es, &ignore).with_label("circulant(" + std::to_string(n) + ";" + describe_set(sorted) + ")");
}

Graph complete_graph(int n) {
    if (n < 1) throw Error("complete graph needs n >= 1");
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return make_graph(n, es).with_label("complete(" + std::to_string(n) + ")");
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw Error("complete bipartite needs both sides nonempty");
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return make_graph(a + b, es).with_label("complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
    return make_graph(n, es).with_label("cycle(" + std::to_string(n) + ")");
}

Graph path_graph(int p) {
    if (p < 1) throw Error("path needs at least one edge");
    std::vector<Edge> es;
    for (int i = 0; i < p; ++i) es.push_back({i, i + 1});
    return make_graph(p + 1, es).with_label("path(" + std::to_string(p) + ")");
}

Graph petersen_graph() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({5 + i, 5 + (i + 2) % 5});
    }
    for (auto& e : es)
        if (e.u > e.v) std::swap(e.u, e.v);
    return make_graph(10, es).with_label("petersen");
}

Graph hypercube_graph(int d) {
    if (d < 1 || d > 12) throw Error("cube dimension must be in 1..12");
    int n = 1 << d;
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b) {
            int v = u ^ (1 << b);
            if (u < v) es.push_back({u, v});
        }
    return make_graph(n, es).with_label("cube(" + std::to_string(d) + ")");
}

Graph cocktail_party(int m) {
    if (m < 2) throw Error("cocktail party needs m >= 2");
    std::vector<Edge> es;
    for (int u = 0; u < 2 * m; ++u)
        for (int v = u + 1; v < 2 * m; ++v)
            if (v != u + m) es.push_back({u, v});
    return make_graph(2 * m, es).with_label("cocktail(" + std::to_string(m) + ")");
}

Graph prism_graph(int m) {
    if (m < 3) throw Error("prism needs m >= 3");
    return cartesian_product(cycle_graph(m), path_graph(1)).with_label("prism(" + std::to_string(m) + ")");
}

Graph antiprism_graph(int m) {
    if (m < 3) throw Error("antiprism needs m >= 3");
    return circulant(2 * m, {1, 2}).with_label("antiprism(" + std::to_string(m) + ")");
}

Graph domino_graph(int p) {
    return cartesian_product(path_graph(p), path_graph(1)).with_label("domino(" + std::to_string(p) + ")");
}

Graph marc_antonio(int n) {
    if (n < 1) throw Error("marc_antonio needs n >= 1");
    int q = 2 * n + 3;
    auto idx = [&](int x, int y) { return 2 * (((x % q) + q) % q) + (((y % 2) + 2) % 2); };
    std::set<std::pair<int, int>> es;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < 2; ++y) {
            int a = idx(x, y);
            int nb[4] = {idx(x + y + 1, y), idx(x + y, y + 1), idx(x - y - 1, y), idx(x + y - 1, y + 1)};
            for (int b : nb) {
                if (a == b) throw Error("marc_antonio rule produced a self-loop");
                es.insert({std::min(a, b), std::max(a, b)});
            }
        }
    std::vector<Edge> list;
    for (auto [u, v] : es) list.push_back({u, v});
    Graph g = make_graph(2 * q, list);
    if (g.regular_degree() != 4) {
        std::ostringstream os;
        os << "marc_antonio(" << n << ") adjacency rule is not 4-regular (min degree " << g.min_degree()
           << ", max degree " << g.max_degree() << ")";
        throw Error(os.str());
    }
    return g.with_label("marc_antonio(" + std::to_string(n) + ")");
}

Graph klee_stacked(int d, int n) {
    auto c = geometry::cyclic_polytope(d, n);
    Graph base = skeleton_graph(c);
    std::vector<Edge> es = base.edges();
    int next = base.order();
    for (const auto& f : c.facets) {
        for (int v : f.vertices) es.push_back({v, next});
        ++next;
    }
    return make_graph(next, es).with_label("klee_stacked(" + std::to_string(d) + "," + std::to_string(n) + ")");
}

Graph davidsstar_graph(int n) {
    return skeleton_graph(geometry::davidsstar(n)).with_label("davidsstar(" + std::to_string(n) + ")");
}

Graph davidsstar_starred(int n) {
    // outer 2n-gon vertices are 0..2n-1 in the construction
    Graph g = skeleton_graph(geometry::davidsstar(n));
    for (int k = 0; k < 2 * n; ++k) g = star_clique(g, k);
    return g.with_label("davidsstar_starred(" + std::to_string(n) + ")");
}

namespace {

void need(const std::vector<int>& p, std::size_t k, const std::string& name) {
    if (p.size() != k) {
        std::ostringstream os;
        os << name << " takes " << k << " parameter" << (k == 1 ? "" : "s") << ", got " << p.size();
        throw Error(os.str());
    }
}

}  // namespace

std::vector<std::string> named_graph_families() {
    return {"complete", "complete_bipartite", "cycle", "path", "petersen", "cube", "octahedron", "cocktail",
            "prism", "antiprism", "domino", "marc_antonio", "klee_stacked", "davidsstar", "davidsstar_starred"};
}

Graph named_graph(const std::string& name, const std::vector<int>& p) {
    if (name == "complete") return need(p, 1, name), complete_graph(p[0]);
    if (name == "complete_bipartite") return need(p, 2, name), complete_bipartite(p[0], p[1]);
    if (name == "cycle") return need(p, 1, name), cycle_graph(p[0]);
    if (name == "path") return need(p, 1, name), path_graph(p[0]);
    if (name == "petersen") return need(p, 0, name), petersen_graph();
    if (name == "cube") return need(p, 1, name), hypercube_graph(p[0]);
    if (name == "octahedron") return need(p, 0, name), cocktail_party(3).with_label("octahedron");
    if (name == "cocktail") return need(p, 1, name), cocktail_party(p[0]);
    if (name == "prism") return need(p, 1, name), prism_graph(p[0]);
    if (name == "antiprism") return need(p, 1, name), antiprism_graph(p[0]);
    if (name == "domino") return need(p, 1, name), domino_graph(p[0]);
    if (name == "marc_antonio") return need(p, 1, name), marc_antonio(p[0]);
    if (name == "klee_stacked") return need(p, 2, name), klee_stacked(p[0], p[1]);
    if (name == "davidsstar") {
        need(p, 1, name);
        if (p[0] < 3) throw Error("davidsstar needs n >= 3");
        return davidsstar_graph(p[0]);
    }
    if (name == "davidsstar_starred") {
        need(p, 1, name);
        if (p[0] < 3) throw Error("davidsstar needs n >= 3");
        return davidsstar_starred(p[0]);
    }
    throw Error("unknown graph family '" + name + "'");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty()) throw Error("cartesian product of an empty graph");
    int nh = h.order();
    std::vector<Edge> es;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < nh; ++b) {
            int v = a * nh + b;
            for (int c : h.neighbors(b))
                if (b < c) es.push_back({v, a * nh + c});
            for (int c : g.neighbors(a))
                if (a < c) es.push_back({v, c * nh + b});
        }
    std::string gl = g.label().empty() ? "G" : g.label();
    std::string hl = h.label().empty() ? "H" : h.label();
    return make_graph(g.order() * nh, es).with_label(gl + " x " + hl);
}

Graph cartesian_product(const std::vector<Graph>& factors) {
    if (factors.empty()) throw Error("empty factor list");
    Graph g = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) g = cartesian_product(g, factors[i]);
    return g;
}

Graph star_clique(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw Error("star_clique: vertex out of range");
    const auto& nb = g.neighbors(v);
    int d = static_cast<int>(nb.size());
    if (d == 0) throw Error("star_clique: isolated vertex");
    int n = g.order();
    std::vector<int> clique(static_cast<std::size_t>(d));
    clique[0] = v;
    for (int i = 1; i < d; ++i) clique[i] = n + i - 1;
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (e.u != v && e.v != v) es.push_back(e);
    for (int i = 0; i < d; ++i) {
        es.push_back({std::min(clique[i], nb[i]), std::max(clique[i], nb[i])});
        for (int j = i + 1; j < d; ++j) es.push_back({std::min(clique[i], clique[j]), std::max(clique[i], clique[j])});
    }
    std::string l = g.label().empty() ? "G" : g.label();
    return make_graph(n + d - 1, es).with_label("star_clique(" + l + "," + std::to_string(v) + ")");
}

Graph graph_join(const Graph& g, const Graph& h) {
    int ng = g.order();
    std::vector<Edge> es = g.edges();
    for (const auto& e : h.edges()) es.push_back({e.u + ng, e.v + ng});
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < h.order(); ++b) es.push_back({a, ng + b});
    return make_graph(ng + h.order(), es);
}

}  // namespace polygraph
