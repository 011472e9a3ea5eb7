#include <algorithm>
#include <queue>

#include "polygraph/algorithms.hpp"

namespace polygraph {

namespace {

// unit-capacity flow on the vertex-split digraph
struct SplitFlow {
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit SplitFlow(int nodes) : out(static_cast<std::size_t>(nodes)) {}

    void add(int a, int b, int cap) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, cap});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    }

    bool augment(int s, int t, std::vector<int>& parent_arc) {
        std::fill(parent_arc.begin(), parent_arc.end(), -1);
        std::queue<int> q;
        q.push(s);
        parent_arc[s] = -2;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int a : out[x]) {
                int y = arcs[a].to;
                if (arcs[a].cap > 0 && parent_arc[y] == -1) {
                    parent_arc[y] = a;
                    if (y == t) {
                        for (int z = t; z != s;) {
                            int pa = parent_arc[z];
                            arcs[pa].cap -= 1;
                            arcs[pa ^ 1].cap += 1;
                            z = arcs[pa ^ 1].to;
                        }
                        return true;
                    }
                    q.push(y);
                }
            }
        }
        return false;
    }
};

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit, std::vector<Vertex>* cut) {
    int n = g.order();
    const int big = n + 1;
    SplitFlow f(2 * n);
    for (int v = 0; v < n; ++v) f.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (const auto& e : g.edges()) {
        f.add(2 * e.u + 1, 2 * e.v, 1);
        f.add(2 * e.v + 1, 2 * e.u, 1);
    }
    int src = 2 * s + 1;
    int snk = 2 * t;
    std::vector<int> parent(static_cast<std::size_t>(2 * n));
    int flow = 0;
    while (flow < limit && f.augment(src, snk, parent)) ++flow;
    if (cut && flow < limit) {
        // reachable set of the final (failed) search
        std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
        std::vector<int> stack{src};
        seen[src] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int a : f.out[x]) {
                int y = f.arcs[a].to;
                if (f.arcs[a].cap > 0 && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        cut->clear();
        for (int v = 0; v < n; ++v)
            if (v != s && v != t && seen[2 * v] && !seen[2 * v + 1]) cut->push_back(v);
    }
    return flow;
}

GraphMetrics vertex_connectivity(const Graph& g) {
    int n = g.order();
    if (n < 2) throw Error("vertex connectivity needs at least 2 vertices");
    GraphMetrics m;
    m.delta = g.min_degree();
    m.regular_degree = g.regular_degree();
    if (is_complete(g)) {
        m.kappa = n - 1;
        return m;
    }
    if (!is_connected(g)) {
        m.kappa = 0;
        return m;
    }
    int best = m.delta;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == best && best < n - 1) {
            m.min_cut = g.neighbors(v);
            break;
        }
    for (int i = 0; i < n && i <= best; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            std::vector<Vertex> cut;
            int f = local_connectivity(g, i, j, best, &cut);
            if (f < best) {
                best = f;
                m.min_cut = cut;
            }
        }
    m.kappa = best;
    return m;
}

bool is_complete(const Graph& g) {
    return g.size() == static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.order() - 1) / 2;
}

bool is_cycle(const Graph& g) {
    return g.order() >= 3 && g.regular_degree() == 2 && is_connected(g);
}

std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
    int n = g.order();
    if (n < 2 || !is_connected(g)) return std::nullopt;
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (side[w] == -1) {
                side[w] = 1 - side[u];
                stack.push_back(w);
            } else if (side[w] == side[u]) {
                return std::nullopt;
            }
        }
    }
    int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
    int b = n - a;
    if (g.size() != static_cast<std::size_t>(a) * static_cast<std::size_t>(b)) return std::nullopt;
    return std::make_pair(std::min(a, b), std::max(a, b));
}

int count_triangles_at(const Graph& g, Vertex v) {
    int c = 0;
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.adjacent(nb[i], nb[j])) ++c;
    return c;
}

}  // namespace polygraph
