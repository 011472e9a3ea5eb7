#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "polygraph/algorithms.hpp"
#include "polygraph/generators.hpp"

namespace polygraph {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Factors from a grouping of edge classes; false when the product audit fails.
bool build_factors(const Graph& g, const std::vector<Edge>& es, const std::vector<int>& cls,
                   const std::vector<int>& group, int k, std::vector<Graph>& factors,
                   std::vector<std::vector<int>>& coords) {
    int n = g.order();
    int m = static_cast<int>(es.size());
    coords.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
    factors.clear();
    for (int c = 0; c < k; ++c) {
        // project: components of g without group-c edges
        UnionFind comp(n);
        for (int i = 0; i < m; ++i)
            if (group[cls[i]] != c) comp.unite(es[i].u, es[i].v);
        std::map<int, int> idx;
        for (int v = 0; v < n; ++v) idx.emplace(comp.find(v), static_cast<int>(idx.size()));
        for (int v = 0; v < n; ++v) coords[v][c] = idx[comp.find(v)];
        std::vector<Edge> fe;
        for (int i = 0; i < m; ++i)
            if (group[cls[i]] == c) {
                int a = idx[comp.find(es[i].u)], b = idx[comp.find(es[i].v)];
                if (a == b) return false;
                fe.push_back({std::min(a, b), std::max(a, b)});
            }
        std::vector<std::string> dup;
        factors.push_back(make_graph(static_cast<int>(idx.size()), fe, &dup));
    }
    // audit: coordinate map is a bijection onto the product and preserves edges
    std::size_t total = 1;
    for (auto& h : factors) total *= static_cast<std::size_t>(h.order());
    if (total != static_cast<std::size_t>(n)) return false;
    std::map<std::vector<int>, int> back;
    for (int v = 0; v < n; ++v)
        if (!back.emplace(coords[v], v).second) return false;
    std::size_t expected_edges = 0;
    for (std::size_t c = 0; c < factors.size(); ++c)
        expected_edges += factors[c].size() * (total / static_cast<std::size_t>(factors[c].order()));
    if (expected_edges != g.size()) return false;
    for (const auto& e : es) {
        int diff = 0, at = -1;
        for (int c = 0; c < k; ++c)
            if (coords[e.u][c] != coords[e.v][c]) ++diff, at = c;
        if (diff != 1 || !factors[at].adjacent(coords[e.u][at], coords[e.v][at])) return false;
    }
    return true;
}

}  // namespace

std::optional<Factorization> prime_factorization(const Graph& g) {
    int n = g.order();
    if (n == 0 || !is_connected(g)) return std::nullopt;
    auto es = g.edges();
    int m = static_cast<int>(es.size());
    std::map<std::pair<int, int>, int> eid;
    for (int i = 0; i < m; ++i) eid[{es[i].u, es[i].v}] = i;
    auto id = [&](int a, int b) { return eid.at({std::min(a, b), std::max(a, b)}); };

    UnionFind uf(m);
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], w = nb[j];
                // common neighbours of u and w other than v
                std::vector<int> common;
                for (int x : g.neighbors(u))
                    if (x != v && g.adjacent(x, w)) common.push_back(x);
                bool square = common.size() == 1 && !g.adjacent(u, w) && !g.adjacent(v, common[0]);
                if (!square) {
                    uf.unite(id(v, u), id(v, w));
                } else {
                    int x = common[0];
                    uf.unite(id(v, u), id(w, x));
                    uf.unite(id(v, w), id(u, x));
                }
            }
    }
    std::map<int, int> class_of_root;
    std::vector<int> cls(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int r = uf.find(i);
        auto it = class_of_root.emplace(r, static_cast<int>(class_of_root.size())).first;
        cls[i] = it->second;
    }
    int k = static_cast<int>(class_of_root.size());
    std::vector<int> group(static_cast<std::size_t>(k));
    std::iota(group.begin(), group.end(), 0);
    std::vector<Graph> factors;
    Factorization f;
    if (!build_factors(g, es, cls, group, k, factors, f.coords)) {
        // the closure can split a prime factor; merge classes into the
        // smallest groups that still split off as a factor
        if (k > 20) return std::nullopt;
        std::vector<unsigned> primes;
        unsigned full = (1U << k) - 1;
        std::vector<unsigned> masks;
        for (unsigned mask = 1; mask < full; ++mask) masks.push_back(mask);
        std::stable_sort(masks.begin(), masks.end(),
                         [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
        unsigned covered = 0;
        for (unsigned mask : masks) {
            if (mask & covered) continue;
            std::vector<int> two(static_cast<std::size_t>(k));
            for (int c = 0; c < k; ++c) two[c] = (mask >> c) & 1U;
            std::vector<Graph> fs;
            std::vector<std::vector<int>> cs;
            if (build_factors(g, es, cls, two, 2, fs, cs)) {
                primes.push_back(mask);
                covered |= mask;
            }
        }
        if (covered != full) primes.push_back(full & ~covered);
        if (primes.size() < 2) {
            factors = {g};
            f.coords.assign(static_cast<std::size_t>(n), {0});
            for (int v = 0; v < n; ++v) f.coords[v][0] = v;
            f.factors = factors;
            return f;
        }
        for (std::size_t p = 0; p < primes.size(); ++p)
            for (int c = 0; c < k; ++c)
                if ((primes[p] >> c) & 1U) group[c] = static_cast<int>(p);
        k = static_cast<int>(primes.size());
        factors.clear();
        if (!build_factors(g, es, cls, group, k, factors, f.coords)) return std::nullopt;
    }
    // largest factor first, stable on discovery order
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return factors[a].order() > factors[b].order(); });
    for (int c : order) f.factors.push_back(factors[c]);
    for (auto& row : f.coords) {
        std::vector<int> r2;
        for (int c : order) r2.push_back(row[c]);
        row = r2;
    }
    return f;
}

}  // namespace polygraph
