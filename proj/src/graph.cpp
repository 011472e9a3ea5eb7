#include "polygraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polygraph {

Graph make_graph(int n, std::span<const Edge> edges, std::vector<std::string>* warnings) {
    if (n < 0) throw Error("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.rows_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (const auto& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            std::ostringstream os;
            os << "edge (" << e.u << "," << e.v << ") out of range for n=" << n;
            throw Error(os.str());
        }
        if (e.u == e.v) {
            std::ostringstream os;
            os << "self-loop at vertex " << e.u;
            throw Error(os.str());
        }
        if (g.rows_[e.u].test(e.v)) {
            if (warnings) {
                std::ostringstream os;
                os << "duplicate edge (" << e.u << "," << e.v << ") dropped";
                warnings->push_back(os.str());
            }
            continue;
        }
        g.rows_[e.u].set(e.v);
        g.rows_[e.v].set(e.u);
        ++g.m_;
    }
    for (int v = 0; v < n; ++v) g.adj_[v] = g.rows_[v].to_vector();
    return g;
}

Graph make_graph(int n, std::initializer_list<Edge> edges) {
    return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return std::nullopt;
    int d = degree(0);
    for (int v = 1; v < n_; ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

Graph Graph::with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (int w : adj_[vs[i]])
            if (pos[w] > static_cast<int>(i)) es.push_back({static_cast<int>(i), pos[w]});
    return make_graph(static_cast<int>(vs.size()), es);
}

Graph Graph::induced(const Bitset& vs) const {
    auto list = vs.to_vector();
    return induced(std::span<const Vertex>(list));
}

Graph Graph::complement() const {
    std::vector<Edge> es;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adjacent(u, v)) es.push_back({u, v});
    return make_graph(n_, es);
}

std::vector<std::vector<Vertex>> components(const Graph& g, const Bitset& removed) {
    int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || (removed.size() && removed.test(s))) continue;
        out.emplace_back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w] && !(removed.size() && removed.test(w))) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

int count_components(const Graph& g, const Bitset& removed) {
    // bit-parallel flood fill
    Bitset left(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        if (!(removed.size() && removed.test(v))) left.set(v);
    int count = 0;
    while (left.any()) {
        ++count;
        Bitset frontier(left.size());
        frontier.set(left.first());
        Bitset comp = frontier;
        while (frontier.any()) {
            Bitset next(left.size());
            frontier.for_each([&](std::size_t u) { next |= g.row(static_cast<int>(u)); });
            next &= left;
            next.subtract(comp);
            comp |= next;
            frontier = std::move(next);
        }
        left.subtract(comp);
    }
    return count;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return count_components(g, Bitset()) == 1;
}

}  // namespace polygraph
