#include <algorithm>

#include "polygraph/algorithms.hpp"

namespace polygraph {

std::vector<Vertex> canonical_cycle(std::vector<Vertex> c) {
    if (c.empty()) return c;
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
    return c;
}

bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& c) {
    std::size_t k = c.size();
    if (k < 3) return false;
    std::vector<Vertex> s = c;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

namespace {

struct CycleSearch {
    const Graph& g;
    int max_len;
    std::size_t limit;
    bool truncated = false;
    std::vector<Vertex> path;
    Bitset on_path;
    // vertices adjacent to some interior path vertex (excluding the last)
    std::vector<int> blocked;
    std::vector<std::vector<Vertex>> out;

    CycleSearch(const Graph& gr, int len, std::size_t lim)
        : g(gr), max_len(len), limit(lim), on_path(static_cast<std::size_t>(gr.order())),
          blocked(static_cast<std::size_t>(gr.order()), 0) {}

    void extend() {
        if (out.size() >= limit) {
            truncated = true;
            return;
        }
        Vertex s = path.front();
        Vertex last = path.back();
        int len = static_cast<int>(path.size());
        for (Vertex w : g.neighbors(last)) {
            if (w <= s || on_path.test(w) || blocked[w]) continue;
            bool closes = len >= 2 && g.adjacent(w, s);
            if (closes) {
                // w adjacent to s: only usable as the closing vertex
                if (len >= 2 && len + 1 <= max_len && path[1] < w) {
                    path.push_back(w);
                    out.push_back(path);
                    path.pop_back();
                }
                continue;
            }
            if (len + 1 >= max_len) continue;
            // last becomes interior; neighbours of s are handled by the closes test
            if (len > 1)
                for (Vertex x : g.neighbors(last)) ++blocked[x];
            path.push_back(w);
            on_path.set(w);
            extend();
            on_path.reset(w);
            path.pop_back();
            if (len > 1)
                for (Vertex x : g.neighbors(last)) --blocked[x];
            if (truncated) return;
        }
    }
};

}  // namespace

std::vector<std::vector<Vertex>> induced_cycles_upto(const Graph& g, int max_len, std::size_t limit, bool* truncated) {
    CycleSearch cs(g, max_len, limit);
    for (Vertex s = 0; s < g.order() && !cs.truncated; ++s) {
        cs.path = {s};
        cs.on_path.set(s);
        cs.extend();
        cs.on_path.reset(s);
    }
    if (truncated) *truncated = cs.truncated;
    for (auto& c : cs.out) c = canonical_cycle(c);
    std::sort(cs.out.begin(), cs.out.end());
    return cs.out;
}

std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, int max_len) {
    if (max_len < 3 || max_len > 6) throw Error("induced_cycles: max_len must be in 3..6");
    return induced_cycles_upto(g, max_len, static_cast<std::size_t>(-1), nullptr);
}

}  // namespace polygraph
