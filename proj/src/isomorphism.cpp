#include <algorithm>
#include <map>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "polygraph/algorithms.hpp"

namespace polygraph {

namespace {

// Colour refinement on the disjoint union of g and h (h vertices offset by n).
struct JointRefiner {
    const Graph& g;
    const Graph& h;
    int n;

    const std::vector<Vertex>& nb(int v) const { return v < n ? g.neighbors(v) : h.neighbors(v - n); }

    void refine(std::vector<int>& col) const {
        int classes = static_cast<int>(std::set<int>(col.begin(), col.end()).size());
        while (true) {
            std::vector<std::pair<std::vector<int>, int>> sig(col.size());
            for (std::size_t v = 0; v < col.size(); ++v) {
                std::vector<int> s;
                s.push_back(col[v]);
                int off = v < static_cast<std::size_t>(n) ? 0 : n;
                for (int w : nb(static_cast<int>(v))) s.push_back(col[w + off]);
                std::sort(s.begin() + 1, s.end());
                sig[v] = {std::move(s), static_cast<int>(v)};
            }
            std::vector<int> order(col.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a].first < sig[b].first; });
            std::vector<int> next(col.size());
            int id = -1;
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (i == 0 || sig[order[i]].first != sig[order[i - 1]].first) ++id;
                next[order[i]] = id;
            }
            int now = id + 1;
            col = std::move(next);
            if (now == classes) return;
            classes = now;
        }
    }

    bool balanced(const std::vector<int>& col) const {
        std::map<int, int> count;
        for (int v = 0; v < n; ++v) ++count[col[v]];
        for (int v = n; v < 2 * n; ++v) --count[col[v]];
        for (auto& [c, k] : count)
            if (k != 0) return false;
        return true;
    }

    std::optional<std::vector<Vertex>> search(std::vector<int> col) const {
        refine(col);
        if (!balanced(col)) return std::nullopt;
        std::map<int, std::vector<int>> gclass, hclass;
        for (int v = 0; v < n; ++v) gclass[col[v]].push_back(v);
        for (int v = n; v < 2 * n; ++v) hclass[col[v]].push_back(v - n);
        const std::vector<int>* pick = nullptr;
        int pick_color = -1;
        for (auto& [c, vs] : gclass)
            if (vs.size() > 1 && (!pick || vs.size() < pick->size())) {
                pick = &vs;
                pick_color = c;
            }
        if (!pick) {
            std::vector<Vertex> map(static_cast<std::size_t>(n));
            for (auto& [c, vs] : gclass) map[vs[0]] = hclass[c][0];
            for (const auto& e : g.edges())
                if (!h.adjacent(map[e.u], map[e.v])) return std::nullopt;
            return map;
        }
        int gv = (*pick)[0];
        int fresh = 2 * n + 1;
        for (int hw : hclass[pick_color]) {
            std::vector<int> c2 = col;
            c2[gv] = fresh;
            c2[hw + n] = fresh;
            if (auto r = search(std::move(c2))) return r;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g, const Graph& h, const std::vector<int>* gcolor,
                                                  const std::vector<int>* hcolor) {
    int n = g.order();
    if (n != h.order() || g.size() != h.size()) return std::nullopt;
    if (n == 0) return std::vector<Vertex>{};
    std::vector<int> col(static_cast<std::size_t>(2 * n));
    // initial colours: given colour, degree, triangle count
    std::map<std::tuple<int, int, int>, int> ids;
    std::vector<std::tuple<int, int, int>> key(col.size());
    for (int v = 0; v < n; ++v) {
        key[v] = {gcolor ? (*gcolor)[v] : 0, g.degree(v), count_triangles_at(g, v)};
        key[v + n] = {hcolor ? (*hcolor)[v] : 0, h.degree(v), count_triangles_at(h, v)};
    }
    for (auto& k : key) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t v = 0; v < col.size(); ++v) col[v] = ids[key[v]];
    JointRefiner jr{g, h, n};
    auto r = jr.search(std::move(col));
    if (r && gcolor && hcolor)
        for (int v = 0; v < n; ++v)
            if ((*gcolor)[v] != (*hcolor)[(*r)[v]]) return std::nullopt;
    return r;
}

std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& pattern) {
    int k = pattern.order();
    int n = g.order();
    if (k > n) return std::nullopt;
    if (k == 0) return std::vector<Vertex>{};
    // placement order: greedy by connections to already placed vertices
    std::vector<int> order;
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    while (static_cast<int>(order.size()) < k) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int p = 0; p < k; ++p) {
            if (placed[p]) continue;
            int links = 0;
            for (int q : pattern.neighbors(p)) links += placed[q];
            if (links > best_links || (links == best_links && pattern.degree(p) > best_deg)) {
                best = p;
                best_links = links;
                best_deg = pattern.degree(p);
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<Vertex> map(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<int> pos(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) pos[order[i]] = i;

    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == k) return true;
        int p = order[i];
        int anchor = -1;
        for (int q : pattern.neighbors(p))
            if (pos[q] < i) {
                anchor = q;
                break;
            }
        std::vector<Vertex> all;
        const std::vector<Vertex>* cands;
        if (anchor >= 0) {
            cands = &g.neighbors(map[anchor]);
        } else {
            all.resize(static_cast<std::size_t>(n));
            std::iota(all.begin(), all.end(), 0);
            cands = &all;
        }
        for (Vertex x : *cands) {
            if (used[x] || g.degree(x) < pattern.degree(p)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                int q = order[j];
                ok = pattern.adjacent(p, q) == g.adjacent(x, map[q]);
            }
            if (!ok) continue;
            map[p] = x;
            used[x] = 1;
            if (place(i + 1)) return true;
            used[x] = 0;
            map[p] = -1;
        }
        return false;
    };
    if (place(0)) return map;
    return std::nullopt;
}

}  // namespace polygraph
