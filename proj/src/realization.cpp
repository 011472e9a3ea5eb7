#include <algorithm>
#include <map>

#include "polygraph/algorithms.hpp"
#include "polygraph/geometry.hpp"
#include "polygraph/obstructions.hpp"

namespace polygraph::geometry {

namespace {

// solves A x = b (A square, nonsingular) by Gauss-Jordan elimination
std::vector<Rat> solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw Error("steinitz_realization: singular Tutte system");
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rat f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

// Realization when g has a triangular face.
Polytope lift_tutte(const Graph& g, const std::vector<std::vector<Vertex>>& faces, std::size_t outer) {
    int n = g.order();
    const auto& tri = faces[outer];
    std::vector<std::array<Rat, 2>> pos(static_cast<std::size_t>(n));
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    pos[tri[0]] = {Rat(0), Rat(0)};
    pos[tri[1]] = {Rat(1), Rat(0)};
    pos[tri[2]] = {Rat(0), Rat(1)};
    std::vector<int> inner;
    for (int v = 0; v < n; ++v)
        if (std::find(tri.begin(), tri.end(), v) == tri.end()) {
            slot[v] = static_cast<int>(inner.size());
            inner.push_back(v);
        }
    if (!inner.empty()) {
        std::size_t m = inner.size();
        for (int axis = 0; axis < 2; ++axis) {
            std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
            std::vector<Rat> b(m, Rat(0));
            for (std::size_t i = 0; i < m; ++i) {
                int v = inner[i];
                a[i][i] = g.degree(v);
                for (int u : g.neighbors(v)) {
                    if (slot[u] >= 0) a[i][slot[u]] -= 1;
                    else b[i] += pos[u][axis];
                }
            }
            auto x = solve(a, b);
            for (std::size_t i = 0; i < m; ++i) pos[inner[i]][axis] = x[i];
        }
    }
    // affine height function per face, propagated across interior edges
    std::map<std::pair<int, int>, std::size_t> face_of_dart;
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].size(); ++i)
            face_of_dart[{faces[f][i], faces[f][(i + 1) % faces[f].size()]}] = f;
    using Lin = std::array<Rat, 3>;  // z = l0 x + l1 y + l2
    std::vector<std::optional<Lin>> lin(faces.size());
    std::size_t start = outer == 0 ? 1 : 0;
    lin[start] = Lin{Rat(0), Rat(0), Rat(0)};
    std::vector<std::size_t> queue{start};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t f = queue[qi];
        const auto& c = faces[f];
        for (std::size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            std::size_t h = face_of_dart.at({b, a});
            if (h == outer || lin[h]) continue;
            // homogeneous cross product of (pa,1) and (pb,1)
            Lin x{pos[a][1] - pos[b][1], pos[b][0] - pos[a][0], pos[a][0] * pos[b][1] - pos[a][1] * pos[b][0]};
            Lin l = *lin[f];
            for (int k = 0; k < 3; ++k) l[k] += x[k];
            lin[h] = l;
            queue.push_back(h);
        }
    }
    std::vector<Vec> pts(static_cast<std::size_t>(n));
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (f == outer) continue;
        if (!lin[f]) throw Error("steinitz_realization: face graph disconnected");
        for (int v : faces[f])
            if (!done[v]) {
                const Lin& l = *lin[f];
                pts[v] = {pos[v][0], pos[v][1], l[0] * pos[v][0] + l[1] * pos[v][1] + l[2]};
                done[v] = 1;
            }
    }
    PointConfig cfg;
    cfg.dim = 3;
    cfg.points = pts;
    Polytope p = convex_hull_facets(cfg, {static_cast<std::size_t>(std::max(n, 64))});
    p.name = "steinitz";
    return p;
}

std::optional<std::size_t> triangle_face(const std::vector<std::vector<Vertex>>& faces) {
    for (std::size_t f = 0; f < faces.size(); ++f)
        if (faces[f].size() == 3) return f;
    return std::nullopt;
}

// faces in a consistent orientation (as traced from the rotation system)
std::vector<std::vector<Vertex>> oriented_faces(const Graph& g) {
    auto pr = is_planar(g);
    return embedding_faces(g, pr.rotation);
}

}  // namespace

Polytope steinitz_realization(const Graph& g) {
    auto st = obstructions::steinitz_decide(g);
    if (!st.yes) throw Error("steinitz_realization: " + st.reason);
    auto faces = oriented_faces(g);
    if (auto t = triangle_face(faces)) {
        Polytope p = lift_tutte(g, faces, *t);
        // hull vertex order follows the input order, so vertex i is graph vertex i
        return p;
    }
    // dual graph: faces adjacent across edges
    std::map<std::pair<int, int>, int> face_of_dart;
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (std::size_t i = 0; i < faces[f].size(); ++i)
            face_of_dart[{faces[f][i], faces[f][(i + 1) % faces[f].size()]}] = static_cast<int>(f);
    std::vector<Edge> de;
    for (const auto& e : g.edges()) {
        int a = face_of_dart.at({e.u, e.v}), b = face_of_dart.at({e.v, e.u});
        de.push_back({std::min(a, b), std::max(a, b)});
    }
    Graph dual = make_graph(static_cast<int>(faces.size()), de);
    auto dfaces = oriented_faces(dual);
    auto t = triangle_face(dfaces);
    if (!t) throw Error("steinitz_realization: neither the graph nor its dual has a triangle");
    Polytope q = lift_tutte(dual, dfaces, *t);
    // polar around the vertex centroid; facet of q containing the dual
    // vertices of the faces around v becomes vertex v
    Vec c(3, Rat(0));
    for (const auto& x : q.config.points)
        for (int i = 0; i < 3; ++i) c[i] += x[i];
    for (auto& x : c) x /= q.vertex_count();
    std::vector<Vec> pts(static_cast<std::size_t>(g.order()));
    for (const auto& F : q.facets) {
        // the facet's dual vertices are the faces around one vertex of g
        std::vector<int> around(F.vertices.begin(), F.vertices.end());
        int owner = -1;
        for (int v = 0; v < g.order() && owner < 0; ++v) {
            std::vector<int> fs;
            for (int u : g.neighbors(v)) fs.push_back(face_of_dart.at({v, u}));
            std::sort(fs.begin(), fs.end());
            std::vector<int> src;
            for (int x : around) src.push_back(q.source[x]);
            std::sort(src.begin(), src.end());
            if (fs == src) owner = v;
        }
        if (owner < 0) throw Error("steinitz_realization: polar facet does not match a vertex");
        Rat off = F.plane.offset;
        for (int i = 0; i < 3; ++i) off -= F.plane.normal[i] * c[i];
        Vec v(3);
        for (int i = 0; i < 3; ++i) v[i] = F.plane.normal[i] / off;
        pts[owner] = v;
    }
    PointConfig cfg;
    cfg.dim = 3;
    cfg.points = pts;
    Polytope p = convex_hull_facets(cfg, {static_cast<std::size_t>(std::max(g.order(), 64))});
    p.name = "steinitz";
    return p;
}

}  // namespace polygraph::geometry
