#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "polygraph/algorithms.hpp"
#include "polygraph/generators.hpp"
#include "polygraph/geometry.hpp"

namespace polygraph::geometry {

namespace {

Polytope hull_of(std::vector<Vec> pts, const std::string& name, std::size_t cap = 64) {
    PointConfig cfg;
    cfg.dim = static_cast<int>(pts[0].size());
    cfg.points = std::move(pts);
    Polytope p = convex_hull_facets(cfg, {cap});
    p.name = name;
    return p;
}

Vec centroid(const Polytope& p) {
    Vec c(static_cast<std::size_t>(p.config.dim), Rat(0));
    for (const auto& x : p.config.points)
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += x[i];
    for (auto& x : c) x /= p.vertex_count();
    return c;
}

// rational approximation of x with denominator 2^20
Rat approx(double x) {
    const long den = 1L << 20;
    Rat r(std::lround(x * static_cast<double>(den)), den);
    r.canonicalize();
    return r;
}

}  // namespace

std::array<Rat, 2> circle_point(int k, int m, const Rat& offset_fraction) {
    // angle in [-pi, pi); use t = tan(theta/2) on the half facing the angle
    double theta = 2.0 * M_PI * (static_cast<double>(k) + offset_fraction.get_d()) / m;
    theta = std::remainder(theta, 2.0 * M_PI);
    bool flip = std::fabs(theta) > M_PI / 2;
    if (flip) theta = theta > 0 ? theta - M_PI : theta + M_PI;
    Rat t = approx(std::tan(theta / 2));
    Rat d = 1 + t * t;
    Rat x = (1 - t * t) / d, y = 2 * t / d;
    if (flip) x = -x, y = -y;
    return {x, y};
}

Polytope segment() {
    return hull_of({{Rat(-1)}, {Rat(1)}}, "segment");
}

Polytope simplex(int d) {
    if (d < 1) throw Error("simplex needs d >= 1");
    std::vector<Vec> pts;
    pts.emplace_back(static_cast<std::size_t>(d), Rat(0));
    for (int i = 0; i < d; ++i) {
        Vec e(static_cast<std::size_t>(d), Rat(0));
        e[i] = 1;
        pts.push_back(e);
    }
    return hull_of(pts, "simplex(" + std::to_string(d) + ")");
}

Polytope cube(int d) {
    if (d < 1 || d > 6) throw Error("cube dimension must be in 1..6");
    std::vector<Vec> pts;
    for (int m = 0; m < (1 << d); ++m) {
        Vec v;
        for (int i = 0; i < d; ++i) v.push_back(Rat((m >> i) & 1));
        pts.push_back(v);
    }
    // products keep this fast in higher dimension
    if (d <= 3) return hull_of(pts, "cube(" + std::to_string(d) + ")");
    Polytope p = segment();
    for (int i = 1; i < d; ++i) p = product_polytope(p, segment());
    p.name = "cube(" + std::to_string(d) + ")";
    return p;
}

Polytope cross_polytope(int d) {
    if (d < 1) throw Error("cross polytope needs d >= 1");
    std::vector<Vec> pts;
    for (int s : {1, -1})
        for (int i = 0; i < d; ++i) {
            Vec e(static_cast<std::size_t>(d), Rat(0));
            e[i] = s;
            pts.push_back(e);
        }
    return hull_of(pts, "cross(" + std::to_string(d) + ")");
}

Polytope cyclic_polytope(int d, int n) {
    if (d < 2 || n <= d) throw Error("cyclic polytope needs n > d >= 2");
    std::vector<Vec> pts;
    for (int t = 1; t <= n; ++t) {
        Vec v;
        Rat x = 1;
        for (int i = 0; i < d; ++i) {
            x *= t;
            v.push_back(x);
        }
        pts.push_back(v);
    }
    return hull_of(pts, "cyclic(" + std::to_string(d) + "," + std::to_string(n) + ")");
}

Polytope polygon(int m) {
    if (m < 3) throw Error("polygon needs m >= 3");
    std::vector<Vec> pts;
    for (int k = 0; k < m; ++k) {
        auto c = circle_point(k, m);
        pts.push_back({c[0], c[1]});
    }
    return hull_of(pts, "polygon(" + std::to_string(m) + ")");
}

Polytope prism(int m) {
    Polytope p = product_polytope(polygon(m), segment());
    p.name = "prism(" + std::to_string(m) + ")";
    return p;
}

Polytope antiprism(int m) {
    if (m < 3) throw Error("antiprism needs m >= 3");
    std::vector<Vec> pts;
    // vertex 2k at height 1, 2k+1 at height -1 rotated by half a step
    for (int k = 0; k < m; ++k) {
        auto a = circle_point(2 * k, 2 * m);
        auto b = circle_point(2 * k + 1, 2 * m);
        pts.push_back({a[0], a[1], Rat(1)});
        pts.push_back({b[0], b[1], Rat(-1)});
    }
    return hull_of(pts, "antiprism(" + std::to_string(m) + ")");
}

Polytope octahedron() {
    Polytope p = cross_polytope(3);
    p.name = "octahedron";
    return p;
}

Polytope named_polytope(const std::string& name, const std::vector<int>& a) {
    auto need = [&](std::size_t k) {
        if (a.size() != k) throw Error(name + " takes " + std::to_string(k) + " parameter(s)");
    };
    if (name == "segment") return need(0), segment();
    if (name == "triangle") return need(0), simplex(2);
    if (name == "square") return need(0), cube(2);
    if (name == "octahedron") return need(0), octahedron();
    if (name == "simplex") return need(1), simplex(a[0]);
    if (name == "cube") return need(1), cube(a[0]);
    if (name == "cross") return need(1), cross_polytope(a[0]);
    if (name == "cyclic") return need(2), cyclic_polytope(a[0], a[1]);
    if (name == "polygon") return need(1), polygon(a[0]);
    if (name == "prism") return need(1), prism(a[0]);
    if (name == "antiprism") return need(1), antiprism(a[0]);
    if (name == "davidsstar") return need(1), davidsstar(a[0]);
    if (name == "klee_stacked") return need(2), klee_stacked_polytope(a[0], a[1]);
    if (name == "prism_octahedron") return need(1), prism_octahedron(a[0]);
    throw Error("unknown polytope '" + name + "'");
}

Polytope product_polytope(const Polytope& p, const Polytope& q) {
    int dp = p.config.dim, dq = q.config.dim;
    int nq = q.vertex_count();
    Polytope r;
    r.dim = p.dim + q.dim;
    r.config.dim = dp + dq;
    for (int a = 0; a < p.vertex_count(); ++a)
        for (int b = 0; b < nq; ++b) {
            Vec v = p.config.points[a];
            v.insert(v.end(), q.config.points[b].begin(), q.config.points[b].end());
            r.config.points.push_back(v);
            r.source.push_back(a * nq + b);
        }
    // facets are F x Q and P x G
    for (const auto& F : p.facets) {
        Facet f;
        for (int a : F.vertices)
            for (int b = 0; b < nq; ++b) f.vertices.push_back(a * nq + b);
        f.plane.normal = F.plane.normal;
        f.plane.normal.resize(static_cast<std::size_t>(dp + dq), Rat(0));
        f.plane.offset = F.plane.offset;
        r.facets.push_back(f);
    }
    for (const auto& G : q.facets) {
        Facet f;
        for (int a = 0; a < p.vertex_count(); ++a)
            for (int b : G.vertices) f.vertices.push_back(a * nq + b);
        std::sort(f.vertices.begin(), f.vertices.end());
        f.plane.normal.assign(static_cast<std::size_t>(dp), Rat(0));
        f.plane.normal.insert(f.plane.normal.end(), G.plane.normal.begin(), G.plane.normal.end());
        f.plane.offset = G.plane.offset;
        r.facets.push_back(f);
    }
    std::sort(r.facets.begin(), r.facets.end(),
              [](const Facet& x, const Facet& y) { return x.vertices < y.vertices; });
    r.name = (p.name.empty() ? "P" : p.name) + " x " + (q.name.empty() ? "Q" : q.name);
    audit_hull(r);
    return r;
}

Polytope join_polytope(const Polytope& p, const Polytope& q) {
    int dp = p.config.dim, dq = q.config.dim;
    std::vector<Vec> pts;
    for (const auto& x : p.config.points) {
        Vec v = x;
        v.resize(static_cast<std::size_t>(dp + dq + 1), Rat(0));
        pts.push_back(v);
    }
    for (const auto& y : q.config.points) {
        Vec v(static_cast<std::size_t>(dp), Rat(0));
        v.insert(v.end(), y.begin(), y.end());
        v.push_back(Rat(1));
        pts.push_back(v);
    }
    return hull_of(pts, "join(" + p.name + "," + q.name + ")");
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.config.dim != q.config.dim) throw Error("minkowski sum needs equal ambient dimension");
    std::map<std::vector<std::string>, Vec> uniq;
    std::vector<Vec> pts;
    for (const auto& x : p.config.points)
        for (const auto& y : q.config.points) {
            Vec v(x.size());
            std::vector<std::string> key;
            for (std::size_t i = 0; i < x.size(); ++i) {
                v[i] = x[i] + y[i];
                key.push_back(v[i].get_str());
            }
            if (uniq.emplace(key, v).second) pts.push_back(v);
        }
    return hull_of(pts, "minkowski(" + p.name + "," + q.name + ")");
}

Polytope pyramid(const Polytope& p, const Rat& apex_height) {
    if (apex_height == 0) throw Error("pyramid apex height must be nonzero");
    std::vector<Vec> pts;
    for (const auto& x : p.config.points) {
        Vec v = x;
        v.push_back(Rat(0));
        pts.push_back(v);
    }
    Vec apex = centroid(p);
    apex.push_back(apex_height);
    pts.push_back(apex);
    return hull_of(pts, "pyramid(" + p.name + ")");
}

SubdivisionComplex regular_subdivision(const PointConfig& support, const Lifting& w) {
    validate(support);
    if (w.heights.size() != support.size()) throw Error("lifting does not cover the support");
    int D = support.dim;
    if (affine_rank(support.points) != D) throw Error("support must be full-dimensional");
    SubdivisionComplex sc;
    sc.support = support;
    PointConfig lifted;
    lifted.dim = D + 1;
    for (std::size_t i = 0; i < support.size(); ++i) {
        Vec v = support.points[i];
        v.push_back(w.heights[i]);
        lifted.points.push_back(v);
    }
    if (affine_rank(lifted.points) == D) {
        Polytope q = convex_hull_facets(support);
        sc.cells.push_back(q.source);
    } else {
        Polytope L = convex_hull_facets(lifted);
        for (const auto& F : L.facets) {
            if (F.plane.normal[D] <= 0) continue;
            std::vector<int> cell;
            for (int v : F.vertices) cell.push_back(L.source[v]);
            std::sort(cell.begin(), cell.end());
            sc.cells.push_back(cell);
        }
    }
    std::sort(sc.cells.begin(), sc.cells.end());
    std::set<int> used;
    std::set<std::pair<int, int>> edges;
    for (const auto& cell : sc.cells) {
        PointConfig cc;
        cc.dim = D;
        for (int i : cell) cc.points.push_back(support.points[i]);
        Polytope cp = convex_hull_facets(cc);
        Graph sk = skeleton_graph(cp);
        for (int v = 0; v < cp.vertex_count(); ++v) used.insert(cell[cp.source[v]]);
        for (const auto& e : sk.edges()) {
            int a = cell[cp.source[e.u]], b = cell[cp.source[e.v]];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    sc.used.assign(used.begin(), used.end());
    std::map<int, int> pos;
    for (std::size_t i = 0; i < sc.used.size(); ++i) pos[sc.used[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [a, b] : edges) es.push_back({pos[a], pos[b]});
    sc.graph = make_graph(static_cast<int>(sc.used.size()), es);
    return sc;
}

Polytope lifted_product(const Polytope& p, const PointConfig& support, const std::vector<Lifting>& liftings) {
    validate(support);
    int np = p.vertex_count();
    if (liftings.size() != 1 && static_cast<int>(liftings.size()) != np)
        throw Error("lifted product needs one lifting or one per vertex of P");
    for (const auto& l : liftings) {
        if (l.heights.size() != support.size()) throw Error("lifting does not cover the support");
        for (const auto& h : l.heights)
            if (h <= 0) throw Error("lifted product needs positive heights");
    }
    Polytope hullq = convex_hull_facets(support);
    if (hullq.had_non_vertices() && p.dim <= 1) throw Error("interior support points need dim P > 1");
    Vec c = centroid(p);
    std::vector<Vec> pts;
    for (int v = 0; v < np; ++v) {
        const Lifting& l = liftings.size() == 1 ? liftings[0] : liftings[v];
        for (std::size_t j = 0; j < support.size(); ++j) {
            Vec x;
            for (int i = 0; i < p.config.dim; ++i) x.push_back(l.heights[j] * (p.config.points[v][i] - c[i]));
            x.insert(x.end(), support.points[j].begin(), support.points[j].end());
            pts.push_back(x);
        }
    }
    return hull_of(pts, "lifted_product(" + p.name + ")");
}

Polytope truncate_vertex(const Polytope& p, int v, Rat t) {
    if (v < 0 || v >= p.vertex_count()) throw Error("truncate: vertex out of range");
    Graph g = skeleton_graph(p);
    if (g.degree(v) != p.dim) throw Error("truncate: vertex " + std::to_string(v) + " is not simple");
    if (t <= 0 || t >= 1) throw Error("truncate: t must lie in (0,1)");
    const auto& nb = g.neighbors(v);
    for (int attempt = 0; attempt < 40; ++attempt, t /= 2) {
        std::vector<Vec> pts = p.config.points;
        auto cut = [&](int w) {
            Vec x(pts[v].size());
            for (std::size_t i = 0; i < x.size(); ++i)
                x[i] = p.config.points[v][i] + t * (p.config.points[w][i] - p.config.points[v][i]);
            return x;
        };
        pts[v] = cut(nb[0]);
        for (std::size_t i = 1; i < nb.size(); ++i) pts.push_back(cut(nb[i]));
        Polytope r = hull_of(pts, "truncate(" + p.name + "," + std::to_string(v) + ")");
        if (!r.had_non_vertices() && r.facets.size() == p.facets.size() + 1) return r;
    }
    throw Error("truncate: no admissible cut found");
}

Polytope davidsstar(int n) {
    if (n < 3) throw Error("davidsstar needs n >= 3");
    std::vector<std::array<Rat, 2>> inner;
    for (int k = 0; k < 2 * n; ++k) {
        auto c = circle_point(k, 2 * n, Rat(1, 2));
        inner.push_back({c[0] / 2, c[1] / 2});
    }
    // outer vertex k sits between inner k-1 and k; building it from their sum keeps
    // the side trapezoids exactly planar
    Rat scale = approx(1.0 / std::cos(M_PI / (2 * n)));
    std::vector<Vec> pts;
    for (int k = 0; k < 2 * n; ++k) {
        const auto& a = inner[(k + 2 * n - 1) % (2 * n)];
        const auto& b = inner[k];
        pts.push_back({scale * (a[0] + b[0]), scale * (a[1] + b[1]), Rat(0)});
    }
    for (int k = 0; k < 2 * n; ++k) pts.push_back({inner[k][0], inner[k][1], Rat(k % 2 == 0 ? 1 : -1)});
    Polytope p = hull_of(pts, "davidsstar(" + std::to_string(n) + ")");
    if (p.had_non_vertices()) throw Error("davidsstar: construction lost vertices");
    return p;
}

Polytope davidsstar_minkowski(int n) {
    if (n < 3) throw Error("davidsstar needs n >= 3");
    std::vector<Vec> even, odd;
    for (int k = 0; k < 2 * n; ++k) {
        auto c = circle_point(k, 2 * n, Rat(1, 2));
        (k % 2 == 0 ? even : odd).push_back({c[0] / 2, c[1] / 2, Rat(0)});
    }
    even.push_back({Rat(0), Rat(0), Rat(1)});
    odd.push_back({Rat(0), Rat(0), Rat(-1)});
    Polytope a = hull_of(even, "pyramid+"), b = hull_of(odd, "pyramid-");
    Polytope m = minkowski_sum(a, b);
    m.name = "davidsstar_minkowski(" + std::to_string(n) + ")";
    return m;
}

namespace {

PointConfig octahedron_support() {
    PointConfig s;
    s.dim = 3;
    for (int sg : {1, -1})
        for (int i = 0; i < 3; ++i) {
            Vec e(3, Rat(0));
            e[i] = sg;
            s.points.push_back(e);
        }
    return s;
}

// 2 on the square orthogonal to axis, 1 on the two apexes
Lifting pyramids(int axis) {
    Lifting l;
    for (int j = 0; j < 6; ++j) l.heights.push_back(j % 3 == axis ? Rat(1) : Rat(2));
    return l;
}

}  // namespace

Polytope prism_octahedron(int which) {
    Lifting flat{std::vector<Rat>(6, Rat(1))};
    std::vector<Lifting> ls;
    switch (which) {
        case 0: ls = {flat, flat}; break;
        case 1: ls = {flat, pyramids(2)}; break;
        case 2: ls = {pyramids(2), pyramids(2)}; break;
        case 3: ls = {pyramids(2), pyramids(0)}; break;
        default: throw Error("prism over octahedron: realization index must be 0..3");
    }
    Polytope p = lifted_product(segment(), octahedron_support(), ls);
    p.name = "prism_octahedron(" + std::to_string(which) + ")";
    return p;
}

std::vector<Polytope> prism_octahedron_realizations() {
    std::vector<Polytope> out;
    for (int i = 0; i < 4; ++i) out.push_back(prism_octahedron(i));
    return out;
}

Polytope klee_stacked_polytope(int d, int n) {
    Polytope c = cyclic_polytope(d, n);
    Graph target = klee_stacked(d, n);
    Rat eps(1, 4);
    for (int attempt = 0; attempt < 30; ++attempt, eps /= 2) {
        std::vector<Vec> pts = c.config.points;
        for (const auto& F : c.facets) {
            Vec x(static_cast<std::size_t>(d), Rat(0));
            for (int v : F.vertices)
                for (int i = 0; i < d; ++i) x[i] += c.config.points[v][i];
            for (int i = 0; i < d; ++i) x[i] = x[i] / static_cast<long>(F.vertices.size()) + eps * F.plane.normal[i];
            pts.push_back(x);
        }
        Polytope p = hull_of(pts, "klee_stacked(" + std::to_string(d) + "," + std::to_string(n) + ")");
        if (!p.had_non_vertices() && verify_graph(p, target).bijection) return p;
    }
    throw Error("klee_stacked: no admissible stacking height found");
}

std::vector<std::string> lifted_product_witnesses() {
    return {"triangle-path", "segment-square", "segment-octahedron-star", "domino-domino"};
}

Witness lifted_product_witness(const std::string& name) {
    Witness w;
    w.name = name;
    if (name == "triangle-path") {
        PointConfig s{1, {{Rat(0)}, {Rat(1)}, {Rat(2)}}, {}};
        Lifting l{{Rat(1), Rat(2), Rat(1)}};
        w.polytope = lifted_product(simplex(2), s, {l});
        w.expected = cartesian_product(cycle_graph(3), path_graph(2));
    } else if (name == "segment-square") {
        PointConfig s{2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(0), Rat(1)}}, {}};
        Lifting l{{Rat(2), Rat(1), Rat(2), Rat(1)}};
        w.polytope = lifted_product(segment(), s, {l});
        Graph glued = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
        w.expected = cartesian_product(path_graph(1), glued);
    } else if (name == "segment-octahedron-star") {
        // octahedron apex (0,0,1) truncated; square w1..w4, bottom apex, cut points
        std::vector<Vec> wv = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)},
                               {Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}};
        Vec top = {Rat(0), Rat(0), Rat(1)};
        Rat ts[4] = {Rat(1, 2), Rat(1, 4), Rat(1, 2), Rat(1, 4)};
        PointConfig s;
        s.dim = 3;
        for (auto& x : wv) s.points.push_back(x);
        s.points.push_back({Rat(0), Rat(0), Rat(-1)});
        for (int i = 0; i < 4; ++i) {
            Vec c(3);
            for (int k = 0; k < 3; ++k) c[k] = top[k] + ts[i] * (wv[i][k] - top[k]);
            s.points.push_back(c);
        }
        Lifting l{{Rat(2), Rat(1), Rat(2), Rat(1), Rat(2), Rat(2), Rat(7, 4), Rat(2), Rat(7, 4)}};
        w.polytope = lifted_product(segment(), s, {l});
        w.expected = cartesian_product(path_graph(1), star_clique(cocktail_party(3), 2));
    } else if (name == "domino-domino") {
        // 3x3 grid on two paraboloid sheets, lifted by a concave function of (x,y)
        const int p = 2, q = 2;
        const int top = 2 * (p * p + q * q) + 1;
        PointConfig s;
        s.dim = 3;
        Lifting l;
        for (int sheet = 0; sheet < 2; ++sheet)
            for (int x = 0; x <= p; ++x)
                for (int y = 0; y <= q; ++y) {
                    int r = x * x + y * y;
                    s.points.push_back({Rat(x), Rat(y), Rat(sheet == 0 ? r : top - r)});
                    l.heights.push_back(Rat(p * p + q * q + 1 - r));
                }
        w.polytope = lifted_product(segment(), s, {l});
        w.expected = cartesian_product(domino_graph(p), domino_graph(q));
    } else {
        throw Error("unknown lifted-product witness '" + name + "'");
    }
    w.polytope.name = name;
    return w;
}

std::vector<std::array<double, 3>> schlegel_coordinates(const Polytope& p) {
    std::vector<std::array<double, 3>> out;
    int D = p.config.dim;
    if (D <= 3) {
        for (const auto& x : p.config.points) {
            std::array<double, 3> c{0, 0, 0};
            for (int i = 0; i < D; ++i) c[i] = x[i].get_d();
            out.push_back(c);
        }
        return out;
    }
    if (D != 4 || p.dim != 4) throw Error("schlegel projection needs a full-dimensional 4-polytope");
    const auto& F = p.facets.front();
    Vec fc(4, Rat(0));
    for (int v : F.vertices)
        for (int i = 0; i < 4; ++i) fc[i] += p.config.points[v][i];
    for (auto& x : fc) x /= static_cast<long>(F.vertices.size());
    Rat nn = 0;
    for (const auto& a : F.plane.normal) nn += a * a;
    // viewpoint slightly beyond the facet
    Vec eye(4);
    Rat slack = 1;
    for (int v = 0; v < p.vertex_count(); ++v) {
        Rat s = F.plane.offset;
        for (int i = 0; i < 4; ++i) s -= F.plane.normal[i] * p.config.points[v][i];
        if (s > 0 && s < slack) slack = s;
    }
    for (int i = 0; i < 4; ++i) eye[i] = fc[i] + slack / (4 * nn) * F.plane.normal[i];
    int drop = 0;
    for (int i = 1; i < 4; ++i)
        if (abs(F.plane.normal[i]) > abs(F.plane.normal[drop])) drop = i;
    for (const auto& x : p.config.points) {
        Rat ae = 0, ad = 0;
        for (int i = 0; i < 4; ++i) {
            ae += F.plane.normal[i] * eye[i];
            ad += F.plane.normal[i] * (x[i] - eye[i]);
        }
        Rat s = (F.plane.offset - ae) / ad;
        std::array<double, 3> c{};
        int k = 0;
        for (int i = 0; i < 4; ++i)
            if (i != drop) c[k++] = Rat(eye[i] + s * (x[i] - eye[i])).get_d();
        out.push_back(c);
    }
    return out;
}

}  // namespace polygraph::geometry
