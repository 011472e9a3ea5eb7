#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polygraph/algorithms.hpp"
#include "polygraph/geometry.hpp"

namespace polygraph::geometry {

std::string to_string(const Rat& r) {
    return r.get_str();
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational '" + s + "'");
    if (r.get_den() == 0) throw Error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

void validate(const PointConfig& cfg) {
    if (cfg.dim < 1) throw Error("point configuration needs dimension >= 1");
    for (std::size_t i = 0; i < cfg.points.size(); ++i)
        if (static_cast<int>(cfg.points[i].size()) != cfg.dim) {
            std::ostringstream os;
            os << "point " << i << " has " << cfg.points[i].size() << " coordinates, expected " << cfg.dim;
            throw Error(os.str());
        }
    std::set<std::vector<std::string>> seen;
    for (std::size_t i = 0; i < cfg.points.size(); ++i) {
        std::vector<std::string> key;
        for (const auto& x : cfg.points[i]) key.push_back(x.get_str());
        if (!seen.insert(key).second) {
            std::ostringstream os;
            os << "duplicate point " << i;
            throw Error(os.str());
        }
    }
}

namespace {

using Z = mpz_class;
using ZVec = std::vector<Z>;

// Row echelon form over Q; returns pivot columns.
std::vector<int> pivot_columns(std::vector<Vec> rows, int cols) {
    std::vector<int> piv;
    std::size_t r = 0;
    for (int c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[r][c];
            for (int k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

// Bareiss determinant, destroys m
Z det(std::vector<ZVec> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Z prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

int int_rank(std::vector<ZVec> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Z a = rows[r][c], b = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] = rows[i][k] * a - rows[r][k] * b;
        }
        ++r;
    }
    return static_cast<int>(r);
}

struct HullKernel {
    int k;                       // working dimension
    std::vector<ZVec> q;         // integer points
    std::vector<Bitset> found;   // facet point sets
    std::vector<ZVec> normals;
    std::vector<Z> offsets;
    std::vector<int> chosen;

    void run() {
        chosen.clear();
        recurse(0);
    }

    bool independent() const {
        std::vector<ZVec> rows;
        for (std::size_t i = 1; i < chosen.size(); ++i) {
            ZVec r(static_cast<std::size_t>(k));
            for (int c = 0; c < k; ++c) r[c] = q[chosen[i]][c] - q[chosen[0]][c];
            rows.push_back(std::move(r));
        }
        return int_rank(rows) == static_cast<int>(rows.size());
    }

    void recurse(std::size_t start) {
        if (static_cast<int>(chosen.size()) == k) {
            leaf();
            return;
        }
        std::size_t need = static_cast<std::size_t>(k) - chosen.size();
        for (std::size_t i = start; i + need <= q.size(); ++i) {
            chosen.push_back(static_cast<int>(i));
            if (independent()) recurse(i + 1);
            chosen.pop_back();
        }
    }

    void leaf() {
        Bitset s(q.size());
        for (int i : chosen) s.set(static_cast<std::size_t>(i));
        for (const auto& f : found)
            if (s.is_subset_of(f)) return;
        // normal from cofactors of the difference matrix
        std::vector<ZVec> diff;
        for (std::size_t i = 1; i < chosen.size(); ++i) {
            ZVec r(static_cast<std::size_t>(k));
            for (int c = 0; c < k; ++c) r[c] = q[chosen[i]][c] - q[chosen[0]][c];
            diff.push_back(std::move(r));
        }
        ZVec a(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            std::vector<ZVec> minor;
            for (const auto& r : diff) {
                ZVec row;
                for (int c = 0; c < k; ++c)
                    if (c != j) row.push_back(r[c]);
                minor.push_back(std::move(row));
            }
            a[j] = det(std::move(minor));
            if (j % 2) a[j] = -a[j];
        }
        Z g = 0;
        for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 0) return;
        for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        Z b = dot(a, q[chosen[0]]);
        bool pos = false, neg = false;
        Bitset on(q.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            Z s2 = dot(a, q[i]);
            int c = cmp(s2, b);
            if (c > 0) pos = true;
            else if (c < 0) neg = true;
            else on.set(i);
            if (pos && neg) return;
        }
        if (pos) {
            for (auto& x : a) x = -x;
            b = -b;
        }
        found.push_back(on);
        normals.push_back(a);
        offsets.push_back(b);
    }

    static Z dot(const ZVec& a, const ZVec& x) {
        Z s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
        return s;
    }
};

}  // namespace

int affine_rank(const std::vector<Vec>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<Vec> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec r(pts[0].size());
        for (std::size_t c = 0; c < r.size(); ++c) r[c] = pts[i][c] - pts[0][c];
        rows.push_back(std::move(r));
    }
    return static_cast<int>(pivot_columns(rows, static_cast<int>(pts[0].size())).size());
}

Polytope convex_hull_facets(const PointConfig& cfg, const HullOptions& opt) {
    validate(cfg);
    std::size_t N = cfg.points.size();
    if (N == 0) throw Error("hull of an empty configuration");
    if (N > opt.cap) {
        std::ostringstream os;
        os << "hull: " << N << " points exceed the cap of " << opt.cap;
        throw Error(os.str());
    }
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < N; ++i) {
        Vec r(static_cast<std::size_t>(cfg.dim));
        for (int c = 0; c < cfg.dim; ++c) r[c] = cfg.points[i][c] - cfg.points[0][c];
        diffs.push_back(std::move(r));
    }
    auto J = pivot_columns(diffs, cfg.dim);
    int k = static_cast<int>(J.size());
    if (k == 0) throw Error("hull: all points are equal");

    // integer coordinates in the pivot columns
    Z L = 1;
    for (const auto& p : cfg.points)
        for (int c : J) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), p[c].get_den_mpz_t());
    HullKernel hk;
    hk.k = k;
    for (const auto& p : cfg.points) {
        ZVec z;
        for (int c : J) {
            Rat v = p[c] * L;
            z.push_back(v.get_num());
        }
        hk.q.push_back(std::move(z));
    }
    if (k == 1) {
        std::size_t lo = 0, hi = 0;
        for (std::size_t i = 1; i < N; ++i) {
            if (hk.q[i][0] < hk.q[lo][0]) lo = i;
            if (hk.q[i][0] > hk.q[hi][0]) hi = i;
        }
        for (auto [idx, sgn] : {std::pair{lo, -1}, std::pair{hi, 1}}) {
            Bitset b(N);
            b.set(idx);
            hk.found.push_back(b);
            hk.normals.push_back({Z(sgn)});
            hk.offsets.push_back(sgn * hk.q[idx][0]);
        }
    } else {
        hk.run();
    }

    // a point is a vertex iff the facets through it meet only in it
    std::vector<int> vertex_index(N, -1);
    Polytope P;
    P.dim = k;
    P.config.dim = cfg.dim;
    for (std::size_t i = 0; i < N; ++i) {
        Bitset meet(N);
        bool any = false;
        for (const auto& f : hk.found)
            if (f.test(i)) {
                if (!any) meet = f, any = true;
                else meet &= f;
            }
        if (any && meet.count() == 1) {
            vertex_index[i] = static_cast<int>(P.source.size());
            P.source.push_back(static_cast<int>(i));
            P.config.points.push_back(cfg.points[i]);
            if (!cfg.labels.empty()) P.config.labels.push_back(cfg.labels[i]);
        } else {
            P.stripped.push_back(static_cast<int>(i));
        }
    }
    for (std::size_t f = 0; f < hk.found.size(); ++f) {
        Facet F;
        hk.found[f].for_each([&](std::size_t i) {
            if (vertex_index[i] >= 0) F.vertices.push_back(vertex_index[i]);
        });
        F.plane.normal.assign(static_cast<std::size_t>(cfg.dim), Rat(0));
        for (int c = 0; c < k; ++c) F.plane.normal[J[c]] = Rat(hk.normals[f][c]);
        F.plane.offset = Rat(hk.offsets[f], L);
        F.plane.offset.canonicalize();
        P.facets.push_back(std::move(F));
    }
    std::sort(P.facets.begin(), P.facets.end(),
              [](const Facet& a, const Facet& b) { return a.vertices < b.vertices; });
    return P;
}

void audit_hull(const Polytope& p) {
    int n = p.vertex_count();
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
        const auto& F = p.facets[f];
        std::set<int> on(F.vertices.begin(), F.vertices.end());
        bool nonzero = false;
        for (const auto& x : F.plane.normal) nonzero |= x != 0;
        if (!nonzero) throw Error("hull audit: zero normal");
        for (int v = 0; v < n; ++v) {
            Rat s = 0;
            for (int c = 0; c < p.config.dim; ++c) s += F.plane.normal[c] * p.config.points[v][c];
            int cmpv = cmp(s, F.plane.offset);
            if (cmpv > 0 || (cmpv == 0) != (on.count(v) > 0)) {
                std::ostringstream os;
                os << "hull audit: facet " << f << " misplaces vertex " << v;
                throw Error(os.str());
            }
        }
        std::vector<Vec> pts;
        for (int v : F.vertices) pts.push_back(p.config.points[v]);
        if (affine_rank(pts) != p.dim - 1) {
            std::ostringstream os;
            os << "hull audit: facet " << f << " has the wrong dimension";
            throw Error(os.str());
        }
    }
}

Graph skeleton_graph(const Polytope& p) {
    int n = p.vertex_count();
    std::vector<Edge> es;
    if (p.dim == 1) {
        if (n == 2) es.push_back({0, 1});
        return make_graph(n, es);
    }
    std::vector<Bitset> vsets;
    std::vector<Bitset> inc(static_cast<std::size_t>(n), Bitset(p.facets.size()));
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
        vsets.push_back(Bitset::of(static_cast<std::size_t>(n), p.facets[f].vertices));
        for (int v : p.facets[f].vertices) inc[v].set(f);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Bitset common = inc[u] & inc[v];
            if (common.none()) continue;
            Bitset meet(static_cast<std::size_t>(n));
            bool first = true;
            common.for_each([&](std::size_t f) {
                if (first) meet = vsets[f], first = false;
                else meet &= vsets[f];
            });
            if (meet.count() == 2) es.push_back({u, v});
        }
    return make_graph(n, es);
}

std::vector<std::size_t> FaceLattice::f_vector() const {
    std::vector<std::size_t> f;
    for (int k = 0; k < dim; ++k) f.push_back(faces[k].size());
    return f;
}

FaceLattice face_lattice(const Polytope& p) {
    int n = p.vertex_count();
    FaceLattice L;
    L.dim = p.dim;
    L.faces.assign(static_cast<std::size_t>(p.dim + 1), {});
    std::set<Bitset> all;
    std::vector<Bitset> facets;
    for (const auto& F : p.facets) facets.push_back(Bitset::of(static_cast<std::size_t>(n), F.vertices));
    std::vector<Bitset> frontier;
    for (const auto& f : facets)
        if (all.insert(f).second) frontier.push_back(f);
    while (!frontier.empty()) {
        std::vector<Bitset> next;
        for (const auto& a : frontier)
            for (const auto& f : facets) {
                Bitset c = a & f;
                if (c.none() || c == a) continue;
                if (all.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    for (const auto& s : all) {
        std::vector<Vec> pts;
        s.for_each([&](std::size_t v) { pts.push_back(p.config.points[v]); });
        int d = affine_rank(pts);
        L.faces[d].push_back(s);
    }
    Bitset top(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) top.set(v);
    L.faces[p.dim].push_back(top);
    for (auto& level : L.faces) std::sort(level.begin(), level.end(), [](const Bitset& a, const Bitset& b) {
        return a.to_vector() < b.to_vector();
    });
    return L;
}

bool combinatorially_equivalent(const Polytope& a, const Polytope& b) {
    auto incidence = [](const Polytope& p, std::vector<int>& colour) {
        int n = p.vertex_count();
        std::vector<Edge> es;
        for (std::size_t f = 0; f < p.facets.size(); ++f)
            for (int v : p.facets[f].vertices) es.push_back({v, n + static_cast<int>(f)});
        colour.assign(static_cast<std::size_t>(n), 0);
        colour.resize(static_cast<std::size_t>(n) + p.facets.size(), 1);
        return make_graph(n + static_cast<int>(p.facets.size()), es);
    };
    if (a.dim != b.dim || a.vertex_count() != b.vertex_count() || a.facets.size() != b.facets.size()) return false;
    std::vector<int> ca, cb;
    Graph ga = incidence(a, ca), gb = incidence(b, cb);
    return are_isomorphic(ga, gb, &ca, &cb).has_value();
}

GraphMatch verify_graph(const Polytope& p, const Graph& g) {
    GraphMatch r;
    Graph s = skeleton_graph(p);
    if (s.order() != g.order()) {
        r.mismatch = "vertex count " + std::to_string(s.order()) + " vs " + std::to_string(g.order());
        return r;
    }
    if (s.size() != g.size()) {
        r.mismatch = "edge count " + std::to_string(s.size()) + " vs " + std::to_string(g.size());
        return r;
    }
    auto degs = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.order(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(s) != degs(g)) {
        r.mismatch = "degree sequences differ";
        return r;
    }
    r.bijection = are_isomorphic(s, g);
    if (!r.bijection) r.mismatch = "no isomorphism";
    return r;
}

}  // namespace polygraph::geometry
