#include <set>

#include "doctest.h"
#include "polygraph/algorithms.hpp"
#include "polygraph/generators.hpp"
#include "polygraph/geometry.hpp"
#include "polygraph/obstructions.hpp"

using namespace polygraph;
using namespace polygraph::geometry;

namespace {

bool iso(const Graph& a, const Graph& b) { return are_isomorphic(a, b).has_value(); }

PointConfig cfg(int dim, std::vector<std::vector<int>> pts) {
    PointConfig c;
    c.dim = dim;
    for (auto& p : pts) {
        Vec v;
        for (int x : p) v.push_back(Rat(x));
        c.points.push_back(v);
    }
    return c;
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(to_string(parse_rat("6/4")) == "3/2");
    CHECK(to_string(Rat(-4)) == "-4");
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("convex hull") {
    CHECK(cube(3).facets.size() == 6);
    PointConfig m;
    m.dim = 4;
    for (int t = 1; t <= 6; ++t) m.points.push_back({Rat(t), Rat(t * t), Rat(t * t * t), Rat(t * t * t * t)});
    CHECK(convex_hull_facets(m).facets.size() == 9);
    CHECK(cross_polytope(4).facets.size() == 16);
    // interior points are stripped and flagged
    auto sq = convex_hull_facets(cfg(2, {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}}));
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.had_non_vertices());
    // lower-dimensional input
    auto flat = convex_hull_facets(cfg(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
    CHECK(flat.dim == 2);
    CHECK(flat.facets.size() == 3);
    CHECK_THROWS(convex_hull_facets(cfg(2, {{1, 1}, {1, 1}})));
    HullOptions tiny;
    tiny.cap = 3;
    CHECK_THROWS(convex_hull_facets(cfg(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}), tiny));
    for (const auto& p : {cube(3), cyclic_polytope(4, 7), prism(5), antiprism(4), cross_polytope(3)}) CHECK_NOTHROW(audit_hull(p));
}

TEST_CASE("skeletons") {
    CHECK(iso(skeleton_graph(cube(3)), hypercube_graph(3)));
    CHECK(is_complete(skeleton_graph(cyclic_polytope(4, 6))));
    CHECK(iso(skeleton_graph(cross_polytope(4)), circulant(8, {1, 2, 3})));
    CHECK(is_complete(skeleton_graph(simplex(5))));
    CHECK(skeleton_graph(simplex(5)).order() == 6);
    CHECK(iso(skeleton_graph(antiprism(4)), circulant(8, {1, 2})));
    CHECK(is_complete(skeleton_graph(cyclic_polytope(4, 8))));
    CHECK_THROWS(named_polytope("nosuch", {}));
}

TEST_CASE("cyclic polytopes match the Gale count") {
    for (int d = 2; d <= 5; ++d)
        for (int n = d + 1; n <= 9; ++n) CHECK(static_cast<long>(cyclic_polytope(d, n).facets.size()) == obstructions::cyclic_facet_count(d, n));
}

TEST_CASE("products, joins, sums, pyramids") {
    auto po = product_polytope(segment(), octahedron());
    CHECK(po.facets.size() == 10);
    CHECK(iso(skeleton_graph(po), cartesian_product(complete_graph(2), circulant(6, {1, 2}))));
    auto j = join_polytope(cube(2), cube(2));
    CHECK(j.dim == 5);
    CHECK(iso(skeleton_graph(j), circulant(8, {1, 2, 3})));
    auto py = pyramid(cube(2), Rat(1));
    CHECK(py.vertex_count() == 5);
    CHECK(py.facets.size() == 5);
    CHECK(skeleton_graph(minkowski_sum(cube(2), cube(2))).order() == 4);
    CHECK_THROWS(pyramid(cube(2), Rat(0)));
}

TEST_CASE("regular subdivisions") {
    auto sq = cfg(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto trivial = regular_subdivision(sq, Lifting{{Rat(1), Rat(1), Rat(1), Rat(1)}});
    CHECK(trivial.cells.size() == 1);
    CHECK(iso(trivial.graph, cycle_graph(4)));
    auto split = regular_subdivision(sq, Lifting{{Rat(2), Rat(1), Rat(2), Rat(1)}});
    CHECK(split.cells.size() == 2);
    auto seg = cfg(1, {{0}, {1}, {2}});
    auto path = regular_subdivision(seg, Lifting{{Rat(0), Rat(1), Rat(0)}});
    CHECK(path.cells.size() == 2);
    CHECK(iso(path.graph, path_graph(2)));
    // octahedron: 0 on the square, -1 at the apexes
    PointConfig oct = octahedron().config;
    std::vector<Rat> h;
    for (const auto& p : oct.points) h.push_back(p[2] != 0 ? Rat(-1) : Rat(0));
    auto two = regular_subdivision(oct, Lifting{h});
    CHECK(two.cells.size() == 2);
    // cells meet in a common face
    std::set<int> a(two.cells[0].begin(), two.cells[0].end());
    int common = 0;
    for (int x : two.cells[1]) common += static_cast<int>(a.count(x));
    CHECK(common == 4);
}

TEST_CASE("lifted products") {
    for (const auto& name : lifted_product_witnesses()) {
        auto w = lifted_product_witness(name);
        CHECK_MESSAGE(verify_graph(w.polytope, w.expected).bijection.has_value(), name);
    }
    auto tp = lifted_product_witness("triangle-path");
    CHECK(tp.polytope.dim == 3);
    auto so = lifted_product_witness("segment-octahedron-star");
    CHECK(so.polytope.dim == 4);
    PointConfig seg = cfg(1, {{0}, {1}, {2}});
    CHECK_THROWS(lifted_product(segment(), seg, {Lifting{{Rat(1), Rat(2), Rat(1)}}}));
    CHECK_THROWS(lifted_product(simplex(2), seg, {Lifting{{Rat(1), Rat(-2), Rat(1)}}}));
}

TEST_CASE("truncation") {
    auto t = truncate_vertex(simplex(3), 0);
    CHECK(t.vertex_count() == 6);
    CHECK(iso(skeleton_graph(t), cartesian_product(complete_graph(3), complete_graph(2))));
    auto c = cube(3);
    auto tc = truncate_vertex(c, 0);
    CHECK(tc.facets.size() == c.facets.size() + 1);
    CHECK(iso(skeleton_graph(tc), star_clique(skeleton_graph(c), 0)));
    CHECK(iso(skeleton_graph(truncate_vertex(c, 0, Rat(1, 5))), skeleton_graph(tc)));
    CHECK_THROWS(truncate_vertex(octahedron(), 0));
}

TEST_CASE("davidsstar") {
    auto d3 = davidsstar(3);
    CHECK(d3.vertex_count() == 12);
    CHECK(face_lattice(d3).f_vector() == std::vector<std::size_t>{12, 24, 14});
    for (int n = 3; n <= 5; ++n) CHECK(iso(skeleton_graph(davidsstar(n)), skeleton_graph(davidsstar_minkowski(n))));
    CHECK_THROWS(davidsstar(2));
}

TEST_CASE("prism over octahedron") {
    auto rs = prism_octahedron_realizations();
    REQUIRE(rs.size() == 4);
    Graph target = cartesian_product(complete_graph(2), circulant(6, {1, 2}));
    // oracle f-vectors (qhull)
    std::vector<std::vector<std::size_t>> fv{{12, 30, 28, 10}, {12, 30, 29, 11}, {12, 30, 30, 12}, {12, 30, 30, 12}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(verify_graph(rs[i], target).bijection.has_value());
        CHECK(face_lattice(rs[i]).f_vector() == fv[i]);
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) CHECK_FALSE(combinatorially_equivalent(rs[i], rs[j]));
    CHECK(rs[0].facets.size() == 10);
}

TEST_CASE("face lattice and verify_graph") {
    auto l = face_lattice(simplex(3));
    CHECK(l.f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(verify_graph(cyclic_polytope(4, 6), complete_graph(6)).bijection.has_value());
    auto m = verify_graph(cross_polytope(4), circulant(8, {1, 3}));
    CHECK_FALSE(m.bijection);
    CHECK_FALSE(m.mismatch.empty());
    CHECK(combinatorially_equivalent(cube(3), prism(4)));
}

TEST_CASE("balinski audit on constructions") {
    for (const auto& p : {cube(4), cross_polytope(4), prism(5), antiprism(5), davidsstar(4), lifted_product_witness("domino-domino").polytope,
                          product_polytope(cube(2), cube(2)), join_polytope(simplex(1), cube(2))})
        CHECK(vertex_connectivity(skeleton_graph(p)).kappa >= p.dim);
}

TEST_CASE("json round trip and hash") {
    auto p = product_polytope(polygon(5), segment());
    auto j = polytope_to_json(p);
    auto q = polytope_from_json(j);
    CHECK(polytope_hash(p) == polytope_hash(q));
    CHECK(polytope_to_json(q).dump() == j.dump());
    CHECK(j["vertices"][0][0].is_string());
    auto lj = lattice_to_json(face_lattice(cube(3)));
    CHECK(lj["levels"].size() == 4);
    CHECK(lj["levels"][2].size() == 6);
    CHECK(polytope_hash(cube(3)) != polytope_hash(cross_polytope(3)));
}

TEST_CASE("steinitz realization") {
    for (const Graph& g : {hypercube_graph(3), prism_graph(5), antiprism_graph(4), circulant(10, {2, 5}), davidsstar_graph(3),
                           named_graph("octahedron", {})}) {
        auto p = steinitz_realization(g);
        CHECK(p.dim == 3);
        CHECK(verify_graph(p, g).bijection.has_value());
    }
    CHECK_THROWS(steinitz_realization(petersen_graph()));
}

TEST_CASE("schlegel coordinates") {
    auto s = schlegel_coordinates(cube(4));
    CHECK(s.size() == 16);
    CHECK(schlegel_coordinates(cube(3)).size() == 8);
}
