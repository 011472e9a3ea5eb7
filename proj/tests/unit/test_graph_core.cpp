#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "doctest.h"
#include "polygraph/algorithms.hpp"
#include "polygraph/generators.hpp"
#include "polygraph/io.hpp"

using namespace polygraph;

namespace {

int brute_kappa(const Graph& g) {
    int n = g.order();
    if (is_complete(g)) return n - 1;
    for (int k = 0; k < n; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(n), 0);
        std::fill(pick.end() - k, pick.end(), 1);
        do {
            Bitset removed(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                if (pick[static_cast<std::size_t>(i)]) removed.set(static_cast<std::size_t>(i));
            if (count_components(g, removed) > 1) return k;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return n - 1;
}

}  // namespace

TEST_CASE("make_graph") {
    Graph k2 = make_graph(2, {{0, 1}});
    CHECK(k2.size() == 1);
    std::vector<Edge> all;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) all.push_back({u, v});
    CHECK(is_complete(make_graph(4, all)));
    std::vector<std::string> warn;
    std::vector<Edge> dup{{0, 1}, {0, 1}};
    Graph d = make_graph(3, dup, &warn);
    CHECK(d.size() == 1);
    CHECK(warn.size() == 1);
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), Error);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), Error);
}

TEST_CASE("circulant") {
    CHECK(is_complete(circulant(6, {1, 2, 3})));
    Graph g = circulant(8, {2, 4});
    CHECK_FALSE(is_connected(g));
    Bitset none(8);
    CHECK(count_components(g, none) == 2);
    CHECK(circulant(8, {1, 2, 4}).regular_degree() == 5);
    CHECK_THROWS_AS(circulant(8, {5}), Error);
    // connected iff gcd(S u {n}) = 1
    for (int n = 3; n <= 10; ++n)
        for (int mask = 1; mask < (1 << (n / 2)); ++mask) {
            std::vector<int> S;
            int gg = n;
            for (int i = 0; i < n / 2; ++i)
                if (mask >> i & 1) {
                    S.push_back(i + 1);
                    gg = std::gcd(gg, i + 1);
                }
            CHECK(is_connected(circulant(n, S)) == (gg == 1));
        }
}

TEST_CASE("named graphs") {
    Graph p = petersen_graph();
    CHECK(p.order() == 10);
    CHECK(p.size() == 15);
    CHECK(p.regular_degree() == 3);
    // girth 5: no induced (hence no) cycles of length 3 or 4
    CHECK(induced_cycles(p, 4).empty());
    Graph dom = domino_graph(2);
    CHECK(dom.order() == 6);
    CHECK(dom.size() == 7);
    // oracle: 10/14/18 vertices, 4-regular
    for (int n = 1; n <= 3; ++n) {
        Graph m = marc_antonio(n);
        CHECK(m.order() == 4 * n + 6);
        CHECK(m.regular_degree() == 4);
    }
    CHECK_THROWS_AS(named_graph("nosuch", {}), Error);
    CHECK_THROWS_AS(named_graph("cycle", {}), Error);
}

TEST_CASE("cartesian product") {
    Graph k2 = complete_graph(2);
    CHECK(are_isomorphic(cartesian_product(k2, k2), cycle_graph(4)));
    Graph pr = cartesian_product(k2, cycle_graph(3));
    CHECK(pr.order() == 6);
    CHECK(pr.size() == 9);
    Graph pp = cartesian_product(petersen_graph(), petersen_graph());
    CHECK(pp.order() == 100);
    CHECK(pp.regular_degree() == 6);
    Graph g = cycle_graph(5), h = complete_bipartite(2, 3);
    Graph gh = cartesian_product(g, h);
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < h.order(); ++b) CHECK(gh.degree(a * h.order() + b) == g.degree(a) + h.degree(b));
}

TEST_CASE("star clique") {
    Graph k4 = complete_graph(4);
    for (int v = 0; v < 4; ++v)
        CHECK(are_isomorphic(star_clique(k4, v), cartesian_product(complete_graph(3), complete_graph(2))));
    Graph oct = named_graph("octahedron", {});
    Graph s = star_clique(oct, 0);
    CHECK(s.order() == 9);
    CHECK(s.size() == 18);
    Graph c = circulant(9, {1, 2});
    Graph sc = star_clique(c, 3);
    CHECK(sc.order() == c.order() + 3);
    CHECK(sc.size() == c.size() + 6);
    Graph iso = make_graph(3, {{0, 1}});
    CHECK_THROWS_AS(star_clique(iso, 2), Error);
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(complete_graph(5)).kappa == 4);
    auto c6 = vertex_connectivity(cycle_graph(6));
    CHECK(c6.kappa == 2);
    CHECK(c6.min_cut.size() == 2);
    CHECK(vertex_connectivity(petersen_graph()).kappa == 3);
    CHECK(brute_kappa(petersen_graph()) == 3);
}

TEST_CASE("planarity") {
    CHECK(is_planar(complete_graph(4)).planar);
    auto p = is_planar(petersen_graph());
    CHECK_FALSE(p.planar);
    CHECK(p.kind == PlanarityResult::Kind::K33);
    CHECK(check_kuratowski(petersen_graph(), p.kuratowski) == PlanarityResult::Kind::K33);
    CHECK_FALSE(is_planar(circulant(8, {1, 4})).planar);
    auto q = is_planar(hypercube_graph(3));
    REQUIRE(q.planar);
    CHECK(check_euler(hypercube_graph(3), q.rotation));
    CHECK(embedding_faces(hypercube_graph(3), q.rotation).size() == 6);
    auto k5 = is_planar(complete_graph(5));
    CHECK(k5.kind == PlanarityResult::Kind::K5);
}

TEST_CASE("induced cycles") {
    Graph oct = named_graph("octahedron", {});
    auto cs = induced_cycles(oct, 5);
    CHECK(std::count_if(cs.begin(), cs.end(), [](auto& c) { return c.size() == 3; }) == 8);
    CHECK(std::count_if(cs.begin(), cs.end(), [](auto& c) { return c.size() == 4; }) == 3);
    CHECK(induced_cycles(cycle_graph(6), 5).empty());
    auto pc = induced_cycles(petersen_graph(), 5);
    CHECK(pc.size() == 12);
    for (const auto& c : pc) CHECK(is_chordless_cycle(petersen_graph(), c));
    for (const auto& c : cs) {
        CHECK(c == canonical_cycle(c));
        CHECK(c[1] < c.back());
    }
    CHECK_THROWS(induced_cycles(oct, 7));
}

TEST_CASE("contains_induced") {
    Graph pp = cartesian_product(petersen_graph(), petersen_graph());
    auto m = contains_induced(pp, petersen_graph());
    REQUIRE(m);
    Graph pet = petersen_graph();
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) CHECK(pp.adjacent((*m)[i], (*m)[j]) == pet.adjacent(i, j));
    CHECK(contains_induced(complete_graph(4), complete_graph(3)));
    CHECK_FALSE(contains_induced(cycle_graph(5), cycle_graph(4)));
}

TEST_CASE("isomorphism") {
    CHECK_FALSE(are_isomorphic(cycle_graph(6), complete_bipartite(3, 3)));
    CHECK(are_isomorphic(circulant(6, {1, 2}), named_graph("octahedron", {})));
    auto b = are_isomorphic(circulant(8, {1, 3}), hypercube_graph(3));
    CHECK_FALSE(b);
    CHECK(are_isomorphic(circulant(8, {1, 3}), complete_bipartite(4, 4)));
    Graph k44m = circulant(8, {1, 3});
    auto d = are_isomorphic(k44m, k44m);
    REQUIRE(d);
    for (const auto& e : k44m.edges()) CHECK(k44m.adjacent((*d)[e.u], (*d)[e.v]));
}

TEST_CASE("prime factorization") {
    Graph q4 = hypercube_graph(4);
    auto f = prime_factorization(q4);
    REQUIRE(f);
    CHECK(f->factors.size() == 4);
    auto pp = prime_factorization(cartesian_product(petersen_graph(), petersen_graph()));
    REQUIRE(pp);
    CHECK(pp->factors.size() == 2);
    auto w = prime_factorization(cartesian_product(complete_graph(2), circulant(8, {1, 4})));
    REQUIRE(w);
    CHECK(w->factors.size() == 2);
    CHECK(prime_factorization(petersen_graph())->factors.size() == 1);
}

TEST_CASE("io round trips") {
    Graph g = circulant(8, {1, 2, 4});
    CHECK(parse_graph6(to_graph6(g)) == g);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    std::istringstream in(write_edge_list(g));
    CHECK(read_edge_list(in) == g);
    CHECK(to_graph6(complete_graph(2)) == "A_");
}
