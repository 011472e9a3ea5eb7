#include <algorithm>

#include "doctest.h"
#include "polygraph/algorithms.hpp"
#include "polygraph/generators.hpp"
#include "polygraph/obstructions.hpp"

using namespace polygraph;
using namespace polygraph::obstructions;

namespace {

int components_without(const Graph& g, int first_n) {
    Bitset r(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < first_n; ++i) r.set(static_cast<std::size_t>(i));
    return count_components(g, r);
}

}  // namespace

TEST_CASE("balinski") {
    CHECK(balinski_check(complete_graph(5), 4).pass);
    CHECK(balinski_check(marc_antonio(1), 4).pass);
    auto c6 = balinski_check(cycle_graph(6), 3);
    CHECK_FALSE(c6.pass);
    CHECK(c6.cut.size() == 2);
    CHECK_FALSE(balinski_check(complete_graph(4), 4).pass);
}

TEST_CASE("psp") {
    auto k5 = psp_check(complete_graph(5), 4, 0);
    REQUIRE(k5.status == PspStatus::Witness);
    for (const auto& p : k5.witnesses[0].paths) CHECK(p.size() == 2);
    CHECK(verify_psp_witness(complete_graph(5), 4, k5.witnesses[0]));
    auto g9 = psp_check(circulant(9, {1, 2}), 4);
    CHECK(g9.status == PspStatus::Failed);
    CHECK(g9.exhausted);
    auto ma = psp_check(marc_antonio(1), 4, 0);
    REQUIRE(ma.status == PspStatus::Witness);
    CHECK(verify_psp_witness(marc_antonio(1), 4, ma.witnesses[0]));
    auto low = psp_check(cycle_graph(5), 3, 0);
    CHECK(low.status == PspStatus::Failed);
}

TEST_CASE("psp failure survives shuffled orders") {
    std::vector<Graph> fails{circulant(9, {1, 2}), circulant(7, {1, 2}), circulant(8, {1, 2, 4})};
    std::vector<int> dims{4, 4, 5};
    for (std::size_t i = 0; i < fails.size(); ++i) {
        REQUIRE(psp_check(fails[i], dims[i]).status == PspStatus::Failed);
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            PspOptions o;
            o.shuffle_seed = seed;
            CHECK(psp_check(fails[i], dims[i], std::nullopt, o).status == PspStatus::Failed);
        }
    }
}

TEST_CASE("cyclic facet count") {
    CHECK(cyclic_facet_count(4, 6) == 9);
    CHECK(cyclic_facet_count(3, 6) == 8);
    CHECK(cyclic_facet_count(2, 5) == 5);
    for (int m = 5; m <= 12; ++m) CHECK(cyclic_facet_count(4, m) == m * (m - 3) / 2);
    CHECK_THROWS(cyclic_facet_count(4, 4));
}

TEST_CASE("separation") {
    Graph k46 = klee_stacked(4, 6);
    CHECK(k46.order() == 15);
    CHECK(components_without(k46, 6) == 9);
    auto s = separation_check(k46, 3, 6);
    CHECK(s.status == SeparationResult::Status::Fail);
    CHECK(s.components == 9);
    CHECK(s.bound == 8);
    CHECK(s.separator.size() == 6);
    Graph k34 = klee_stacked(3, 4);
    CHECK(components_without(k34, 4) == 4);
    CHECK(separation_check(k34, 3, 4).status == SeparationResult::Status::Pass);
    CHECK(separation_check(complete_graph(5), 4, 5).status == SeparationResult::Status::Pass);
    CHECK_THROWS(separation_check(complete_graph(5), 4, 6));
}

TEST_CASE("steinitz") {
    CHECK(steinitz_decide(circulant(10, {2, 5})).yes);
    CHECK_FALSE(steinitz_decide(complete_bipartite(3, 3)).yes);
    CHECK(steinitz_decide(named_graph("octahedron", {})).yes);
    auto c = steinitz_decide(cycle_graph(6));
    CHECK_FALSE(c.yes);
}

TEST_CASE("whitney 2-faces") {
    CHECK(whitney_2faces(hypercube_graph(3)).size() == 6);
    auto pr = whitney_2faces(prism_graph(3));
    CHECK(pr.size() == 5);
    CHECK(std::count_if(pr.begin(), pr.end(), [](auto& f) { return f.size() == 3; }) == 2);
    auto oct = whitney_2faces(named_graph("octahedron", {}));
    CHECK(oct.size() == 8);
    for (const auto& f : oct) CHECK(f.size() == 3);
    CHECK_THROWS(whitney_2faces(petersen_graph()));
    // Euler and every edge in exactly two faces
    for (const Graph& g : {hypercube_graph(3), prism_graph(5), antiprism_graph(4), circulant(10, {2, 5})}) {
        auto fs = whitney_2faces(g);
        CHECK(static_cast<long>(g.order()) - static_cast<long>(g.size()) + static_cast<long>(fs.size()) == 2);
        for (const auto& e : g.edges()) {
            int in = 0;
            for (const auto& f : fs)
                for (std::size_t i = 0; i < f.size(); ++i) {
                    Vertex a = f[i], b = f[(i + 1) % f.size()];
                    if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) ++in;
                }
            CHECK(in == 2);
        }
    }
}

TEST_CASE("reverse star clique") {
    Graph s = star_clique(complete_graph(4), 0);
    auto cs = reverse_star_clique(s);
    // the prism has two triangles, each contracting back to K4
    REQUIRE(cs.size() == 2);
    for (const auto& c : cs) CHECK(are_isomorphic(c.contracted, complete_graph(4)));
    CHECK(reverse_star_clique(complete_graph(4)).empty());
    for (int n = 3; n <= 5; ++n) {
        auto chain = star_clique_obstruction(davidsstar_starred(n));
        REQUIRE(chain);
        CHECK(chain->final_graph.regular_degree() == 4);
        CHECK(steinitz_decide(chain->final_graph).yes);
        CHECK(are_isomorphic(chain->final_graph, davidsstar_graph(n)));
    }
}

TEST_CASE("polytopality range examples") {
    auto k6 = polytopality_range(complete_graph(6));
    CHECK(k6.confirmed == std::vector<int>{4, 5});
    CHECK(k6.open == std::vector<int>{4, 5});
    auto c8 = polytopality_range(circulant(8, {1, 2, 3}));
    CHECK(c8.confirmed == std::vector<int>{4, 5});
    CHECK(c8.verdicts[5].status == Status::Excluded);
    CHECK(c8.verdicts[5].certificate["rule"] == "R4-psp");
    auto k33 = polytopality_range(complete_bipartite(3, 3));
    CHECK(k33.open.empty());
}

TEST_CASE("report invariants") {
    std::vector<Graph> gs{complete_graph(6), circulant(8, {1, 2, 4}), circulant(8, {1, 3, 4}), cycle_graph(7),
                          hypercube_graph(3), marc_antonio(1), klee_stacked(4, 6), complete_bipartite(3, 4),
                          cartesian_product(cycle_graph(4), cycle_graph(5))};
    for (const auto& g : gs) {
        auto r = polytopality_range(g);
        CHECK(static_cast<int>(r.verdicts.size()) == g.min_degree());
        for (const auto& v : r.verdicts) {
            if (v.status == Status::Unknown) {
                CHECK(v.certificate.is_null());
                continue;
            }
            CHECK(v.certificate.is_object());
            std::string why;
            CHECK_MESSAGE(verify_verdict(g, v, &why), g.label(), " d=", v.d, " ", why);
            if (v.status == Status::Confirmed) {
                CHECK(balinski_check(g, v.d).pass);
                CHECK(psp_check(g, v.d).status == PspStatus::Witness);
            }
        }
    }
}

TEST_CASE("tampered certificates are rejected") {
    Graph g = circulant(8, {1, 2, 3});
    auto r = polytopality_range(g);
    auto v = r.verdicts[5];
    REQUIRE(v.status == Status::Excluded);
    v.d = 5;
    CHECK_FALSE(verify_verdict(g, v));
    auto c = r.verdicts[3];
    REQUIRE(c.status == Status::Confirmed);
    c.certificate["polytope_hash"] = "0000000000000000";
    CHECK_FALSE(verify_verdict(g, c));
}

TEST_CASE("report is independent of thread count") {
    Graph g = circulant(8, {1, 2, 4});
    RangeBudget one, four;
    four.threads = 4;
    CHECK(polytopality_range(g, one).to_json().dump() == polytopality_range(g, four).to_json().dump());
}
