#include <algorithm>
#include <set>

#include "doctest.h"
#include "polygraph/algorithms.hpp"
#include "polygraph/generators.hpp"
#include "polygraph/geometry.hpp"
#include "polygraph/obstructions.hpp"
#include "polygraph/simple_check.hpp"

using namespace polygraph;
using namespace polygraph::simple;

namespace {

std::set<std::vector<Vertex>> as_sets(const std::vector<std::vector<Vertex>>& fs) {
    std::set<std::vector<Vertex>> out;
    for (auto f : fs) {
        std::sort(f.begin(), f.end());
        out.insert(f);
    }
    return out;
}

// facets of a polytope in graph numbering via the verify_graph bijection
std::set<std::vector<Vertex>> facets_in(const geometry::Polytope& p, const Graph& g) {
    auto m = geometry::verify_graph(p, g);
    REQUIRE(m.bijection);
    std::vector<std::vector<Vertex>> fs;
    for (const auto& f : p.facets) {
        std::vector<Vertex> vs;
        for (int v : f.vertices) vs.push_back((*m.bijection)[static_cast<std::size_t>(v)]);
        fs.push_back(vs);
    }
    return as_sets(fs);
}

}  // namespace

TEST_CASE("required 2-faces") {
    auto q3 = required_2faces(hypercube_graph(3), 3);
    CHECK(q3.cycles.size() == 6);
    CHECK_FALSE(q3.conflict);
    auto ma = required_2faces(marc_antonio(1), 4);
    REQUIRE(ma.conflict);
    CHECK(ma.conflict->shared.size() >= 3);
    // K2,3 is not regular; its conflict shows up inside the regular host K3,3
    CHECK_THROWS(required_2faces(complete_bipartite(2, 3), 3));
    auto k33 = required_2faces(complete_bipartite(3, 3), 3);
    REQUIRE(k33.conflict);
    CHECK(k33.conflict->a.size() == 4);
    CHECK(k33.conflict->b.size() == 4);
    CHECK(k33.conflict->shared.size() == 3);
}

TEST_CASE("simple obstructions") {
    CHECK_FALSE(simple_obstructions(hypercube_graph(4), 4));
    auto w = simple_obstructions(cartesian_product(circulant(8, {1, 4}), complete_graph(2)), 4);
    REQUIRE(w);
    CHECK(w->id == "cycles-share-3");
    Graph pp = cartesian_product(petersen_graph(), petersen_graph());
    auto all = simple_obstructions_all(pp, 6);
    bool petersen = false;
    for (const auto& o : all)
        if (o.id == "induced-petersen") {
            petersen = true;
            CHECK(o.witness.size() == 10);
        }
    CHECK(petersen);
    CHECK_THROWS(simple_obstructions(complete_bipartite(2, 3), 2));
}

TEST_CASE("candidate facets") {
    auto c = enumerate_candidate_facets(circulant(8, {1, 3, 4}), 8);
    CHECK(c.complete);
    CHECK(c.faces.size() == 4);
    for (const auto& f : c.faces) CHECK(f.vlist.size() == 4);
    CHECK(enumerate_candidate_facets(cycle_graph(6), 6).faces.empty());
    auto d = enumerate_candidate_facets(circulant(8, {1, 2, 4}), 8);
    std::set<std::vector<Vertex>> got;
    for (const auto& f : d.faces) got.insert(f.vlist);
    CHECK(got.count({0, 2, 4, 6}));
    CHECK(got.count({1, 3, 5, 7}));
    bool has5 = false, has6 = false;
    for (const auto& f : d.faces) {
        has5 |= f.vlist.size() == 5;
        has6 |= f.vlist.size() == 6;
        // each candidate is 3-polytopal and its 2-faces satisfy Euler
        Graph h = circulant(8, {1, 2, 4}).induced(f.vertices);
        CHECK(obstructions::steinitz_decide(h).yes);
        CHECK(static_cast<long>(h.order()) - static_cast<long>(h.size()) + static_cast<long>(f.two_faces.size()) == 2);
        // double counting v3 + p3 = 8 + sum (k-4)(v_k + p_k)
        long lhs = 0, rhs = 8;
        auto get = [](const std::map<int, int>& m, int k) { auto it = m.find(k); return it == m.end() ? 0 : it->second; };
        lhs = get(f.v_counts, 3) + get(f.p_counts, 3);
        for (int k = 5; k <= 8; ++k) rhs += (k - 4) * (get(f.v_counts, k) + get(f.p_counts, k));
        CHECK(lhs == rhs);
    }
    CHECK(has5);
    CHECK(has6);
    CHECK_THROWS(enumerate_candidate_facets(cycle_graph(6), 7));
}

TEST_CASE("facet search negative controls") {
    for (auto S : {std::vector<int>{1, 3, 4}, std::vector<int>{1, 2, 4}}) {
        Graph g = circulant(8, S);
        for (int d : {4, 5}) {
            auto r = facet_complex_search(g, d);
            CHECK(r.outcome == Outcome::Refuted);
            CHECK(r.transcript_complete);
            auto rep = replay_transcript(g, r.transcript);
            CHECK_MESSAGE(rep.valid, rep.message);
        }
    }
    for (int n = 1; n <= 3; ++n) {
        auto r = facet_complex_search(marc_antonio(n), 4);
        CHECK(r.outcome == Outcome::Refuted);
        CHECK(replay_transcript(marc_antonio(n), r.transcript).valid);
    }
}

TEST_CASE("facet search positive controls") {
    Graph q4 = hypercube_graph(4);
    auto r = facet_complex_search(q4, 4);
    REQUIRE(r.outcome == Outcome::RealizableComplex);
    // oracle: the eight facets x_b = 0 / x_b = 1 of the 4-cube
    std::set<std::vector<Vertex>> want;
    for (int b = 0; b < 4; ++b)
        for (int s = 0; s < 2; ++s) {
            std::vector<Vertex> f;
            for (int v = 0; v < 16; ++v)
                if ((v >> b & 1) == s) f.push_back(v);
            want.insert(f);
        }
    CHECK(as_sets(r.complex) == want);
    CHECK(as_sets(r.complex) == facets_in(geometry::cube(4), q4));

    Graph k5 = complete_graph(5);
    auto s = facet_complex_search(k5, 4);
    REQUIRE(s.outcome == Outcome::RealizableComplex);
    CHECK(as_sets(s.complex) == facets_in(geometry::simplex(4), k5));

    Graph pp = cartesian_product(prism_graph(3), prism_graph(3));
    auto t = facet_complex_search(pp, 6);
    CHECK(t.outcome == Outcome::RealizableComplex);
}

TEST_CASE("replay rejects tampering") {
    Graph g = circulant(8, {1, 3, 4});
    auto r = facet_complex_search(g, 4);
    REQUIRE(r.transcript.size() > 3);
    auto t = r.transcript;
    t.erase(t.begin() + 2);
    CHECK_FALSE(replay_transcript(g, t).valid);
    CHECK_FALSE(replay_transcript(circulant(8, {1, 2, 4}), r.transcript).valid);
    auto u = r.transcript;
    u.pop_back();
    CHECK_FALSE(replay_transcript(g, u).valid);
}

TEST_CASE("facet search mode errors") {
    CHECK_THROWS(facet_complex_search(circulant(8, {1, 2, 4}), 6));
}

TEST_CASE("product rule") {
    auto q3 = product_factor_check(hypercube_graph(3));
    CHECK(q3.applicable);
    CHECK_FALSE(q3.excluded_dimension);
    auto w = product_factor_check(cartesian_product(complete_graph(2), circulant(8, {1, 4})));
    CHECK(w.excluded_dimension == 4);
    auto pp = product_factor_check(cartesian_product(petersen_graph(), petersen_graph()));
    CHECK(pp.excluded_dimension == 6);
    std::vector<Graph> wrong{cycle_graph(4), cycle_graph(4)};
    CHECK_THROWS(product_factor_check(hypercube_graph(3), &wrong));
    // factorization audit
    for (const Graph& g : {hypercube_graph(4), cartesian_product(petersen_graph(), cycle_graph(5)),
                           cartesian_product(complete_graph(2), circulant(8, {1, 4}))}) {
        auto f = prime_factorization(g);
        REQUIRE(f);
        CHECK(are_isomorphic(cartesian_product(f->factors), g));
    }
}
