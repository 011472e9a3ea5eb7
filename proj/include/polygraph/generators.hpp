#pragma once

#include <string>
#include <vector>

#include "polygraph/graph.hpp"

namespace polygraph {

// Vertices Z_n, i ~ j iff (i - j) mod n lies in S or -S. S within 1..n/2.
Graph circulant(int n, const std::vector<int>& S);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int edges);  // edges + 1 vertices
Graph petersen_graph();
Graph hypercube_graph(int d);
Graph cocktail_party(int m);  // K_{2,...,2}, m parts; vertex i pairs with i + m
Graph prism_graph(int m);
Graph antiprism_graph(int m);
Graph domino_graph(int p);  // path(p) x K2
// Z_{2n+3} x Z_2; (x,y) has index 2x + y
Graph marc_antonio(int n);
Graph klee_stacked(int d, int n);
Graph davidsstar_graph(int n);
Graph davidsstar_starred(int n);

// Families: complete n | complete_bipartite a b | cycle n | path p | petersen |
// cube d | octahedron | cocktail m | prism m | antiprism m | domino p |
// marc_antonio n | klee_stacked d n | davidsstar n | davidsstar_starred n
Graph named_graph(const std::string& name, const std::vector<int>& params);
std::vector<std::string> named_graph_families();

// (a,b) -> a * |V(H)| + b
Graph cartesian_product(const Graph& g, const Graph& h);
Graph cartesian_product(const std::vector<Graph>& factors);

// Replace v by a deg(v)-clique. The clique vertex attached to the smallest
// neighbor keeps index v; the others get n, n+1, ... in ascending neighbor order.
Graph star_clique(const Graph& g, Vertex v);

// complete join: every vertex of g adjacent to every vertex of h
Graph graph_join(const Graph& g, const Graph& h);

std::string describe_set(const std::vector<int>& s);

}  // namespace polygraph
