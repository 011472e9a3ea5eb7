#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polygraph/graph.hpp"

namespace polygraph {

struct GraphMetrics {
    int kappa = 0;
    int delta = 0;
    std::optional<int> regular_degree;
    std::vector<Vertex> min_cut;  // empty for complete graphs
};

GraphMetrics vertex_connectivity(const Graph& g);
// max number of internally disjoint s-t paths (s, t nonadjacent), capped at limit
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit, std::vector<Vertex>* cut = nullptr);

struct PlanarityResult {
    bool planar = false;
    // clockwise neighbor order per vertex when planar
    std::vector<std::vector<Vertex>> rotation;
    // edges of a K5 or K3,3 subdivision when not planar
    std::vector<Edge> kuratowski;
    enum class Kind { None, K5, K33 } kind = Kind::None;
};

PlanarityResult is_planar(const Graph& g);
// yes/no only, no embedding or certificate
bool planar_test(const Graph& g);
// Faces traced from a rotation system, each as a vertex cycle.
std::vector<std::vector<Vertex>> embedding_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);
bool check_euler(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);
// Smooth the given edge set and test for K5 / K3,3.
PlanarityResult::Kind check_kuratowski(const Graph& g, const std::vector<Edge>& edges);

// Chordless cycles of length 3..max_len, canonical rotation, sorted.
std::vector<std::vector<Vertex>> induced_cycles(const Graph& g, int max_len);
// Same enumeration without the {3..6} restriction; stops after limit cycles.
std::vector<std::vector<Vertex>> induced_cycles_upto(const Graph& g, int max_len, std::size_t limit,
                                                     bool* truncated = nullptr);
std::vector<Vertex> canonical_cycle(std::vector<Vertex> c);
bool is_chordless_cycle(const Graph& g, const std::vector<Vertex>& c);

// map[i] = vertex of g playing pattern vertex i
std::optional<std::vector<Vertex>> contains_induced(const Graph& g, const Graph& pattern);

// bijection g -> h. Optional vertex colours must match under the bijection.
std::optional<std::vector<Vertex>> are_isomorphic(const Graph& g, const Graph& h,
                                                  const std::vector<int>* gcolor = nullptr,
                                                  const std::vector<int>* hcolor = nullptr);

struct Factorization {
    std::vector<Graph> factors;              // prime factors, largest first
    std::vector<std::vector<int>> coords;    // coords[v][i] = vertex of factor i
};

// Cartesian prime factorization of a connected graph. The result is audited by
// rebuilding the product; returns nullopt when the audit fails.
std::optional<Factorization> prime_factorization(const Graph& g);

bool is_complete(const Graph& g);
bool is_cycle(const Graph& g);
// sizes of the two sides if g is complete bipartite
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g);
int count_triangles_at(const Graph& g, Vertex v);

}  // namespace polygraph
