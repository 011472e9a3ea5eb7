#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polygraph/bitset.hpp"
#include "polygraph/graph.hpp"

namespace polygraph::geometry {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

std::string to_string(const Rat& r);
Rat parse_rat(const std::string& s);

struct PointConfig {
    int dim = 0;
    std::vector<Vec> points;
    std::vector<std::string> labels;

    std::size_t size() const { return points.size(); }
};

// throws Error on ragged dimensions or duplicate points
void validate(const PointConfig& cfg);

struct Hyperplane {
    Vec normal;  // normal . x <= offset
    Rat offset;
};

struct Facet {
    std::vector<int> vertices;
    Hyperplane plane;
};

struct HullOptions {
    std::size_t cap = 64;
};

struct Polytope {
    PointConfig config;          // vertices only
    int dim = 0;                 // affine dimension
    std::vector<Facet> facets;   // sorted by vertex list
    std::vector<int> source;     // source[i] = index of vertex i in the input config
    std::vector<int> stripped;   // input indices that were not vertices
    std::string name;

    int vertex_count() const { return static_cast<int>(config.points.size()); }
    bool had_non_vertices() const { return !stripped.empty(); }
};

int affine_rank(const std::vector<Vec>& pts);

Polytope convex_hull_facets(const PointConfig& cfg, const HullOptions& opt = {});
// throws Error describing the first violated hull invariant
void audit_hull(const Polytope& p);

Graph skeleton_graph(const Polytope& p);

struct FaceLattice {
    int dim = 0;
    // faces[k] = all k-faces as vertex sets, k = 0..dim (faces[dim] holds P itself)
    std::vector<std::vector<Bitset>> faces;
    std::vector<std::size_t> f_vector() const;  // f_0 .. f_{dim-1}
};

FaceLattice face_lattice(const Polytope& p);
// vertex-facet incidence graphs compared with side colouring
bool combinatorially_equivalent(const Polytope& a, const Polytope& b);

struct GraphMatch {
    std::optional<std::vector<Vertex>> bijection;  // skeleton vertex -> graph vertex
    std::string mismatch;
};
GraphMatch verify_graph(const Polytope& p, const Graph& g);

// catalogue
Polytope segment();
Polytope simplex(int d);
Polytope cube(int d);
Polytope cross_polytope(int d);
Polytope cyclic_polytope(int d, int n);
Polytope polygon(int m);  // rational points on the unit circle
Polytope prism(int m);
Polytope antiprism(int m);
Polytope octahedron();
// simplex cube cross cyclic polygon prism antiprism octahedron segment square triangle
Polytope named_polytope(const std::string& name, const std::vector<int>& params);

// rational point on the unit circle close to angle 2*pi*k/m
std::array<Rat, 2> circle_point(int k, int m, const Rat& offset_fraction = 0);

Polytope product_polytope(const Polytope& p, const Polytope& q);
Polytope join_polytope(const Polytope& p, const Polytope& q);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope pyramid(const Polytope& p, const Rat& apex_height);

// heights indexed like the support configuration
struct Lifting {
    std::vector<Rat> heights;
};

struct SubdivisionComplex {
    PointConfig support;
    std::vector<std::vector<int>> cells;  // support indices, sorted
    std::vector<int> used;                // support indices that are vertices of some cell
    Graph graph;                          // on used (vertex i = used[i])
};

// support = vertices of Q plus optional interior points; must be full-dimensional
SubdivisionComplex regular_subdivision(const PointConfig& support, const Lifting& w);

// P is translated so its vertex centroid is the origin. liftings has one entry
// per vertex of P, or a single entry shared by all vertices.
Polytope lifted_product(const Polytope& p, const PointConfig& support, const std::vector<Lifting>& liftings);

Polytope truncate_vertex(const Polytope& p, int v, Rat t = Rat(1, 3));

Polytope davidsstar(int n);
Polytope davidsstar_minkowski(int n);

Polytope prism_octahedron(int which);  // 0..3
std::vector<Polytope> prism_octahedron_realizations();

// C_d(n) with one extra vertex beyond each facet
Polytope klee_stacked_polytope(int d, int n);

// named lifted-product witnesses: triangle-path, segment-square, segment-octahedron-star, domino-domino
struct Witness {
    std::string name;
    Polytope polytope;
    Graph expected;
};
Witness lifted_product_witness(const std::string& name);
std::vector<std::string> lifted_product_witnesses();

// 3-polytope with skeleton g (g must be planar and 3-connected): Tutte
// embedding with a triangular outer face, lifted by the unit stress; graphs
// without a triangular face are realized through the polar of their dual.
Polytope steinitz_realization(const Graph& g);

// rationals as "p/q"; facets with their hyperplanes; content hash over the vertex list
nlohmann::json polytope_to_json(const Polytope& p);
// re-runs the hull on the stored vertices
Polytope polytope_from_json(const nlohmann::json& j);
std::string polytope_hash(const Polytope& p);
// level k holds the k-faces
nlohmann::json lattice_to_json(const FaceLattice& l);

// 3D coordinates for plotting: 4-polytopes are projected through a facet
std::vector<std::array<double, 3>> schlegel_coordinates(const Polytope& p);

}  // namespace polygraph::geometry
