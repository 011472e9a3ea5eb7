#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polygraph/bitset.hpp"

namespace polygraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    std::size_t size() const { return m_; }
    bool empty() const { return n_ == 0; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    const Bitset& row(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    int min_degree() const;
    int max_degree() const;
    std::optional<int> regular_degree() const;
    std::vector<Edge> edges() const;  // u < v, sorted

    const std::string& label() const { return label_; }
    Graph with_label(std::string label) const;

    // induced subgraph; vertex i of the result is vs[i]
    Graph induced(std::span<const Vertex> vs) const;
    Graph induced(const Bitset& vs) const;
    Graph complement() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    friend Graph make_graph(int, std::span<const Edge>, std::vector<std::string>*);
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Bitset> rows_;
    std::string label_;
};

// Throws Error on self-loops or out-of-range endpoints. Duplicate edges are
// dropped; one message per duplicate goes to warnings when given.
Graph make_graph(int n, std::span<const Edge> edges, std::vector<std::string>* warnings = nullptr);
Graph make_graph(int n, std::initializer_list<Edge> edges);

bool is_connected(const Graph& g);
// number of connected components of g - removed
int count_components(const Graph& g, const Bitset& removed);
std::vector<std::vector<Vertex>> components(const Graph& g, const Bitset& removed);

}  // namespace polygraph
