#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "polygraph/graph.hpp"

namespace polygraph {

// "n m" header, then one "u v" pair per line; '#' starts a comment
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

Graph parse_graph6(const std::string& s);
std::string to_graph6(const Graph& g);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// picks the format from the extension: .g6 graph6, .json JSON, otherwise edge list
Graph load_graph_file(const std::string& path);

}  // namespace polygraph
