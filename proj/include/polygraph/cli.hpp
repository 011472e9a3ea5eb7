#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polygraph/graph.hpp"

namespace polygraph::cli {

// exit codes
constexpr int kOk = 0;
constexpr int kFound = 1;  // verify mismatch, replay rejection
constexpr int kUsage = 2;

// Graph tokens: a family with integer parameters ("circulant 8 1,2,4",
// "petersen", "cube 4"), "product A B", "star-clique A v", a file path
// (.g6, .json, edge list) or a graph6 string. Inside product/star-clique the
// operands are single tokens with ':' separating fields ("cycle:5").
Graph parse_graph_tokens(const std::vector<std::string>& tokens);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace polygraph::cli
