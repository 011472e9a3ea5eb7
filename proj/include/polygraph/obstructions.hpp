#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polygraph/algorithms.hpp"
#include "polygraph/graph.hpp"

namespace polygraph::obstructions {

struct BalinskiResult {
    bool pass = false;
    int kappa = 0;
    std::vector<Vertex> cut;  // size < d on failure (empty when the vertex count is too small)
    std::string reason;
};
BalinskiResult balinski_check(const Graph& g, int d);

struct PSPWitness {
    Vertex principal = -1;
    std::vector<Vertex> branch;
    // one path per unordered branch pair (i < j in branch order), endpoints included
    std::vector<std::vector<Vertex>> paths;
};
bool verify_psp_witness(const Graph& g, int d, const PSPWitness& w, std::string* why = nullptr);

enum class PspStatus { Witness, Failed, Budget };

struct PspOptions {
    std::uint64_t node_budget = 1'000'000;
    // test hook: permutes neighbour subsets and path orders
    std::optional<std::uint64_t> shuffle_seed;
};

struct PspResult {
    PspStatus status = PspStatus::Budget;
    std::vector<PSPWitness> witnesses;  // one per checked vertex on success
    Vertex failing = -1;
    std::string reason;
    std::uint64_t nodes = 0;
    bool exhausted = false;
};
PspResult psp_check(const Graph& g, int d, std::optional<Vertex> v = std::nullopt, const PspOptions& opt = {});

// Gale evenness count of facets of C_d(n)
long cyclic_facet_count(int d, int n);

struct SeparationLevel {
    int n = 0;
    long bound = 0;
    std::string method;  // "degree-bound" or "enumerated" or "budget"
    int worst = 0;       // largest component count seen (enumerated levels)
};

struct SeparationResult {
    enum class Status { Pass, Fail, Incomplete } status = Status::Pass;
    std::vector<Vertex> separator;
    int components = 0;
    long bound = 0;
    int cap = 0;
    std::vector<SeparationLevel> levels;
};
SeparationResult separation_check(const Graph& g, int d, int cap, std::uint64_t subset_budget = 20'000'000);

struct SteinitzResult {
    bool yes = false;
    std::string reason;
    PlanarityResult planarity;
    std::vector<Vertex> cut;  // when not 3-connected
};
SteinitzResult steinitz_decide(const Graph& g);
std::vector<std::vector<Vertex>> whitney_2faces(const Graph& g);

struct Contraction {
    std::vector<Vertex> clique;
    Graph contracted;  // clique becomes its smallest vertex; later vertices shift down
};
std::vector<Contraction> reverse_star_clique(const Graph& g);

// R6c: iterated contractions reaching a 4-regular 3-polytopal graph
struct StarCliqueChain {
    std::vector<std::vector<Vertex>> cliques;  // each in the numbering of its own stage
    Graph final_graph;
};
std::optional<StarCliqueChain> star_clique_obstruction(const Graph& g, std::size_t max_states = 2000);

enum class Status { Excluded, Confirmed, Unknown };
std::string status_name(Status s);

struct DimensionVerdict {
    int d = 0;
    Status status = Status::Unknown;
    std::string reason;
    nlohmann::json certificate;
};

struct RangeBudget {
    std::uint64_t psp_nodes = 1'000'000;
    int sep_cap = 8;
    std::uint64_t search_nodes = 10'000'000;
    std::size_t hull_cap = 64;
    unsigned threads = 1;
};

struct ObstructionReport {
    Graph graph;
    std::vector<DimensionVerdict> verdicts;
    std::vector<int> confirmed;
    std::vector<int> open;  // every d that is not excluded

    nlohmann::json to_json() const;
};

ObstructionReport polytopality_range(const Graph& g, const RangeBudget& budget = {});

// Re-checks the certificate of an EXCLUDED or CONFIRMED verdict from scratch.
bool verify_verdict(const Graph& g, const DimensionVerdict& v, std::string* why = nullptr);

}  // namespace polygraph::obstructions
