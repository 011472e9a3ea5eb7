#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polygraph/bitset.hpp"
#include "polygraph/graph.hpp"

namespace polygraph::simple {

struct CycleConflict {
    std::vector<Vertex> a, b;
    std::vector<Vertex> shared;
};

struct Required2Faces {
    std::vector<std::vector<Vertex>> cycles;
    std::optional<CycleConflict> conflict;
};
// G must be d-regular
Required2Faces required_2faces(const Graph& g, int d);

struct SimpleObstruction {
    std::string id;  // separating-cycle, cycles-share-3, induced-K23, induced-petersen
    std::vector<Vertex> witness;
    std::vector<Vertex> witness2;
};
// first failing check, in order
std::optional<SimpleObstruction> simple_obstructions(const Graph& g, int d);
// every failing check (one witness each)
std::vector<SimpleObstruction> simple_obstructions_all(const Graph& g, int d);

enum class FaceKind { Face2, Face3 };

struct CandidateFace {
    Bitset vertices;
    std::vector<Vertex> vlist;  // sorted; cyclic order for Face2
    FaceKind kind = FaceKind::Face3;
    std::vector<std::vector<Vertex>> two_faces;  // Face3 only, global ids, canonical rotation
    std::map<int, int> v_counts;                 // degree -> number of vertices
    std::map<int, int> p_counts;                 // face size -> number of 2-faces
};

struct EnumerationOptions {
    std::uint64_t node_budget = 10'000'000;
    int exact_degree = 0;  // when > 0 keep only candidates that are regular of this degree
};

struct CandidateList {
    std::vector<CandidateFace> faces;
    bool complete = true;
    std::uint64_t nodes = 0;
    std::uint64_t triangle_free_pruned = 0;
};
CandidateList enumerate_candidate_facets(const Graph& g, int size_cap, const EnumerationOptions& opt = {});

enum class Outcome { RealizableComplex, Refuted, Unknown };
std::string outcome_name(Outcome o);

struct SearchBudget {
    std::uint64_t nodes = 10'000'000;
    std::size_t transcript_lines = 2'000'000;
    std::size_t cycle_limit = 500'000;
};

struct SearchResult {
    Outcome outcome = Outcome::Unknown;
    std::string mode;   // general, simple
    std::string layer;  // layer that decided the outcome
    std::vector<std::vector<Vertex>> complex;  // chosen faces on success
    std::vector<std::string> transcript;       // JSON lines
    bool transcript_complete = true;
    std::string transcript_hash;
    std::uint64_t nodes = 0;
};

SearchResult facet_complex_search(const Graph& g, int d, const SearchBudget& budget = {});

struct ReplayResult {
    bool valid = false;
    Outcome claimed = Outcome::Unknown;
    std::string message;
};
ReplayResult replay_transcript(const Graph& g, const std::vector<std::string>& lines);

std::string hash_lines(const std::vector<std::string>& lines);

struct FactorVerdict {
    Graph factor;
    int degree = 0;
    std::string status;  // simply-polytopal, refuted, unknown
    std::string reason;
};

struct ProductRuleOutcome {
    bool applicable = false;  // G is a nontrivial regular product
    std::optional<int> excluded_dimension;
    std::vector<FactorVerdict> factors;
};
ProductRuleOutcome product_factor_check(const Graph& g, const std::vector<Graph>* factors = nullptr,
                                        const SearchBudget& budget = {});

}  // namespace polygraph::simple
