#pragma once

#include "tropmod/graph.hpp"
#include "tropmod/isomorphism.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropmod {

// Result of contracting an edge set q. Each result vertex is a connected
// component of the subgraph spanned by q (single vertices included); its
// weight is the first Betti number of that preimage plus the sum of the
// member weights, which is what makes contraction genus-preserving.
// Surviving edges and leaves keep their ids/labels.
struct Contraction {
    WeightedGraph result;
    std::vector<std::string> contracted;             // sorted q, deduplicated
    std::map<std::string, std::string> vertex_map;   // base id -> result id
    std::map<std::string, std::string> edge_map;     // surviving id -> result id
    std::map<std::string, int> preimage_betti;       // result id -> b1(preimage)
};

// Throws DomainError on unknown edge ids. Duplicate ids in `edge_ids`
// collapse to a set.
Contraction contract(const WeightedGraph& g,
                     const std::vector<std::string>& edge_ids);

// The two-sided Betti bookkeeping of a contraction:
//   b1(G) = b1(G/q) + b1(q-subgraph)   and
//   b1(q-subgraph) = sum of per-result-vertex preimage Betti numbers.
// Both identities are recomputed along independent routes and enforced.
struct BettiDecomposition {
    int base = 0;            // b1 of the source graph
    int result = 0;          // b1 of the contracted graph
    int preimage_total = 0;  // b1 of the subgraph spanned by q
    std::map<std::string, int> per_vertex;
};

BettiDecomposition betti_decomposition(const WeightedGraph& g,
                                       const std::vector<std::string>& edge_ids);

// Witness that a arises from b by contracting `edges`; iso maps a onto
// contract(b, edges).result (whose surviving edge ids are b's own).
struct ContractionWitness {
    std::vector<std::string> edges;
    Isomorphism iso;
};

// Searches subsets q of b's edges with |q| = |E(b)| - |E(a)| in
// lexicographic order and returns the first witness, or nullopt.
// This is the partial order on tropicalization types: a <= b.
std::optional<ContractionWitness> is_weighted_contraction_of(
    const WeightedGraph& a, const WeightedGraph& b);

} // namespace tropmod
