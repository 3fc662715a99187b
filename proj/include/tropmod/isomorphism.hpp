#pragma once

#include "tropmod/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropmod {

// Isomorphisms fix leaf labels pointwise: a vertex carrying label k must map
// to the vertex carrying label k. Edge maps respect endpoints (parallel edges
// may permute within their class).
struct Isomorphism {
    std::map<std::string, std::string> vertex_map; // a-vertex id -> b-vertex id
    std::map<std::string, std::string> edge_map;   // a-edge id -> b-edge id
};

struct AutGroup {
    // Every automorphism (vertex bijection + edge bijection), in a
    // deterministic order.
    std::vector<Isomorphism> elements;
    // Distinct permutations induced on the edge set.
    std::vector<std::map<std::string, std::string>> edge_action;
    // Elements whose edge permutation is the identity.
    std::uint64_t kernel_size = 0;
};

struct AutOrders {
    std::uint64_t group = 0;
    std::uint64_t edge_action = 0; // group / kernel
    std::uint64_t kernel = 0;
};

// Exact canonical form: a byte string equal for two graphs iff they are
// isomorphic (respecting weights and leaf labels; edge ids are immaterial).
// Lex-min over vertex orderings with pruning. Throws DomainError beyond
// 16 vertices or when the search exceeds its node budget.
std::string canonical_key(const WeightedGraph& g);

// Short hex fingerprint of a canonical key, for tables and DOT labels.
std::string key_digest(const std::string& key);

// Isomorphic relabeling into canonical vertex order: vertices become
// v1..vk (canonical positions), edges e1..em (sorted by endpoint positions).
// Two graphs are isomorphic iff their normalized copies are literally equal.
WeightedGraph normalized_copy(const WeightedGraph& g);

// True when iso is a genuine isomorphism from a onto b: bijective maps,
// weights preserved, leaf labels fixed pointwise, endpoints commuting.
bool verify_isomorphism(const WeightedGraph& a, const WeightedGraph& b,
                        const Isomorphism& iso);

// Verified witness, or nullopt when not isomorphic.
std::optional<Isomorphism> are_isomorphic(const WeightedGraph& a,
                                          const WeightedGraph& b);

// All weight/label-respecting vertex bijections a -> b as index maps
// (f[i] = image of a-vertex i). Deterministic lexicographic order.
std::vector<std::vector<int>> all_vertex_isomorphisms(const WeightedGraph& a,
                                                      const WeightedGraph& b);

// Every isomorphism, i.e. each vertex bijection combined with each
// per-parallel-class edge matching. Throws DomainError when the total
// exceeds `cap`.
std::vector<Isomorphism> all_isomorphisms(const WeightedGraph& a,
                                          const WeightedGraph& b,
                                          std::uint64_t cap = 100000);

// Full automorphism group, materialized. Throws DomainError beyond `cap`.
AutGroup automorphisms(const WeightedGraph& g, std::uint64_t cap = 100000);

// Orders only: |Aut| = sum over vertex automorphisms of the product of
// class factorials; kernel counts vertex automorphisms fixing every edge's
// endpoint pair. Cheap even when |Aut| is astronomically large.
AutOrders aut_orders(const WeightedGraph& g);

// Small generating set: vertex-level generators (greedy closure) with the
// order-preserving edge matching, plus a swap and a cycle per parallel class.
std::vector<Isomorphism> aut_generators(const WeightedGraph& g);

} // namespace tropmod
