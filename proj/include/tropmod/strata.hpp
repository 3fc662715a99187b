#pragma once

#include "tropmod/graph.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tropmod {

// One isomorphism class of contractions of a fixed base graph.
struct Stratum {
    WeightedGraph representative;      // normalized contraction of the
                                       // lexicographically smallest witness
    int dimension = 0;                 // |E(representative)| = |E(base)| - |q|
    std::vector<std::uint64_t> witnesses; // bitmasks over StrataPoset::edge_ids,
                                          // sorted ascending
    std::uint64_t aut_edge_action_order = 0;
    std::string key;                   // canonical key of the representative
};

// The full stratification of the compactified cone over `base`: all 2^|E|
// edge subsets grouped by the isomorphism class of their contraction,
// ordered by "is a weighted contraction of".
struct StrataPoset {
    WeightedGraph base;
    std::vector<std::string> edge_ids;       // sorted; witness bit i = edge_ids[i]
    std::vector<Stratum> strata;             // sorted by (dimension desc, key)
    std::vector<std::pair<int, int>> order;  // (i,j): strata[i] <= strata[j], i != j
    std::vector<std::pair<int, int>> hasse;  // transitive reduction of `order`

    std::vector<std::string> witness_edges(std::uint64_t mask) const;
};

struct StrataOptions {
    // Refusal bound on |E(base)| (the sweep is 2^|E|). The absolute cap is
    // 22 regardless, for mask bookkeeping memory.
    int max_edges = 20;
    // 0 = library default thread count.
    int threads = 0;
};

// OpenMP subset sweep. Deterministic: results are merged by canonical key
// and sorted, independent of thread count or schedule.
StrataPoset strata_of(const WeightedGraph& base, const StrataOptions& opts = {});

// Serial reference implementation (kept for differential testing and the
// benchmark); produces bit-identical posets.
StrataPoset strata_of_serial(const WeightedGraph& base,
                             const StrataOptions& opts = {});

} // namespace tropmod
