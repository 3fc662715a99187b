#pragma once

#include "tropmod/graph.hpp"

#include <functional>
#include <vector>

namespace tropmod {

struct EnumOptions {
    // Refusal bound on edge count 3g-3+n (desk scale).
    int max_edges = 9;
    // 0 = library default thread count (vector API only; the streaming
    // visitor always runs serially for a deterministic visit order).
    int threads = 0;
};

// All regular tropicalizations of type (g,n): connected trivalent weight-0
// multigraphs of genus g with leaves labeled 1..n, one normalized
// representative per isomorphism class, sorted by canonical key.
//
// Generation is a half-edge pairing sweep factored through leaf-count
// profiles: distribute leaf counts over the 2g-2+n vertices first, pair up
// the remaining interior half-edges, deduplicate interior structures as
// leaf-count-colored multigraphs, then distribute the actual labels.
// Throws DomainError when 2-2g-n >= 0 or 3g-3+n exceeds the bound.
std::vector<WeightedGraph> enumerate_regular(int genus, int leaves,
                                             const EnumOptions& opts = {});

// Streaming variant: one call per isomorphism class (normalized
// representative), deterministic discovery order, bounded memory. Useful
// when the census is large, e.g. (0,9) with 135135 classes.
void enumerate_regular_visit(
    int genus, int leaves,
    const std::function<void(const WeightedGraph&)>& visit,
    const EnumOptions& opts = {});

// All stable weighted genus-g graphs with leaves labeled 1..n (vertex
// weights allowed, stability: weight-0 vertices need degree >= 3, weight-1
// vertices degree >= 1), one normalized representative per isomorphism
// class, sorted by canonical key. Enumerates vertex count k <= 2g-2+n,
// non-increasing (weight, leaf-count) sequences, and edge multiplicity
// matrices with |E| = g - sum(w) + k - 1.
std::vector<WeightedGraph> enumerate_stable_weighted(int genus, int leaves,
                                                     const EnumOptions& opts = {});

} // namespace tropmod
