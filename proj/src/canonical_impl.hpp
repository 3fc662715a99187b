#pragma once

// Internal colored-multigraph canonicalization shared by the isomorphism
// module and the enumeration kernels (which canonicalize interior structures
// colored by leaf counts before labels are assigned).

#include <cstdint>
#include <string>
#include <vector>

namespace tropmod::detail {

struct ColoredGraph {
    int n = 0;
    std::vector<std::uint32_t> color;        // per vertex (weight, or stub count)
    std::vector<std::vector<int>> labels;    // sorted leaf labels per vertex
    std::vector<std::vector<int>> mat;       // multiplicities, diagonal = loops
};

struct CanonResult {
    std::string key;          // byte encoding of the lex-min ordering
    std::vector<int> order;   // order[pos] = vertex index realizing it
};

// Exact lex-min canonical form. Equal keys iff isomorphic as colored
// multigraphs (colors, labels and multiplicities preserved). Throws
// DomainError beyond 16 vertices or past the search budget.
CanonResult canonical_colored(const ColoredGraph& g);

} // namespace tropmod::detail
