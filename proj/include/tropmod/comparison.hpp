#pragma once

#include "tropmod/graph.hpp"
#include "tropmod/strata.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tropmod {

// Dual nodal type of a contraction of a regular base: vertices are the
// connected components of the surviving subgraph (weight = that component's
// first Betti number, i.e. the genus of the corresponding irreducible
// piece), edges are the contracted edges (the nodes), leaves ride along.
struct ComponentData {
    int g = 0; // component genus
    int n = 0; // marked points on it
    int d = 0; // node incidences, loops counted twice
};

struct NodalType {
    WeightedGraph dual;
    std::vector<ComponentData> components; // aligned with dual.vertices()
    int k = 0;                             // number of components
    int d = 0;                             // number of nodes
    std::string key;                       // canonical key of dual
};

// Throws DomainError unless the base is a regular tropicalization.
// Construction enforces the type invariants: genus(dual) = genus(base),
// dual stable, sum(d_i) = 2d, and g = sum(g_i) + d - k + 1.
NodalType dual_type(const WeightedGraph& base,
                    const std::vector<std::string>& q);

// Both sides of the dimension bookkeeping for a stratum with
// `stratum_edges` surviving edges:
//   sum_i (3 g_i - 3 + n_i + d_i) = stratum_edges
//   d = (3g - 3 + n) - stratum_edges
// Throws IntegrityError when violated (it is a theorem).
struct DimensionReport {
    int lhs = 0;
    int stratum_edges = 0;
    int d = 0;
    int d_expected = 0;
    bool ok = false;
};

DimensionReport dimension_identity(const NodalType& t, int stratum_edges);

// Stratum -> nodal class, with the well-definedness across witnesses of a
// stratum checked rather than assumed: if two witnesses of one stratum gave
// non-isomorphic nodal types, that is reported, not silently merged.
struct StratificationMap {
    std::vector<std::string> stratum_class;     // per stratum: nodal class key
    std::map<std::string, NodalType> classes;   // class key -> representative
    struct Violation {
        int stratum = 0;
        std::uint64_t witness_a = 0;
        std::uint64_t witness_b = 0;
    };
    std::vector<Violation> violations;
};

StratificationMap stratification_map(const StrataPoset& poset);

// For every nested witness pair q ⊆ q″ of the poset's base: contracting the
// dual edges q″∖q of dualType(base,q″) must recover dualType(base,q). This
// is the combinatorial order-preservation of the comparison map.
struct OrderPreservationReport {
    long long checked = 0;
    struct Violation {
        std::uint64_t q = 0;
        std::uint64_t q2 = 0;
    };
    std::vector<Violation> violations;
};

OrderPreservationReport order_preservation(const StrataPoset& poset);

// Coverage of the stable census by nodal classes of regular bases at (g,n):
// which classes each base hits, which it misses (non-surjectivity), which
// distinct strata collide on one class (non-injectivity), and the union.
struct BaseCoverage {
    WeightedGraph base;
    std::string base_key;
    StrataPoset poset;
    StratificationMap map;
    std::vector<std::string> hit;                 // sorted distinct class keys
    std::vector<std::string> missing;             // stable keys not hit
    std::vector<std::pair<int, int>> collisions;  // stratum index pairs
};

struct CoverageOptions {
    int max_edges = 9; // enumeration refusal bound
    int threads = 0;
};

struct CoverageReport {
    int genus = 0;
    int leaves = 0;
    std::vector<std::string> stable_keys;            // sorted
    std::map<std::string, WeightedGraph> stable_reps;
    std::vector<BaseCoverage> bases;                 // sorted by base key
    std::vector<std::string> union_missing;          // hit by no base
};

CoverageReport coverage(int genus, int leaves, const CoverageOptions& opts = {});

} // namespace tropmod
