#pragma once

#include "tropmod/comparison.hpp"
#include "tropmod/strata.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace tropmod {

// Permutation in cycle notation over named points, fixed points omitted:
// "(a b)(c d)"; the identity prints "()". Deterministic: each cycle starts
// at its smallest member, cycles sorted by that member.
std::string cycle_notation(const std::map<std::string, std::string>& perm);

// DOT digraph of a stratification poset: one node per stratum labeled
// "dim=k, |witnesses|=m, |AutE|=a"; one arrow per Hasse covering, drawn
// from a stratum to the contraction bounding it.
std::string strata_dot(const StrataPoset& poset);

// JSON form of the poset. Witness lists are spelled out in full when the
// base has at most 12 edges; beyond that each stratum keeps only its
// witness count and minimum witness.
nlohmann::ordered_json strata_to_json(const StrataPoset& poset);

// Markdown table: stratum index, class digest, dimension, witness count,
// edge-action order.
std::string strata_md(const StrataPoset& poset);

// CSV of the comparison map, header
//   base_key,stratum_key,dim,nodal_class_key,covered
// with one row per stratum of each base (covered=1: its nodal class sits in
// the stable census) plus one row per stable class a base misses (empty
// stratum fields, covered=0). Keys are 16-hex digests.
std::string compare_csv(const CoverageReport& report);

// DOT bipartite map: one cluster of stratum nodes per base on the left,
// the stable census classes as boxes on the right, one arrow per
// stratum -> nodal class. Classes no base hits have no incoming arrows.
std::string compare_dot(const CoverageReport& report);

// JSON coverage report: stable census, per-base stratum -> class table,
// hit/missing/collisions, union coverage.
nlohmann::ordered_json compare_to_json(const CoverageReport& report);

// Markdown coverage report: census summary, one section per base, union.
std::string compare_md(const CoverageReport& report);

// Markdown census table: index, class digest, vertices, edges, genus,
// weight sum, |Aut|.
std::string census_md(const std::vector<WeightedGraph>& classes);

} // namespace tropmod
