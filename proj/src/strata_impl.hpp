#pragma once

// Internal interface between the strata assembly (grouping, order, Hasse)
// and the subset-sweep kernels (serial reference + OpenMP).

#include "tropmod/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tropmod::detail {

// Canonical key of the contraction -> witness masks (unsorted here; the
// assembly sorts). Bit i of a mask selects edge_ids[i].
using SweepMap = std::map<std::string, std::vector<std::uint64_t>>;

SweepMap sweep_serial(const WeightedGraph& base,
                      const std::vector<std::string>& edge_ids);

SweepMap sweep_parallel(const WeightedGraph& base,
                        const std::vector<std::string>& edge_ids, int threads);

} // namespace tropmod::detail
