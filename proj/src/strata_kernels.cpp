#include "strata_impl.hpp"

#include "tropmod/contraction.hpp"
#include "tropmod/isomorphism.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropmod::detail {

namespace {

// One subset: contract and classify. The canonical key alone decides the
// stratum, so this is the whole per-mask unit of work.
std::string classify_mask(const WeightedGraph& base,
                          const std::vector<std::string>& edge_ids,
                          std::uint64_t mask) {
    std::vector<std::string> q;
    for (std::size_t i = 0; i < edge_ids.size(); ++i)
        if (mask & (std::uint64_t(1) << i)) q.push_back(edge_ids[i]);
    return canonical_key(contract(base, q).result);
}

} // namespace

SweepMap sweep_serial(const WeightedGraph& base,
                      const std::vector<std::string>& edge_ids) {
    SweepMap groups;
    std::uint64_t total = std::uint64_t(1) << edge_ids.size();
    for (std::uint64_t mask = 0; mask < total; ++mask)
        groups[classify_mask(base, edge_ids, mask)].push_back(mask);
    return groups;
}

SweepMap sweep_parallel(const WeightedGraph& base,
                        const std::vector<std::string>& edge_ids, int threads) {
#ifndef _OPENMP
    (void)threads;
    return sweep_serial(base, edge_ids);
#else
    std::uint64_t total = std::uint64_t(1) << edge_ids.size();
    int nthreads = threads > 0 ? threads : omp_get_max_threads();

    // Per-thread accumulation, merged afterwards: no shared mutable state
    // during the sweep, and the merge result is independent of the schedule
    // because grouping is purely by key.
    std::vector<SweepMap> locals(nthreads);
#pragma omp parallel num_threads(nthreads)
    {
        SweepMap& mine = locals[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (long long m = 0; m < static_cast<long long>(total); ++m) {
            std::uint64_t mask = static_cast<std::uint64_t>(m);
            mine[classify_mask(base, edge_ids, mask)].push_back(mask);
        }
    }

    SweepMap groups;
    for (auto& local : locals)
        for (auto& [key, masks] : local) {
            auto& dst = groups[key];
            dst.insert(dst.end(), masks.begin(), masks.end());
        }
    return groups;
#endif
}

} // namespace tropmod::detail
