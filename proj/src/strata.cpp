#include "tropmod/strata.hpp"

#include "tropmod/contraction.hpp"
#include "tropmod/errors.hpp"
#include "tropmod/isomorphism.hpp"
#include "strata_impl.hpp"

#include <algorithm>
#include <bit>

namespace tropmod {

namespace {

constexpr int kAbsoluteEdgeCap = 22; // 2^|E| mask bookkeeping

std::vector<std::string> sorted_edge_ids(const WeightedGraph& g) {
    std::vector<std::string> ids;
    for (const auto& e : g.edges()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

void validate_base(const WeightedGraph& base, const StrataOptions& opts) {
    if (base.vertex_count() == 0 || base.components().second != 1)
        throw DomainError("strata require a nonempty connected base graph");
    int cap = std::min(opts.max_edges, kAbsoluteEdgeCap);
    if (base.edge_count() > cap)
        throw DomainError("refusing strata sweep over " +
                          std::to_string(base.edge_count()) +
                          " edges (bound " + std::to_string(cap) +
                          "; the sweep is 2^|E| contractions)");
}

// Reachability closure over small dense posets, rows as bitsets.
struct BitMatrix {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitMatrix(int size)
        : n(size), words((size + 63) / 64), bits(std::size_t(size) * words, 0) {}
    void set(int i, int j) { bits[std::size_t(i) * words + j / 64] |= std::uint64_t(1) << (j % 64); }
    bool get(int i, int j) const {
        return bits[std::size_t(i) * words + j / 64] >> (j % 64) & 1;
    }
    void or_row(int dst, int src) {
        for (int w = 0; w < words; ++w)
            bits[std::size_t(dst) * words + w] |= bits[std::size_t(src) * words + w];
    }
};

StrataPoset assemble(const WeightedGraph& base,
                     std::vector<std::string> edge_ids,
                     detail::SweepMap groups) {
    StrataPoset poset;
    poset.base = base;
    poset.edge_ids = std::move(edge_ids);
    int ecount = static_cast<int>(poset.edge_ids.size());
    std::uint64_t total = std::uint64_t(1) << ecount;

    std::uint64_t witness_total = 0;
    for (auto& [key, masks] : groups) {
        std::sort(masks.begin(), masks.end());
        Stratum s;
        s.key = key;
        s.witnesses = masks;
        witness_total += masks.size();

        int popcnt = std::popcount(masks.front());
        for (std::uint64_t m : masks)
            integrity_check(std::popcount(m) == popcnt,
                            "witnesses of one stratum must contract equally "
                            "many edges");
        s.dimension = ecount - popcnt;

        std::vector<std::string> q;
        for (int i = 0; i < ecount; ++i)
            if (masks.front() & (std::uint64_t(1) << i))
                q.push_back(poset.edge_ids[i]);
        s.representative = normalized_copy(contract(base, q).result);
        integrity_check(s.representative.edge_count() == s.dimension,
                        "stratum dimension must equal its edge count");
        s.aut_edge_action_order = aut_orders(s.representative).edge_action;
        poset.strata.push_back(std::move(s));
    }
    integrity_check(witness_total == total,
                    "witnesses must partition all 2^|E| subsets");

    std::sort(poset.strata.begin(), poset.strata.end(),
              [](const Stratum& a, const Stratum& b) {
                  if (a.dimension != b.dimension) return a.dimension > b.dimension;
                  return a.key < b.key;
              });

    int n = static_cast<int>(poset.strata.size());
    std::vector<int> idx_of_mask(total);
    for (int i = 0; i < n; ++i)
        for (std::uint64_t m : poset.strata[i].witnesses) idx_of_mask[m] = i;

    // Witness inclusion is generated by single-bit extensions: q ⊆ q∪{b}
    // makes the bigger subset's stratum the smaller element. The full order
    // is the transitive closure (any chain of bit additions).
    BitMatrix reach(n);
    for (std::uint64_t m = 0; m < total; ++m)
        for (int b = 0; b < ecount; ++b) {
            if (m & (std::uint64_t(1) << b)) continue;
            int i = idx_of_mask[m | (std::uint64_t(1) << b)];
            int j = idx_of_mask[m];
            if (i != j) reach.set(i, j);
        }
    // Strata are sorted by descending dimension and every relation points
    // to a strictly higher dimension, i.e. to a smaller index. Closing rows
    // in ascending index order therefore sees fully closed targets.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (reach.get(i, j)) reach.or_row(i, j);

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && reach.get(i, j)) poset.order.emplace_back(i, j);

    for (auto [i, j] : poset.order) {
        bool covering = true;
        for (int k = 0; k < n && covering; ++k)
            if (k != i && k != j && reach.get(i, k) && reach.get(k, j))
                covering = false;
        if (covering) poset.hasse.emplace_back(i, j);
    }

    // Unique extremes: the empty subset is the only full-dimensional
    // stratum and everything lies below it; the full subset contracts to a
    // single vertex carrying the whole genus.
    int top = -1, bottom = -1;
    for (int i = 0; i < n; ++i) {
        if (poset.strata[i].dimension == ecount) {
            integrity_check(top < 0, "top stratum must be unique");
            top = i;
        }
        if (poset.strata[i].dimension == 0) {
            integrity_check(bottom < 0, "bottom stratum must be unique");
            bottom = i;
        }
    }
    integrity_check(top >= 0 && bottom >= 0,
                    "poset must have top and bottom strata");
    for (int i = 0; i < n; ++i) {
        integrity_check(i == top || reach.get(i, top),
                        "every stratum must lie below the open stratum");
        integrity_check(i == bottom || reach.get(bottom, i),
                        "the point stratum must lie below every stratum");
    }
    const auto& brep = poset.strata[bottom].representative;
    integrity_check(brep.vertex_count() == 1 &&
                        stats(brep).genus == stats(base).genus,
                    "bottom stratum must be one vertex carrying the genus");

    return poset;
}

} // namespace

std::vector<std::string> StrataPoset::witness_edges(std::uint64_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < edge_ids.size(); ++i)
        if (mask & (std::uint64_t(1) << i)) out.push_back(edge_ids[i]);
    return out;
}

StrataPoset strata_of(const WeightedGraph& base, const StrataOptions& opts) {
    validate_base(base, opts);
    auto ids = sorted_edge_ids(base);
    return assemble(base, ids, detail::sweep_parallel(base, ids, opts.threads));
}

StrataPoset strata_of_serial(const WeightedGraph& base,
                             const StrataOptions& opts) {
    validate_base(base, opts);
    auto ids = sorted_edge_ids(base);
    return assemble(base, ids, detail::sweep_serial(base, ids));
}

} // namespace tropmod
