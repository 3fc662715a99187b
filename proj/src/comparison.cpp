#include "tropmod/comparison.hpp"

#include "tropmod/contraction.hpp"
#include "tropmod/enumerate.hpp"
#include "tropmod/errors.hpp"
#include "tropmod/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropmod {

NodalType dual_type(const WeightedGraph& base,
                    const std::vector<std::string>& q) {
    if (!is_regular_tropicalization(base))
        throw DomainError("dual types are defined over regular "
                          "tropicalizations (connected, trivalent, weight 0)");

    std::set<std::string> q_ids(q.begin(), q.end());
    std::vector<char> in_q(base.edge_count(), 0);
    for (const auto& id : q_ids) in_q[base.edge_index(id)] = 1;

    // Components of the surviving subgraph (all vertices, edges not in q).
    std::vector<int> parent(base.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int>* pp = &parent;
    auto find = [pp](int x) {
        while ((*pp)[x] != x) {
            (*pp)[x] = (*pp)[(*pp)[x]];
            x = (*pp)[x];
        }
        return x;
    };
    for (int e = 0; e < base.edge_count(); ++e)
        if (!in_q[e]) parent[find(base.edges()[e].u)] = find(base.edges()[e].v);

    std::map<int, std::vector<std::string>> members;
    std::map<int, int> surviving_edges;
    for (int v = 0; v < base.vertex_count(); ++v)
        members[find(v)].push_back(base.vertices()[v].id);
    for (int e = 0; e < base.edge_count(); ++e)
        if (!in_q[e]) surviving_edges[find(base.edges()[e].u)] += 1;

    std::map<int, std::string> comp_id;
    std::vector<std::pair<std::string, int>> ordered;
    for (auto& [root, ids] : members) {
        std::sort(ids.begin(), ids.end());
        std::string id = ids[0];
        for (std::size_t i = 1; i < ids.size(); ++i) id += "+" + ids[i];
        comp_id[root] = id;
        ordered.emplace_back(id, root);
    }
    std::sort(ordered.begin(), ordered.end());

    // Component genus = b1 of the surviving component subgraph (connected).
    std::vector<WeightedGraph::VertexSpec> vs;
    std::map<std::string, int> comp_index;
    for (const auto& [id, root] : ordered) {
        int edges_inside = surviving_edges.count(root) ? surviving_edges[root] : 0;
        int b1 = edges_inside - static_cast<int>(members[root].size()) + 1;
        comp_index[id] = static_cast<int>(vs.size());
        vs.push_back({id, b1});
    }

    // Each contracted edge becomes a node joining the components of its
    // endpoints (a loop when both sit in the same component).
    std::vector<WeightedGraph::EdgeSpec> es;
    for (int e = 0; e < base.edge_count(); ++e) {
        if (!in_q[e]) continue;
        const auto& edge = base.edges()[e];
        es.push_back({edge.id, comp_id[find(edge.u)], comp_id[find(edge.v)]});
    }
    std::vector<WeightedGraph::LeafSpec> ls;
    for (const auto& l : base.leaves())
        ls.push_back({l.label, comp_id[find(l.at)]});

    NodalType t;
    t.dual = WeightedGraph::create(std::move(vs), std::move(es), std::move(ls));
    t.k = t.dual.vertex_count();
    t.d = t.dual.edge_count();
    t.key = canonical_key(t.dual);

    t.components.resize(t.k);
    for (int v = 0; v < t.k; ++v) {
        t.components[v].g = t.dual.vertices()[v].weight;
        t.components[v].n = t.dual.leaf_degree(v);
        t.components[v].d = 0;
    }
    for (const auto& e : t.dual.edges()) {
        t.components[e.u].d += 1;
        t.components[e.v].d += 1; // loops count twice via both branches
    }

    // Type invariants (theorems; failure is a bug).
    GraphStats sb = stats(base), sd = stats(t.dual);
    integrity_check(sd.genus == sb.genus,
                    "nodal dual type must preserve the genus");
    integrity_check(is_stable(t.dual), "nodal dual type must be stable");
    int d_sum = 0, g_sum = 0;
    for (const auto& cdata : t.components) {
        d_sum += cdata.d;
        g_sum += cdata.g;
    }
    integrity_check(d_sum == 2 * t.d,
                    "node incidences must sum to twice the node count");
    integrity_check(sb.genus == g_sum + t.d - t.k + 1,
                    "genus must decompose over components and nodes");
    return t;
}

DimensionReport dimension_identity(const NodalType& t, int stratum_edges) {
    GraphStats sd = stats(t.dual);
    int g = sd.genus;
    int n = sd.leaf_count;

    DimensionReport r;
    r.stratum_edges = stratum_edges;
    for (const auto& c : t.components) r.lhs += 3 * c.g - 3 + c.n + c.d;
    r.d = t.d;
    r.d_expected = (3 * g - 3 + n) - stratum_edges;
    r.ok = r.lhs == stratum_edges && r.d == r.d_expected;
    integrity_check(r.ok, "dimension identity for a nodal stratum failed");
    return r;
}

StratificationMap stratification_map(const StrataPoset& poset) {
    StratificationMap out;
    int n = static_cast<int>(poset.strata.size());
    out.stratum_class.resize(n);

    for (int i = 0; i < n; ++i) {
        const Stratum& s = poset.strata[i];
        std::string cls;
        std::uint64_t first_mask = 0;
        for (std::uint64_t mask : s.witnesses) {
            NodalType t = dual_type(poset.base, poset.witness_edges(mask));
            dimension_identity(t, s.dimension);
            if (cls.empty()) {
                cls = t.key;
                first_mask = mask;
                out.classes.emplace(t.key, std::move(t));
            } else if (t.key != cls) {
                out.violations.push_back({i, first_mask, mask});
            }
        }
        out.stratum_class[i] = cls;
    }
    return out;
}

OrderPreservationReport order_preservation(const StrataPoset& poset) {
    OrderPreservationReport report;
    int ecount = static_cast<int>(poset.edge_ids.size());
    std::uint64_t total = std::uint64_t(1) << ecount;

    // Cache the dual type of every subset once.
    std::vector<NodalType> duals;
    duals.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        duals.push_back(dual_type(poset.base, poset.witness_edges(mask)));

    for (std::uint64_t q2 = 0; q2 < total; ++q2) {
        // All submasks q of q2, including q = q2 and q = 0.
        std::uint64_t sub = q2;
        while (true) {
            std::uint64_t diff = q2 & ~sub;
            std::vector<std::string> dual_edges;
            for (int b = 0; b < ecount; ++b)
                if (diff & (std::uint64_t(1) << b))
                    dual_edges.push_back(poset.edge_ids[b]);
            // Contract the extra nodes of the deeper type; must recover the
            // shallower type.
            Contraction c = contract(duals[q2].dual, dual_edges);
            ++report.checked;
            if (canonical_key(c.result) != duals[sub].key)
                report.violations.push_back({sub, q2});
            if (sub == 0) break;
            sub = (sub - 1) & q2;
        }
    }
    return report;
}

CoverageReport coverage(int genus, int leaves, const CoverageOptions& opts) {
    CoverageReport report;
    report.genus = genus;
    report.leaves = leaves;

    EnumOptions eopts;
    eopts.max_edges = opts.max_edges;
    eopts.threads = opts.threads;
    for (const auto& g : enumerate_stable_weighted(genus, leaves, eopts)) {
        std::string key = canonical_key(g);
        report.stable_keys.push_back(key);
        report.stable_reps.emplace(key, g);
    }
    std::sort(report.stable_keys.begin(), report.stable_keys.end());

    StrataOptions sopts;
    sopts.threads = opts.threads;

    for (const auto& base : enumerate_regular(genus, leaves, eopts)) {
        BaseCoverage bc;
        bc.base = base;
        bc.base_key = canonical_key(base);
        bc.poset = strata_of(base, sopts);
        bc.map = stratification_map(bc.poset);

        std::set<std::string> hit(bc.map.stratum_class.begin(),
                                  bc.map.stratum_class.end());
        bc.hit.assign(hit.begin(), hit.end());
        for (const auto& key : report.stable_keys)
            if (!hit.count(key)) bc.missing.push_back(key);

        int n = static_cast<int>(bc.poset.strata.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (bc.map.stratum_class[i] == bc.map.stratum_class[j])
                    bc.collisions.emplace_back(i, j);

        report.bases.push_back(std::move(bc));
    }
    std::sort(report.bases.begin(), report.bases.end(),
              [](const BaseCoverage& a, const BaseCoverage& b) {
                  return a.base_key < b.base_key;
              });

    std::set<std::string> union_hit;
    for (const auto& bc : report.bases)
        union_hit.insert(bc.hit.begin(), bc.hit.end());
    for (const auto& key : report.stable_keys)
        if (!union_hit.count(key)) report.union_missing.push_back(key);
    return report;
}

} // namespace tropmod
