#include "tropmod/contraction.hpp"

#include "tropmod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropmod {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Contraction contract(const WeightedGraph& g,
                     const std::vector<std::string>& edge_ids) {
    std::set<std::string> q_ids(edge_ids.begin(), edge_ids.end());
    std::vector<char> in_q(g.edge_count(), 0);
    for (const auto& id : q_ids) in_q[g.edge_index(id)] = 1;

    UnionFind uf(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_q[e]) uf.unite(g.edges()[e].u, g.edges()[e].v);

    // Component members (by vertex id) and contracted-edge counts per root.
    std::map<int, std::vector<std::string>> members;
    std::map<int, int> q_edges;
    std::map<int, int> weight_sum;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int r = uf.find(v);
        members[r].push_back(g.vertices()[v].id);
        weight_sum[r] += g.vertices()[v].weight;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (in_q[e]) q_edges[uf.find(g.edges()[e].u)] += 1;

    // Result vertex ids join the sorted member ids. Pathological inputs
    // (ids already containing '+') could collide; disambiguate suffixes.
    std::map<int, std::string> root_id;
    std::set<std::string> taken;
    std::vector<std::pair<std::string, int>> ordered; // id, root
    for (auto& [root, ids] : members) {
        std::sort(ids.begin(), ids.end());
        std::string id = ids[0];
        for (std::size_t i = 1; i < ids.size(); ++i) id += "+" + ids[i];
        while (!taken.insert(id).second) id += "#";
        root_id[root] = id;
        ordered.emplace_back(id, root);
    }
    std::sort(ordered.begin(), ordered.end());

    Contraction c;
    c.contracted.assign(q_ids.begin(), q_ids.end());

    std::vector<WeightedGraph::VertexSpec> vs;
    for (const auto& [id, root] : ordered) {
        // Preimage = members + contracted edges among them; connected by
        // construction, so b1 = edges - (size - 1).
        int b1 = q_edges.count(root) ? q_edges[root] : 0;
        b1 -= static_cast<int>(members[root].size()) - 1;
        c.preimage_betti[id] = b1;
        vs.push_back({id, b1 + weight_sum[root]});
    }

    std::vector<WeightedGraph::EdgeSpec> es;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (in_q[e]) continue;
        const auto& edge = g.edges()[e];
        es.push_back({edge.id, root_id[uf.find(edge.u)],
                      root_id[uf.find(edge.v)]});
        c.edge_map[edge.id] = edge.id;
    }

    std::vector<WeightedGraph::LeafSpec> ls;
    for (const auto& l : g.leaves())
        ls.push_back({l.label, root_id[uf.find(l.at)]});

    c.result = WeightedGraph::create(std::move(vs), std::move(es), std::move(ls));
    for (int v = 0; v < g.vertex_count(); ++v)
        c.vertex_map[g.vertices()[v].id] = root_id[uf.find(v)];
    return c;
}

BettiDecomposition betti_decomposition(
    const WeightedGraph& g, const std::vector<std::string>& edge_ids) {
    Contraction c = contract(g, edge_ids);

    BettiDecomposition d;
    d.base = stats(g).betti1;
    d.result = stats(c.result).betti1;
    d.per_vertex = c.preimage_betti;
    for (const auto& [id, b1] : d.per_vertex) d.preimage_total += b1;

    // Independent route for the q-subgraph's Betti number: all of g's
    // vertices, only the contracted edges.
    UnionFind uf(g.vertex_count());
    int q_count = 0;
    std::set<std::string> q_ids(c.contracted.begin(), c.contracted.end());
    for (const auto& e : g.edges()) {
        if (!q_ids.count(e.id)) continue;
        uf.unite(e.u, e.v);
        ++q_count;
    }
    std::set<int> roots;
    for (int v = 0; v < g.vertex_count(); ++v) roots.insert(uf.find(v));
    int direct = q_count - g.vertex_count() + static_cast<int>(roots.size());

    integrity_check(direct == d.preimage_total,
                    "q-subgraph Betti number must equal the preimage sum");
    integrity_check(d.base == d.result + d.preimage_total,
                    "b1(G) must decompose as b1(G/q) + b1(q-subgraph)");
    return d;
}

std::optional<ContractionWitness> is_weighted_contraction_of(
    const WeightedGraph& a, const WeightedGraph& b) {
    GraphStats sa = stats(a), sb = stats(b);
    if (sa.genus != sb.genus || sa.leaf_count != sb.leaf_count)
        return std::nullopt;
    int k = sb.edge_count - sa.edge_count;
    if (k < 0 || sa.vertex_count > sb.vertex_count) return std::nullopt;

    // Contracting q removes exactly |q| edges, so any witness has size k.
    std::vector<std::string> ids;
    for (const auto& e : b.edges()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    int m = static_cast<int>(ids.size());

    std::string key_a = canonical_key(a);

    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<std::string> q;
        for (int i : pick) q.push_back(ids[i]);
        Contraction c = contract(b, q);
        if (c.result.vertex_count() == sa.vertex_count &&
            canonical_key(c.result) == key_a) {
            auto iso = are_isomorphic(a, c.result);
            integrity_check(iso.has_value(),
                            "equal canonical keys must yield a witness");
            return ContractionWitness{q, *iso};
        }
        // next k-combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

} // namespace tropmod
