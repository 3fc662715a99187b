#include "tropmod/graph.hpp"

#include "tropmod/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

namespace tropmod {

namespace {

// Index of id in a map or a DomainError naming what was looked up.
int lookup(const std::unordered_map<std::string, int>& index,
           const std::string& id, const char* kind) {
    auto it = index.find(id);
    if (it == index.end())
        throw DomainError(std::string("unknown ") + kind + " id: '" + id + "'");
    return it->second;
}

} // namespace

WeightedGraph WeightedGraph::create(std::vector<VertexSpec> vertices,
                                    std::vector<EdgeSpec> edges,
                                    std::vector<LeafSpec> leaves) {
    WeightedGraph g;

    std::unordered_map<std::string, int> vidx;
    for (const auto& vs : vertices) {
        if (vs.id.empty()) throw DomainError("vertex id must be nonempty");
        if (vs.weight < 0)
            throw DomainError("vertex '" + vs.id + "' has negative weight");
        if (!vidx.emplace(vs.id, static_cast<int>(g.verts_.size())).second)
            throw DomainError("duplicate vertex id: '" + vs.id + "'");
        g.verts_.push_back(Vertex{vs.id, vs.weight});
    }

    std::unordered_map<std::string, int> eidx;
    for (const auto& es : edges) {
        if (es.id.empty()) throw DomainError("edge id must be nonempty");
        if (!eidx.emplace(es.id, static_cast<int>(g.edges_.size())).second)
            throw DomainError("duplicate edge id: '" + es.id + "'");
        int u = lookup(vidx, es.a, "vertex");
        int v = lookup(vidx, es.b, "vertex");
        if (u > v) std::swap(u, v);
        g.edges_.push_back(Edge{es.id, u, v});
    }

    for (const auto& ls : leaves) {
        if (ls.label <= 0)
            throw DomainError("leaf labels must be positive integers");
        g.leaves_.push_back(Leaf{ls.label, lookup(vidx, ls.at, "vertex")});
    }
    std::sort(g.leaves_.begin(), g.leaves_.end(),
              [](const Leaf& a, const Leaf& b) { return a.label < b.label; });
    for (int i = 0; i < static_cast<int>(g.leaves_.size()); ++i) {
        if (g.leaves_[i].label != i + 1)
            throw DomainError("leaf labels must be exactly 1..n (got label " +
                              std::to_string(g.leaves_[i].label) + " at position " +
                              std::to_string(i + 1) + ")");
    }

    return g;
}

bool WeightedGraph::has_vertex(const std::string& id) const {
    for (const auto& v : verts_)
        if (v.id == id) return true;
    return false;
}

bool WeightedGraph::has_edge(const std::string& id) const {
    for (const auto& e : edges_)
        if (e.id == id) return true;
    return false;
}

int WeightedGraph::vertex_index(const std::string& id) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (verts_[i].id == id) return i;
    throw DomainError("unknown vertex id: '" + id + "'");
}

int WeightedGraph::edge_index(const std::string& id) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].id == id) return i;
    throw DomainError("unknown edge id: '" + id + "'");
}

int WeightedGraph::degree(int vertex_idx) const {
    int d = 0;
    for (const auto& e : edges_) {
        if (e.u == vertex_idx) ++d;
        if (e.v == vertex_idx) ++d; // loops hit both branches: +2
    }
    for (const auto& l : leaves_)
        if (l.at == vertex_idx) ++d;
    return d;
}

int WeightedGraph::leaf_degree(int vertex_idx) const {
    int d = 0;
    for (const auto& l : leaves_)
        if (l.at == vertex_idx) ++d;
    return d;
}

std::vector<std::vector<int>> WeightedGraph::adjacency_matrix() const {
    std::vector<std::vector<int>> m(vertex_count(),
                                    std::vector<int>(vertex_count(), 0));
    for (const auto& e : edges_) {
        if (e.u == e.v) {
            m[e.u][e.u] += 1;
        } else {
            m[e.u][e.v] += 1;
            m[e.v][e.u] += 1;
        }
    }
    return m;
}

std::pair<std::vector<int>, int> WeightedGraph::components() const {
    std::vector<int> parent(vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int>* p = &parent;
    auto find = [p](int x) {
        while ((*p)[x] != x) {
            (*p)[x] = (*p)[(*p)[x]];
            x = (*p)[x];
        }
        return x;
    };
    for (const auto& e : edges_) parent[find(e.u)] = find(e.v);

    std::vector<int> comp(vertex_count(), -1);
    int count = 0;
    for (int v = 0; v < vertex_count(); ++v) {
        int r = find(v);
        if (comp[r] < 0) comp[r] = count++;
        comp[v] = comp[r];
    }
    return {comp, count};
}

bool WeightedGraph::operator==(const WeightedGraph& other) const {
    if (vertex_count() != other.vertex_count() ||
        edge_count() != other.edge_count() ||
        leaf_count() != other.leaf_count())
        return false;

    auto vkey = [](const WeightedGraph& g) {
        std::vector<std::pair<std::string, int>> k;
        for (const auto& v : g.verts_) k.emplace_back(v.id, v.weight);
        std::sort(k.begin(), k.end());
        return k;
    };
    if (vkey(*this) != vkey(other)) return false;

    auto ekey = [](const WeightedGraph& g) {
        std::vector<std::tuple<std::string, std::string, std::string>> k;
        for (const auto& e : g.edges_) {
            std::string a = g.verts_[e.u].id, b = g.verts_[e.v].id;
            if (b < a) std::swap(a, b);
            k.emplace_back(e.id, a, b);
        }
        std::sort(k.begin(), k.end());
        return k;
    };
    if (ekey(*this) != ekey(other)) return false;

    auto lkey = [](const WeightedGraph& g) {
        std::vector<std::pair<int, std::string>> k;
        for (const auto& l : g.leaves_) k.emplace_back(l.label, g.verts_[l.at].id);
        std::sort(k.begin(), k.end());
        return k;
    };
    return lkey(*this) == lkey(other);
}

GraphStats stats(const WeightedGraph& g) {
    GraphStats s;
    s.vertex_count = g.vertex_count();
    s.edge_count = g.edge_count();
    s.leaf_count = g.leaf_count();
    s.component_count = g.components().second;
    s.betti1 = s.edge_count - s.vertex_count + s.component_count;
    for (const auto& v : g.vertices()) s.weight_sum += v.weight;
    s.genus = s.betti1 + s.weight_sum;
    return s;
}

int degree(const WeightedGraph& g, const std::string& vertex_id) {
    return g.degree(g.vertex_index(vertex_id));
}

bool is_regular_tropicalization(const WeightedGraph& g) {
    if (g.vertex_count() == 0) return false;
    if (g.components().second != 1) return false;
    for (const auto& v : g.vertices())
        if (v.weight != 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

bool is_stable(const WeightedGraph& g) {
    if (g.vertex_count() == 0) return false;
    if (g.components().second != 1) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int w = g.vertices()[v].weight;
        int d = g.degree(v);
        if (w == 0 && d < 3) return false;
        if (w == 1 && d < 1) return false;
    }
    return true;
}

} // namespace tropmod
