#pragma once

#include <string>
#include <vector>

namespace tropmod {

// Finite weighted multigraph with labeled leaves. Loops and parallel edges
// are allowed. Vertices carry nonnegative integer weights; leaves carry the
// labels 1..n and attach to vertices (they are legs, not edges, and are
// never contracted).
//
// Construction goes through create(), which validates and indexes the data;
// instances are immutable afterwards.
class WeightedGraph {
public:
    struct Vertex {
        std::string id;
        int weight = 0;
    };
    // Endpoint indices into vertices(); normalized so u <= v. u == v is a loop.
    struct Edge {
        std::string id;
        int u = 0;
        int v = 0;
    };
    struct Leaf {
        int label = 0;
        int at = 0; // vertex index
    };

    struct VertexSpec {
        std::string id;
        int weight = 0;
    };
    struct EdgeSpec {
        std::string id;
        std::string a;
        std::string b;
    };
    struct LeafSpec {
        int label = 0;
        std::string at;
    };

    // Throws DomainError on duplicate/empty ids, negative weights, unknown
    // endpoints, or leaf labels that are not exactly 1..n.
    static WeightedGraph create(std::vector<VertexSpec> vertices,
                                std::vector<EdgeSpec> edges,
                                std::vector<LeafSpec> leaves);

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }

    const std::vector<Vertex>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    // Sorted by label.
    const std::vector<Leaf>& leaves() const { return leaves_; }

    bool has_vertex(const std::string& id) const;
    bool has_edge(const std::string& id) const;
    // Throw DomainError when the id is unknown.
    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;

    // Non-loop incidences count once, loops twice, leaves once.
    int degree(int vertex_idx) const;

    // Number of leaves attached to the vertex.
    int leaf_degree(int vertex_idx) const;

    // nv x nv symmetric matrix; [v][v] counts loops at v (once per loop).
    std::vector<std::vector<int>> adjacency_matrix() const;

    // Component index per vertex (0-based, in order of first appearance)
    // plus the number of components.
    std::pair<std::vector<int>, int> components() const;

    // Ignores ordering of vertices/edges/leaves; compares ids, weights,
    // endpoint pairs and leaf attachments literally (no isomorphism).
    bool operator==(const WeightedGraph& other) const;

private:
    std::vector<Vertex> verts_;
    std::vector<Edge> edges_;
    std::vector<Leaf> leaves_;
};

struct GraphStats {
    int vertex_count = 0;
    int edge_count = 0;
    int leaf_count = 0;
    int component_count = 0;
    int betti1 = 0;     // |E| - |V| + #components
    int weight_sum = 0;
    int genus = 0;      // betti1 + weight_sum
};

GraphStats stats(const WeightedGraph& g);

int degree(const WeightedGraph& g, const std::string& vertex_id);

// Connected, nonempty, every weight zero, every vertex of degree three.
// (Such a graph automatically satisfies |V| = 2g - 2 + n > 0.)
bool is_regular_tropicalization(const WeightedGraph& g);

// Connected, nonempty, and every vertex satisfies the weighted stability
// bound: weight 0 needs degree >= 3, weight 1 needs degree >= 1.
bool is_stable(const WeightedGraph& g);

} // namespace tropmod
