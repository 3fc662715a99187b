#include "tropmod/enumerate.hpp"

#include "tropmod/errors.hpp"
#include "tropmod/isomorphism.hpp"
#include "canonical_impl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropmod {

namespace {

// ---------- shared small pieces ----------

void check_range(int genus, int leaves, int edge_count, int max_edges) {
    if (genus < 0 || leaves < 0)
        throw DomainError("genus and leaf count must be nonnegative");
    if (2 - 2 * genus - leaves >= 0)
        throw DomainError("(g,n)=(" + std::to_string(genus) + "," +
                          std::to_string(leaves) +
                          ") lies outside the stable range 2-2g-n < 0");
    if (edge_count > max_edges)
        throw DomainError("refusing enumeration with " +
                          std::to_string(edge_count) + " edges (bound " +
                          std::to_string(max_edges) + ")");
}

bool matrix_connected(const std::vector<std::vector<int>>& m) {
    int n = static_cast<int>(m.size());
    if (n <= 1) return true;
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (w == v || seen[w] || m[v][w] == 0) continue;
            seen[w] = 1;
            ++count;
            stack.push_back(w);
        }
    }
    return count == n;
}

// Build the labeled graph for a multiplicity matrix (diagonal = loops),
// per-vertex weights, and an assignment of leaf labels to vertices.
WeightedGraph build_graph(const std::vector<std::vector<int>>& m,
                          const std::vector<int>& weights,
                          const std::vector<std::vector<int>>& labels_at) {
    int n = static_cast<int>(m.size());
    std::vector<WeightedGraph::VertexSpec> vs;
    for (int v = 0; v < n; ++v)
        vs.push_back({"u" + std::to_string(v + 1), weights[v]});
    std::vector<WeightedGraph::EdgeSpec> es;
    int next = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int c = 0; c < m[i][j]; ++c)
                es.push_back({"e" + std::to_string(next++),
                              "u" + std::to_string(i + 1),
                              "u" + std::to_string(j + 1)});
    std::vector<WeightedGraph::LeafSpec> ls;
    for (int v = 0; v < n; ++v)
        for (int label : labels_at[v])
            ls.push_back({label, "u" + std::to_string(v + 1)});
    return WeightedGraph::create(std::move(vs), std::move(es), std::move(ls));
}

// Distribute the labels 1..n over vertices with prescribed counts, visiting
// each distribution once (subsets chosen in lexicographic order).
void for_each_label_assignment(
    const std::vector<int>& counts, int leaves,
    const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    int n = static_cast<int>(counts.size());
    std::vector<std::vector<int>> at(n);
    std::vector<char> taken(leaves + 1, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            fn(at);
            return;
        }
        std::vector<int> avail;
        for (int l = 1; l <= leaves; ++l)
            if (!taken[l]) avail.push_back(l);
        int need = counts[v];
        int m = static_cast<int>(avail.size());
        if (need > m) return;
        std::vector<int> pick(need);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            at[v].clear();
            for (int i : pick) at[v].push_back(avail[i]);
            for (int l : at[v]) taken[l] = 1;
            self(self, v + 1);
            for (int l : at[v]) taken[l] = 0;
            int i = need - 1;
            while (i >= 0 && pick[i] == m - need + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
        }
    };
    rec(rec, 0);
}

// Non-increasing leaf-count profiles c_1 >= ... >= c_k, sum = n, each <= cap.
std::vector<std::vector<int>> leaf_profiles(int k, int n, int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(k, 0);
    auto rec = [&](auto&& self, int pos, int rest, int bound) -> void {
        if (pos == k) {
            if (rest == 0) out.push_back(c);
            return;
        }
        for (int v = std::min(bound, rest); v >= 0; --v) {
            if (rest - v > (k - pos - 1) * v) continue; // tail can't absorb rest
            c[pos] = v;
            self(self, pos + 1, rest - v, v);
        }
    };
    rec(rec, 0, n, cap);
    return out;
}

// ---------- regular tropicalizations: half-edge pairing ----------

// Interior structures for one profile: multigraphs on k vertices where
// vertex v has interior degree 3 - c[v]. Enumerated by pairing half-edges
// (lowest free half-edge against every later one), deduplicated first by
// raw multiplicity matrix, then up to colored isomorphism (color = leaf
// count, which any isomorphism of the final labeled graph must preserve).
std::vector<std::vector<std::vector<int>>> interior_structures(
    const std::vector<int>& c) {
    int k = static_cast<int>(c.size());
    std::vector<int> owner; // half-edge slot -> vertex
    for (int v = 0; v < k; ++v)
        for (int d = 0; d < 3 - c[v]; ++d) owner.push_back(v);
    int slots = static_cast<int>(owner.size());

    std::unordered_set<std::string> raw_seen;
    std::map<std::string, std::vector<std::vector<int>>> classes;

    std::vector<int> mate(slots, -1);
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    auto rec = [&](auto&& self) -> void {
        int h = 0;
        while (h < slots && mate[h] >= 0) ++h;
        if (h == slots) {
            std::string sig;
            sig.reserve(k * (k + 1) / 2);
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j)
                    sig.push_back(static_cast<char>(m[i][j]));
            if (!raw_seen.insert(sig).second) return;
            if (!matrix_connected(m)) return;
            detail::ColoredGraph cg;
            cg.n = k;
            cg.color.assign(c.begin(), c.end());
            cg.labels.assign(k, {});
            cg.mat = m;
            classes.emplace(detail::canonical_colored(cg).key, m);
            return;
        }
        for (int h2 = h + 1; h2 < slots; ++h2) {
            if (mate[h2] >= 0) continue;
            mate[h] = h2;
            mate[h2] = h;
            int a = owner[h], b = owner[h2];
            m[a][b] += 1;
            if (a != b) m[b][a] += 1;
            self(self);
            m[a][b] -= 1;
            if (a != b) m[b][a] -= 1;
            mate[h] = -1;
            mate[h2] = -1;
        }
    };
    if (slots % 2 == 0) rec(rec);

    std::vector<std::vector<std::vector<int>>> out;
    out.reserve(classes.size());
    for (auto& [key, mat] : classes) out.push_back(mat);
    return out;
}

// Emit every labeled class of one profile (canonical key + normalized
// representative). Classes from different interior structures (or different
// profiles) are never isomorphic — isomorphisms fix labels, hence per-vertex
// leaf counts — so deduplication is per structure.
void regular_classes_for_profile(
    const std::vector<int>& c, int leaves,
    const std::function<void(const std::string&, const WeightedGraph&)>& emit) {
    int k = static_cast<int>(c.size());
    // A vertex without interior half-edges is isolated unless it is alone.
    if (k > 1)
        for (int v = 0; v < k; ++v)
            if (3 - c[v] == 0) return;

    std::vector<int> weights(k, 0);
    for (const auto& m : interior_structures(c)) {
        std::set<std::string> seen;
        for_each_label_assignment(
            c, leaves, [&](const std::vector<std::vector<int>>& at) {
                WeightedGraph g = build_graph(m, weights, at);
                std::string key = canonical_key(g);
                if (seen.insert(key).second) emit(key, normalized_copy(g));
            });
    }
}

// ---------- stable weighted graphs: multiplicity-matrix backtracking ----------

int min_degree_for_weight(int w) { return w == 0 ? 3 : (w == 1 ? 1 : 0); }

// All stable classes with exactly k vertices: non-increasing (w,c) pairs,
// then an upper-triangular multiplicity sweep placing g - sum(w) + k - 1
// edges, with stability pruned per completed row.
void stable_classes_for_k(
    int k, int genus, int leaves,
    const std::function<void(const std::string&, const WeightedGraph&)>& emit) {
    std::vector<int> w(k), c(k);

    auto run_matrices = [&](int edges) {
        std::map<std::string, std::vector<std::vector<int>>> structures;
        std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
        auto fill = [&](auto&& self, int i, int j, int budget) -> void {
            if (i == k) {
                if (budget != 0 || !matrix_connected(m)) return;
                detail::ColoredGraph cg;
                cg.n = k;
                cg.color.resize(k);
                for (int v = 0; v < k; ++v)
                    cg.color[v] = static_cast<std::uint32_t>(w[v] * 64 + c[v]);
                cg.labels.assign(k, {});
                cg.mat = m;
                structures.emplace(detail::canonical_colored(cg).key, m);
                return;
            }
            if (j == k) {
                // row i complete: its degree is final from here on
                int deg = 2 * m[i][i] + c[i];
                for (int t = 0; t < k; ++t)
                    if (t != i) deg += m[i][t];
                if (deg < min_degree_for_weight(w[i])) return;
                self(self, i + 1, i + 1, budget);
                return;
            }
            for (int v = 0; v <= budget; ++v) {
                m[i][j] = v;
                if (i != j) m[j][i] = v;
                self(self, i, j + 1, budget - v);
            }
            m[i][j] = 0;
            if (i != j) m[j][i] = 0;
        };
        fill(fill, 0, 0, edges);

        std::vector<int> weights(w.begin(), w.end());
        for (const auto& [skey, mat] : structures) {
            std::set<std::string> seen;
            for_each_label_assignment(
                c, leaves, [&](const std::vector<std::vector<int>>& at) {
                    WeightedGraph g = build_graph(mat, weights, at);
                    std::string key = canonical_key(g);
                    if (seen.insert(key).second) emit(key, normalized_copy(g));
                });
        }
    };

    // (w,c) lexicographically non-increasing; sum(w) <= g keeps the edge
    // count E = g - sum(w) + k - 1 >= k - 1 (connectivity needs that many).
    auto rec = [&](auto&& self, int pos, int wsum, int csum) -> void {
        if (pos == k) {
            if (csum != leaves) return;
            run_matrices(genus - wsum + k - 1);
            return;
        }
        int whi = pos == 0 ? genus - wsum : std::min(w[pos - 1], genus - wsum);
        for (int wv = whi; wv >= 0; --wv) {
            int chi = leaves - csum;
            if (pos > 0 && wv == w[pos - 1]) chi = std::min(chi, c[pos - 1]);
            for (int cv = chi; cv >= 0; --cv) {
                w[pos] = wv;
                c[pos] = cv;
                self(self, pos + 1, wsum + wv, csum + cv);
            }
        }
    };
    rec(rec, 0, 0, 0);
}

} // namespace

void enumerate_regular_visit(
    int genus, int leaves,
    const std::function<void(const WeightedGraph&)>& visit,
    const EnumOptions& opts) {
    int edges = 3 * genus - 3 + leaves;
    check_range(genus, leaves, edges, opts.max_edges);
    int k = 2 * genus - 2 + leaves;
    for (const auto& c : leaf_profiles(k, leaves, 3))
        regular_classes_for_profile(
            c, leaves,
            [&visit](const std::string&, const WeightedGraph& g) { visit(g); });
}

std::vector<WeightedGraph> enumerate_regular(int genus, int leaves,
                                             const EnumOptions& opts) {
    int edges = 3 * genus - 3 + leaves;
    check_range(genus, leaves, edges, opts.max_edges);
    int k = 2 * genus - 2 + leaves;
    auto profs = leaf_profiles(k, leaves, 3);

    using Keyed = std::pair<std::string, WeightedGraph>;
    std::vector<std::vector<Keyed>> per_profile(profs.size());
#ifdef _OPENMP
    int nthreads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#endif
    for (std::size_t p = 0; p < profs.size(); ++p)
        regular_classes_for_profile(
            profs[p], leaves,
            [&per_profile, p](const std::string& key, const WeightedGraph& g) {
                per_profile[p].emplace_back(key, g);
            });

    std::vector<Keyed> keyed;
    for (auto& batch : per_profile)
        for (auto& kg : batch) keyed.push_back(std::move(kg));
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return a.first < b.first; });

    std::vector<WeightedGraph> out;
    out.reserve(keyed.size());
    for (auto& kg : keyed) out.push_back(std::move(kg.second));
    return out;
}

std::vector<WeightedGraph> enumerate_stable_weighted(int genus, int leaves,
                                                     const EnumOptions& opts) {
    check_range(genus, leaves, 3 * genus - 3 + leaves, opts.max_edges);
    using Keyed = std::pair<std::string, WeightedGraph>;
    std::vector<Keyed> keyed;
    int kmax = 2 * genus - 2 + leaves;
    for (int k = 1; k <= kmax; ++k)
        stable_classes_for_k(
            k, genus, leaves,
            [&keyed](const std::string& key, const WeightedGraph& g) {
                keyed.emplace_back(key, g);
            });
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return a.first < b.first; });
    std::vector<WeightedGraph> out;
    out.reserve(keyed.size());
    for (auto& kg : keyed) out.push_back(std::move(kg.second));
    return out;
}

} // namespace tropmod
