#include "tropmod/isomorphism.hpp"

#include "tropmod/errors.hpp"
#include "canonical_impl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>

namespace tropmod {

namespace detail {

namespace {

constexpr int kMaxCanonVertices = 16;
constexpr long long kSearchBudget = 8'000'000;

// Lex-min search over vertex orderings. At position p the candidate block is
//   [color, #labels, labels..., mult to order[0..p-1], loop count]
// The #labels prefix keeps variable-length blocks comparable element-wise:
// any length divergence is preceded by a differing count element. Only
// candidates achieving the minimal block can start a lex-min completion, so
// branching is restricted to the argmin set, pruned against the incumbent.
struct CanonSearch {
    const ColoredGraph& g;
    std::vector<std::uint32_t> best;
    std::vector<int> best_order;
    bool have_best = false;
    std::vector<std::uint32_t> cur;
    std::vector<int> order;
    std::vector<char> used;
    long long nodes = 0;

    explicit CanonSearch(const ColoredGraph& graph)
        : g(graph), used(graph.n, 0) {}

    void block_for(int v, std::vector<std::uint32_t>& out) const {
        out.clear();
        out.push_back(g.color[v]);
        out.push_back(static_cast<std::uint32_t>(g.labels[v].size()));
        for (int l : g.labels[v]) out.push_back(static_cast<std::uint32_t>(l));
        for (int placed : order)
            out.push_back(static_cast<std::uint32_t>(g.mat[v][placed]));
        out.push_back(static_cast<std::uint32_t>(g.mat[v][v]));
    }

    // block vs best at the current offset. Only called while cur == best
    // prefix, which keeps offsets in range (lengths stay synchronized until
    // a count element differs).
    int compare_with_best(const std::vector<std::uint32_t>& block) const {
        std::size_t off = cur.size();
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (block[k] != best[off + k])
                return block[k] < best[off + k] ? -1 : 1;
        }
        return 0;
    }

    void run(int pos) {
        if (++nodes > kSearchBudget)
            throw DomainError(
                "canonical form search budget exceeded (graph too symmetric "
                "for exact canonicalization at this size)");
        if (pos == g.n) {
            if (!have_best ||
                std::lexicographical_compare(cur.begin(), cur.end(),
                                             best.begin(), best.end())) {
                best = cur;
                best_order = order;
                have_best = true;
            }
            return;
        }

        std::vector<std::uint32_t> min_block, block;
        std::vector<int> argmin;
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            block_for(v, block);
            if (argmin.empty() || block < min_block) {
                min_block = block;
                argmin.assign(1, v);
            } else if (block == min_block) {
                argmin.push_back(v);
            }
        }

        // All argmin candidates share the block, so one incumbent comparison
        // covers them all.
        bool tied = have_best &&
                    std::equal(cur.begin(), cur.end(), best.begin());
        if (tied && compare_with_best(min_block) > 0) return;

        for (int v : argmin) {
            used[v] = 1;
            order.push_back(v);
            std::size_t base = cur.size();
            cur.insert(cur.end(), min_block.begin(), min_block.end());
            run(pos + 1);
            cur.resize(base);
            order.pop_back();
            used[v] = 0;
            // A completed sibling may have replaced the incumbent; the
            // prefix tie is re-derived at each node, so nothing is stale.
            if (have_best) {
                tied = std::equal(cur.begin(), cur.end(), best.begin());
                if (tied && compare_with_best(min_block) > 0) return;
            }
        }
    }
};

std::string encode_bytes(const std::vector<std::uint32_t>& words) {
    std::string s;
    s.reserve(words.size() * 4);
    for (std::uint32_t w : words) {
        s.push_back(static_cast<char>((w >> 24) & 0xff));
        s.push_back(static_cast<char>((w >> 16) & 0xff));
        s.push_back(static_cast<char>((w >> 8) & 0xff));
        s.push_back(static_cast<char>(w & 0xff));
    }
    return s;
}

} // namespace

CanonResult canonical_colored(const ColoredGraph& g) {
    if (g.n > kMaxCanonVertices)
        throw DomainError("canonical form supports at most " +
                          std::to_string(kMaxCanonVertices) + " vertices, got " +
                          std::to_string(g.n));
    if (g.n == 0) return {std::string(), {}};
    CanonSearch search(g);
    search.run(0);
    return {encode_bytes(search.best), search.best_order};
}

} // namespace detail

namespace {

detail::ColoredGraph colored_view(const WeightedGraph& g) {
    detail::ColoredGraph cg;
    cg.n = g.vertex_count();
    cg.color.resize(cg.n);
    cg.labels.resize(cg.n);
    for (int v = 0; v < cg.n; ++v)
        cg.color[v] = static_cast<std::uint32_t>(g.vertices()[v].weight);
    for (const auto& l : g.leaves()) cg.labels[l.at].push_back(l.label);
    // leaves() is sorted by label, so per-vertex lists arrive sorted
    cg.mat = g.adjacency_matrix();
    return cg;
}

// Parallel classes keyed by sorted endpoint indices, edge ids sorted.
std::map<std::pair<int, int>, std::vector<std::string>> parallel_classes(
    const WeightedGraph& g) {
    std::map<std::pair<int, int>, std::vector<std::string>> classes;
    for (const auto& e : g.edges())
        classes[{e.u, e.v}].push_back(e.id);
    for (auto& [k, ids] : classes) std::sort(ids.begin(), ids.end());
    return classes;
}

// Cheap invariants that rule out most non-isomorphic pairs before any search.
bool same_coarse_invariants(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.vertex_count() != b.vertex_count() ||
        a.edge_count() != b.edge_count() || a.leaf_count() != b.leaf_count())
        return false;
    auto profile = [](const WeightedGraph& g) {
        std::vector<std::tuple<int, int, int>> p; // weight, degree, leaf degree
        for (int v = 0; v < g.vertex_count(); ++v)
            p.emplace_back(g.vertices()[v].weight, g.degree(v), g.leaf_degree(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    return profile(a) == profile(b);
}

} // namespace

std::string canonical_key(const WeightedGraph& g) {
    return detail::canonical_colored(colored_view(g)).key;
}

std::string key_digest(const std::string& key) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

WeightedGraph normalized_copy(const WeightedGraph& g) {
    auto canon = detail::canonical_colored(colored_view(g));
    std::vector<int> pos(g.vertex_count());
    for (int p = 0; p < g.vertex_count(); ++p) pos[canon.order[p]] = p;

    std::vector<WeightedGraph::VertexSpec> vs(g.vertex_count());
    for (int p = 0; p < g.vertex_count(); ++p)
        vs[p] = {"v" + std::to_string(p + 1), g.vertices()[canon.order[p]].weight};

    // Sort edges by canonical endpoint positions; parallel edges are
    // interchangeable, so the original-id tiebreak does not affect the result.
    std::vector<std::tuple<int, int, std::string>> ek;
    for (const auto& e : g.edges()) {
        int a = pos[e.u], b = pos[e.v];
        if (a > b) std::swap(a, b);
        ek.emplace_back(a, b, e.id);
    }
    std::sort(ek.begin(), ek.end());
    std::vector<WeightedGraph::EdgeSpec> es;
    for (int i = 0; i < static_cast<int>(ek.size()); ++i)
        es.push_back({"e" + std::to_string(i + 1),
                      "v" + std::to_string(std::get<0>(ek[i]) + 1),
                      "v" + std::to_string(std::get<1>(ek[i]) + 1)});

    std::vector<WeightedGraph::LeafSpec> ls;
    for (const auto& l : g.leaves())
        ls.push_back({l.label, "v" + std::to_string(pos[l.at] + 1)});

    return WeightedGraph::create(std::move(vs), std::move(es), std::move(ls));
}

bool verify_isomorphism(const WeightedGraph& a, const WeightedGraph& b,
                        const Isomorphism& iso) {
    if (static_cast<int>(iso.vertex_map.size()) != a.vertex_count() ||
        static_cast<int>(iso.edge_map.size()) != a.edge_count() ||
        a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
        a.leaf_count() != b.leaf_count())
        return false;

    std::set<std::string> vtargets, etargets;
    for (const auto& [src, dst] : iso.vertex_map) {
        if (!a.has_vertex(src) || !b.has_vertex(dst)) return false;
        if (!vtargets.insert(dst).second) return false;
        if (a.vertices()[a.vertex_index(src)].weight !=
            b.vertices()[b.vertex_index(dst)].weight)
            return false;
    }
    for (const auto& [src, dst] : iso.edge_map) {
        if (!a.has_edge(src) || !b.has_edge(dst)) return false;
        if (!etargets.insert(dst).second) return false;
        const auto& ea = a.edges()[a.edge_index(src)];
        const auto& eb = b.edges()[b.edge_index(dst)];
        auto mv = [&](int av) {
            return b.vertex_index(iso.vertex_map.at(a.vertices()[av].id));
        };
        int x = mv(ea.u), y = mv(ea.v);
        if (x > y) std::swap(x, y);
        if (x != eb.u || y != eb.v) return false;
    }
    // Leaf labels are fixed pointwise: label k's vertex must map to label
    // k's vertex.
    for (const auto& la : a.leaves()) {
        bool found = false;
        for (const auto& lb : b.leaves()) {
            if (lb.label != la.label) continue;
            found = iso.vertex_map.at(a.vertices()[la.at].id) ==
                    b.vertices()[lb.at].id;
            break;
        }
        if (!found) return false;
    }
    return true;
}

std::optional<Isomorphism> are_isomorphic(const WeightedGraph& a,
                                          const WeightedGraph& b) {
    if (!same_coarse_invariants(a, b)) return std::nullopt;

    auto ca = detail::canonical_colored(colored_view(a));
    auto cb = detail::canonical_colored(colored_view(b));
    if (ca.key != cb.key) return std::nullopt;

    Isomorphism iso;
    for (int p = 0; p < a.vertex_count(); ++p)
        iso.vertex_map[a.vertices()[ca.order[p]].id] =
            b.vertices()[cb.order[p]].id;

    // Match parallel classes via canonical positions; within a class, sorted
    // ids pair up in order.
    std::vector<int> pos_a(a.vertex_count()), pos_b(b.vertex_count());
    for (int p = 0; p < a.vertex_count(); ++p) {
        pos_a[ca.order[p]] = p;
        pos_b[cb.order[p]] = p;
    }
    auto classes_a = parallel_classes(a);
    std::map<std::pair<int, int>, std::vector<std::string>> classes_b_by_pos;
    for (auto& [key, ids] : parallel_classes(b)) {
        int x = pos_b[key.first], y = pos_b[key.second];
        if (x > y) std::swap(x, y);
        classes_b_by_pos[{x, y}] = ids;
    }
    for (const auto& [key, ids] : classes_a) {
        int x = pos_a[key.first], y = pos_a[key.second];
        if (x > y) std::swap(x, y);
        const auto& target = classes_b_by_pos[{x, y}];
        integrity_check(target.size() == ids.size(),
                        "canonical orderings disagree on a parallel class");
        for (std::size_t i = 0; i < ids.size(); ++i)
            iso.edge_map[ids[i]] = target[i];
    }

    integrity_check(verify_isomorphism(a, b, iso),
                    "canonical-form witness failed verification");
    return iso;
}

std::vector<std::vector<int>> all_vertex_isomorphisms(const WeightedGraph& a,
                                                      const WeightedGraph& b) {
    std::vector<std::vector<int>> out;
    if (!same_coarse_invariants(a, b)) return out;
    int n = a.vertex_count();
    if (n == 0) return {std::vector<int>{}};

    auto mat_a = a.adjacency_matrix();
    auto mat_b = b.adjacency_matrix();
    auto inv = [](const WeightedGraph& g) {
        std::vector<std::tuple<int, std::vector<int>, int>> v(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i)
            v[i] = {g.vertices()[i].weight, {}, g.degree(i)};
        for (const auto& l : g.leaves()) std::get<1>(v[l.at]).push_back(l.label);
        return v;
    };
    auto inv_a = inv(a), inv_b = inv(b);

    std::vector<int> f(n, -1);
    std::vector<char> used(n, 0);
    long long nodes = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (++nodes > 8'000'000)
            throw DomainError("vertex isomorphism search budget exceeded");
        if (i == n) {
            out.push_back(f);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || inv_a[i] != inv_b[w]) continue;
            if (mat_a[i][i] != mat_b[w][w]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = mat_a[i][j] == mat_b[w][f[j]];
            if (!ok) continue;
            used[w] = 1;
            f[i] = w;
            self(self, i + 1);
            f[i] = -1;
            used[w] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

unsigned __int128 factorial128(std::size_t m) {
    unsigned __int128 r = 1;
    for (std::size_t i = 2; i <= m; ++i) r *= i;
    return r;
}

std::uint64_t to_u64_order(unsigned __int128 v, const char* what) {
    if (v > static_cast<unsigned __int128>(~0ull))
        throw DomainError(std::string(what) + " exceeds the 64-bit range");
    return static_cast<std::uint64_t>(v);
}

} // namespace

std::vector<Isomorphism> all_isomorphisms(const WeightedGraph& a,
                                          const WeightedGraph& b,
                                          std::uint64_t cap) {
    auto vmaps = all_vertex_isomorphisms(a, b);
    auto classes_a = parallel_classes(a);
    auto classes_b = parallel_classes(b);

    unsigned __int128 total = 0;
    unsigned __int128 per_map = 1;
    for (const auto& [key, ids] : classes_a) per_map *= factorial128(ids.size());
    total = per_map * vmaps.size();
    if (total > cap)
        throw DomainError("isomorphism count exceeds cap of " +
                          std::to_string(cap));

    std::vector<Isomorphism> out;
    for (const auto& f : vmaps) {
        Isomorphism base;
        for (int i = 0; i < a.vertex_count(); ++i)
            base.vertex_map[a.vertices()[i].id] = b.vertices()[f[i]].id;

        // Per class: source ids (sorted) against permutations of the image
        // class's sorted ids, enumerated in lexicographic order.
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
            pairs;
        for (const auto& [key, ids] : classes_a) {
            int x = f[key.first], y = f[key.second];
            if (x > y) std::swap(x, y);
            pairs.push_back({ids, classes_b.at({x, y})});
        }

        std::vector<std::vector<std::string>> perms(pairs.size());
        auto emit = [&](auto&& self, std::size_t c) -> void {
            if (c == pairs.size()) {
                Isomorphism iso = base;
                for (std::size_t k = 0; k < pairs.size(); ++k)
                    for (std::size_t i = 0; i < pairs[k].first.size(); ++i)
                        iso.edge_map[pairs[k].first[i]] = perms[k][i];
                out.push_back(std::move(iso));
                return;
            }
            perms[c] = pairs[c].second;
            do {
                self(self, c + 1);
            } while (std::next_permutation(perms[c].begin(), perms[c].end()));
            return;
        };
        emit(emit, 0);
    }
    return out;
}

AutGroup automorphisms(const WeightedGraph& g, std::uint64_t cap) {
    AutGroup grp;
    grp.elements = all_isomorphisms(g, g, cap);

    std::set<std::vector<std::string>> seen;
    std::vector<std::map<std::string, std::string>> action;
    for (const auto& iso : grp.elements) {
        std::vector<std::string> sig;
        for (const auto& [src, dst] : iso.edge_map) sig.push_back(dst);
        if (seen.insert(sig).second) action.push_back(iso.edge_map);
        bool trivial = true;
        for (const auto& [src, dst] : iso.edge_map)
            if (src != dst) {
                trivial = false;
                break;
            }
        if (trivial) ++grp.kernel_size;
    }
    std::sort(action.begin(), action.end());
    grp.edge_action = std::move(action);

    integrity_check(grp.elements.size() ==
                        grp.edge_action.size() * grp.kernel_size,
                    "|Aut| must equal |edge action| * |kernel|");
    return grp;
}

AutOrders aut_orders(const WeightedGraph& g) {
    auto vmaps = all_vertex_isomorphisms(g, g);
    auto classes = parallel_classes(g);

    unsigned __int128 per_map = 1;
    for (const auto& [key, ids] : classes) per_map *= factorial128(ids.size());

    unsigned __int128 group = per_map * vmaps.size();
    std::uint64_t kernel = 0;
    for (const auto& f : vmaps) {
        bool fixes_all = true;
        for (const auto& [key, ids] : classes) {
            int x = f[key.first], y = f[key.second];
            if (x > y) std::swap(x, y);
            if (std::pair<int, int>(x, y) != key) {
                fixes_all = false;
                break;
            }
        }
        if (fixes_all) ++kernel;
    }

    AutOrders orders;
    orders.group = to_u64_order(group, "|Aut|");
    orders.kernel = kernel;
    integrity_check(kernel > 0 && orders.group % kernel == 0,
                    "kernel order must divide |Aut|");
    orders.edge_action = orders.group / kernel;
    return orders;
}

std::vector<Isomorphism> aut_generators(const WeightedGraph& g) {
    auto vmaps = all_vertex_isomorphisms(g, g);
    auto classes = parallel_classes(g);
    int n = g.vertex_count();

    // Greedy generating set for the vertex-level group.
    std::set<std::vector<int>> closed;
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    closed.insert(identity);
    std::vector<std::vector<int>> vgens;
    auto close_over = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<int>> batch(closed.begin(), closed.end());
            for (const auto& x : batch)
                for (const auto& gen : vgens) {
                    std::vector<int> comp(n);
                    for (int i = 0; i < n; ++i) comp[i] = gen[x[i]];
                    if (closed.insert(comp).second) grew = true;
                }
        }
    };
    for (const auto& f : vmaps) {
        if (closed.count(f)) continue;
        vgens.push_back(f);
        close_over();
    }

    std::vector<Isomorphism> gens;
    for (const auto& f : vmaps) {
        if (std::find(vgens.begin(), vgens.end(), f) == vgens.end()) continue;
        Isomorphism iso;
        for (int i = 0; i < n; ++i)
            iso.vertex_map[g.vertices()[i].id] = g.vertices()[f[i]].id;
        for (const auto& [key, ids] : classes) {
            int x = f[key.first], y = f[key.second];
            if (x > y) std::swap(x, y);
            const auto& target = classes.at({x, y});
            for (std::size_t i = 0; i < ids.size(); ++i)
                iso.edge_map[ids[i]] = target[i];
        }
        gens.push_back(std::move(iso));
    }

    // Within-class generators: a transposition, plus a full cycle when the
    // class has at least three edges. Together with the vertex-level
    // generators these generate the whole group.
    for (const auto& [key, ids] : classes) {
        if (ids.size() < 2) continue;
        Isomorphism swap_iso;
        for (int i = 0; i < n; ++i)
            swap_iso.vertex_map[g.vertices()[i].id] = g.vertices()[i].id;
        for (const auto& [k2, ids2] : classes)
            for (const auto& id : ids2) swap_iso.edge_map[id] = id;
        swap_iso.edge_map[ids[0]] = ids[1];
        swap_iso.edge_map[ids[1]] = ids[0];
        gens.push_back(swap_iso);
        if (ids.size() >= 3) {
            Isomorphism cyc = swap_iso;
            for (std::size_t i = 0; i < ids.size(); ++i)
                cyc.edge_map[ids[i]] = ids[(i + 1) % ids.size()];
            gens.push_back(std::move(cyc));
        }
    }
    return gens;
}

} // namespace tropmod
