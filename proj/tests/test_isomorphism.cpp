#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tropmod/errors.hpp"
#include "tropmod/isomorphism.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace tropmod;

namespace {

WeightedGraph relabeled_theta() {
    // Same shape as corpus::theta(), scrambled ids and storage order.
    return WeightedGraph::create(
        {{"x", 0}, {"y", 0}},
        {{"c", "y", "x"}, {"a", "x", "y"}, {"b", "y", "x"}}, {});
}

WeightedGraph k4() {
    std::vector<WeightedGraph::VertexSpec> vs;
    std::vector<WeightedGraph::EdgeSpec> es;
    for (int i = 1; i <= 4; ++i) vs.push_back({"v" + std::to_string(i), 0});
    int next = 1;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            es.push_back({"e" + std::to_string(next++),
                          "v" + std::to_string(i), "v" + std::to_string(j)});
    return WeightedGraph::create(std::move(vs), std::move(es), {});
}

std::vector<WeightedGraph> small_corpus() {
    return {corpus::theta(),
            corpus::dumbbell(),
            corpus::banana(2),
            corpus::rose(2),
            corpus::rose(3),
            corpus::weight_vertex(2),
            corpus::leaf_star(3),
            corpus::leaf_star(4),
            corpus::four_leaf_path(),
            relabeled_theta(),
            k4(),
            WeightedGraph::create({{"u", 1}}, {{"e", "u", "u"}}, {}),
            WeightedGraph::create({{"u", 0}, {"v", 1}}, {{"e", "u", "v"}},
                                  {{1, "u"}, {2, "u"}, {3, "u"}}),
            WeightedGraph::create({{"u", 1}, {"v", 0}}, {{"e", "u", "v"}},
                                  {{1, "v"}, {2, "v"}, {3, "v"}})};
}

Isomorphism compose(const Isomorphism& a, const Isomorphism& b) {
    Isomorphism c;
    for (const auto& [x, y] : b.vertex_map) c.vertex_map[x] = a.vertex_map.at(y);
    for (const auto& [x, y] : b.edge_map) c.edge_map[x] = a.edge_map.at(y);
    return c;
}

} // namespace

TEST_CASE("canonical key is an isomorphism invariant") {
    CHECK(canonical_key(corpus::theta()) == canonical_key(relabeled_theta()));
    CHECK(canonical_key(corpus::theta()) != canonical_key(corpus::dumbbell()));
    CHECK(canonical_key(corpus::rose(2)) != canonical_key(corpus::banana(2)));
    CHECK(key_digest(canonical_key(corpus::theta())).size() == 16);
}

TEST_CASE("canonical key equality matches the brute-force oracle") {
    auto graphs = small_corpus();
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = 0; j < graphs.size(); ++j) {
            bool keys_equal =
                canonical_key(graphs[i]) == canonical_key(graphs[j]);
            bool brute = oracles::brute_force_isomorphic(graphs[i], graphs[j]);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(keys_equal == brute);
        }
}

TEST_CASE("leaf labels are fixed pointwise") {
    // The three (0,4) trees differ only in which labels share a vertex.
    auto split = [](int a, int b, int c, int d) {
        std::vector<WeightedGraph::LeafSpec> ls = {
            {a, "u"}, {b, "u"}, {c, "v"}, {d, "v"}};
        std::sort(ls.begin(), ls.end(),
                  [](const auto& x, const auto& y) { return x.label < y.label; });
        return WeightedGraph::create({{"u", 0}, {"v", 0}}, {{"e", "u", "v"}},
                                     std::move(ls));
    };
    auto g12 = split(1, 2, 3, 4), g13 = split(1, 3, 2, 4), g14 = split(1, 4, 2, 3);
    CHECK(canonical_key(g12) != canonical_key(g13));
    CHECK(canonical_key(g12) != canonical_key(g14));
    CHECK(canonical_key(g13) != canonical_key(g14));
    // Swapping the two sides is still an isomorphism.
    auto g34 = split(3, 4, 1, 2);
    CHECK(canonical_key(g12) == canonical_key(g34));
}

TEST_CASE("normalized copies are literally equal exactly for isomorphs") {
    auto a = normalized_copy(corpus::theta());
    auto b = normalized_copy(relabeled_theta());
    CHECK(a == b);
    CHECK(canonical_key(a) == canonical_key(corpus::theta()));
    CHECK(!(normalized_copy(corpus::dumbbell()) == a));
}

TEST_CASE("are_isomorphic yields verified witnesses") {
    auto w = are_isomorphic(corpus::theta(), relabeled_theta());
    REQUIRE(w);
    CHECK(verify_isomorphism(corpus::theta(), relabeled_theta(), *w));
    CHECK(!are_isomorphic(corpus::theta(), corpus::dumbbell()));

    // A wrong witness must not verify.
    Isomorphism bad = *w;
    bad.edge_map["e1"] = bad.edge_map["e2"];
    CHECK(!verify_isomorphism(corpus::theta(), relabeled_theta(), bad));
}

TEST_CASE("automorphism group orders") {
    auto check_orders = [](const WeightedGraph& g, std::uint64_t group,
                           std::uint64_t edge_action, std::uint64_t kernel) {
        AutOrders o = aut_orders(g);
        CHECK(o.group == group);
        CHECK(o.edge_action == edge_action);
        CHECK(o.kernel == kernel);
        CHECK(o.group == o.edge_action * o.kernel);
    };
    check_orders(corpus::theta(), 12, 6, 2);
    check_orders(corpus::dumbbell(), 2, 2, 1);
    check_orders(corpus::rose(2), 2, 2, 1);
    check_orders(corpus::banana(2), 4, 2, 2);
    check_orders(k4(), 24, 24, 1);
    check_orders(corpus::leaf_star(3), 1, 1, 1);
    check_orders(corpus::weight_vertex(2), 1, 1, 1);
}

TEST_CASE("materialized group matches the counted orders") {
    for (const auto& g : {corpus::theta(), corpus::dumbbell(), k4(),
                          corpus::rose(3), corpus::four_leaf_path()}) {
        AutGroup grp = automorphisms(g);
        AutOrders o = aut_orders(g);
        CHECK(grp.elements.size() == o.group);
        CHECK(grp.edge_action.size() == o.edge_action);
        CHECK(grp.kernel_size == o.kernel);
        std::set<std::string> distinct;
        for (const auto& iso : grp.elements) {
            CHECK(verify_isomorphism(g, g, iso));
            std::string sig;
            for (const auto& [k, v] : iso.vertex_map) sig += k + ">" + v + ";";
            for (const auto& [k, v] : iso.edge_map) sig += k + ">" + v + ";";
            distinct.insert(sig);
        }
        CHECK(distinct.size() == grp.elements.size());
    }
}

TEST_CASE("generators close to the full group") {
    for (const auto& g : {corpus::theta(), corpus::dumbbell(), k4(),
                          corpus::rose(3), corpus::banana(3)}) {
        auto gens = aut_generators(g);
        for (const auto& iso : gens) CHECK(verify_isomorphism(g, g, iso));

        // Breadth-first closure under composition.
        auto sig = [](const Isomorphism& iso) {
            std::string s;
            for (const auto& [k, v] : iso.vertex_map) s += k + ">" + v + ";";
            for (const auto& [k, v] : iso.edge_map) s += k + ">" + v + ";";
            return s;
        };
        Isomorphism id;
        for (const auto& v : g.vertices()) id.vertex_map[v.id] = v.id;
        for (const auto& e : g.edges()) id.edge_map[e.id] = e.id;
        std::map<std::string, Isomorphism> seen{{sig(id), id}};
        std::vector<Isomorphism> frontier{id};
        while (!frontier.empty()) {
            std::vector<Isomorphism> next;
            for (const auto& cur : frontier)
                for (const auto& gen : gens) {
                    Isomorphism prod = compose(gen, cur);
                    if (seen.emplace(sig(prod), prod).second)
                        next.push_back(prod);
                }
            frontier = std::move(next);
        }
        CHECK(seen.size() == aut_orders(g).group);
    }
}

TEST_CASE("caps and overflow are honest errors") {
    // 2 * 9! automorphisms exceed the default materialization cap.
    CHECK_THROWS_AS(automorphisms(corpus::banana(9)), DomainError);
    CHECK(aut_orders(corpus::banana(9)).group == 725760);
    // 2 * 21! does not fit in 64 bits.
    CHECK_THROWS_AS(aut_orders(corpus::banana(21)), DomainError);

    // Canonicalization refuses beyond 16 vertices.
    std::vector<WeightedGraph::VertexSpec> vs;
    std::vector<WeightedGraph::EdgeSpec> es;
    for (int i = 0; i < 17; ++i) vs.push_back({"v" + std::to_string(i), 0});
    for (int i = 0; i + 1 < 17; ++i)
        es.push_back({"e" + std::to_string(i), "v" + std::to_string(i),
                      "v" + std::to_string(i + 1)});
    auto path17 = WeightedGraph::create(std::move(vs), std::move(es), {});
    CHECK_THROWS_AS(canonical_key(path17), DomainError);
}
