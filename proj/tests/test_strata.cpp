#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "tropmod/contraction.hpp"
#include "tropmod/errors.hpp"
#include "tropmod/isomorphism.hpp"
#include "tropmod/strata.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace tropmod;

namespace {

int index_of_class(const StrataPoset& poset, const WeightedGraph& rep) {
    std::string key = canonical_key(rep);
    for (std::size_t i = 0; i < poset.strata.size(); ++i)
        if (poset.strata[i].key == key) return static_cast<int>(i);
    return -1;
}

bool ordered(const StrataPoset& poset, int i, int j) {
    return std::find(poset.order.begin(), poset.order.end(),
                     std::make_pair(i, j)) != poset.order.end();
}

void check_coherence(const WeightedGraph& base, const StrataPoset& poset) {
    int genus = stats(base).genus;
    std::uint64_t seen = 0;
    for (const auto& s : poset.strata) {
        for (std::uint64_t mask : s.witnesses) {
            seen += 1;
            CHECK(std::popcount(mask) ==
                  base.edge_count() - s.dimension);
            // Every witness really contracts to the class.
            auto q = poset.witness_edges(mask);
            CHECK(canonical_key(contract(base, q).result) == s.key);
        }
        CHECK(s.dimension == s.representative.edge_count());
        CHECK(stats(s.representative).genus == genus);
        CHECK(canonical_key(s.representative) == s.key);
        CHECK(s.aut_edge_action_order ==
              aut_orders(s.representative).edge_action);
    }
    CHECK(seen == (std::uint64_t(1) << base.edge_count()));

    // Strata are sorted by dimension (descending), then key.
    for (std::size_t i = 1; i < poset.strata.size(); ++i) {
        const auto &a = poset.strata[i - 1], &b = poset.strata[i];
        CHECK((a.dimension > b.dimension ||
               (a.dimension == b.dimension && a.key < b.key)));
    }

    // Unique top (the base itself) and bottom (one weighted vertex).
    CHECK(poset.strata.front().dimension == base.edge_count());
    CHECK(canonical_key(base) == poset.strata.front().key);
    CHECK(poset.strata.back().dimension == 0);
    CHECK(poset.strata.back().representative.vertex_count() == 1);
    CHECK(poset.strata.back().representative.vertices()[0].weight == genus);
}

void check_order_semantics(const StrataPoset& poset) {
    int n = static_cast<int>(poset.strata.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool rel = ordered(poset, i, j);
            bool semantic = is_weighted_contraction_of(
                                poset.strata[i].representative,
                                poset.strata[j].representative)
                                .has_value();
            CAPTURE(i);
            CAPTURE(j);
            CHECK(rel == semantic);
        }
}

} // namespace

TEST_CASE("theta poset is the golden chain") {
    auto theta = corpus::theta();
    StrataPoset poset = strata_of(theta);
    REQUIRE(poset.strata.size() == 4);

    std::vector<int> dims, wits;
    for (const auto& s : poset.strata) {
        dims.push_back(s.dimension);
        wits.push_back(static_cast<int>(s.witnesses.size()));
    }
    CHECK(dims == std::vector<int>{3, 2, 1, 0});
    CHECK(wits == std::vector<int>{1, 3, 3, 1});

    std::vector<std::uint64_t> auts;
    for (const auto& s : poset.strata) auts.push_back(s.aut_edge_action_order);
    CHECK(auts == std::vector<std::uint64_t>{6, 2, 1, 1});

    // A chain: 6 order pairs, 3 covering pairs.
    CHECK(poset.order.size() == 6);
    CHECK(poset.hasse.size() == 3);
    CHECK((poset.hasse ==
           std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 2}}));

    check_coherence(theta, poset);
    check_order_semantics(poset);
}

TEST_CASE("dumbbell poset: six strata, the diamond in the middle") {
    auto bell = corpus::dumbbell();
    StrataPoset poset = strata_of(bell);
    REQUIRE(poset.strata.size() == 6);

    int top = index_of_class(poset, bell);
    int rose = index_of_class(poset, contract(bell, {"b"}).result);
    int loop_bridge = index_of_class(poset, contract(bell, {"l1"}).result);
    int two_w1 = index_of_class(poset, contract(bell, {"l1", "l2"}).result);
    int w1_loop = index_of_class(poset, contract(bell, {"b", "l1"}).result);
    int bottom = index_of_class(poset, corpus::weight_vertex(2));
    std::set<int> all{top, rose, loop_bridge, two_w1, w1_loop, bottom};
    REQUIRE(all.size() == 6);
    REQUIRE(!all.count(-1));

    CHECK(poset.strata[top].dimension == 3);
    CHECK(poset.strata[rose].dimension == 2);
    CHECK(poset.strata[loop_bridge].dimension == 2);
    CHECK(poset.strata[two_w1].dimension == 1);
    CHECK(poset.strata[w1_loop].dimension == 1);
    CHECK(poset.strata[bottom].dimension == 0);

    CHECK(poset.strata[top].witnesses.size() == 1);
    CHECK(poset.strata[rose].witnesses.size() == 1);
    CHECK(poset.strata[loop_bridge].witnesses.size() == 2);
    CHECK(poset.strata[two_w1].witnesses.size() == 1);
    CHECK(poset.strata[w1_loop].witnesses.size() == 2);
    CHECK(poset.strata[bottom].witnesses.size() == 1);

    // Hand-checked relations: the two-loop rose reaches only the w1-loop
    // below dimension 2; the double-w1 path reaches only via loop_bridge.
    CHECK(ordered(poset, w1_loop, rose));
    CHECK(!ordered(poset, two_w1, rose));
    CHECK(ordered(poset, two_w1, loop_bridge));
    CHECK(ordered(poset, w1_loop, loop_bridge));
    CHECK(ordered(poset, bottom, top));
    CHECK(poset.order.size() == 12);
    CHECK(poset.hasse.size() == 7);

    check_coherence(bell, poset);
    check_order_semantics(poset);
}

TEST_CASE("coherence and order semantics on further bases") {
    for (const auto& g :
         {corpus::four_leaf_path(), corpus::banana(4), corpus::rose(3),
          WeightedGraph::create(
              {{"u", 0}, {"v", 0}, {"w", 1}},
              {{"e1", "u", "v"}, {"e2", "u", "v"}, {"e3", "v", "w"},
               {"e4", "u", "w"}},
              {{1, "w"}})}) {
        StrataPoset poset = strata_of(g);
        check_coherence(g, poset);
        check_order_semantics(poset);
    }
}

TEST_CASE("hasse is the transitive reduction of the order") {
    StrataPoset poset = strata_of(corpus::dumbbell());
    // hasse subset of order
    for (const auto& pr : poset.hasse)
        CHECK(std::find(poset.order.begin(), poset.order.end(), pr) !=
              poset.order.end());
    // no hasse pair has an intermediate
    for (const auto& [i, j] : poset.hasse)
        for (std::size_t k = 0; k < poset.strata.size(); ++k)
            if (static_cast<int>(k) != i && static_cast<int>(k) != j)
                CHECK(!(ordered(poset, i, static_cast<int>(k)) &&
                        ordered(poset, static_cast<int>(k), j)));
    // order is recovered as the transitive closure of hasse
    std::set<std::pair<int, int>> reach(poset.hasse.begin(),
                                        poset.hasse.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::pair<int, int>> add;
        for (const auto& [a, b] : reach)
            for (const auto& [c, d] : reach)
                if (b == c && !reach.count({a, d})) add.insert({a, d});
        for (const auto& pr : add) reach.insert(pr);
        grew = !add.empty();
    }
    std::set<std::pair<int, int>> order_set(poset.order.begin(),
                                            poset.order.end());
    CHECK(reach == order_set);
}

TEST_CASE("witness masks decode to the defining edge subsets") {
    auto theta = corpus::theta();
    StrataPoset poset = strata_of(theta);
    CHECK(poset.edge_ids == std::vector<std::string>{"e1", "e2", "e3"});
    CHECK(poset.witness_edges(0b101) ==
          std::vector<std::string>{"e1", "e3"});
    CHECK(poset.witness_edges(0).empty());
    // The dimension-2 stratum is witnessed by the three singletons.
    CHECK(poset.strata[1].witnesses ==
          std::vector<std::uint64_t>{0b001, 0b010, 0b100});
}

TEST_CASE("refusals: scale bounds and degenerate bases") {
    CHECK_THROWS_AS(strata_of(corpus::banana(21)), DomainError); // > 20
    StrataOptions wide;
    wide.max_edges = 22;
    CHECK_THROWS_AS(strata_of(corpus::banana(23), wide), DomainError);
    CHECK_THROWS_AS(strata_of(WeightedGraph::create({}, {}, {})),
                    DomainError);
    // Disconnected bases are rejected.
    CHECK_THROWS_AS(
        strata_of(WeightedGraph::create({{"a", 1}, {"b", 1}}, {}, {})),
        DomainError);
}
