#include "tropmod/graph.hpp"
#include "tropmod/strata.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace tropmod;

namespace {

// Two vertices joined by m parallel edges (genus m-1).
WeightedGraph banana(int m) {
    std::vector<WeightedGraph::EdgeSpec> es;
    for (int i = 1; i <= m; ++i)
        es.push_back({"e" + std::to_string(i), "u", "v"});
    return WeightedGraph::create({{"u", 0}, {"v", 0}}, std::move(es), {});
}

// Path of k vertices, consecutive pairs doubly joined (2(k-1) edges).
WeightedGraph caterpillar(int k) {
    std::vector<WeightedGraph::VertexSpec> vs;
    std::vector<WeightedGraph::EdgeSpec> es;
    for (int i = 1; i <= k; ++i) vs.push_back({"u" + std::to_string(i), 0});
    for (int i = 1; i < k; ++i) {
        es.push_back({"e" + std::to_string(2 * i - 1), "u" + std::to_string(i),
                      "u" + std::to_string(i + 1)});
        es.push_back({"e" + std::to_string(2 * i), "u" + std::to_string(i),
                      "u" + std::to_string(i + 1)});
    }
    return WeightedGraph::create(std::move(vs), std::move(es), {});
}

bool posets_equal(const StrataPoset& a, const StrataPoset& b) {
    if (a.edge_ids != b.edge_ids) return false;
    if (a.strata.size() != b.strata.size()) return false;
    for (std::size_t i = 0; i < a.strata.size(); ++i) {
        const Stratum &s = a.strata[i], &t = b.strata[i];
        if (s.key != t.key || s.dimension != t.dimension ||
            s.witnesses != t.witnesses ||
            s.aut_edge_action_order != t.aut_edge_action_order)
            return false;
    }
    return a.order == b.order && a.hasse == b.hasse;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strata sweep: serial reference vs parallel kernel"};
    int max_edges = 16, threads = 0;
    app.add_option("--max-edges", max_edges, "largest family member");
    app.add_option("--threads", threads, "0 = library default");
    CLI11_PARSE(app, argc, argv);

    StrataOptions par;
    par.max_edges = 22;
    par.threads = threads;
    StrataOptions ser = par;

    std::cout << "family      edges  strata  serial_ms  parallel_ms  equal\n";
    bool all_equal = true;
    for (int m = 8; m <= max_edges; m += 2) {
        for (const char* family : {"banana", "caterpillar"}) {
            WeightedGraph g = family == std::string("banana")
                                  ? banana(m)
                                  : caterpillar(m / 2 + 1);
            if (g.edge_count() > 22) continue;

            auto t0 = std::chrono::steady_clock::now();
            StrataPoset serial = strata_of_serial(g, ser);
            double serial_ms = ms_since(t0);

            t0 = std::chrono::steady_clock::now();
            StrataPoset parallel = strata_of(g, par);
            double parallel_ms = ms_since(t0);

            bool equal = posets_equal(serial, parallel);
            all_equal = all_equal && equal;
            std::printf("%-11s %5d  %6zu  %9.1f  %11.1f  %s\n", family,
                        g.edge_count(), serial.strata.size(), serial_ms,
                        parallel_ms, equal ? "yes" : "NO");
        }
    }
    if (!all_equal) {
        std::cerr << "integrity violation: kernels disagree\n";
        return 2;
    }
    return 0;
}
