#include "tropmod/render.hpp"

#include "tropmod/graph_json.hpp"
#include "tropmod/isomorphism.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tropmod {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string cycle_notation(const std::map<std::string, std::string>& perm) {
    std::set<std::string> seen;
    std::ostringstream out;
    bool any = false;
    for (const auto& [start, _] : perm) {
        if (seen.count(start)) continue;
        std::vector<std::string> cycle;
        std::string cur = start;
        while (!seen.count(cur)) {
            seen.insert(cur);
            cycle.push_back(cur);
            cur = perm.at(cur);
        }
        if (cycle.size() < 2) continue;
        any = true;
        out << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i)
            out << (i ? " " : "") << cycle[i];
        out << ')';
    }
    return any ? out.str() : "()";
}

std::string strata_dot(const StrataPoset& poset) {
    std::ostringstream out;
    out << "digraph strata {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=ellipse];\n";
    for (std::size_t i = 0; i < poset.strata.size(); ++i) {
        const Stratum& s = poset.strata[i];
        out << "  s" << i << " [label=\"dim=" << s.dimension
            << ", |witnesses|=" << s.witnesses.size()
            << ", |AutE|=" << s.aut_edge_action_order << "\"];\n";
    }
    // (i,j) in hasse: strata[i] is a covering contraction of strata[j].
    for (const auto& [i, j] : poset.hasse)
        out << "  s" << j << " -> s" << i << ";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json strata_to_json(const StrataPoset& poset) {
    const bool full = poset.edge_ids.size() <= 12;
    nlohmann::ordered_json j;
    j["base"] = graph_to_json(poset.base);
    j["edge_ids"] = poset.edge_ids;
    j["strata"] = nlohmann::ordered_json::array();
    for (const Stratum& s : poset.strata) {
        nlohmann::ordered_json js;
        js["key"] = key_digest(s.key);
        js["dimension"] = s.dimension;
        js["aut_edge_action_order"] = s.aut_edge_action_order;
        js["witness_count"] = s.witnesses.size();
        if (full) {
            auto lists = nlohmann::ordered_json::array();
            for (std::uint64_t mask : s.witnesses)
                lists.push_back(poset.witness_edges(mask));
            js["witnesses"] = std::move(lists);
        } else {
            js["min_witness"] = poset.witness_edges(s.witnesses.front());
        }
        js["representative"] = graph_to_json(s.representative);
        j["strata"].push_back(std::move(js));
    }
    j["order"] = poset.order;
    j["hasse"] = poset.hasse;
    return j;
}

std::string strata_md(const StrataPoset& poset) {
    std::ostringstream out;
    out << "| stratum | class | dim | witnesses | edge-action order |\n";
    out << "|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < poset.strata.size(); ++i) {
        const Stratum& s = poset.strata[i];
        out << "| " << i << " | `" << key_digest(s.key) << "` | "
            << s.dimension << " | " << s.witnesses.size() << " | "
            << s.aut_edge_action_order << " |\n";
    }
    return out.str();
}

std::string compare_csv(const CoverageReport& report) {
    std::set<std::string> stable(report.stable_keys.begin(),
                                 report.stable_keys.end());
    std::ostringstream out;
    out << "base_key,stratum_key,dim,nodal_class_key,covered\n";
    for (const BaseCoverage& bc : report.bases) {
        for (std::size_t i = 0; i < bc.poset.strata.size(); ++i) {
            const Stratum& s = bc.poset.strata[i];
            const std::string& cls = bc.map.stratum_class[i];
            out << key_digest(bc.base_key) << ',' << key_digest(s.key) << ','
                << s.dimension << ',' << key_digest(cls) << ','
                << (stable.count(cls) ? 1 : 0) << '\n';
        }
        for (const std::string& cls : bc.missing)
            out << key_digest(bc.base_key) << ",,," << key_digest(cls)
                << ",0\n";
    }
    return out.str();
}

std::string compare_dot(const CoverageReport& report) {
    std::ostringstream out;
    out << "digraph compare {\n";
    out << "  rankdir=LR;\n";
    std::map<std::string, int> class_node;
    for (std::size_t c = 0; c < report.stable_keys.size(); ++c)
        class_node[report.stable_keys[c]] = static_cast<int>(c);
    for (std::size_t b = 0; b < report.bases.size(); ++b) {
        const BaseCoverage& bc = report.bases[b];
        out << "  subgraph cluster_b" << b << " {\n";
        out << "    label=\"base " << dot_escape(key_digest(bc.base_key))
            << "\";\n";
        for (std::size_t i = 0; i < bc.poset.strata.size(); ++i)
            out << "    b" << b << "_s" << i << " [label=\"dim="
                << bc.poset.strata[i].dimension << "\"];\n";
        out << "  }\n";
    }
    for (std::size_t c = 0; c < report.stable_keys.size(); ++c)
        out << "  c" << c << " [shape=box, label=\""
            << dot_escape(key_digest(report.stable_keys[c])) << "\"];\n";
    for (std::size_t b = 0; b < report.bases.size(); ++b) {
        const BaseCoverage& bc = report.bases[b];
        for (std::size_t i = 0; i < bc.poset.strata.size(); ++i) {
            auto it = class_node.find(bc.map.stratum_class[i]);
            if (it != class_node.end())
                out << "  b" << b << "_s" << i << " -> c" << it->second
                    << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json compare_to_json(const CoverageReport& report) {
    auto digests = [](const std::vector<std::string>& keys) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& k : keys) arr.push_back(key_digest(k));
        return arr;
    };
    nlohmann::ordered_json j;
    j["genus"] = report.genus;
    j["leaves"] = report.leaves;
    j["stable_classes"] = nlohmann::ordered_json::array();
    for (const std::string& key : report.stable_keys) {
        nlohmann::ordered_json jc;
        jc["key"] = key_digest(key);
        jc["graph"] = graph_to_json(report.stable_reps.at(key));
        j["stable_classes"].push_back(std::move(jc));
    }
    j["bases"] = nlohmann::ordered_json::array();
    for (const BaseCoverage& bc : report.bases) {
        nlohmann::ordered_json jb;
        jb["base_key"] = key_digest(bc.base_key);
        jb["base"] = graph_to_json(bc.base);
        jb["strata"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < bc.poset.strata.size(); ++i) {
            nlohmann::ordered_json js;
            js["key"] = key_digest(bc.poset.strata[i].key);
            js["dimension"] = bc.poset.strata[i].dimension;
            js["class"] = key_digest(bc.map.stratum_class[i]);
            jb["strata"].push_back(std::move(js));
        }
        jb["hit"] = digests(bc.hit);
        jb["missing"] = digests(bc.missing);
        jb["collisions"] = bc.collisions;
        j["bases"].push_back(std::move(jb));
    }
    j["union_missing"] = digests(report.union_missing);
    return j;
}

std::string compare_md(const CoverageReport& report) {
    std::ostringstream out;
    out << "## Coverage of the stable census, genus " << report.genus
        << ", " << report.leaves << " leaves\n\n";
    out << "Stable classes: " << report.stable_keys.size() << "\n\n";
    for (const BaseCoverage& bc : report.bases) {
        out << "### Base `" << key_digest(bc.base_key) << "` ("
            << bc.hit.size() << "/" << report.stable_keys.size()
            << " classes)\n\n";
        out << "| stratum | dim | nodal class |\n|---|---|---|\n";
        for (std::size_t i = 0; i < bc.poset.strata.size(); ++i)
            out << "| " << i << " | " << bc.poset.strata[i].dimension
                << " | `" << key_digest(bc.map.stratum_class[i]) << "` |\n";
        out << "\n";
        if (!bc.missing.empty()) {
            out << "Missing:";
            for (const auto& k : bc.missing) out << " `" << key_digest(k) << "`";
            out << "\n\n";
        }
        if (!bc.collisions.empty()) {
            out << "Collisions (distinct strata, one class):";
            for (const auto& [i, j] : bc.collisions)
                out << " (" << i << "," << j << ")";
            out << "\n\n";
        }
    }
    out << "Union coverage: "
        << (report.stable_keys.size() - report.union_missing.size()) << "/"
        << report.stable_keys.size() << " classes";
    if (!report.union_missing.empty()) {
        out << "; missing:";
        for (const auto& k : report.union_missing)
            out << " `" << key_digest(k) << "`";
    }
    out << "\n";
    return out.str();
}

std::string census_md(const std::vector<WeightedGraph>& classes) {
    std::ostringstream out;
    out << "| # | class | vertices | edges | genus | weight sum | aut |\n";
    out << "|---|---|---|---|---|---|---|\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const WeightedGraph& g = classes[i];
        GraphStats s = stats(g);
        out << "| " << i << " | `" << key_digest(canonical_key(g)) << "` | "
            << s.vertex_count << " | " << s.edge_count << " | " << s.genus
            << " | " << s.weight_sum << " | " << aut_orders(g).group
            << " |\n";
    }
    return out.str();
}

} // namespace tropmod
