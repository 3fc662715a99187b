#include "tropmod/comparison.hpp"
#include "tropmod/cone.hpp"
#include "tropmod/contraction.hpp"
#include "tropmod/enumerate.hpp"
#include "tropmod/errors.hpp"
#include "tropmod/graph_json.hpp"
#include "tropmod/isomorphism.hpp"
#include "tropmod/render.hpp"
#include "tropmod/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace tropmod;
using nlohmann::ordered_json;

namespace {

// Desk-scale refusal bounds; TROPMOD_MAX_EDGES overrides both.
int edge_bound(int dflt) {
    const char* s = std::getenv("TROPMOD_MAX_EDGES");
    if (!s || !*s) return dflt;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v <= 0 || v > 64)
        throw DomainError("TROPMOD_MAX_EDGES must be a positive integer");
    return static_cast<int>(v);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DomainError("cannot write " + out_path);
    f << text;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string format_double(double v) {
    if (v == 0) return "0";
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

// The raw "graph" reference string of a point file, for echoing in output.
std::string point_graph_ref(const std::string& path) {
    std::ifstream f(path);
    if (!f) return "";
    try {
        nlohmann::json j = nlohmann::json::parse(f);
        if (j.is_object() && j.contains("graph") && j["graph"].is_string())
            return j["graph"].get<std::string>();
    } catch (...) {
    }
    return "";
}

ordered_json census_json(int genus, int leaves,
                         const std::vector<WeightedGraph>& classes) {
    ordered_json j;
    j["genus"] = genus;
    j["leaves"] = leaves;
    j["count"] = classes.size();
    j["classes"] = ordered_json::array();
    for (const auto& g : classes) j["classes"].push_back(graph_to_json(g));
    return j;
}

std::string aut_text(const WeightedGraph& g) {
    AutOrders o = aut_orders(g);
    std::ostringstream out;
    out << "|Aut| = " << o.group << "\n";
    out << "|edge action| = " << o.edge_action << "\n";
    out << "kernel = " << o.kernel << "\n";
    out << "generators:\n";
    auto gens = aut_generators(g);
    if (gens.empty()) out << "  (trivial)\n";
    for (const auto& iso : gens)
        out << "  vertices " << cycle_notation(iso.vertex_map) << ", edges "
            << cycle_notation(iso.edge_map) << "\n";
    return out.str();
}

ordered_json aut_json(const WeightedGraph& g) {
    AutOrders o = aut_orders(g);
    ordered_json j;
    j["autOrder"] = o.group;
    j["edgeActionOrder"] = o.edge_action;
    j["kernelSize"] = o.kernel;
    j["generators"] = ordered_json::array();
    for (const auto& iso : aut_generators(g)) {
        ordered_json jg;
        jg["vertices"] = cycle_notation(iso.vertex_map);
        jg["edges"] = cycle_notation(iso.edge_map);
        j["generators"].push_back(std::move(jg));
    }
    return j;
}

ordered_json classify_json(const PointStratum& s) {
    ordered_json j;
    j["zero_edges"] = s.zero_edges;
    j["stratum"] = graph_to_json(s.contraction.result);
    j["dimension"] = s.contraction.result.edge_count();
    ordered_json lens = ordered_json::object();
    for (const auto& [id, x] : s.lengths) lens[id] = format_rational(x);
    j["lengths"] = std::move(lens);
    return j;
}

std::string report_md(const CoverageReport& cov) {
    std::ostringstream out;
    out << "# Report: genus " << cov.genus << ", " << cov.leaves
        << " leaves\n\n";
    out << "## Regular census (" << cov.bases.size() << " classes)\n\n";
    std::vector<WeightedGraph> bases;
    for (const auto& bc : cov.bases) bases.push_back(bc.base);
    out << census_md(bases) << "\n";
    out << "## Stable census (" << cov.stable_keys.size() << " classes)\n\n";
    std::vector<WeightedGraph> stable;
    for (const auto& key : cov.stable_keys)
        stable.push_back(cov.stable_reps.at(key));
    out << census_md(stable) << "\n";
    out << "## Strata\n\n";
    for (const auto& bc : cov.bases) {
        out << "### Base `" << key_digest(bc.base_key) << "` ("
            << bc.poset.strata.size() << " strata)\n\n";
        out << strata_md(bc.poset) << "\n";
    }
    out << compare_md(cov);
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"combinatorics of tropicalizations of pointed surfaces"};
    app.require_subcommand(1);

    int genus = 0, leaves = 0, threads = 0;
    std::string format, out_path, graph_path, point_path, p_path, q_path;
    std::string dot_path, json_path, csv_path;
    std::vector<std::string> edge_list;
    bool closed = false, quotient = false, turns = false;
    double tol = 1e-9;

    auto add_common = [&](CLI::App* cmd,
                          const std::vector<std::string>& formats) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats));
        cmd->add_option("--out", out_path, "write output here (default stdout)");
    };

    auto* gen_r = app.add_subcommand(
        "gen-regular", "enumerate regular tropicalizations of type (g,n)");
    gen_r->add_option("--genus", genus)->required();
    gen_r->add_option("--leaves", leaves)->required();
    gen_r->add_option("--threads", threads);
    add_common(gen_r, {"json", "md"});

    auto* gen_s = app.add_subcommand(
        "gen-stable", "enumerate stable weighted graphs of type (g,n)");
    gen_s->add_option("--genus", genus)->required();
    gen_s->add_option("--leaves", leaves)->required();
    gen_s->add_option("--threads", threads);
    add_common(gen_s, {"json", "md"});

    auto* ctr = app.add_subcommand("contract",
                                   "weighted contraction of an edge set");
    ctr->add_option("--graph", graph_path)->required();
    ctr->add_option("--edges", edge_list, "comma-separated edge ids")
        ->delimiter(',');
    add_common(ctr, {"json"});

    auto* aut = app.add_subcommand(
        "aut", "automorphism group orders and generators");
    aut->add_option("--graph", graph_path)->required();
    add_common(aut, {"json", "md"});

    auto* str = app.add_subcommand(
        "strata", "stratification poset of the compactified cone");
    str->add_option("--graph", graph_path)->required();
    str->add_option("--threads", threads);
    str->add_option("--dot", dot_path, "also write DOT here");
    str->add_option("--json", json_path, "also write JSON here");
    add_common(str, {"json", "dot", "md"});

    auto* cls = app.add_subcommand("classify-point",
                                   "stratum of a point of the cone");
    cls->add_option("--point", point_path)->required();
    cls->add_flag("--closed", closed,
                  "closed cone (no circle identification; rejects inf)");
    add_common(cls, {"json", "md"});

    auto* fib = app.add_subcommand(
        "fiber", "all points identified with the given one");
    fib->add_option("--point", point_path)->required();
    add_common(fib, {"json", "md"});

    auto* dst = app.add_subcommand("dist", "distance between two points");
    dst->add_option("--p", p_path)->required();
    dst->add_option("--q", q_path)->required();
    dst->add_flag("--quotient", quotient,
                  "separation of the identification classes");
    dst->add_flag("--turns", turns, "exact rational output in turns");
    dst->add_option("--tol", tol,
                    "radians below this print as 0 (float mode)");
    dst->add_option("--out", out_path);

    auto* cmp = app.add_subcommand(
        "compare", "nodal classes hit by the strata of every regular base");
    cmp->add_option("--genus", genus)->required();
    cmp->add_option("--leaves", leaves)->required();
    cmp->add_option("--threads", threads);
    cmp->add_option("--csv", csv_path, "also write CSV here");
    cmp->add_option("--dot", dot_path, "also write DOT here");
    add_common(cmp, {"json", "csv", "dot", "md"});

    auto* rep = app.add_subcommand(
        "report", "markdown bundle: censuses, strata tables, coverage");
    rep->add_option("--genus", genus)->required();
    rep->add_option("--leaves", leaves)->required();
    rep->add_option("--threads", threads);
    rep->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    if (gen_r->parsed() || gen_s->parsed()) {
        EnumOptions opts;
        opts.max_edges = edge_bound(9);
        opts.threads = threads;
        auto classes = gen_r->parsed()
                           ? enumerate_regular(genus, leaves, opts)
                           : enumerate_stable_weighted(genus, leaves, opts);
        emit(format == "md" ? census_md(classes)
                            : dump(census_json(genus, leaves, classes)),
             out_path);
    } else if (ctr->parsed()) {
        WeightedGraph g = load_graph_file(graph_path);
        Contraction c = contract(g, edge_list);
        ordered_json j;
        j["result"] = graph_to_json(c.result);
        ordered_json w;
        w["vertexMap"] = c.vertex_map;
        w["edgeMap"] = c.edge_map;
        w["perVertexBetti"] = c.preimage_betti;
        j["witness"] = std::move(w);
        j["contracted"] = c.contracted;
        emit(dump(j), out_path);
    } else if (aut->parsed()) {
        WeightedGraph g = load_graph_file(graph_path);
        emit(format == "json" ? dump(aut_json(g)) : aut_text(g), out_path);
    } else if (str->parsed()) {
        WeightedGraph g = load_graph_file(graph_path);
        StrataOptions opts;
        opts.max_edges = edge_bound(20);
        opts.threads = threads;
        StrataPoset poset = strata_of(g, opts);
        if (!dot_path.empty()) emit(strata_dot(poset), dot_path);
        if (!json_path.empty()) emit(dump(strata_to_json(poset)), json_path);
        if (format == "dot")
            emit(strata_dot(poset), out_path);
        else if (format == "md")
            emit(strata_md(poset), out_path);
        else
            emit(dump(strata_to_json(poset)), out_path);
    } else if (cls->parsed()) {
        ExtendedPoint p = load_point_file(
            point_path, closed ? ConeMode::closed : ConeMode::circle);
        PointStratum s = stratum_of(p);
        if (format == "md") {
            std::ostringstream text;
            text << "zero edges:";
            for (const auto& e : s.zero_edges) text << " " << e;
            text << "\ndimension: " << s.contraction.result.edge_count()
                 << "\nlengths:";
            for (const auto& [id, x] : s.lengths)
                text << " " << id << "=" << format_rational(x);
            text << "\n";
            emit(text.str(), out_path);
        } else {
            emit(dump(classify_json(s)), out_path);
        }
    } else if (fib->parsed()) {
        ExtendedPoint p = load_point_file(point_path);
        std::string ref = point_graph_ref(point_path);
        auto pts = fiber(p);
        if (format == "md") {
            std::ostringstream text;
            text << "fiber size: " << pts.size() << "\n";
            for (const auto& q : pts) {
                text << " ";
                for (const auto& e : q.base.edges())
                    text << " " << e.id << "="
                         << format_rational(q.coords.at(e.id).length());
                text << "\n";
            }
            emit(text.str(), out_path);
        } else {
            ordered_json j;
            j["size"] = pts.size();
            j["points"] = ordered_json::array();
            for (const auto& q : pts)
                j["points"].push_back(point_to_json(q, ref));
            emit(dump(j), out_path);
        }
    } else if (dst->parsed()) {
        ExtendedPoint p = load_point_file(p_path);
        ExtendedPoint q = load_point_file(q_path);
        Rat d = quotient ? separation_turns(p, q) : product_dist_turns(p, q);
        std::string text;
        if (turns) {
            text = format_rational(d);
        } else {
            double radians = quotient ? separation(p, q) : product_dist(p, q);
            text = format_double(radians < tol ? 0.0 : radians);
        }
        emit(text + "\n", out_path);
    } else if (cmp->parsed()) {
        CoverageOptions opts;
        opts.max_edges = edge_bound(9);
        opts.threads = threads;
        CoverageReport cov = coverage(genus, leaves, opts);
        if (!csv_path.empty()) emit(compare_csv(cov), csv_path);
        if (!dot_path.empty()) emit(compare_dot(cov), dot_path);
        if (format == "csv")
            emit(compare_csv(cov), out_path);
        else if (format == "dot")
            emit(compare_dot(cov), out_path);
        else if (format == "md")
            emit(compare_md(cov), out_path);
        else
            emit(dump(compare_to_json(cov)), out_path);
    } else if (rep->parsed()) {
        CoverageOptions opts;
        opts.max_edges = edge_bound(9);
        opts.threads = threads;
        emit(report_md(coverage(genus, leaves, opts)), out_path);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IntegrityError& e) {
        std::cerr << "integrity violation: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
