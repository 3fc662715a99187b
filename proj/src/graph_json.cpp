#include "tropmod/graph_json.hpp"

#include "tropmod/errors.hpp"

#include <fstream>
#include <sstream>

namespace tropmod {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw DomainError(std::string(where) + ": missing key '" + key + "'");
    return j.at(key);
}

std::string require_string(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    if (!v.is_string())
        throw DomainError(std::string(where) + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

int require_int(const json& j, const char* key, const char* where) {
    const json& v = require(j, key, where);
    if (!v.is_number_integer())
        throw DomainError(std::string(where) + ": '" + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

WeightedGraph graph_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("graph: top level must be an object");

    std::vector<WeightedGraph::VertexSpec> vs;
    const json& jverts = require(j, "vertices", "graph");
    if (!jverts.is_array()) throw DomainError("graph: 'vertices' must be an array");
    for (const json& jv : jverts)
        vs.push_back({require_string(jv, "id", "vertex"),
                      require_int(jv, "weight", "vertex")});

    std::vector<WeightedGraph::EdgeSpec> es;
    if (j.contains("edges")) {
        const json& jedges = j.at("edges");
        if (!jedges.is_array()) throw DomainError("graph: 'edges' must be an array");
        for (const json& je : jedges) {
            const json& ends = require(je, "ends", "edge");
            if (!ends.is_array() || ends.size() != 2 || !ends[0].is_string() ||
                !ends[1].is_string())
                throw DomainError("edge: 'ends' must be an array of two vertex ids");
            es.push_back({require_string(je, "id", "edge"),
                          ends[0].get<std::string>(), ends[1].get<std::string>()});
        }
    }

    std::vector<WeightedGraph::LeafSpec> ls;
    if (j.contains("leaves")) {
        const json& jleaves = j.at("leaves");
        if (!jleaves.is_array()) throw DomainError("graph: 'leaves' must be an array");
        for (const json& jl : jleaves)
            ls.push_back({require_int(jl, "label", "leaf"),
                          require_string(jl, "at", "leaf")});
    }

    return WeightedGraph::create(std::move(vs), std::move(es), std::move(ls));
}

ordered_json graph_to_json(const WeightedGraph& g) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& v : g.vertices())
        j["vertices"].push_back({{"id", v.id}, {"weight", v.weight}});
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges())
        j["edges"].push_back(
            {{"id", e.id},
             {"ends", {g.vertices()[e.u].id, g.vertices()[e.v].id}}});
    j["leaves"] = ordered_json::array();
    for (const auto& l : g.leaves())
        j["leaves"].push_back({{"label", l.label}, {"at", g.vertices()[l.at].id}});
    return j;
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw DomainError("malformed JSON in " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

} // namespace tropmod
