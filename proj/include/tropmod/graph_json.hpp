#pragma once

#include "tropmod/graph.hpp"

#include <json.hpp>

#include <string>

namespace tropmod {

// Wire schema:
//   {"vertices":[{"id":"u","weight":0},...],
//    "edges":[{"id":"e1","ends":["u","v"]},...],
//    "leaves":[{"label":1,"at":"u"},...]}
// Missing "leaves"/"edges" arrays are treated as empty.
// Throws DomainError on schema violations (and on whatever create() rejects).
WeightedGraph graph_from_json(const nlohmann::json& j);

// Emits the schema above with keys in schema order; vertices and edges keep
// their stored order, leaves are sorted by label.
nlohmann::ordered_json graph_to_json(const WeightedGraph& g);

// Reads and parses a graph file. Throws DomainError on unreadable files or
// malformed JSON.
WeightedGraph load_graph_file(const std::string& path);

} // namespace tropmod
