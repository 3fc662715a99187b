#pragma once

#include "tropmod/contraction.hpp"
#include "tropmod/graph.hpp"
#include "tropmod/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace tropmod {

// Circle coordinate of an extended edge length: t = x/(x+1) in [0,1),
// with x = 0 and x = infinity both landing on t = 0 (the identified point).
struct CirclePoint {
    Rat t = 0;

    static CirclePoint from_length(const ExtLength& x);
    static CirclePoint from_t(Rat t); // validates 0 <= t < 1
    // x = t/(1-t); the preimage of t = 0 reports length 0 (0 and infinity
    // are the same point here).
    Rat length() const { return t / (1 - t); }

    bool operator==(const CirclePoint& o) const { return t == o.t; }
};

// Exact distance in turns (1 turn = 2*pi radians): min(|dt|, 1-|dt|).
Rat circle_dist_turns(const CirclePoint& a, const CirclePoint& b);
double circle_dist(const CirclePoint& a, const CirclePoint& b);

// The compactified cone keeps the circle identification 0 ~ inf; the closed
// cone is the same coordinate box with lengths in [0, inf) and no
// identification (only stratum queries are meaningful there; "inf" inputs
// are rejected).
enum class ConeMode { circle, closed };

struct ExtendedPoint {
    WeightedGraph base;
    std::map<std::string, CirclePoint> coords; // keyed exactly by edge ids
    ConeMode mode = ConeMode::circle;

    bool same_position(const ExtendedPoint& o) const { return coords == o.coords; }
};

// Validates that lengths cover the base's edges exactly. In closed mode an
// infinite length is a DomainError.
ExtendedPoint make_point(const WeightedGraph& base,
                         const std::map<std::string, ExtLength>& lengths,
                         ConeMode mode = ConeMode::circle);

// Max over edges of the per-coordinate circle distance, in turns. The max
// product metric is the recorded design choice (any l^p product induces the
// same topology; max stays rational). DomainError on mismatched bases.
Rat product_dist_turns(const ExtendedPoint& p, const ExtendedPoint& q);
double product_dist(const ExtendedPoint& p, const ExtendedPoint& q);

// Stratum membership: the zero-coordinate set q, the contraction of the
// base by q, and the strictly positive lengths surviving on the result.
struct PointStratum {
    std::vector<std::string> zero_edges;   // sorted
    Contraction contraction;
    std::map<std::string, Rat> lengths;    // surviving edge id -> x > 0
};

PointStratum stratum_of(const ExtendedPoint& p);

// All points of the same base whose length-decorated contraction is
// isomorphic to p's (leaf-preserving, length-transporting). Contains p.
// Deterministically sorted by coordinates in base edge order.
std::vector<ExtendedPoint> fiber(const ExtendedPoint& p);

// min over u in fiber(p), v in fiber(q) of the product distance; exactly 0
// iff the two points define the same class of the quotient.
Rat separation_turns(const ExtendedPoint& p, const ExtendedPoint& q);
double separation(const ExtendedPoint& p, const ExtendedPoint& q);

// Point wire format: {"graph": "<path to graph json>", "coords":
// {"e1": "3/4", "e2": "inf", ...}}. Values may be rational strings, "inf",
// or JSON numbers (converted exactly).
ExtendedPoint point_from_json(const nlohmann::json& j, const WeightedGraph& base,
                              ConeMode mode = ConeMode::circle);

// Loads the point and its referenced graph ("graph" resolved relative to
// the point file's directory unless absolute).
ExtendedPoint load_point_file(const std::string& path,
                              ConeMode mode = ConeMode::circle);

nlohmann::ordered_json point_to_json(const ExtendedPoint& p,
                                     const std::string& graph_ref);

} // namespace tropmod
