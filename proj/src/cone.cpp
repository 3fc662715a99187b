#include "tropmod/cone.hpp"

#include "tropmod/errors.hpp"
#include "tropmod/graph_json.hpp"
#include "tropmod/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace tropmod {

using nlohmann::json;
using nlohmann::ordered_json;

CirclePoint CirclePoint::from_length(const ExtLength& x) {
    if (x.infinite) return CirclePoint{Rat(0)}; // 0 and infinity are identified
    if (x.value < 0) throw DomainError("edge length must be nonnegative");
    return CirclePoint{x.value / (x.value + 1)};
}

CirclePoint CirclePoint::from_t(Rat t) {
    if (t < 0 || t >= 1)
        throw DomainError("circle coordinate t must lie in [0,1)");
    return CirclePoint{std::move(t)};
}

Rat circle_dist_turns(const CirclePoint& a, const CirclePoint& b) {
    Rat dt = a.t - b.t;
    if (dt < 0) dt = -dt;
    Rat wrap = 1 - dt;
    return dt < wrap ? dt : wrap;
}

double circle_dist(const CirclePoint& a, const CirclePoint& b) {
    return 2.0 * M_PI * circle_dist_turns(a, b).get_d();
}

ExtendedPoint make_point(const WeightedGraph& base,
                         const std::map<std::string, ExtLength>& lengths,
                         ConeMode mode) {
    ExtendedPoint p;
    p.base = base;
    p.mode = mode;
    for (const auto& e : base.edges()) {
        auto it = lengths.find(e.id);
        if (it == lengths.end())
            throw DomainError("missing length for edge '" + e.id + "'");
        if (mode == ConeMode::closed && it->second.infinite)
            throw DomainError("closed-cone mode does not admit infinite lengths "
                              "(edge '" + e.id + "')");
        p.coords[e.id] = CirclePoint::from_length(it->second);
    }
    if (lengths.size() != p.coords.size())
        for (const auto& [id, x] : lengths)
            if (!base.has_edge(id))
                throw DomainError("length given for unknown edge '" + id + "'");
    return p;
}

Rat product_dist_turns(const ExtendedPoint& p, const ExtendedPoint& q) {
    if (!(p.base == q.base))
        throw DomainError("product distance requires the same base graph");
    Rat best = 0;
    for (const auto& [id, cp] : p.coords) {
        Rat d = circle_dist_turns(cp, q.coords.at(id));
        if (d > best) best = d;
    }
    return best;
}

double product_dist(const ExtendedPoint& p, const ExtendedPoint& q) {
    return 2.0 * M_PI * product_dist_turns(p, q).get_d();
}

PointStratum stratum_of(const ExtendedPoint& p) {
    PointStratum s;
    for (const auto& [id, cp] : p.coords)
        if (cp.t == 0) s.zero_edges.push_back(id);
    std::sort(s.zero_edges.begin(), s.zero_edges.end());
    s.contraction = contract(p.base, s.zero_edges);
    for (const auto& [id, cp] : p.coords)
        if (cp.t != 0) s.lengths[id] = cp.length();
    return s;
}

namespace {

void for_each_k_subset(const std::vector<std::string>& ids, int k,
                       const std::function<void(const std::vector<std::string>&)>& fn) {
    int m = static_cast<int>(ids.size());
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<std::string> subset;
        subset.reserve(k);
        for (int i : pick) subset.push_back(ids[i]);
        fn(subset);
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

} // namespace

std::vector<ExtendedPoint> fiber(const ExtendedPoint& p) {
    PointStratum s = stratum_of(p);
    const WeightedGraph& contracted = s.contraction.result;
    std::string key = canonical_key(contracted);
    int k = static_cast<int>(s.zero_edges.size());

    std::vector<std::string> ids;
    for (const auto& e : p.base.edges()) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());

    // Transported coordinate maps, deduplicated exactly.
    std::set<std::vector<std::pair<std::string, Rat>>> seen;
    std::vector<ExtendedPoint> out;

    for_each_k_subset(ids, k, [&](const std::vector<std::string>& q2) {
        Contraction c2 = contract(p.base, q2);
        if (canonical_key(c2.result) != key) return;
        for (const auto& iso : all_isomorphisms(contracted, c2.result)) {
            ExtendedPoint cand;
            cand.base = p.base;
            cand.mode = p.mode;
            for (const auto& id : q2) cand.coords[id] = CirclePoint{Rat(0)};
            // Surviving edges of the contraction keep base ids, so the
            // transported coordinate lands directly on a base edge.
            for (const auto& e : contracted.edges())
                cand.coords[iso.edge_map.at(e.id)] = p.coords.at(e.id);

            std::vector<std::pair<std::string, Rat>> sig;
            for (const auto& [id, cp] : cand.coords) sig.emplace_back(id, cp.t);
            if (seen.insert(sig).second) out.push_back(std::move(cand));
        }
    });

    std::sort(out.begin(), out.end(),
              [&](const ExtendedPoint& a, const ExtendedPoint& b) {
                  for (const auto& e : p.base.edges()) {
                      const Rat& ta = a.coords.at(e.id).t;
                      const Rat& tb = b.coords.at(e.id).t;
                      if (ta != tb) return ta < tb;
                  }
                  return false;
              });

    integrity_check(std::any_of(out.begin(), out.end(),
                                [&](const ExtendedPoint& u) {
                                    return u.same_position(p);
                                }),
                    "a fiber must contain its defining point");
    return out;
}

Rat separation_turns(const ExtendedPoint& p, const ExtendedPoint& q) {
    if (!(p.base == q.base))
        throw DomainError("separation requires the same base graph");
    auto fp = fiber(p);
    auto fq = fiber(q);
    bool first = true;
    Rat best = 0;
    for (const auto& u : fp)
        for (const auto& v : fq) {
            Rat d = product_dist_turns(u, v);
            if (first || d < best) {
                best = d;
                first = false;
            }
            if (best == 0) return best;
        }
    return best;
}

double separation(const ExtendedPoint& p, const ExtendedPoint& q) {
    return 2.0 * M_PI * separation_turns(p, q).get_d();
}

namespace {

ExtLength length_from_json_value(const json& v, const std::string& edge) {
    if (v.is_string()) {
        auto len = parse_length(v.get<std::string>());
        if (!len)
            throw DomainError("edge '" + edge + "': cannot parse length '" +
                              v.get<std::string>() + "'");
        return *len;
    }
    if (v.is_number_integer()) {
        long long n = v.get<long long>();
        if (n < 0) throw DomainError("edge '" + edge + "': negative length");
        return ExtLength::of(Rat(static_cast<long>(n)));
    }
    if (v.is_number_float()) {
        double d = v.get<double>();
        if (!std::isfinite(d) || d < 0)
            throw DomainError("edge '" + edge + "': length must be a finite "
                              "nonnegative number");
        return ExtLength::of(Rat(d)); // dyadic, exact
    }
    throw DomainError("edge '" + edge + "': length must be a string or number");
}

} // namespace

ExtendedPoint point_from_json(const json& j, const WeightedGraph& base,
                              ConeMode mode) {
    if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_object())
        throw DomainError("point: expected an object with a 'coords' object");
    std::map<std::string, ExtLength> lengths;
    for (const auto& [edge, value] : j.at("coords").items())
        lengths[edge] = length_from_json_value(value, edge);
    return make_point(base, lengths, mode);
}

ExtendedPoint load_point_file(const std::string& path, ConeMode mode) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open point file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw DomainError("malformed JSON in " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("graph") || !j.at("graph").is_string())
        throw DomainError("point file must name its base via a 'graph' path");

    std::filesystem::path gpath(j.at("graph").get<std::string>());
    if (gpath.is_relative())
        gpath = std::filesystem::path(path).parent_path() / gpath;
    WeightedGraph base = load_graph_file(gpath.string());
    return point_from_json(j, base, mode);
}

ordered_json point_to_json(const ExtendedPoint& p, const std::string& graph_ref) {
    ordered_json j;
    j["graph"] = graph_ref;
    ordered_json coords = ordered_json::object();
    // Base edge order; values are lengths (t = 0 prints as "0", the
    // canonical name of the identified point).
    for (const auto& e : p.base.edges())
        coords[e.id] = format_rational(p.coords.at(e.id).length());
    j["coords"] = coords;
    return j;
}

} // namespace tropmod
