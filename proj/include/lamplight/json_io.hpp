#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lamplight/distortion.hpp"
#include "lamplight/graph.hpp"
#include "lamplight/lamplighter.hpp"

namespace lamplight {

using Json = nlohmann::ordered_json;

/// {"vertices":[...],"edges":[["u","v"],...],"basepoint":"..."(optional)}
/// Byte-stable for a fixed vertex order.
inline Json graph_to_json(const Graph& g, std::optional<int> basepoint = std::nullopt) {
    Json j;
    j["vertices"] = g.labels();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back(Json::array({g.label(u), g.label(v)}));
    j["edges"] = std::move(edges);
    if (basepoint) j["basepoint"] = g.label(*basepoint);
    return j;
}

inline std::pair<Graph, std::optional<int>> graph_from_json(const Json& j) {
    require(j.contains("vertices") && j["vertices"].is_array(), Errc::invalid_parameter,
            "graph JSON needs a \"vertices\" array");
    require(j.contains("edges") && j["edges"].is_array(), Errc::invalid_parameter,
            "graph JSON needs an \"edges\" array");
    std::vector<std::string> labels = j["vertices"].get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        require(e.is_array() && e.size() == 2, Errc::invalid_parameter,
                "each edge must be a 2-element array");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    Graph g = Graph::from_labelled_edges(std::move(labels), edges);
    std::optional<int> basepoint;
    if (j.contains("basepoint")) basepoint = g.vertex(j["basepoint"].get<std::string>());
    return {std::move(g), basepoint};
}

inline std::string graph_to_dot(const Graph& g, std::optional<int> basepoint = std::nullopt) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  \"" + g.label(v) + "\"";
        if (basepoint && *basepoint == v) out += " [shape=doublecircle]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  \"" + g.label(u) + "\" -- \"" + g.label(v) + "\";\n";
    out += "}\n";
    return out;
}

/// {"lamps":["v1","v3"],"pos":"v0"} with lamps in vertex-index order.
inline Json lamp_state_to_json(const Graph& g, const LampState& s) {
    Json j;
    Json lamps = Json::array();
    for (auto v = s.lamps.find_first(); v != VertexSet::npos; v = s.lamps.find_next(v))
        lamps.push_back(g.label(static_cast<int>(v)));
    j["lamps"] = std::move(lamps);
    j["pos"] = g.label(s.pos);
    return j;
}

inline LampState lamp_state_from_json(const Graph& g, const Json& j) {
    require(j.contains("lamps") && j["lamps"].is_array(), Errc::invalid_parameter,
            "lamp state JSON needs a \"lamps\" array");
    require(j.contains("pos"), Errc::invalid_parameter, "lamp state JSON needs a \"pos\"");
    LampState s{g.empty_vertex_set(), g.vertex(j["pos"].get<std::string>())};
    for (const auto& l : j["lamps"]) s.lamps.set(static_cast<std::size_t>(g.vertex(l.get<std::string>())));
    return s;
}

inline Json report_to_json(const DistortionReport& r) {
    Json j;
    j["map"] = r.map_name;
    j["domain"] = r.domain_size;
    j["pairs"] = r.pairs;
    j["lipschitz"] = r.lipschitz_infinite ? Json("inf") : Json(r.lipschitz);
    j["colipschitz"] = r.colipschitz;
    j["distortion"] = std::isinf(r.distortion) ? Json("inf") : Json(r.distortion);
    j["claimed"] = Json::array({r.claimed_a, r.claimed_b});
    j["verdict"] = r.pass ? "pass" : "fail";
    Json ws = Json::array();
    for (const auto& w : r.witnesses) {
        Json jw;
        jw["u"] = w.u;
        jw["v"] = w.v;
        jw["src"] = w.src;
        jw["tgt"] = w.tgt;
        ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

} // namespace lamplight
