#include "cactusnet/io.hpp"

#include <algorithm>

#include "cactusnet/error.hpp"

namespace cactusnet {

namespace {

Json pair_json(const VertexPair& p) { return Json::array({p.first.value, p.second.value}); }

Json vertices_json(std::span<const VertexSpec> vertices) {
    Json out = Json::array();
    for (const auto& v : vertices) out.push_back({{"id", v.id.value}, {"kind", to_string(v.kind)}});
    return out;
}

} // namespace

Json network_to_json(const Network& n) {
    std::vector<VertexSpec> vertices;
    for (const auto& [id, kind] : n.vertices()) vertices.push_back({id, kind});
    Json edges = Json::array();
    for (const auto& e : n.edges()) {
        edges.push_back({{"u", e.u.value},
                         {"v", e.v.value},
                         {"conductivity", e.conductivity.to_string()},
                         {"role", to_string(e.role)}});
    }
    return {{"vertices", vertices_json(vertices)}, {"edges", std::move(edges)}};
}

Network network_from_json(const Json& j) {
    std::vector<VertexSpec> vertices;
    std::vector<Edge> edges;
    try {
        for (const auto& v : j.at("vertices")) {
            const auto kind = v.at("kind").get<std::string>();
            if (kind != "boundary" && kind != "interior") throw ParseError("unknown vertex kind '" + kind + "'");
            vertices.push_back({VertexId{v.at("id").get<int>()},
                                kind == "boundary" ? VertexKind::Boundary : VertexKind::Interior});
        }
        for (const auto& e : j.at("edges")) {
            const auto role = e.value("role", std::string("star"));
            if (role != "star" && role != "auxiliary") throw ParseError("unknown edge role '" + role + "'");
            edges.push_back({VertexId{e.at("u").get<int>()}, VertexId{e.at("v").get<int>()},
                             Rational::parse(e.at("conductivity").get<std::string>()),
                             role == "star" ? EdgeRole::Star : EdgeRole::Auxiliary});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("network JSON: ") + e.what());
    }
    return build_network(vertices, edges);
}

Json topology_to_json(const CactusTopology& t) {
    Json edges = Json::array();
    for (const auto& p : t.star_edges()) {
        edges.push_back({{"u", p.first.value}, {"v", p.second.value}, {"conductivity", nullptr}, {"role", "star"}});
    }
    for (const auto& p : t.auxiliary) {
        edges.push_back(
            {{"u", p.first.value}, {"v", p.second.value}, {"conductivity", nullptr}, {"role", "auxiliary"}});
    }
    return {{"vertices", vertices_json(t.vertices)}, {"edges", std::move(edges)}};
}

Json response_to_json(const ResponseMatrix& r) {
    Json boundary = Json::array();
    for (VertexId v : r.boundary) boundary.push_back(v.value);
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.boundary.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < r.boundary.size(); ++j) row.push_back(r.entries(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return {{"boundary", std::move(boundary)}, {"entries", std::move(rows)}};
}

Json fiber_report_to_json(const FiberReport& report) {
    Json params = Json::array();
    for (const auto& x : report.parameters) params.push_back(x.to_string());
    Json networks = Json::array();
    Json aux = Json::array();
    for (std::size_t k = 0; k < report.networks.size(); ++k) {
        networks.push_back({{"x", report.parameters[k].to_string()}, {"network", network_to_json(report.networks[k])}});
        Json edges = Json::array();
        for (const auto& [pair, value] : report.auxiliary_solution[k]) {
            edges.push_back({{"u", pair.first.value}, {"v", pair.second.value}, {"conductivity", value.to_string()}});
        }
        aux.push_back({{"x", report.parameters[k].to_string()}, {"edges", std::move(edges)}});
    }
    Json coefficients = Json::array();
    for (const auto& c : report.conservation.coefficients()) coefficients.push_back(c.to_string());
    return {{"parameters", std::move(params)},
            {"slack", report.slack.to_string()},
            {"networks", std::move(networks)},
            {"auxiliary_solution", std::move(aux)},
            {"common_response", response_to_json(report.common_response)},
            {"conservation_polynomial",
             {{"text", report.conservation.to_string()}, {"coefficients", std::move(coefficients)}}},
            {"real_root_count", report.real_root_count},
            {"arity", report.arity}};
}

Json game_to_json(const GameState& state) {
    Json removed = Json::array();
    for (const auto& p : state.removed) removed.push_back(pair_json(p));
    Json remaining = Json::array();
    for (const auto& p : state.orange) {
        if (std::find(state.removed.begin(), state.removed.end(), p) == state.removed.end()) {
            remaining.push_back(pair_json(p));
        }
    }
    return {{"removed", std::move(removed)}, {"remaining", std::move(remaining)}, {"all_removed", state.all_removed()}};
}

} // namespace cactusnet
