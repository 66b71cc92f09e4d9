#include "cactusnet/network.hpp"

#include <algorithm>

#include "cactusnet/error.hpp"

namespace cactusnet {

std::string to_string(VertexKind kind) { return kind == VertexKind::Boundary ? "boundary" : "interior"; }
std::string to_string(EdgeRole role) { return role == EdgeRole::Star ? "star" : "auxiliary"; }

std::string to_string(const VertexPair& p) {
    return "(" + std::to_string(p.first.value) + "," + std::to_string(p.second.value) + ")";
}

std::optional<Edge> Network::edge(VertexPair p) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), p,
                               [](const Edge& e, const VertexPair& key) { return e.pair() < key; });
    if (it == edges_.end() || it->pair() != p) return std::nullopt;
    return *it;
}

std::size_t Network::degree(VertexId v) const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

Network build_network(std::span<const VertexSpec> vertices, std::span<const Edge> edges) {
    Network n;
    for (const auto& spec : vertices) {
        auto [it, inserted] = n.vertices_.emplace(spec.id, spec.kind);
        if (!inserted && it->second != spec.kind) {
            throw InvariantViolation("vertex " + std::to_string(spec.id.value) + " declared with two kinds");
        }
    }

    std::map<VertexPair, Edge> merged;
    for (const auto& e : edges) {
        if (e.u == e.v) {
            throw SelfLoop("self-loop at vertex " + std::to_string(e.u.value));
        }
        if (e.conductivity.sign() <= 0) {
            throw NonPositiveConductivity("edge " + to_string(e.pair()) + " has conductivity " +
                                          e.conductivity.to_string());
        }
        for (VertexId end : {e.u, e.v}) {
            if (!n.vertices_.contains(end)) {
                throw UnknownEndpoint("edge " + to_string(e.pair()) + " references unknown vertex " +
                                      std::to_string(end.value));
            }
        }
        const VertexPair key = e.pair();
        auto [it, inserted] = merged.try_emplace(key, Edge{key.first, key.second, e.conductivity, e.role});
        if (!inserted) {
            it->second.conductivity += e.conductivity;
            if (e.role == EdgeRole::Star) it->second.role = EdgeRole::Star;
        }
    }
    for (auto& [key, e] : merged) n.edges_.push_back(std::move(e));

    for (const auto& [id, kind] : n.vertices_) {
        if (kind == VertexKind::Boundary) n.order_.push_back(id);
    }
    n.boundary_count_ = n.order_.size();
    if (n.boundary_count_ == 0) {
        throw NoBoundary("network has no boundary vertex");
    }
    for (const auto& [id, kind] : n.vertices_) {
        if (kind == VertexKind::Interior) n.order_.push_back(id);
    }
    return n;
}

Network with_edges(const Network& n, std::span<const Edge> extra) {
    std::vector<VertexSpec> vertices;
    for (const auto& [id, kind] : n.vertices()) vertices.push_back({id, kind});
    std::vector<Edge> edges = n.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return build_network(vertices, edges);
}

KirchhoffMatrix kirchhoff_matrix(const Network& n) {
    KirchhoffMatrix k;
    k.order = n.order();
    k.boundary_count = n.boundary().size();
    k.entries = RationalMatrix(k.order.size(), k.order.size());
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < k.order.size(); ++i) index[k.order[i]] = i;
    for (const auto& e : n.edges()) {
        const std::size_t i = index.at(e.u);
        const std::size_t j = index.at(e.v);
        k.entries(i, j) -= e.conductivity;
        k.entries(j, i) -= e.conductivity;
        k.entries(i, i) += e.conductivity;
        k.entries(j, j) += e.conductivity;
    }
    return k;
}

} // namespace cactusnet
