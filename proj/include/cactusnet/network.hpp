#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cactusnet/exact/rational.hpp"
#include "cactusnet/matrix.hpp"

namespace cactusnet {

struct VertexId {
    int value = 0;
    friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

enum class VertexKind { Boundary, Interior };
enum class EdgeRole { Star, Auxiliary };

std::string to_string(VertexKind kind);
std::string to_string(EdgeRole role);

/// Unordered vertex pair stored with first < second.
struct VertexPair {
    VertexId first;
    VertexId second;

    VertexPair() = default;
    VertexPair(VertexId a, VertexId b) : first(a < b ? a : b), second(a < b ? b : a) {}
    VertexPair(int a, int b) : VertexPair(VertexId{a}, VertexId{b}) {}

    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

std::string to_string(const VertexPair& p);

struct Edge {
    VertexId u;
    VertexId v;
    Rational conductivity;
    EdgeRole role = EdgeRole::Star;

    VertexPair pair() const { return {u, v}; }
};

struct VertexSpec {
    VertexId id;
    VertexKind kind;
};

/// Validated resistor network. Immutable once built: vertices are ordered
/// boundary-first then interior, each block by ascending id; edges are
/// stored with u < v, sorted by (u, v), one per unordered pair.
class Network {
public:
    const std::map<VertexId, VertexKind>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Boundary vertices ascending, then interior vertices ascending.
    const std::vector<VertexId>& order() const { return order_; }
    std::span<const VertexId> boundary() const { return {order_.data(), boundary_count_}; }
    std::span<const VertexId> interior() const {
        return {order_.data() + boundary_count_, order_.size() - boundary_count_};
    }

    VertexKind kind(VertexId v) const { return vertices_.at(v); }
    bool has_vertex(VertexId v) const { return vertices_.contains(v); }
    std::optional<Edge> edge(VertexPair p) const;
    /// Number of edges incident to v.
    std::size_t degree(VertexId v) const;

    friend Network build_network(std::span<const VertexSpec> vertices, std::span<const Edge> edges);

private:
    std::map<VertexId, VertexKind> vertices_;
    std::vector<Edge> edges_;
    std::vector<VertexId> order_;
    std::size_t boundary_count_ = 0;
};

/// Validates and normalizes. Parallel edges merge by summing conductivities;
/// the merged role is Star if any merged input is Star. A vertex id may be
/// repeated only with the same kind (InvariantViolation otherwise).
/// Throws SelfLoop, NonPositiveConductivity, UnknownEndpoint, NoBoundary.
Network build_network(std::span<const VertexSpec> vertices, std::span<const Edge> edges);

/// Copy of `n` with extra edges merged in (same validation as build_network).
Network with_edges(const Network& n, std::span<const Edge> extra);

/// Weighted Laplacian in the network's vertex order.
struct KirchhoffMatrix {
    std::vector<VertexId> order;
    std::size_t boundary_count = 0;
    RationalMatrix entries;
};

KirchhoffMatrix kirchhoff_matrix(const Network& n);

} // namespace cactusnet
