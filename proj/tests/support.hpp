#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cactusnet/exact/polynomial.hpp"
#include "cactusnet/exact/rational.hpp"
#include "cactusnet/network.hpp"

namespace cactusnet::testing {

/// Seeded per test so failures reproduce.
inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// p/q with |p| <= bound, 1 <= q <= bound.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t bound = 100) {
    std::uniform_int_distribution<std::int64_t> num(-bound, bound);
    std::uniform_int_distribution<std::int64_t> den(1, bound);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

inline Rational random_positive(std::mt19937_64& rng, std::int64_t bound = 100) {
    std::uniform_int_distribution<std::int64_t> part(1, bound);
    return Rational(BigInt(part(rng)), BigInt(part(rng)));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, std::int64_t bound = 20) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = random_rational(rng, bound);
    return Polynomial(std::move(c));
}

/// Connected network on at most `max_vertices` vertices, at least one
/// boundary vertex, random positive conductivities with num/den <= 100.
/// A random spanning tree keeps every interior vertex connected to the rest.
inline Network random_network(std::mt19937_64& rng, int max_vertices = 8) {
    std::uniform_int_distribution<int> count(2, max_vertices);
    const int n = count(rng);
    std::uniform_int_distribution<int> boundary_count(1, n);
    const int nb = boundary_count(rng);
    std::vector<VertexSpec> vertices;
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = 1 + 3 * i + static_cast<int>(rng() % 3);
    std::shuffle(ids.begin(), ids.end(), rng);
    for (int i = 0; i < n; ++i) {
        vertices.push_back({VertexId{ids[i]}, i < nb ? VertexKind::Boundary : VertexKind::Interior});
    }
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        edges.push_back({VertexId{ids[i]}, VertexId{ids[parent(rng)]}, random_positive(rng), EdgeRole::Star});
    }
    std::uniform_int_distribution<int> extra(0, n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int k = extra(rng); k > 0; --k) {
        const int a = pick(rng);
        const int b = pick(rng);
        if (a != b) edges.push_back({VertexId{ids[a]}, VertexId{ids[b]}, random_positive(rng), EdgeRole::Star});
    }
    return build_network(vertices, edges);
}

} // namespace cactusnet::testing
