#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cactusnet/matrix.hpp"
#include "cactusnet/network.hpp"

namespace cactusnet {

/// Dirichlet-to-Neumann map, indexed by boundary vertices in ascending id.
struct ResponseMatrix {
    std::vector<VertexId> boundary;
    RationalMatrix entries;

    const Rational& at(VertexId i, VertexId j) const;

    friend bool operator==(const ResponseMatrix&, const ResponseMatrix&) = default;
};

/// Schur complement K_BB - K_BI K_II^-1 K_IB by exact Gauss-Jordan elimination.
/// Throws SingularInterior when some interior vertex cannot reach the boundary.
ResponseMatrix schur_response(const Network& n);

struct DirichletSolution {
    std::map<VertexId, Rational> interior_potentials;
    /// Net current leaving the network's edges at each boundary vertex.
    std::map<VertexId, Rational> boundary_currents;
};

/// Solves the harmonic equations assembled directly from the edge list.
/// Missing boundary potentials default to zero. Independent of schur_response.
/// Throws SingularInterior, UnknownEndpoint for a potential on a non-boundary id.
DirichletSolution dirichlet_solve(const Network& n, const std::map<VertexId, Rational>& boundary_potentials);

/// Rebuilds the response one column at a time from unit boundary potentials.
ResponseMatrix response_by_dirichlet(const Network& n);

/// Symmetric, zero row sums, off-diagonals <= 0. Returns a description of the
/// first violation, or nullopt.
std::optional<std::string> check_response_invariants(const ResponseMatrix& r);

/// First entry where two responses differ, described for diagnostics.
std::optional<std::string> first_difference(const ResponseMatrix& a, const ResponseMatrix& b);

/// Header row of boundary ids, then row i holds the "p/q" entries for the
/// i-th header vertex.
std::string response_to_csv(const ResponseMatrix& r);

} // namespace cactusnet
