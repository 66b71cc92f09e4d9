#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "cactusnet/exact/polynomial.hpp"
#include "cactusnet/gadgets.hpp"
#include "cactusnet/network.hpp"
#include "cactusnet/propagation.hpp"
#include "cactusnet/response.hpp"

namespace cactusnet {

enum class Loop { Left, Right };

/// A gadget parameter read from a loop trace: trace[index] of that loop.
struct TraceEntry {
    Loop loop = Loop::Left;
    std::size_t index = 0;
};

/// One star of the cactus: which gadget populates it, where its parameters
/// come from, and which boundary vertex each gadget slot lands on.
struct StarWiring {
    VertexId hub;
    GadgetKind kind = GadgetKind::Quad;
    std::vector<TraceEntry> parameters;
    std::map<int, VertexId> slots;
};

/// The two leaf cactus: six interior hubs, twelve boundary vertices, the star
/// wiring, and the boundary-boundary auxiliary edges.
struct CactusTopology {
    std::vector<VertexSpec> vertices;
    std::vector<StarWiring> stars;
    std::vector<VertexPair> auxiliary;

    std::vector<VertexPair> star_edges() const;
    std::size_t degree(VertexId v) const;
};

/// Builds and validates the instance (26 star edges interior-boundary,
/// 6 auxiliary edges boundary-boundary, gadget chords = auxiliary set).
/// Throws InvariantViolation if any structural check fails.
const CactusTopology& build_topology();

/// Star conductivities at fiber parameter x; auxiliary edges are left out.
/// Throws PoleError, or NonPositiveConductivity when a trace value or
/// conductivity is not strictly positive.
Network populate(const Rational& x);

using AuxiliaryAssignment = std::map<VertexPair, Rational>;

/// Chooses auxiliary conductivities so all networks share one response.
/// Every boundary pair outside `auxiliary` must already agree
/// (InfeasibleFiber otherwise); each auxiliary pair then gets
/// Lambda_k(i,j) - (min_k Lambda_k(i,j) - slack).
/// Throws NonPositiveSlack, TopologyMismatch.
std::vector<AuxiliaryAssignment> solve_auxiliary(std::span<const Network> networks,
                                                 std::span<const VertexPair> auxiliary, const Rational& slack);

/// Same, over the cactus auxiliary edge set.
std::vector<AuxiliaryAssignment> solve_auxiliary(std::span<const Network> networks, const Rational& slack = 1);

struct FiberReport {
    std::vector<Rational> parameters;
    Rational slack;
    /// Populated networks including their solved auxiliary edges.
    std::vector<Network> networks;
    std::vector<AuxiliaryAssignment> auxiliary_solution;
    ResponseMatrix common_response;
    Polynomial conservation;
    std::size_t real_root_count = 0;
    std::size_t arity = 0;
};

/// Solves auxiliaries for already-populated networks (one per parameter),
/// checks exact response equality and the Dirichlet oracle, and, for two or
/// more parameters, that the conservation polynomial has exactly that many
/// real roots. Throws InfeasibleFiber, InvariantViolation.
FiberReport verify_networks(std::span<const Rational> xs, std::vector<Network> networks, const Rational& slack);

/// populate() each x, then verify_networks.
FiberReport verify_fiber(std::span<const Rational> xs, const Rational& slack = 1);

/// Certified fiber size: rational roots of the conservation polynomial that
/// also populate with strictly positive conductivities.
std::size_t arity();

} // namespace cactusnet
