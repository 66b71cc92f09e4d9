#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cactusnet/exact/rational.hpp"

namespace cactusnet {

enum class GadgetKind { Quad, Switch, Multiplexor };

std::string to_string(GadgetKind kind);

/// Boundary slot of a gadget, numbered as the leaves of the gadget's star
/// (the hub is slot 1, so leaves start at 2).
struct WeightedSlot {
    int slot = 0;
    Rational weight;
};

/// A populated star gadget: every leaf edge carries multiplier * weight.
struct GadgetAssignment {
    GadgetKind kind = GadgetKind::Quad;
    Rational multiplier;
    std::vector<WeightedSlot> weighted_edges;
    /// Boundary chords of the gadget (unvalued), as slot pairs.
    std::vector<std::pair<int, int>> auxiliary_slots;

    std::vector<Rational> conductivities() const;
    /// Conductivity on one slot; throws std::out_of_range for an unknown slot.
    Rational conductivity(int slot) const;
};

/// Quad: multiplier 1/s + 2 + t on weights (1, s, s*t, s), slots 2..5.
/// Throws NonPositiveParameter unless s, t > 0.
GadgetAssignment populate_quad(const Rational& s, const Rational& t);

/// Switch: multiplier s + 2 + t/s on weights (1, t/s, 1, s), slots 2..5,
/// with one chord between slots 2 and 5.
GadgetAssignment populate_switch(const Rational& s, const Rational& t);

/// Multiplexor (quad # switch): multiplier s + t1 + 3 + t2/s on weights
/// (1, 1, t1, t2/s, 1, s), slots 2..7, with chords 4-5, 4-6, 2-7, 3-7, 3-4.
/// t1 feeds the left loop and t2 the right loop.
GadgetAssignment populate_multiplexor(const Rational& s, const Rational& t1, const Rational& t2);

} // namespace cactusnet
