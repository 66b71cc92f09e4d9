#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "cactusnet/network.hpp"

namespace cactusnet {

/// Disjoint sets over dense indices, union by size with path halving.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n);

    std::size_t find(std::size_t i);
    /// True if the call merged two different sets.
    bool unite(std::size_t a, std::size_t b);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Determination game: an orange edge is removed once its endpoints are
/// joined by a path of white edges.
struct GameState {
    std::set<VertexId> vertices;
    std::vector<VertexPair> white;
    std::vector<VertexPair> orange;
    /// Removed orange edges, in removal order.
    std::vector<VertexPair> removed;

    bool all_removed() const { return removed.size() == orange.size(); }
};

/// Plays the game to a fixpoint. Each pass removes, in lexicographic order,
/// every remaining orange edge inside one white component. With `promote`,
/// removed edges turn white before the next pass; without it a single pass
/// suffices. Endpoints missing from `vertices` are added; the white and orange
/// lists come back sorted and deduplicated.
GameState run_game(GameState state, bool promote = false);

/// The multiplexor gadget: hub 1, star edges to slots 2..7, its five chords.
GameState multiplexor_game();

/// The full cactus: white star edges, orange auxiliary edges.
GameState cactus_game();

} // namespace cactusnet
