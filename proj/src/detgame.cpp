#include "cactusnet/detgame.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cactusnet/cactus.hpp"
#include "cactusnet/gadgets.hpp"

namespace cactusnet {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t i) {
    while (parent_[i] != i) {
        parent_[i] = parent_[parent_[i]];
        i = parent_[i];
    }
    return i;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

GameState run_game(GameState state, bool promote) {
    for (auto* edges : {&state.white, &state.orange}) {
        std::sort(edges->begin(), edges->end());
        edges->erase(std::unique(edges->begin(), edges->end()), edges->end());
    }
    for (const auto* edges : {&state.white, &state.orange}) {
        for (const auto& e : *edges) {
            state.vertices.insert(e.first);
            state.vertices.insert(e.second);
        }
    }
    std::map<VertexId, std::size_t> index;
    for (VertexId v : state.vertices) index.emplace(v, index.size());

    std::set<VertexPair> pending(state.orange.begin(), state.orange.end());
    for (const auto& e : state.removed) pending.erase(e);
    std::vector<VertexPair> white = state.white;
    for (const auto& e : state.removed) {
        if (promote) white.push_back(e);
    }

    while (!pending.empty()) {
        DisjointSets components(index.size());
        for (const auto& e : white) components.unite(index.at(e.first), index.at(e.second));

        std::vector<VertexPair> pass;
        for (const auto& e : pending) {
            if (components.find(index.at(e.first)) == components.find(index.at(e.second))) pass.push_back(e);
        }
        if (pass.empty()) break;
        for (const auto& e : pass) {
            pending.erase(e);
            state.removed.push_back(e);
        }
        if (!promote) break;
        white.insert(white.end(), pass.begin(), pass.end());
    }
    return state;
}

GameState multiplexor_game() {
    const GadgetAssignment mux = populate_multiplexor(1, 1, 1);
    GameState state;
    for (const auto& w : mux.weighted_edges) state.white.emplace_back(1, w.slot);
    for (const auto& [a, b] : mux.auxiliary_slots) state.orange.emplace_back(a, b);
    return state;
}

GameState cactus_game() {
    const auto& topo = build_topology();
    GameState state;
    for (const auto& v : topo.vertices) state.vertices.insert(v.id);
    state.white = topo.star_edges();
    state.orange = topo.auxiliary;
    return state;
}

} // namespace cactusnet
