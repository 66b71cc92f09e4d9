#include "cactusnet/cactus.hpp"

#include <algorithm>
#include <set>

#include "cactusnet/error.hpp"

namespace cactusnet {

namespace {

StarWiring star(int hub, GadgetKind kind, std::vector<TraceEntry> params, std::vector<int> leaves) {
    StarWiring s{VertexId{hub}, kind, std::move(params), {}};
    int slot = 2;
    for (int v : leaves) s.slots.emplace(slot++, VertexId{v});
    return s;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation("cactus topology: " + what);
}

void validate(const CactusTopology& t) {
    std::map<VertexId, VertexKind> kinds;
    for (const auto& v : t.vertices) kinds[v.id] = v.kind;
    require(kinds.size() == 18, "expected 18 vertices");

    const auto star_edges = t.star_edges();
    require(star_edges.size() == 26, "expected 26 star edges");
    require(std::set<VertexPair>(star_edges.begin(), star_edges.end()).size() == star_edges.size(),
            "repeated star edge");
    for (const auto& s : t.stars) {
        require(kinds.at(s.hub) == VertexKind::Interior, "hub " + std::to_string(s.hub.value) + " is not interior");
        for (const auto& [slot, leaf] : s.slots) {
            require(kinds.at(leaf) == VertexKind::Boundary, "star leaf " + std::to_string(leaf.value) +
                                                                " is not boundary");
        }
    }

    require(t.auxiliary.size() == 6, "expected 6 auxiliary edges");
    for (const auto& p : t.auxiliary) {
        require(kinds.at(p.first) == VertexKind::Boundary && kinds.at(p.second) == VertexKind::Boundary,
                "auxiliary edge " + to_string(p) + " is not boundary-boundary");
    }

    // The auxiliary set is exactly the union of the gadget chords.
    std::set<VertexPair> chords;
    for (const auto& s : t.stars) {
        const Rational one(1);
        GadgetAssignment g = s.kind == GadgetKind::Quad     ? populate_quad(one, one)
                             : s.kind == GadgetKind::Switch ? populate_switch(one, one)
                                                            : populate_multiplexor(one, one, one);
        require(g.weighted_edges.size() == s.slots.size(), "slot count of hub " + std::to_string(s.hub.value));
        for (const auto& [a, b] : g.auxiliary_slots) chords.insert(VertexPair(s.slots.at(a), s.slots.at(b)));
    }
    require(chords == std::set<VertexPair>(t.auxiliary.begin(), t.auxiliary.end()),
            "gadget chords do not match the auxiliary edges");
}

CactusTopology make_topology() {
    CactusTopology t;
    for (int v : {1, 4, 11, 12, 16, 17}) t.vertices.push_back({VertexId{v}, VertexKind::Interior});
    for (int v : {2, 3, 5, 6, 7, 8, 9, 10, 13, 14, 15, 18}) t.vertices.push_back({VertexId{v}, VertexKind::Boundary});
    std::sort(t.vertices.begin(), t.vertices.end(), [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });

    // Slot order follows the gadget weight order; leaves are listed per slot 2, 3, ...
    using enum GadgetKind;
    const Loop L = Loop::Left;
    const Loop R = Loop::Right;
    t.stars = {
        star(11, Multiplexor, {{L, 1}, {L, 2}, {R, 2}}, {2, 3, 6, 7, 13, 14}),
        star(1, Quad, {{L, 3}, {L, 4}}, {10, 2, 9, 6}),
        star(16, Quad, {{L, 5}, {L, 6}}, {14, 9, 13, 10}),
        star(4, Quad, {{R, 4}, {R, 3}}, {7, 5, 14, 8}),
        star(12, Quad, {{R, 5}, {R, 6}}, {14, 5, 15, 8}),
        star(17, Switch, {{R, 7}, {R, 8}}, {18, 13, 15, 14}),
    };
    t.auxiliary = {{6, 7}, {3, 6}, {6, 13}, {2, 14}, {3, 14}, {14, 18}};
    std::sort(t.auxiliary.begin(), t.auxiliary.end());
    validate(t);
    return t;
}

GadgetAssignment populate_star(const StarWiring& s, const std::vector<Rational>& left,
                               const std::vector<Rational>& right) {
    std::vector<Rational> p;
    for (const auto& e : s.parameters) p.push_back((e.loop == Loop::Left ? left : right).at(e.index));
    switch (s.kind) {
    case GadgetKind::Quad: return populate_quad(p.at(0), p.at(1));
    case GadgetKind::Switch: return populate_switch(p.at(0), p.at(1));
    case GadgetKind::Multiplexor: return populate_multiplexor(p.at(0), p.at(1), p.at(2));
    }
    throw InvariantViolation("unknown gadget kind");
}

} // namespace

std::vector<VertexPair> CactusTopology::star_edges() const {
    std::vector<VertexPair> out;
    for (const auto& s : stars) {
        for (const auto& [slot, leaf] : s.slots) out.emplace_back(s.hub, leaf);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t CactusTopology::degree(VertexId v) const {
    std::size_t d = 0;
    for (const auto& p : star_edges()) d += (p.first == v || p.second == v) ? 1 : 0;
    for (const auto& p : auxiliary) d += (p.first == v || p.second == v) ? 1 : 0;
    return d;
}

const CactusTopology& build_topology() {
    static const CactusTopology topology = make_topology();
    return topology;
}

Network populate(const Rational& x) {
    const auto& topo = build_topology();
    const auto left = chain_eval(left_chain(), x);
    const auto right = chain_eval(right_chain(), x);
    for (const auto* trace : {&left, &right}) {
        for (std::size_t i = 0; i < trace->size(); ++i) {
            if ((*trace)[i].sign() <= 0) {
                throw NonPositiveConductivity(std::string(trace == &left ? "left" : "right") + " trace at x = " +
                                              x.to_string() + " has entry " + std::to_string(i) + " = " +
                                              (*trace)[i].to_string());
            }
        }
    }

    std::vector<Edge> edges;
    for (const auto& s : topo.stars) {
        GadgetAssignment g;
        try {
            g = populate_star(s, left, right);
        } catch (const NonPositiveParameter& e) {
            throw NonPositiveConductivity("hub " + std::to_string(s.hub.value) + ": " + e.what());
        }
        for (const auto& w : g.weighted_edges) {
            edges.push_back({s.hub, s.slots.at(w.slot), g.multiplier * w.weight, EdgeRole::Star});
        }
    }
    return build_network(topo.vertices, edges);
}

std::vector<AuxiliaryAssignment> solve_auxiliary(std::span<const Network> networks,
                                                 std::span<const VertexPair> auxiliary, const Rational& slack) {
    if (slack.sign() <= 0) {
        throw NonPositiveSlack("auxiliary slack must be positive, got " + slack.to_string());
    }
    if (networks.empty()) return {};
    const auto boundary = networks.front().boundary();
    for (const auto& n : networks) {
        if (!std::equal(boundary.begin(), boundary.end(), n.boundary().begin(), n.boundary().end())) {
            throw TopologyMismatch("networks do not share a boundary vertex set");
        }
    }
    const std::set<VertexPair> aux(auxiliary.begin(), auxiliary.end());
    for (const auto& p : aux) {
        const auto& n = networks.front();
        if (!n.has_vertex(p.first) || !n.has_vertex(p.second) || n.kind(p.first) != VertexKind::Boundary ||
            n.kind(p.second) != VertexKind::Boundary) {
            throw TopologyMismatch("auxiliary pair " + to_string(p) + " is not a boundary pair");
        }
    }

    std::vector<ResponseMatrix> responses;
    for (const auto& n : networks) responses.push_back(schur_response(n));

    const std::size_t nb = boundary.size();
    std::vector<AuxiliaryAssignment> out(networks.size());
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = i + 1; j < nb; ++j) {
            const VertexPair pair(boundary[i], boundary[j]);
            if (!aux.contains(pair)) {
                for (std::size_t k = 1; k < responses.size(); ++k) {
                    if (responses[k].entries(i, j) != responses[0].entries(i, j)) {
                        throw InfeasibleFiber("non-auxiliary response entry " + to_string(pair) + " differs: " +
                                              responses[0].entries(i, j).to_string() + " (network 0) vs " +
                                              responses[k].entries(i, j).to_string() + " (network " +
                                              std::to_string(k) + ")");
                    }
                }
                continue;
            }
            Rational lowest = responses[0].entries(i, j);
            for (const auto& r : responses) lowest = std::min(lowest, r.entries(i, j));
            const Rational target = lowest - slack;
            for (std::size_t k = 0; k < responses.size(); ++k) out[k][pair] = responses[k].entries(i, j) - target;
        }
    }
    return out;
}

std::vector<AuxiliaryAssignment> solve_auxiliary(std::span<const Network> networks, const Rational& slack) {
    return solve_auxiliary(networks, build_topology().auxiliary, slack);
}

FiberReport verify_networks(std::span<const Rational> xs, std::vector<Network> networks, const Rational& slack) {
    if (xs.size() != networks.size()) {
        throw TopologyMismatch("one network per fiber parameter is required");
    }
    FiberReport report;
    report.parameters.assign(xs.begin(), xs.end());
    report.slack = slack;
    report.auxiliary_solution = solve_auxiliary(networks, slack);

    for (std::size_t k = 0; k < networks.size(); ++k) {
        std::vector<Edge> aux;
        for (const auto& [pair, value] : report.auxiliary_solution[k]) {
            aux.push_back({pair.first, pair.second, value, EdgeRole::Auxiliary});
        }
        report.networks.push_back(with_edges(networks[k], aux));
    }

    for (std::size_t k = 0; k < report.networks.size(); ++k) {
        const auto label = "x = " + report.parameters[k].to_string();
        const ResponseMatrix response = schur_response(report.networks[k]);
        if (auto bad = check_response_invariants(response)) {
            throw InvariantViolation("response at " + label + ": " + *bad);
        }
        if (auto diff = first_difference(response, response_by_dirichlet(report.networks[k]))) {
            throw InvariantViolation("Dirichlet oracle disagrees at " + label + ": " + *diff);
        }
        if (k == 0) {
            report.common_response = response;
        } else if (auto diff = first_difference(report.common_response, response)) {
            throw InfeasibleFiber("response at " + label + " differs from x = " + report.parameters[0].to_string() +
                                  " at " + *diff);
        }
    }

    const StepChain loops[] = {left_chain(), right_chain()};
    report.conservation = conservation_polynomial(loops);
    report.real_root_count = sturm_real_root_count(report.conservation);
    if (xs.size() >= 2 && report.real_root_count != xs.size()) {
        throw InvariantViolation("conservation polynomial has " + std::to_string(report.real_root_count) +
                                 " real roots but the fiber has " + std::to_string(xs.size()) + " members");
    }
    report.arity = xs.size();
    return report;
}

FiberReport verify_fiber(std::span<const Rational> xs, const Rational& slack) {
    std::vector<Network> networks;
    for (const auto& x : xs) networks.push_back(populate(x));
    return verify_networks(xs, std::move(networks), slack);
}

std::size_t arity() {
    const StepChain loops[] = {left_chain(), right_chain()};
    const ArityCertificate cert = certify_arity(loops);
    std::size_t count = 0;
    for (const auto& x : cert.fiber) {
        try {
            populate(x);
            ++count;
        } catch (const Error&) {
        }
    }
    return count;
}

} // namespace cactusnet
