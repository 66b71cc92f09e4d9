#include "cactusnet/gadgets.hpp"

#include <initializer_list>
#include <stdexcept>

#include "cactusnet/error.hpp"

namespace cactusnet {

std::string to_string(GadgetKind kind) {
    switch (kind) {
    case GadgetKind::Quad: return "quad";
    case GadgetKind::Switch: return "switch";
    case GadgetKind::Multiplexor: return "multiplexor";
    }
    return "unknown";
}

std::vector<Rational> GadgetAssignment::conductivities() const {
    std::vector<Rational> out;
    out.reserve(weighted_edges.size());
    for (const auto& w : weighted_edges) out.push_back(multiplier * w.weight);
    return out;
}

Rational GadgetAssignment::conductivity(int slot) const {
    for (const auto& w : weighted_edges) {
        if (w.slot == slot) return multiplier * w.weight;
    }
    throw std::out_of_range(to_string(kind) + " has no slot " + std::to_string(slot));
}

namespace {

void require_positive(std::initializer_list<std::pair<const char*, const Rational*>> params, GadgetKind kind) {
    for (const auto& [name, value] : params) {
        if (value->sign() <= 0) {
            throw NonPositiveParameter(to_string(kind) + " parameter " + name + " = " + value->to_string() +
                                       " is not positive");
        }
    }
}

GadgetAssignment make(GadgetKind kind, Rational multiplier, std::initializer_list<Rational> weights,
                      std::vector<std::pair<int, int>> chords) {
    GadgetAssignment g{kind, std::move(multiplier), {}, std::move(chords)};
    int slot = 2;
    for (const auto& w : weights) g.weighted_edges.push_back({slot++, w});
    return g;
}

} // namespace

GadgetAssignment populate_quad(const Rational& s, const Rational& t) {
    require_positive({{"s", &s}, {"t", &t}}, GadgetKind::Quad);
    return make(GadgetKind::Quad, s.reciprocal() + 2 + t, {1, s, s * t, s}, {});
}

GadgetAssignment populate_switch(const Rational& s, const Rational& t) {
    require_positive({{"s", &s}, {"t", &t}}, GadgetKind::Switch);
    return make(GadgetKind::Switch, s + 2 + t / s, {1, t / s, 1, s}, {{2, 5}});
}

GadgetAssignment populate_multiplexor(const Rational& s, const Rational& t1, const Rational& t2) {
    require_positive({{"s", &s}, {"t1", &t1}, {"t2", &t2}}, GadgetKind::Multiplexor);
    return make(GadgetKind::Multiplexor, s + t1 + 3 + t2 / s, {1, 1, t1, t2 / s, 1, s},
                {{4, 5}, {4, 6}, {2, 7}, {3, 7}, {3, 4}});
}

} // namespace cactusnet
