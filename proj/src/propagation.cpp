#include "cactusnet/propagation.hpp"

#include <algorithm>
#include <sstream>

#include "cactusnet/error.hpp"

namespace cactusnet {

StepChain left_chain() {
    return {"left",
            {MobiusMap::reflect(7), MobiusMap::invert_scaled(1), MobiusMap::reflect(2), MobiusMap::invert_scaled(6),
             MobiusMap::reflect(4), MobiusMap::invert_scaled(1)}};
}

StepChain right_chain() {
    return {"right",
            {MobiusMap::reflect(7), MobiusMap::identity(), MobiusMap::reflect(7), MobiusMap::invert_scaled(1),
             MobiusMap::reflect(1), MobiusMap::invert_scaled(Rational(3, 2)), MobiusMap::reflect(Rational(7, 2)),
             MobiusMap::identity()}};
}

std::vector<Rational> chain_eval(const StepChain& chain, const Rational& x) {
    std::vector<Rational> trace{x};
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        try {
            trace.push_back(chain.steps[i](trace.back()));
        } catch (const PoleError& e) {
            throw PoleError(chain.name + " chain at x = " + x.to_string() + ", step " + std::to_string(i) + ": " +
                                e.what(),
                            i);
        }
    }
    return trace;
}

RationalFunction chain_closed_form(const StepChain& chain) {
    RationalFunction f = RationalFunction::identity();
    for (const auto& step : chain.steps) f = step(f);
    return f;
}

Polynomial conservation_polynomial(const RationalFunction& left, const RationalFunction& right) {
    return (left + right - RationalFunction::identity()).numerator().monic();
}

Polynomial conservation_polynomial(std::span<const StepChain> loops) {
    RationalFunction total = RationalFunction::constant(0);
    for (const auto& loop : loops) total = total + chain_closed_form(loop);
    return (total - RationalFunction::identity()).numerator().monic();
}

bool traces_positive(std::span<const StepChain> loops, const Rational& x) {
    for (const auto& loop : loops) {
        try {
            const auto trace = chain_eval(loop, x);
            if (std::any_of(trace.begin(), trace.end(), [](const Rational& v) { return v.sign() <= 0; })) {
                return false;
            }
        } catch (const PoleError&) {
            return false;
        }
    }
    return true;
}

std::vector<Rational> fiber_parameters(std::span<const StepChain> loops) {
    const Polynomial p = conservation_polynomial(loops);
    if (p.is_zero()) {
        throw InvariantViolation("conservation polynomial vanishes identically");
    }
    std::vector<Rational> out;
    for (const auto& root : poly_rational_roots(p)) {
        if (traces_positive(loops, root)) out.push_back(root);
    }
    return out;
}

std::vector<Rational> fiber_parameters() {
    const StepChain loops[] = {left_chain(), right_chain()};
    return fiber_parameters(loops);
}

ArityCertificate certify_arity(std::span<const StepChain> loops) {
    ArityCertificate cert;
    cert.conservation = conservation_polynomial(loops);
    if (cert.conservation.is_zero()) {
        throw InvariantViolation("conservation polynomial vanishes identically");
    }
    cert.rational_roots = poly_rational_roots(cert.conservation);
    cert.real_root_count = sturm_real_root_count(cert.conservation);
    for (const auto& root : cert.rational_roots) {
        if (traces_positive(loops, root)) cert.fiber.push_back(root);
    }
    return cert;
}

std::string render_table(const StepChain& chain, std::span<const Rational> xs) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"x"};
    for (const auto& step : chain.steps) header.push_back(step.to_string());
    rows.push_back(std::move(header));
    for (const auto& x : xs) {
        std::vector<std::string> row;
        for (const auto& v : chain_eval(chain, x)) row.push_back(v.to_string());
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c > 0) line += " | ";
            line += rows[r][c] + std::string(width[c] - rows[r][c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
        if (r == 0) {
            std::string rule;
            for (std::size_t c = 0; c < width.size(); ++c) {
                if (c > 0) rule += "-+-";
                rule += std::string(width[c], '-');
            }
            os << rule << '\n';
        }
    }
    return os.str();
}

} // namespace cactusnet
