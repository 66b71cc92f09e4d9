#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cactusnet/exact/mobius.hpp"
#include "cactusnet/exact/polynomial.hpp"
#include "cactusnet/exact/ratfun.hpp"

namespace cactusnet {

/// A loop's arm propagation, stored as data: the value entering the loop is
/// pushed through each step in order.
struct StepChain {
    std::string name;
    std::vector<MobiusMap> steps;
};

/// quad^3 loop: y->7-y, 1/y, 2-y, 6/y, 4-y, 1/y.
StepChain left_chain();
/// switch quad^2 switch loop: y->7-y, y, 7-y, 1/y, 1-y, (3/2)/y, 7/2-y, y.
StepChain right_chain();

/// Trace [x, step1(x), ...]; throws PoleError carrying the failing step index.
std::vector<Rational> chain_eval(const StepChain& chain, const Rational& x);

/// Composite of all steps as a reduced rational function of x.
RationalFunction chain_closed_form(const StepChain& chain);

/// Monic numerator of L(x) + R(x) - x over the common denominator.
Polynomial conservation_polynomial(const RationalFunction& left, const RationalFunction& right);

/// Monic numerator of sum(loops) - x. A single loop gives L(x) - x.
Polynomial conservation_polynomial(std::span<const StepChain> loops);

/// True when every trace is pole-free and strictly positive at x.
bool traces_positive(std::span<const StepChain> loops, const Rational& x);

/// Rational roots of the conservation polynomial whose traces are pole-free
/// and strictly positive.
std::vector<Rational> fiber_parameters(std::span<const StepChain> loops);
std::vector<Rational> fiber_parameters();

/// Everything needed to certify the size of the fiber.
struct ArityCertificate {
    Polynomial conservation;
    std::vector<Rational> rational_roots;
    std::size_t real_root_count = 0;
    /// Rational roots admissible as conductivity parameters.
    std::vector<Rational> fiber;

    std::size_t arity() const { return fiber.size(); }
    /// Every real root is rational, so no candidate escaped exact checking.
    bool complete() const { return real_root_count == rational_roots.size(); }
};

/// Throws InvariantViolation when the conservation polynomial is identically
/// zero (every x conserves, so the count is meaningless).
ArityCertificate certify_arity(std::span<const StepChain> loops);

/// Aligned text table of the traces at each x, one row per x under a header of
/// step expressions.
std::string render_table(const StepChain& chain, std::span<const Rational> xs);

} // namespace cactusnet
