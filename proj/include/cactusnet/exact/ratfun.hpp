#pragma once

#include <string>

#include "cactusnet/exact/polynomial.hpp"

namespace cactusnet {

/// Reduced quotient of polynomials: gcd(num, den) is a unit and the
/// denominator is monic. Two functions are equal iff these forms match.
class RationalFunction {
public:
    /// The identity function x/1.
    RationalFunction() : RationalFunction(Polynomial::x(), Polynomial::constant(1)) {}
    /// Canonicalizes; throws ZeroDenominator when den is zero.
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction constant(const Rational& c) {
        return {Polynomial::constant(c), Polynomial::constant(1)};
    }
    static RationalFunction identity() { return {}; }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    /// Throws PoleError where the reduced denominator vanishes.
    Rational operator()(const Rational& at) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

    std::string to_string(const std::string& var = "x") const;

private:
    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction ratfun_canonical(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

} // namespace cactusnet
