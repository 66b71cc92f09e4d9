#pragma once

#include <string>

#include "cactusnet/exact/ratfun.hpp"

namespace cactusnet {

/// y -> (a*y + b) / (c*y + d) with a*d - b*c != 0.
class MobiusMap {
public:
    /// Throws std::invalid_argument when the determinant vanishes.
    MobiusMap(Rational a, Rational b, Rational c, Rational d);

    static MobiusMap identity() { return {1, 0, 0, 1}; }
    /// y -> k - y
    static MobiusMap reflect(const Rational& k) { return {-1, k, 0, 1}; }
    /// y -> k / y
    static MobiusMap invert_scaled(const Rational& k) { return {0, k, 1, 0}; }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    Rational determinant() const { return a_ * d_ - b_ * c_; }

    /// Throws PoleError when c*x + d == 0.
    Rational operator()(const Rational& x) const;
    /// Symbolic application to a function of x.
    RationalFunction operator()(const RationalFunction& f) const;

    std::string to_string(const std::string& var = "y") const;

    friend bool operator==(const MobiusMap&, const MobiusMap&) = default;

private:
    Rational a_, b_, c_, d_;
};

inline Rational mobius_apply(const MobiusMap& m, const Rational& x) { return m(x); }

/// outer . inner, i.e. x -> outer(inner(x)).
MobiusMap mobius_compose(const MobiusMap& outer, const MobiusMap& inner);

} // namespace cactusnet
