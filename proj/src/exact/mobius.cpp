#include "cactusnet/exact/mobius.hpp"

#include <stdexcept>

#include "cactusnet/error.hpp"

namespace cactusnet {

MobiusMap::MobiusMap(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (determinant().is_zero()) {
        throw std::invalid_argument("singular Mobius map " + to_string());
    }
}

Rational MobiusMap::operator()(const Rational& x) const {
    const Rational den = c_ * x + d_;
    if (den.is_zero()) {
        throw PoleError(to_string() + " has a pole at y = " + x.to_string());
    }
    return (a_ * x + b_) / den;
}

RationalFunction MobiusMap::operator()(const RationalFunction& f) const {
    const Polynomial& n = f.numerator();
    const Polynomial& m = f.denominator();
    return {n * a_ + m * b_, n * c_ + m * d_};
}

std::string MobiusMap::to_string(const std::string& var) const {
    const Polynomial num({b_, a_});
    const Polynomial den({d_, c_});
    if (den == Polynomial::constant(1)) return num.to_string(var);
    auto group = [&var](const Polynomial& p) {
        const std::string text = p.to_string(var);
        return text.find_first_of(" /") == std::string::npos ? text : "(" + text + ")";
    };
    return group(num) + "/" + group(den);
}

MobiusMap mobius_compose(const MobiusMap& f, const MobiusMap& g) {
    return {f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
            f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d()};
}

} // namespace cactusnet
