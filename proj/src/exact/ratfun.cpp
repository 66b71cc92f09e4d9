#include "cactusnet/exact/ratfun.hpp"

#include "cactusnet/error.hpp"

namespace cactusnet {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) {
        throw ZeroDenominator("rational function with zero denominator");
    }
    if (num.is_zero()) {
        den_ = Polynomial::constant(1);
        return;
    }
    const Polynomial g = poly_gcd(num, den);
    num_ = Polynomial::divmod(num, g).first;
    den_ = Polynomial::divmod(den, g).first;
    const Rational scale = den_.leading().reciprocal();
    num_ = num_ * scale;
    den_ = den_ * scale;
}

Rational RationalFunction::operator()(const Rational& at) const {
    const Rational d = den_(at);
    if (d.is_zero()) {
        throw PoleError("rational function " + to_string() + " has a pole at " + at.to_string());
    }
    return num_(at) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.degree() == 0) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

} // namespace cactusnet
