#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cactusnet/exact/rational.hpp"

namespace cactusnet {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The highest stored coefficient is never zero; the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients)
        : Polynomial(std::vector<Rational>(coefficients)) {}

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    /// The identity polynomial x.
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coefficients() const { return coefficients_; }
    bool is_zero() const { return coefficients_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    /// Coefficient of x^i (zero beyond the degree).
    Rational coefficient(std::size_t i) const;
    Rational leading() const;

    Rational operator()(const Rational& at) const;

    Polynomial derivative() const;
    /// Scaled so the leading coefficient is 1. The zero polynomial stays zero.
    Polynomial monic() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Rational& s);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// Euclidean division; throws ZeroDenominator when the divisor is zero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    /// Human-readable form in the variable `var`, e.g. "x^3 - 9x^2 + 26x - 24".
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// All rational roots of p, ascending, each verified by exact evaluation.
/// Throws ZeroDenominator for the zero polynomial.
std::vector<Rational> poly_rational_roots(const Polynomial& p);

/// Number of distinct real roots of p, counted with a Sturm chain on its
/// squarefree part. Throws ZeroDenominator for the zero polynomial.
std::size_t sturm_real_root_count(const Polynomial& p);

} // namespace cactusnet
