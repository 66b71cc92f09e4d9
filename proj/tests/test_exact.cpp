#include <gtest/gtest.h>

#include <set>

#include "cactusnet/error.hpp"
#include "cactusnet/exact/mobius.hpp"
#include "cactusnet/exact/polynomial.hpp"
#include "cactusnet/exact/ratfun.hpp"
#include "support.hpp"

using namespace cactusnet;
using cactusnet::testing::make_rng;
using cactusnet::testing::random_polynomial;
using cactusnet::testing::random_rational;

namespace {

Rational q(std::int64_t p, std::int64_t d = 1) { return Rational(BigInt(p), BigInt(d)); }

// The expected polynomials below were expanded independently with sympy.
const Polynomial kCubic{q(-24), q(26), q(-9), q(1)}; // (x-2)(x-3)(x-4)

} // namespace

TEST(Rational, CanonicalOnConstruction) {
    const Rational r(BigInt(6), BigInt(-4));
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(r, q(-3, 2));
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), ZeroDenominator);
}

TEST(Rational, StringFormat) {
    EXPECT_EQ(q(53, 5).to_string(), "53/5");
    EXPECT_EQ(q(-3).to_string(), "-3");
    EXPECT_EQ(q(14, 4).to_string(), "7/2");
    EXPECT_EQ(Rational::parse("53/5"), q(53, 5));
    EXPECT_EQ(Rational::parse("-6/4"), q(-3, 2));
    EXPECT_EQ(Rational::parse(" 12 "), q(12));
    EXPECT_THROW(Rational::parse("1/0"), ZeroDenominator);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse("1/-2"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, ParseFormatRoundTripProperty) {
    auto rng = make_rng(11);
    for (int i = 0; i < 200; ++i) {
        const Rational r = random_rational(rng, 1000);
        EXPECT_EQ(Rational::parse(r.to_string()), r);
    }
}

TEST(Rational, FieldAxiomsProperty) {
    auto rng = make_rng(7);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a + (-a), Rational(0));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.reciprocal(), Rational(1));
            EXPECT_EQ(b / a * a, b);
        }
    }
}

TEST(Rational, Ordering) {
    EXPECT_LT(q(1, 3), q(1, 2));
    EXPECT_GT(q(-1, 3), q(-1, 2));
    EXPECT_EQ(q(2, 4) <=> q(1, 2), std::strong_ordering::equal);
}

TEST(Polynomial, TrimsAndReportsDegree) {
    EXPECT_EQ(Polynomial({q(1), q(0), q(0)}).degree(), 0);
    EXPECT_TRUE(Polynomial({q(0)}).is_zero());
    EXPECT_EQ(Polynomial().degree(), -1);
}

TEST(Polynomial, ArithmeticAndText) {
    const Polynomial xm2{q(-2), q(1)};
    const Polynomial xm3{q(-3), q(1)};
    const Polynomial xm4{q(-4), q(1)};
    EXPECT_EQ(xm2 * xm3 * xm4, kCubic);
    EXPECT_EQ(kCubic.to_string(), "x^3 - 9x^2 + 26x - 24");
    EXPECT_EQ(Polynomial({q(-13, 2), q(1)}).to_string(), "x - 13/2");
    EXPECT_EQ(Polynomial({q(0), q(7, 2)}).to_string(), "(7/2)x");
    EXPECT_EQ(Polynomial().to_string(), "0");
    EXPECT_EQ(kCubic(q(7, 2)), q(-3, 8));
}

TEST(Polynomial, DivmodReconstructsProperty) {
    auto rng = make_rng(3);
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = random_polynomial(rng, 5);
        Polynomial b = random_polynomial(rng, 3);
        if (b.is_zero()) continue;
        const auto [quot, rem] = Polynomial::divmod(a, b);
        EXPECT_EQ(quot * b + rem, a);
        EXPECT_LT(rem.degree(), b.degree());
    }
    EXPECT_THROW(Polynomial::divmod(kCubic, Polynomial()), ZeroDenominator);
}

TEST(Polynomial, GcdAndSquarefree) {
    const Polynomial xm1{q(-1), q(1)};
    const Polynomial xp1{q(1), q(1)};
    EXPECT_EQ(poly_gcd(xm1 * xp1 * q(3), xm1 * q(5)), xm1);
    EXPECT_EQ(squarefree_part(xm1 * xm1 * xp1), xm1 * xp1);
}

TEST(RationalRoots, Examples) {
    EXPECT_EQ(poly_rational_roots(kCubic), (std::vector<Rational>{q(2), q(3), q(4)}));
    EXPECT_EQ(poly_rational_roots(kCubic * q(-4)), (std::vector<Rational>{q(2), q(3), q(4)}));
    EXPECT_TRUE(poly_rational_roots(Polynomial{q(1), q(0), q(1)}).empty());
    EXPECT_EQ(poly_rational_roots(Polynomial::x()), (std::vector<Rational>{q(0)}));
    EXPECT_EQ(poly_rational_roots(Polynomial{q(-13, 2), q(1)}), (std::vector<Rational>{q(13, 2)}));
    EXPECT_THROW(poly_rational_roots(Polynomial()), ZeroDenominator);
}

TEST(RationalRoots, RecoversPlantedRootsProperty) {
    auto rng = make_rng(5);
    for (int i = 0; i < 60; ++i) {
        std::set<Rational> planted;
        Polynomial p = Polynomial::constant(random_rational(rng, 9));
        if (p.is_zero()) p = Polynomial::constant(1);
        for (int k = 0; k < 3; ++k) {
            const Rational r = random_rational(rng, 9);
            planted.insert(r);
            p = p * Polynomial{-r, q(1)};
        }
        p = p * Polynomial{q(1), q(0), q(1)}; // no real roots
        const auto roots = poly_rational_roots(p);
        EXPECT_EQ(std::set<Rational>(roots.begin(), roots.end()), planted);
        for (const auto& r : roots) EXPECT_TRUE(p(r).is_zero());
        EXPECT_GE(sturm_real_root_count(p), roots.size());
        EXPECT_EQ(sturm_real_root_count(p), planted.size());
    }
}

TEST(Sturm, Examples) {
    EXPECT_EQ(sturm_real_root_count(kCubic), 3u);
    EXPECT_EQ(sturm_real_root_count(Polynomial{q(1), q(0), q(1)}), 0u);
    EXPECT_EQ(sturm_real_root_count(Polynomial{q(-2), q(0), q(1)}), 2u);
    // repeated roots count once
    EXPECT_EQ(sturm_real_root_count(kCubic * Polynomial{q(-2), q(1)}), 3u);
    EXPECT_EQ(sturm_real_root_count(Polynomial::constant(5)), 0u);
    // perturbed-chain cubic x^3 - 37/4 x^2 + 49/2 x - 187/8: one real root (sympy)
    EXPECT_EQ(sturm_real_root_count(Polynomial{q(-187, 8), q(49, 2), q(-37, 4), q(1)}), 1u);
}

TEST(Mobius, ApplyExamples) {
    EXPECT_EQ(mobius_apply(MobiusMap::reflect(7), q(2)), q(5));
    EXPECT_EQ(mobius_apply(MobiusMap::identity(), q(9, 5)), q(9, 5));
    EXPECT_EQ(mobius_apply(MobiusMap::invert_scaled(6), q(9, 5)), q(10, 3));
}

TEST(Mobius, PoleAndSingular) {
    EXPECT_THROW(mobius_apply(MobiusMap::invert_scaled(1), q(0)), PoleError);
    EXPECT_THROW(MobiusMap(q(1), q(2), q(2), q(4)), std::invalid_argument);
}

TEST(Mobius, ComposeExamples) {
    const auto r7 = MobiusMap::reflect(7);
    EXPECT_EQ(mobius_compose(r7, r7), MobiusMap::identity());
    EXPECT_EQ(mobius_apply(mobius_compose(MobiusMap::invert_scaled(1), r7), q(2)), q(1, 5));

    MobiusMap left = MobiusMap::identity();
    for (const auto& step : {r7, MobiusMap::invert_scaled(1), MobiusMap::reflect(2), MobiusMap::invert_scaled(6),
                             MobiusMap::reflect(4), MobiusMap::invert_scaled(1)}) {
        left = mobius_compose(step, left);
    }
    EXPECT_EQ(mobius_apply(left, q(3)), q(7, 4));
}

TEST(Mobius, ComposeMatchesSequentialApplyProperty) {
    auto rng = make_rng(13);
    int checked = 0;
    while (checked < 200) {
        const Rational a = random_rational(rng, 20), b = random_rational(rng, 20);
        const Rational c = random_rational(rng, 20), d = random_rational(rng, 20);
        const Rational e = random_rational(rng, 20), f = random_rational(rng, 20);
        const Rational g = random_rational(rng, 20), h = random_rational(rng, 20);
        if ((a * d - b * c).is_zero() || (e * h - f * g).is_zero()) continue;
        const MobiusMap outer(a, b, c, d);
        const MobiusMap inner(e, f, g, h);
        const Rational x = random_rational(rng, 50);
        try {
            const Rational step = inner(x);
            const Rational expected = outer(step);
            const MobiusMap both = mobius_compose(outer, inner);
            EXPECT_FALSE(both.determinant().is_zero());
            EXPECT_EQ(both(x), expected);
            ++checked;
        } catch (const PoleError&) {
        }
    }
}

TEST(RationalFunction, CanonicalExamples) {
    const auto f = ratfun_canonical(Polynomial{q(-13), q(2)}, Polynomial{q(-10), q(2)});
    EXPECT_EQ(f.numerator(), (Polynomial{q(-13, 2), q(1)}));
    EXPECT_EQ(f.denominator(), (Polynomial{q(-5), q(1)}));

    const auto g = ratfun_canonical(Polynomial{q(-1), q(0), q(1)}, Polynomial{q(-1), q(1)});
    EXPECT_EQ(g.numerator(), (Polynomial{q(1), q(1)}));
    EXPECT_EQ(g.denominator(), Polynomial::constant(1));

    const auto z = ratfun_canonical(Polynomial(), Polynomial::x());
    EXPECT_TRUE(z.numerator().is_zero());
    EXPECT_EQ(z.denominator(), Polynomial::constant(1));

    EXPECT_THROW(ratfun_canonical(Polynomial::x(), Polynomial()), ZeroDenominator);
    EXPECT_THROW(f(q(5)), PoleError);
}

TEST(RationalFunction, CanonicalIdempotentAndFaithfulProperty) {
    auto rng = make_rng(17);
    for (int i = 0; i < 40; ++i) {
        const Polynomial common = random_polynomial(rng, 2, 6);
        const Polynomial num = random_polynomial(rng, 3, 6) * common;
        const Polynomial den = random_polynomial(rng, 3, 6) * common;
        if (den.is_zero()) continue;
        const RationalFunction f(num, den);
        EXPECT_EQ(RationalFunction(f.numerator(), f.denominator()), f);
        int points = 0;
        while (points < 100) {
            const Rational x = random_rational(rng, 200);
            if (den(x).is_zero()) continue;
            EXPECT_EQ(f(x), num(x) / den(x));
            ++points;
        }
    }
}
