#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cactusnet {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always held in lowest terms with a positive
/// denominator, so structural equality is mathematical equality.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : value_(value) {} // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : value_(value) {} // NOLINT(google-explicit-constructor)
    /// Throws ZeroDenominator when den == 0.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or "p" (optional leading '-'). Throws ParseError / ZeroDenominator.
    static Rational parse(std::string_view text);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return value_.is_zero(); }
    int sign() const { return value_.sign(); }
    bool is_integer() const { return denominator() == 1; }

    /// Throws ZeroDenominator on zero.
    Rational reciprocal() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q", with "/q" omitted when q == 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(Raw{}, -value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    using Value = boost::multiprecision::cpp_rational;
    struct Raw {};
    Rational(Raw, Value v) : value_(std::move(v)) {}

    Value value_;
};

} // namespace cactusnet
