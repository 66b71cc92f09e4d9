#include "cactusnet/exact/rational.hpp"

#include <cctype>
#include <ostream>

#include "cactusnet/error.hpp"

namespace cactusnet {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    BigInt out = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("malformed rational '" + std::string(whole) + "'");
        }
        out = out * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-out) : out;
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw ZeroDenominator("rational with zero denominator");
    }
    value_ = den < 0 ? Value(BigInt(-num), BigInt(-den)) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    return Rational(parse_integer(text.substr(0, slash), text), parse_integer(den_text, text));
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw ZeroDenominator("reciprocal of zero");
    }
    return Rational(denominator(), numerator());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ZeroDenominator("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    std::string out = numerator().str();
    const BigInt den = denominator();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace cactusnet
