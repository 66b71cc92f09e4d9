#include "cactusnet/exact/polynomial.hpp"

#include <algorithm>
#include <set>

#include "cactusnet/error.hpp"

namespace cactusnet {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) {
        coefficients_.pop_back();
    }
}

Rational Polynomial::coefficient(std::size_t i) const {
    return i < coefficients_.size() ? coefficients_[i] : Rational(0);
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coefficients_.back(); }

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * at + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> out;
    for (std::size_t i = 1; i < coefficients_.size(); ++i) {
        out.push_back(coefficients_[i] * Rational(static_cast<std::int64_t>(i)));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading().reciprocal();
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coefficient(i) + b.coefficient(i);
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            out[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
    std::vector<Rational> out = a.coefficients_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw ZeroDenominator("polynomial division by zero");
    }
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.coefficients_;
    std::vector<Rational> quot(a.coefficients_.size() - b.coefficients_.size() + 1);
    const Rational lead_inv = b.leading().reciprocal();
    const std::size_t db = b.coefficients_.size() - 1;
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Rational q = rem[k + db] * lead_inv;
        quot[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k + j] -= q * b.coefficients_[j];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        const Rational& c = coefficients_[k];
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag == Rational(1);
        if (k == 0 || !unit) {
            out += mag.is_integer() || k == 0 ? mag.to_string() : "(" + mag.to_string() + ")";
        }
        if (k >= 1) out += var;
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = Polynomial::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.degree() <= 0) return p.monic();
    const Polynomial g = poly_gcd(p, p.derivative());
    return Polynomial::divmod(p, g).first.monic();
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> small;
    std::vector<BigInt> large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int sign_at_infinity(const Polynomial& p, bool positive) {
    const int s = p.leading().sign();
    if (positive || p.degree() % 2 == 0) return s;
    return -s;
}

std::size_t sign_changes(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

std::vector<Rational> poly_rational_roots(const Polynomial& p) {
    if (p.is_zero()) {
        throw ZeroDenominator("rational roots of the zero polynomial");
    }
    BigInt den_lcm = 1;
    for (const auto& c : p.coefficients()) den_lcm = boost::multiprecision::lcm(den_lcm, c.denominator());
    std::vector<BigInt> ints;
    for (const auto& c : p.coefficients()) ints.push_back(c.numerator() * (den_lcm / c.denominator()));

    std::set<Rational> roots;
    std::size_t shift = 0;
    while (shift < ints.size() && ints[shift] == 0) ++shift;
    if (shift > 0) roots.insert(Rational(0));
    const BigInt constant = ints[shift];
    const BigInt lead = ints.back();
    if (ints.size() - shift > 1) {
        const auto numerators = positive_divisors(constant);
        const auto denominators = positive_divisors(lead);
        for (const auto& num : numerators) {
            for (const auto& den : denominators) {
                for (const Rational& candidate : {Rational(num, den), Rational(-num, den)}) {
                    if (p(candidate).is_zero()) roots.insert(candidate);
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

std::size_t sturm_real_root_count(const Polynomial& p) {
    if (p.is_zero()) {
        throw ZeroDenominator("real roots of the zero polynomial");
    }
    const Polynomial base = squarefree_part(p);
    if (base.degree() <= 0) return 0;
    std::vector<Polynomial> chain{base, base.derivative()};
    while (true) {
        const auto rem = Polynomial::divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    std::vector<int> at_neg;
    std::vector<int> at_pos;
    for (const auto& q : chain) {
        at_neg.push_back(sign_at_infinity(q, false));
        at_pos.push_back(sign_at_infinity(q, true));
    }
    return sign_changes(at_neg) - sign_changes(at_pos);
}

} // namespace cactusnet
