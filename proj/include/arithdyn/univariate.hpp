#pragma once

// Dense univariate polynomials over Q. Used by the expression parser and by
// the squarefree step of rational root extraction.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact_arith.hpp"

namespace arithdyn {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(const Rational& constant) : c_{constant} { trim(); }
    template <std::integral T>
    UniPoly(T constant) : UniPoly(Rational(constant)) {}

    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    static UniPoly from_integers(const std::vector<BigInt>& coeffs) {
        std::vector<Rational> r;
        r.reserve(coeffs.size());
        for (const auto& c : coeffs) r.emplace_back(c);
        return UniPoly(std::move(r));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of x^i (zero beyond the degree).
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return c_; }
    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading term");
        return c_.back();
    }

    Rational operator()(const Rational& x) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }

    UniPoly pow(unsigned e) const {
        UniPoly result(Rational(1)), base = *this;
        while (e) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return result;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(BigInt(i));
        return UniPoly(std::move(r));
    }

    /// Euclidean division; returns (quotient, remainder).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        if (a.degree() < b.degree()) return {UniPoly{}, a};
        std::vector<Rational> rem = a.c_;
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
        const Rational& lead = b.c_.back();
        for (std::size_t k = quo.size(); k-- > 0;) {
            Rational q = rem[k + b.c_.size() - 1] / lead;
            quo[k] = q;
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
        }
        rem.resize(b.c_.size() - 1);
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        UniPoly r = *this;
        Rational lead = c_.back();
        for (auto& c : r.c_) c /= lead;
        return r;
    }

    /// Monic greatest common divisor (zero if both are zero).
    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    /// Scales by the lcm of denominators and divides out the content, leaving
    /// a primitive integer polynomial with positive leading coefficient.
    std::vector<BigInt> primitive_integer() const {
        if (is_zero()) return {};
        BigInt l = 1;
        for (const auto& c : c_) l = lcm(l, c.denominator());
        std::vector<BigInt> out;
        BigInt g = 0;
        for (const auto& c : c_) {
            out.push_back(c.numerator() * (l / c.denominator()));
            g = gcd(g, abs(out.back()));
        }
        if (out.back() < 0) g = -g;
        for (auto& v : out) v /= g;
        return out;
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Renders in the CLI grammar, e.g. "x^3 - 6*x^2 + 12*x - 6".
    std::string str(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Rational& c = c_[k];
            if (c.is_zero()) continue;
            Rational mag = c.sign() < 0 ? -c : c;
            if (out.empty())
                out += c.sign() < 0 ? "-" : "";
            else
                out += c.sign() < 0 ? " - " : " + ";
            std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
            if (mono.empty())
                out += mag.str();
            else if (mag == Rational(1))
                out += mono;
            else
                out += mag.str() + "*" + mono;
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace arithdyn
