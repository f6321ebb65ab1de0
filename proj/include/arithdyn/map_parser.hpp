#pragma once

/**
 * @file map_parser.hpp
 * @brief Text input for maps.
 *
 * Two forms are accepted:
 *
 *     (x^2-1)*(x^2-4)-x        univariate expression in x, rational coefficients
 *     (x^2+1)/x                quotients are allowed and reduced
 *     F=X^2+Y^2; G=X*Y         homogeneous integer forms in X and Y
 *
 * Operators are + - * / ^ and parentheses; juxtaposition ("3x", "2(x+1)")
 * multiplies. Exponents are nonnegative integer literals.
 */

#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "exact_arith.hpp"
#include "homog_form.hpp"
#include "rational_map.hpp"
#include "univariate.hpp"

namespace arithdyn {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::invalid_argument("parse error at position " + std::to_string(position) + ": " +
                                message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

/// p/q with q != 0.
struct RationalFunction {
    UniPoly num;
    UniPoly den = UniPoly(Rational(1));

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num * b.num, a.den * b.den};
    }
    RationalFunction operator-() const { return {-num, den}; }
    bool is_zero() const { return num.degree() < 0; }
    RationalFunction inverse() const { return {den, num}; }
    RationalFunction reduced() const {
        UniPoly g = gcd(num, den);
        if (g.degree() < 1) return *this;
        return {divmod(num, g).first, divmod(den, g).first};
    }
};

/// Polynomial in X, Y with integer coefficients, keyed by (deg X, deg Y).
struct BiPoly {
    std::map<std::pair<unsigned, unsigned>, BigInt> terms;

    void add(std::pair<unsigned, unsigned> k, const BigInt& c) {
        BigInt& v = terms[k];
        v += c;
        if (v == 0) terms.erase(k);
    }
    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r = a;
        for (const auto& [k, c] : b.terms) r.add(k, c);
        return r;
    }
    BiPoly operator-() const {
        BiPoly r;
        for (const auto& [k, c] : terms) r.terms[k] = -c;
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms) r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
};

template <class Value, class Traits>
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    Value parse_all() {
        Value v = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(offset_ + pos_, msg); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || Traits::is_variable(c);
    }

    Value expr() {
        Value v = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Value rhs = term();
            v = c == '+' ? v + rhs : v - rhs;
        }
        return v;
    }

    Value term() {
        Value v = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = v * unary();
            } else if (c == '/') {
                std::size_t at = pos_++;
                Value rhs = unary();
                v = Traits::divide(v, rhs, [&](const std::string& m) { throw ParseError(offset_ + at, m); });
            } else if (starts_atom(c)) {
                v = v * power();
            } else {
                return v;
            }
        }
    }

    Value unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Value power() {
        Value base = atom();
        if (peek() != '^') return base;
        ++pos_;
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        if (pos_ - start > 4) fail("exponent too large");
        unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
        Value r = Traits::constant(BigInt(1));
        for (unsigned i = 0; i < e; ++i) r = r * base;
        return r;
    }

    Value atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Value v = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Traits::constant(BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        if (Traits::is_variable(c)) {
            ++pos_;
            return Traits::variable(c);
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

struct UnivariateTraits {
    static bool is_variable(char c) { return c == 'x' || c == 'X'; }
    static RationalFunction constant(const BigInt& n) { return {UniPoly(Rational(n))}; }
    static RationalFunction variable(char) { return {UniPoly::x()}; }
    template <class Fail>
    static RationalFunction divide(const RationalFunction& a, const RationalFunction& b, Fail fail) {
        if (b.is_zero()) fail("division by zero");
        return (a * b.inverse()).reduced();
    }
};

struct HomogeneousTraits {
    static bool is_variable(char c) { return c == 'X' || c == 'Y'; }
    static BiPoly constant(const BigInt& n) {
        BiPoly p;
        if (n != 0) p.terms[{0, 0}] = n;
        return p;
    }
    static BiPoly variable(char c) {
        BiPoly p;
        p.terms[c == 'X' ? std::pair{1u, 0u} : std::pair{0u, 1u}] = 1;
        return p;
    }
    template <class Fail>
    static BiPoly divide(const BiPoly&, const BiPoly&, Fail fail) {
        fail("division is not allowed in F=...; G=... input");
        return {};
    }
};

inline HomogForm to_form(const BiPoly& p, std::size_t position) {
    if (p.terms.empty()) throw ParseError(position, "form is identically zero");
    const unsigned d = p.terms.begin()->first.first + p.terms.begin()->first.second;
    std::vector<BigInt> c(d + 1, 0);
    for (const auto& [k, v] : p.terms) {
        if (k.first + k.second != d) throw ParseError(position, "form is not homogeneous");
        c[k.first] = v;
    }
    return HomogForm(std::move(c));
}

inline std::pair<std::string_view, std::size_t> trim_view(std::string_view s, std::size_t offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return {s, offset};
}

inline RationalMap parse_homogeneous(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError(text.size(), "expected ';' between F and G");
    HomogForm forms[2];
    std::string_view parts[2] = {text.substr(0, semi), text.substr(semi + 1)};
    std::size_t offsets[2] = {0, semi + 1};
    const char names[2] = {'F', 'G'};
    for (int i = 0; i < 2; ++i) {
        auto [s, off] = trim_view(parts[i], offsets[i]);
        if (s.empty() || s.front() != names[i])
            throw ParseError(off, std::string("expected '") + names[i] + "='");
        std::size_t k = 1;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        if (k >= s.size() || s[k] != '=') throw ParseError(off + k, "expected '='");
        BiPoly p = ExpressionParser<BiPoly, HomogeneousTraits>(s.substr(k + 1), off + k + 1).parse_all();
        forms[i] = to_form(p, off);
    }
    if (forms[0].degree() != forms[1].degree())
        throw ParseError(offsets[1], "F and G have different degrees");
    return RationalMap::from_pair(forms[0], forms[1]);
}

inline RationalMap parse_univariate(std::string_view text) {
    RationalFunction f = ExpressionParser<RationalFunction, UnivariateTraits>(text, 0).parse_all();
    f = f.reduced();
    const int d = std::max(f.num.degree(), f.den.degree());
    if (d < 1) throw ParseError(0, "map is constant");
    // Homogenize both parts to degree d, then clear denominators.
    BigInt l = 1;
    for (const auto* part : {&f.num, &f.den})
        for (const auto& c : part->coefficients()) l = lcm(l, c.denominator());
    auto homog = [&](const UniPoly& u) {
        std::vector<BigInt> c(static_cast<std::size_t>(d) + 1, 0);
        for (int i = 0; i <= u.degree(); ++i) {
            const Rational& q = u.coeff(static_cast<unsigned>(i));
            c[static_cast<std::size_t>(i)] = q.numerator() * (l / q.denominator());
        }
        return HomogForm(std::move(c));
    };
    return RationalMap::from_pair(homog(f.num), homog(f.den));
}

}  // namespace detail

/// Parses either map syntax. Errors carry the offending position.
inline RationalMap parse_map(std::string_view text) {
    auto [s, off] = detail::trim_view(text, 0);
    if (s.empty()) throw ParseError(0, "empty map expression");
    if (s.front() == 'F') return detail::parse_homogeneous(text);
    return detail::parse_univariate(text);
}

}  // namespace arithdyn
