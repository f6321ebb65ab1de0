#pragma once

/**
 * @file proj_point.hpp
 * @brief Rational points of P^1 in coprime integer coordinates, the p-adic
 *        chordal valuation, and S-integrality.
 *
 * Over Q every point has coordinates [a:b] with gcd(a, b) = 1, unique up to a
 * common sign. We fix the sign by b > 0, or [1:0] for infinity. With such
 * coordinates the two min-terms in the chordal valuation vanish and
 *
 *     delta_p(P, Q) = v_p(a_P * b_Q - a_Q * b_P).
 */

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exact_arith.hpp"

namespace arithdyn {

class ProjPoint {
public:
    /// The origin [0:1].
    ProjPoint() : a_(0), b_(1) {}

    /// [a:b] from any nonzero integer pair.
    static ProjPoint from_pair(BigInt a, BigInt b) {
        if (a == 0 && b == 0) throw std::invalid_argument("ProjPoint: (0,0) is not a point");
        if (b == 0) return ProjPoint(BigInt(1), BigInt(0));
        BigInt g = gcd(abs(a), abs(b));
        if (b < 0) g = -g;
        return ProjPoint(a / g, b / g);
    }

    static ProjPoint from_rational(const Rational& q) {
        return ProjPoint(q.numerator(), q.denominator());
    }

    static ProjPoint infinity() { return ProjPoint(BigInt(1), BigInt(0)); }

    const BigInt& x() const noexcept { return a_; }
    const BigInt& y() const noexcept { return b_; }

    bool is_infinity() const { return b_ == 0; }

    /// a/b, or nullopt at infinity.
    std::optional<Rational> affine() const {
        if (is_infinity()) return std::nullopt;
        return Rational(a_, b_);
    }

    /// "inf", "5", "-3/7".
    std::string str() const {
        if (is_infinity()) return "inf";
        return b_ == 1 ? a_.str() : a_.str() + "/" + b_.str();
    }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

    /// Finite points by value, infinity last.
    friend std::strong_ordering operator<=>(const ProjPoint& p, const ProjPoint& q) {
        if (p.is_infinity() || q.is_infinity()) {
            if (p.is_infinity() && q.is_infinity()) return std::strong_ordering::equal;
            return p.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        BigInt lhs = p.a_ * q.b_, rhs = q.a_ * p.b_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    ProjPoint(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

    BigInt a_;
    BigInt b_;
};

/// Parses "5", "-3/7", "inf", "infinity", or "[4:6]" (normalized).
inline ProjPoint parse_point(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s == "inf" || s == "infinity" || s == "oo") return ProjPoint::infinity();
    try {
        if (!s.empty() && s.front() == '[') {
            if (s.back() != ']') throw std::invalid_argument("missing ']'");
            auto body = s.substr(1, s.size() - 2);
            auto colon = body.find(':');
            if (colon == std::string_view::npos) throw std::invalid_argument("missing ':'");
            Rational a = Rational::parse(trim(body.substr(0, colon)));
            Rational b = Rational::parse(trim(body.substr(colon + 1)));
            if (!a.is_integer() || !b.is_integer())
                throw std::invalid_argument("coordinates must be integers");
            return ProjPoint::from_pair(a.numerator(), b.numerator());
        }
        return ProjPoint::from_rational(Rational::parse(s));
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed point '" + std::string(text) + "': " + e.what());
    }
}

/// a_P * b_Q - a_Q * b_P; zero exactly when P == Q.
inline BigInt cross_term(const ProjPoint& p, const ProjPoint& q) {
    return p.x() * q.y() - q.x() * p.y();
}

/// delta_p value: a nonnegative integer, or infinite for coincident points.
class ChordalValuation {
public:
    static ChordalValuation finite(int v) { return ChordalValuation(v, false); }
    static ChordalValuation infinite() { return ChordalValuation(0, true); }

    bool is_infinite() const { return infinite_; }
    int value() const {
        if (infinite_) throw std::logic_error("ChordalValuation: value of infinite valuation");
        return value_;
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

    friend bool operator==(const ChordalValuation&, const ChordalValuation&) = default;
    friend std::strong_ordering operator<=>(const ChordalValuation& a, const ChordalValuation& b) {
        if (a.infinite_ || b.infinite_) {
            if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return a.value_ <=> b.value_;
    }

private:
    ChordalValuation(int v, bool inf) : value_(v), infinite_(inf) {}
    int value_;
    bool infinite_;
};

inline ChordalValuation chordal_valuation(const ProjPoint& p, const ProjPoint& q,
                                          const BigInt& prime) {
    BigInt c = cross_term(p, q);
    if (c == 0) return ChordalValuation::infinite();
    return ChordalValuation::finite(vp(c, prime));
}

/// A finite set of primes; the archimedean place is implicit, so s = |primes| + 1.
class PlaceSet {
public:
    PlaceSet() = default;

    explicit PlaceSet(std::vector<BigInt> primes) : primes_(std::move(primes)) {
        for (const auto& p : primes_)
            if (!is_prime(p)) throw std::invalid_argument("PlaceSet: " + p.str() + " is not prime");
        std::sort(primes_.begin(), primes_.end());
        primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    }

    /// Parses a comma-separated prime list; empty text gives the empty set.
    static PlaceSet parse(std::string_view text) {
        std::vector<BigInt> primes;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - start);
            while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
            while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
            if (!item.empty()) {
                Rational r = Rational::parse(item);
                if (!r.is_integer()) throw std::invalid_argument("PlaceSet: non-integer prime");
                primes.push_back(r.numerator());
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        return PlaceSet(std::move(primes));
    }

    const std::vector<BigInt>& primes() const noexcept { return primes_; }
    std::size_t s_value() const { return primes_.size() + 1; }
    bool empty() const { return primes_.empty(); }

    bool contains(const BigInt& p) const {
        return std::binary_search(primes_.begin(), primes_.end(), p);
    }

    bool includes(const PlaceSet& other) const {
        return std::includes(primes_.begin(), primes_.end(), other.primes_.begin(),
                             other.primes_.end());
    }

    PlaceSet merged_with(const PlaceSet& other) const {
        std::vector<BigInt> all = primes_;
        all.insert(all.end(), other.primes_.begin(), other.primes_.end());
        PlaceSet out;
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        out.primes_ = std::move(all);
        return out;
    }

    /// "{2,3}", "{}" for the empty set.
    std::string str() const {
        std::string out = "{";
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (i) out += ",";
            out += primes_[i].str();
        }
        return out + "}";
    }

    friend bool operator==(const PlaceSet&, const PlaceSet&) = default;

private:
    std::vector<BigInt> primes_;
};

/// Removes every prime of S from |n|; what is left is the part outside S.
inline BigInt part_outside(const BigInt& n, const PlaceSet& s) {
    BigInt m = abs(n);
    for (const auto& p : s.primes())
        while (m != 0 && m % p == 0) m /= p;
    return m;
}

/// True iff every prime factor of the cross term lies in S.
inline bool is_s_integral(const ProjPoint& p, const ProjPoint& q, const PlaceSet& s) {
    BigInt c = cross_term(p, q);
    if (c == 0) throw std::invalid_argument("is_s_integral: points coincide");
    return part_outside(c, s) == 1;
}

}  // namespace arithdyn
