#pragma once

/**
 * @file bounds.hpp
 * @brief Explicit bounds on periodic points, unit-equation solution counts,
 *        periods and orbit lengths.
 *
 * A bound is either an exact integer or, when it cannot be materialized, a
 * pair of rationals enclosing its base-10 logarithm. Transcendental constants
 * (ln, log10 e) come from a small outward-rounded interval evaluator, so every
 * LOG10 upper value really is an upper bound and every EXACT ceiling is the
 * true ceiling.
 *
 * Two families of unit-equation constants are provided. Over Q the S-integer
 * ring is a PID, and `evertse` (the default) applies directly:
 *
 *     B(s) = 3 * 7^(4s),              C(n, s) = 2^(35 n^4 s)
 *
 * `bs_ess` uses the rank-r group constants with r = s - 1:
 *
 *     B(s) = 2^(8(2r+2)) = 2^(16 s),   C(n, s) = e^((6n)^(3n) (n r + 1))
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exact_arith.hpp"

namespace arithdyn {

// ---------------------------------------------------------------------------
// Interval evaluation of logarithms
// ---------------------------------------------------------------------------

namespace interval {

struct Interval {
    Rational lo;
    Rational hi;
};

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(BigInt(-a), b); }

inline Rational round_down(const Rational& q, unsigned bits) {
    BigInt scale = BigInt(1) << bits;
    return Rational(floor_div(q.numerator() * scale, q.denominator()), scale);
}

inline Rational round_up(const Rational& q, unsigned bits) {
    BigInt scale = BigInt(1) << bits;
    return Rational(ceil_div(q.numerator() * scale, q.denominator()), scale);
}

inline BigInt ceil(const Rational& q) { return ceil_div(q.numerator(), q.denominator()); }
inline BigInt floor(const Rational& q) { return floor_div(q.numerator(), q.denominator()); }

/// Encloses 2 * atanh(z) = ln((1+z)/(1-z)) for 0 <= z <= 1/2.
inline Interval two_atanh(const Rational& z, unsigned bits) {
    const unsigned guard = bits + 32;
    const Rational eps(BigInt(1), BigInt(1) << guard);
    Rational z2 = z * z;
    Rational z2_lo = round_down(z2, guard), z2_hi = round_up(z2, guard);
    Rational p_lo = round_down(z, guard), p_hi = round_up(z, guard);  // z^(2j+1)
    Rational sum_lo = 0, sum_hi = 0;
    for (unsigned j = 0;; ++j) {
        Rational k(BigInt(2 * j + 1));
        sum_lo += round_down(p_lo / k, guard);
        sum_hi += round_up(p_hi / k, guard);
        p_lo = round_down(p_lo * z2_lo, guard);
        p_hi = round_up(p_hi * z2_hi, guard);
        if (p_hi <= eps) break;
    }
    // Remaining terms are each at most the next power, in geometric ratio z^2.
    sum_hi += round_up(p_hi / (Rational(1) - z2_hi), guard);
    return {round_down(sum_lo * 2, bits), round_up(sum_hi * 2, bits)};
}

inline Interval ln2(unsigned bits) { return two_atanh(Rational(BigInt(1), BigInt(3)), bits); }

/// Encloses ln(x) for rational x > 0.
inline Interval ln(const Rational& x, unsigned bits) {
    if (x.sign() <= 0) throw std::domain_error("interval::ln: argument must be positive");
    // x = 2^k * y with 1 <= y < 2.
    long k = static_cast<long>(boost::multiprecision::msb(x.numerator())) -
             static_cast<long>(boost::multiprecision::msb(x.denominator()));
    auto scaled = [&](long e) {
        return e >= 0 ? x / Rational(BigInt(1) << e) : x * Rational(BigInt(1) << -e);
    };
    Rational y = scaled(k);
    if (y < Rational(1)) y = scaled(--k);
    if (y >= Rational(2)) y = scaled(++k);
    Rational z = (y - 1) / (y + 1);  // in [0, 1/3)
    Interval ly = two_atanh(z, bits + 8);
    Interval l2 = ln2(bits + 8);
    Rational kk{BigInt(k)};
    Interval out;
    if (k >= 0) {
        out.lo = ly.lo + kk * l2.lo;
        out.hi = ly.hi + kk * l2.hi;
    } else {
        out.lo = ly.lo + kk * l2.hi;
        out.hi = ly.hi + kk * l2.lo;
    }
    return {round_down(out.lo, bits), round_up(out.hi, bits)};
}

/// Encloses ln of every value in a positive interval.
inline Interval ln(const Interval& x, unsigned bits) {
    return {ln(x.lo, bits).lo, ln(x.hi, bits).hi};
}

/// Encloses log10(e) = 1 / ln(10).
inline Interval log10_e(unsigned bits) {
    Interval l10 = ln(Rational(10), bits);
    return {round_down(Rational(1) / l10.hi, bits), round_up(Rational(1) / l10.lo, bits)};
}

/// Encloses log10(x) for rational x > 0.
inline Interval log10(const Rational& x, unsigned bits) {
    Interval l = ln(x, bits + 8);
    Interval l10 = ln(Rational(10), bits + 8);
    Rational lo = l.lo.sign() >= 0 ? l.lo / l10.hi : l.lo / l10.lo;
    Rational hi = l.hi.sign() >= 0 ? l.hi / l10.lo : l.hi / l10.hi;
    return {round_down(lo, bits), round_up(hi, bits)};
}

}  // namespace interval

inline constexpr unsigned interval_bits = 128;

// ---------------------------------------------------------------------------
// BoundValue
// ---------------------------------------------------------------------------

enum class BoundKind { exact, log10 };

enum class BoundFamily { evertse, bs_ess };

inline std::string to_string(BoundFamily f) { return f == BoundFamily::evertse ? "evertse" : "bs-ess"; }

inline BoundFamily parse_family(std::string_view s) {
    if (s == "evertse") return BoundFamily::evertse;
    if (s == "bs-ess" || s == "bs_ess") return BoundFamily::bs_ess;
    throw std::invalid_argument("unknown bound family '" + std::string(s) + "'");
}

class BoundValue {
public:
    static BoundValue exact(BigInt v) {
        if (v < 0) throw std::invalid_argument("BoundValue: exact bounds are nonnegative");
        BoundValue b;
        b.kind_ = BoundKind::exact;
        b.exact_ = std::move(v);
        return b;
    }

    /// A bound known only through lower <= log10(bound) <= upper. Both ends
    /// are rounded outward to 12 decimal places.
    static BoundValue log10(const Rational& lower, const Rational& upper, std::string note = {}) {
        if (upper < lower) throw std::invalid_argument("BoundValue: empty log10 enclosure");
        BoundValue b;
        b.kind_ = BoundKind::log10;
        const BigInt scale = pow(BigInt(10), 12);
        b.log10_lower_ = Rational(interval::floor(lower * Rational(scale)), scale);
        b.log10_upper_ = Rational(interval::ceil(upper * Rational(scale)), scale);
        b.note_ = std::move(note);
        return b;
    }

    /// Reassembles a bound from its stored fields (no re-rounding).
    static BoundValue from_parts(BoundKind kind, BigInt exact, Rational lower, Rational upper,
                                 std::string note) {
        BoundValue b;
        b.kind_ = kind;
        b.exact_ = std::move(exact);
        b.log10_lower_ = std::move(lower);
        b.log10_upper_ = std::move(upper);
        b.note_ = std::move(note);
        return b;
    }

    BoundKind kind() const { return kind_; }
    bool is_exact() const { return kind_ == BoundKind::exact; }
    const BigInt& value() const {
        if (!is_exact()) throw std::logic_error("BoundValue: LOG10 bound has no exact value");
        return exact_;
    }
    const Rational& log10_upper() const { return log10_upper_; }
    const Rational& log10_lower() const { return log10_lower_; }
    const std::string& note() const { return note_; }

    /// Upper enclosure of log10 for either kind.
    Rational log10_hi() const {
        if (!is_exact()) return log10_upper_;
        if (exact_ == 0) return Rational(0);
        return interval::log10(Rational(exact_), 64).hi;
    }
    Rational log10_lo() const {
        if (!is_exact()) return log10_lower_;
        if (exact_ == 0) return Rational(-1'000'000);
        return interval::log10(Rational(exact_), 64).lo;
    }

    /// Soundly decides count <= bound.
    bool admits(const BigInt& count) const {
        if (is_exact()) return count <= exact_;
        if (count <= 1) return log10_lower_.sign() >= 0;
        if (BigInt(decimal_digits(count)) <= interval::floor(log10_lower_)) return true;
        return interval::log10(Rational(count), 64).hi <= log10_lower_;
    }

    /// Up to 40 digits verbatim, then "≈ 10^k".
    std::string display() const {
        if (is_exact()) {
            std::string digits = exact_.str();
            if (digits.size() <= 40) return digits;
            double lead = std::stod(digits.substr(0, 15));
            double k = static_cast<double>(digits.size() - 15) + std::log10(lead);
            char buf[64];
            std::snprintf(buf, sizeof buf, "≈ 10^%.2f", k);
            return buf;
        }
        return "≤ 10^(" + decimal(log10_upper_) + ") [log10]";
    }

    friend bool operator==(const BoundValue&, const BoundValue&) = default;

private:
    static std::string decimal(const Rational& q) {
        // Six significant digits is plenty for display.
        BigInt ip = interval::floor(q);
        std::string s = ip.str();
        if (s.size() > 7) {
            double m = std::stod(s.substr(0, 7)) / 1e6;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.5fe%zu", m, s.size() - 1);
            return buf;
        }
        Rational frac = q - Rational(ip);
        BigInt f = interval::ceil(frac * Rational(BigInt(1000000)));
        std::string fs = f.str();
        while (fs.size() < 6) fs = "0" + fs;
        return s + "." + fs;
    }

    BoundKind kind_ = BoundKind::exact;
    BigInt exact_ = 0;
    Rational log10_lower_ = 0;
    Rational log10_upper_ = 0;
    std::string note_;
};

namespace detail {

inline Rational log10_upper_of_int(const BigInt& k) {
    return interval::log10(Rational(k), 64).hi;
}

/// k * bound.
inline BoundValue scaled(const BoundValue& b, const BigInt& k) {
    if (b.is_exact()) return BoundValue::exact(b.value() * k);
    Rational lk_lo = interval::log10(Rational(k), 64).lo;
    return BoundValue::log10(b.log10_lower() + lk_lo, b.log10_upper() + log10_upper_of_int(k),
                             b.note());
}

/// Sum of nonnegative bounds. With any LOG10 addend the sum is enclosed by
/// [max lower, max upper + log10(#addends)].
inline BoundValue sum(const std::vector<BoundValue>& addends) {
    bool all_exact = std::all_of(addends.begin(), addends.end(),
                                 [](const BoundValue& b) { return b.is_exact(); });
    if (all_exact) {
        BigInt total = 0;
        for (const auto& b : addends) total += b.value();
        return BoundValue::exact(total);
    }
    Rational lo = addends.front().log10_lo(), hi = addends.front().log10_hi();
    for (const auto& b : addends) {
        lo = std::max(lo, b.log10_lo());
        hi = std::max(hi, b.log10_hi());
    }
    hi += log10_upper_of_int(BigInt(addends.size()));
    return BoundValue::log10(lo, hi,
                             "dominant addend plus log10(" + std::to_string(addends.size()) +
                                 ") slack");
}

inline void require_positive(long v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Unit-equation constants
// ---------------------------------------------------------------------------

/// Bound on solutions of a*x + b*y = 1 in S-units, s = |S| with the archimedean place.
inline BoundValue unit_equation_bound(unsigned s, BoundFamily family) {
    detail::require_positive(s, "s");
    if (family == BoundFamily::evertse) return BoundValue::exact(3 * pow(BigInt(7), 4 * s));
    return BoundValue::exact(pow(BigInt(2), 16 * s));
}

/// Bound on nondegenerate solutions of a_1 x_1 + ... + a_n x_n = 1.
inline BoundValue multi_unit_equation_bound(unsigned n, unsigned s, BoundFamily family) {
    if (n < 3) throw std::invalid_argument("multi_unit_equation_bound: n must be at least 3");
    detail::require_positive(s, "s");
    if (family == BoundFamily::evertse) {
        BigInt e = BigInt(35) * pow(BigInt(n), 4) * s;
        return BoundValue::exact(pow(BigInt(2), static_cast<unsigned>(e)));
    }
    // log10 of e^((6n)^(3n) (n(s-1)+1)).
    BigInt exponent = pow(BigInt(6 * n), 3 * n) * (BigInt(n) * (s - 1) + 1);
    auto le = interval::log10_e(interval_bits);
    return BoundValue::log10(Rational(exponent) * le.lo, Rational(exponent) * le.hi,
                             "e^((6n)^(3n)(n(s-1)+1))");
}

inline BoundValue kappa(unsigned s, BoundFamily family) {
    BoundValue b = unit_equation_bound(s, family);
    return BoundValue::exact(3 * b.value() + 13);
}

inline BoundValue lambda(unsigned s, BoundFamily family) {
    BoundValue b = unit_equation_bound(s, family);
    return detail::sum({BoundValue::exact(27 * b.value()), multi_unit_equation_bound(5, s, family),
                        detail::scaled(multi_unit_equation_bound(3, s, family), 6),
                        BoundValue::exact(31)});
}

namespace detail {

inline BoundValue linear_bound(unsigned d, unsigned s, BoundFamily family, unsigned constant) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    BoundValue b = unit_equation_bound(s, family);
    return sum({BoundValue::exact((3 * b.value() + 13) * d), BoundValue::exact(27 * b.value()),
                multi_unit_equation_bound(5, s, family),
                scaled(multi_unit_equation_bound(3, s, family), 6), BoundValue::exact(constant)});
}

}  // namespace detail

/// Size bound for the set of points whose chordal distances to four fixed
/// points are preserved by phi.
inline BoundValue four_point_bound(unsigned d, unsigned s, BoundFamily family) {
    return detail::linear_bound(d, s, family, 32);
}

/// kappa * d + lambda; one less than the four-point bound.
inline BoundValue main_theorem_bound(unsigned d, unsigned s, BoundFamily family) {
    return detail::linear_bound(d, s, family, 31);
}

/// 3 * 7^(4s) + 3.
inline BoundValue three_point_bound(unsigned s) {
    detail::require_positive(s, "s");
    return BoundValue::exact(3 * pow(BigInt(7), 4 * s) + 3);
}

/// d + 5, for maps over Q with everywhere good reduction.
inline BoundValue everywhere_good_bound(unsigned d) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    return BoundValue::exact(BigInt(d) + 5);
}

/// d + 1, for monic integer polynomials.
inline BoundValue baron_bound(unsigned d) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    return BoundValue::exact(BigInt(d) + 1);
}

/// ceil((12 t ln(5t))^(4 * field_degree)) with t = bad_prime_count + 2.
inline BoundValue ms_period_bound(unsigned bad_prime_count, unsigned field_degree) {
    detail::require_positive(field_degree, "field_degree");
    const BigInt t = BigInt(bad_prime_count) + 2;
    const unsigned e = 4 * field_degree;
    for (unsigned bits = interval_bits; bits <= (1u << 14); bits *= 2) {
        auto l = interval::ln(Rational(5 * t), bits);
        Rational base_lo = Rational(12 * t) * l.lo, base_hi = Rational(12 * t) * l.hi;
        Rational v_lo = 1, v_hi = 1;
        for (unsigned k = 0; k < e; ++k) {
            v_lo = interval::round_down(v_lo * base_lo, bits);
            v_hi = interval::round_up(v_hi * base_hi, bits);
        }
        BigInt c_lo = interval::ceil(v_lo), c_hi = interval::ceil(v_hi);
        if (c_lo == c_hi) return BoundValue::exact(c_lo);
    }
    throw std::runtime_error("ms_period_bound: ceiling undecided at maximum precision");
}

/// log10 of [e^(10^12) (s+1)^8 (ln(5(s+1)))^8]^s.
inline BoundValue canci_orbit_bound(unsigned s) {
    detail::require_positive(s, "s");
    const unsigned bits = interval_bits;
    auto l1 = interval::ln(Rational(s + 1), bits);
    auto l5 = interval::ln(Rational(5 * (s + 1)), bits);
    auto ll5 = interval::ln(l5, bits);
    const Rational big(pow(BigInt(10), 12));
    Rational inner_lo = big + 8 * l1.lo + 8 * ll5.lo;
    Rational inner_hi = big + 8 * l1.hi + 8 * ll5.hi;
    auto le = interval::log10_e(bits);
    return BoundValue::log10(Rational(s) * inner_lo * le.lo, Rational(s) * inner_hi * le.hi,
                             "[e^(10^12)(s+1)^8(ln(5(s+1)))^8]^s");
}

}  // namespace arithdyn
