#pragma once

/**
 * @file exact_arith.hpp
 * @brief Big integers, reduced rationals, p-adic valuations, factorization.
 *
 * Everything above this header works over Z and Q exactly. Integers are
 * GMP-backed Boost.Multiprecision numbers with expression templates turned
 * off, so `auto` always yields a value.
 *
 * Factorization is trial division followed by Brent's variant of Pollard rho
 * under an explicit iteration budget. Running out of budget throws
 * budget_exceeded with the residue that could not be split; the caller never
 * sees a partial factorization dressed up as a complete one.
 */

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

namespace arithdyn {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Raised when a factorization (or anything built on one) runs out of budget.
class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(const std::string& what, BigInt residue)
        : std::runtime_error(what), residue_(std::move(residue)) {}

    const BigInt& residue() const noexcept { return residue_; }

private:
    BigInt residue_;
};

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt pow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

inline int sign(const BigInt& x) { return x.sign(); }

/// Number of decimal digits of |x| (1 for zero).
inline std::size_t decimal_digits(const BigInt& x) {
    auto s = abs(x).str();
    return s.size();
}

/// Floor division remainder in [0, m).
inline BigInt mod_floor(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod_floor(a, m), r = m;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_floor(old_s, m);
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

/// An element of Q, always stored in lowest terms with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    template <std::integral T>
    Rational(T n) : num_(n), den_(1) {}

    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const BigInt& numerator() const noexcept { return num_; }
    const BigInt& denominator() const noexcept { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(BigInt(-num_), den_, trusted{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

    /// Parses "n" or "n/d" with optional sign; no whitespace.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        auto parse_int = [](std::string_view s) {
            if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) throw std::invalid_argument("Rational::parse: bad integer");
            for (std::size_t k = i; k < s.size(); ++k)
                if (s[k] < '0' || s[k] > '9')
                    throw std::invalid_argument("Rational::parse: bad integer '" +
                                                std::string(s) + "'");
            return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
        };
        if (slash == std::string_view::npos) return Rational(parse_int(text));
        BigInt d = parse_int(text.substr(slash + 1));
        if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
        return Rational(parse_int(text.substr(0, slash)), d);
    }

private:
    struct trusted {};
    Rational(BigInt n, BigInt d, trusted) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = gcd(abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

// ---------------------------------------------------------------------------
// Valuations and primality
// ---------------------------------------------------------------------------

/// Exponent of p in the nonzero integer n.
inline int vp(const BigInt& n, const BigInt& p) {
    if (n == 0) throw std::domain_error("vp: valuation of zero is undefined");
    if (p < 2) throw std::invalid_argument("vp: p must be a prime");
    int v = 0;
    BigInt m = n;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(m, p, q, r);
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

/// Exponent of p in the nonzero rational q (negative when p divides the denominator).
inline int vp(const Rational& q, const BigInt& p) {
    if (q.is_zero()) throw std::domain_error("vp: valuation of zero is undefined");
    return vp(q.numerator(), p) - vp(q.denominator(), p);
}

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static constexpr unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned p : small) {
        if (n == p) return true;
        if (boost::multiprecision::integer_modulus(n, p) == 0) return false;
    }
    // Seeded so the verdict is reproducible run to run.
    std::mt19937_64 rng(0x5eed5eedULL);
    return boost::multiprecision::miller_rabin_test(n, 25, rng);
}

namespace detail {

inline std::vector<std::uint32_t> sieve(std::uint32_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

inline const std::vector<std::uint32_t>& primes_up_to_million() {
    static const std::vector<std::uint32_t> table = sieve(1'000'000);
    return table;
}

}  // namespace detail

/// Primes p <= limit in increasing order.
inline std::vector<std::uint32_t> small_primes(std::uint32_t limit) {
    if (limit <= 1'000'000) {
        const auto& all = detail::primes_up_to_million();
        auto end = std::upper_bound(all.begin(), all.end(), limit);
        return {all.begin(), end};
    }
    return detail::sieve(limit);
}

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;  // primes strictly increasing

    BigInt value() const {
        BigInt v = sign;
        for (const auto& f : factors) v *= pow(f.prime, f.exponent);
        return v;
    }

    std::vector<BigInt> primes() const {
        std::vector<BigInt> out;
        for (const auto& f : factors) out.push_back(f.prime);
        return out;
    }

    BigInt divisor_count() const {
        BigInt n = 1;
        for (const auto& f : factors) n *= (f.exponent + 1);
        return n;
    }
};

struct FactorBudget {
    std::uint32_t trial_limit = 1'000'000;
    std::uint64_t rho_iterations = std::uint64_t{1} << 22;
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline BigInt mul_mod(const BigInt& a, const BigInt& b, const BigInt& m) { return a * b % m; }

inline std::uint64_t int_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}
inline BigInt int_gcd(const BigInt& a, const BigInt& b) { return gcd(a, b); }

inline std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }
inline BigInt abs_diff(const BigInt& a, const BigInt& b) { return abs(BigInt(a - b)); }

/// Brent's cycle-finding rho. Returns a nontrivial factor of composite n,
/// or n itself when this (c, y0) choice fails. `spent` counts map evaluations.
template <class Int>
Int brent_rho(const Int& n, const Int& c, const Int& y0, std::uint64_t& spent,
              std::uint64_t limit) {
    constexpr std::uint64_t batch = 128;
    auto step = [&](const Int& v) { return Int((mul_mod(v, v, n) + c) % n); };
    Int y = y0, x = y0, ys = y0, q = 1, g = 1;
    std::uint64_t r = 1;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = step(y);
        spent += r;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t m = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < m; ++i) {
                y = step(y);
                q = mul_mod(q, Int(abs_diff(x, y)), n);
            }
            spent += m;
            g = int_gcd(q, n);
            k += m;
        }
        r *= 2;
        if (spent > limit) return n;
    }
    if (g == n) {
        do {
            ys = step(ys);
            ++spent;
            g = int_gcd(Int(abs_diff(x, ys)), n);
        } while (g == 1 && spent <= limit);
    }
    return g;
}

inline void add_factor(std::vector<PrimePower>& out, const BigInt& p, unsigned e) {
    for (auto& f : out)
        if (f.prime == p) {
            f.exponent += e;
            return;
        }
    out.push_back({p, e});
}

inline void split_composite(const BigInt& n, std::vector<PrimePower>& out, std::uint64_t& spent,
                            const FactorBudget& budget, std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        add_factor(out, n, 1);
        return;
    }
    // Perfect powers defeat rho slowly; peel square roots first.
    BigInt root = boost::multiprecision::sqrt(n);
    if (root * root == n) {
        std::vector<PrimePower> sub;
        split_composite(root, sub, spent, budget, rng);
        for (const auto& f : sub) add_factor(out, f.prime, 2 * f.exponent);
        return;
    }
    const bool small = boost::multiprecision::msb(n) < 63;
    for (;;) {
        if (spent > budget.rho_iterations)
            throw budget_exceeded("factorize: unfactored residue " + n.str() + " after " +
                                      std::to_string(spent) + " rho iterations",
                                  n);
        BigInt d;
        if (small) {
            auto nn = static_cast<std::uint64_t>(n);
            std::uint64_t c = rng() % (nn - 1) + 1;
            std::uint64_t y0 = rng() % nn;
            d = BigInt(brent_rho<std::uint64_t>(nn, c, y0, spent, budget.rho_iterations));
        } else {
            BigInt c = BigInt(rng()) % (n - 1) + 1;
            BigInt y0 = BigInt(rng()) % n;
            d = brent_rho<BigInt>(n, c, y0, spent, budget.rho_iterations);
        }
        if (d != n && d != 1) {
            BigInt other = n / d;
            split_composite(d, out, spent, budget, rng);
            split_composite(other, out, spent, budget, rng);
            return;
        }
    }
}

}  // namespace detail

/// Complete prime factorization of a nonzero integer; deterministic.
inline Factorization factorize(const BigInt& n, const FactorBudget& budget = {}) {
    if (n == 0) throw std::domain_error("factorize: zero has no factorization");
    Factorization result;
    result.sign = n < 0 ? -1 : 1;
    BigInt m = abs(n);
    std::vector<PrimePower> found;

    for (std::uint32_t p : small_primes(budget.trial_limit)) {
        if (BigInt(p) * p > m) break;
        if (boost::multiprecision::integer_modulus(m, p) != 0) continue;
        unsigned e = 0;
        while (boost::multiprecision::integer_modulus(m, p) == 0) {
            m /= p;
            ++e;
        }
        found.push_back({BigInt(p), e});
    }
    if (m != 1) {
        std::uint64_t spent = 0;
        std::mt19937_64 rng(budget.seed);
        detail::split_composite(m, found, spent, budget, rng);
    }
    std::sort(found.begin(), found.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    result.factors = std::move(found);
    return result;
}

/// All positive divisors of n >= 1, ascending.
inline std::vector<BigInt> divisors(const BigInt& n, const FactorBudget& budget = {}) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<BigInt> out{1};
    for (const auto& f : factorize(n, budget).factors) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= f.exponent; ++k) {
            pk *= f.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace arithdyn
