#pragma once

/**
 * @file homog_form.hpp
 * @brief Integer binary forms H(X,Y) = sum_i c_i X^i Y^(D-i).
 *
 * The coefficient vector is indexed by the power of X, so c_0 is the pure
 * Y^D term and c_D the pure X^D term. The degree is formal: trailing zero
 * coefficients are kept, which is what makes [1:0] a root when c_D == 0.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact_arith.hpp"
#include "proj_point.hpp"
#include "univariate.hpp"

namespace arithdyn {

class HomogForm {
public:
    /// The zero form of degree 0.
    HomogForm() : c_{BigInt(0)} {}

    /// Coefficients c_0..c_D; the degree is coeffs.size() - 1.
    explicit HomogForm(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("HomogForm: need at least one coefficient");
    }

    static HomogForm zero(unsigned degree) {
        return HomogForm(std::vector<BigInt>(degree + 1, BigInt(0)));
    }

    /// c * X^x_power * Y^(degree - x_power).
    static HomogForm monomial(unsigned degree, unsigned x_power, const BigInt& c) {
        if (x_power > degree) throw std::invalid_argument("HomogForm::monomial: X power exceeds degree");
        HomogForm h = zero(degree);
        h.c_[x_power] = c;
        return h;
    }

    static HomogForm X() { return monomial(1, 1, 1); }
    static HomogForm Y() { return monomial(1, 0, 1); }

    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
    const BigInt& coeff(unsigned i) const { return c_.at(i); }
    std::span<const BigInt> coefficients() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
    }

    BigInt operator()(const BigInt& a, const BigInt& b) const {
        BigInt acc = c_.back();
        BigInt bpow = 1;
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            bpow *= b;
            acc = acc * a + c_[i] * bpow;
        }
        return acc;
    }

    BigInt operator()(const ProjPoint& p) const { return (*this)(p.x(), p.y()); }

    friend HomogForm operator+(const HomogForm& f, const HomogForm& g) {
        require_same_degree(f, g, "operator+");
        HomogForm h = f;
        for (std::size_t i = 0; i < h.c_.size(); ++i) h.c_[i] += g.c_[i];
        return h;
    }
    friend HomogForm operator-(const HomogForm& f, const HomogForm& g) {
        require_same_degree(f, g, "operator-");
        HomogForm h = f;
        for (std::size_t i = 0; i < h.c_.size(); ++i) h.c_[i] -= g.c_[i];
        return h;
    }
    friend HomogForm operator*(const HomogForm& f, const HomogForm& g) {
        std::vector<BigInt> out(f.c_.size() + g.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i] == 0) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) out[i + j] += f.c_[i] * g.c_[j];
        }
        return HomogForm(std::move(out));
    }
    friend HomogForm operator*(const BigInt& k, const HomogForm& f) {
        HomogForm h = f;
        for (auto& v : h.c_) v *= k;
        return h;
    }

    /// Divides every coefficient by k, which must divide all of them.
    HomogForm divided_exactly(const BigInt& k) const {
        HomogForm h = *this;
        for (auto& v : h.c_) {
            if (v % k != 0) throw std::domain_error("HomogForm: inexact scalar division");
            v /= k;
        }
        return h;
    }

    friend bool operator==(const HomogForm&, const HomogForm&) = default;

    /// e.g. "X^3 - 3*X^2*Y + X*Y^2 + 2*Y^3".
    std::string str() const {
        std::string out;
        const unsigned d = degree();
        for (unsigned k = d + 1; k-- > 0;) {
            const BigInt& c = c_[k];
            if (c == 0) continue;
            BigInt mag = abs(c);
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            std::string mono;
            auto var = [&](const char* v, unsigned e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            var("X", k);
            var("Y", d - k);
            if (mono.empty())
                out += mag.str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.str() + "*" + mono;
        }
        return out.empty() ? "0" : out;
    }

private:
    static void require_same_degree(const HomogForm& f, const HomogForm& g, const char* op) {
        if (f.degree() != g.degree())
            throw std::invalid_argument(std::string("HomogForm::") + op + ": degree mismatch");
    }

    std::vector<BigInt> c_;
};

inline BigInt eval_form(const HomogForm& h, const BigInt& a, const BigInt& b) { return h(a, b); }

/// gcd of |coefficients|.
inline BigInt content(const HomogForm& h) {
    if (h.is_zero()) throw std::domain_error("content: zero form");
    BigInt g = 0;
    for (const auto& c : h.coefficients()) g = gcd(g, abs(c));
    return g;
}

inline HomogForm primitive_part(const HomogForm& h) { return h.divided_exactly(content(h)); }

namespace detail {

/// Fraction-free (Bareiss) determinant; the matrix is consumed.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace detail

/// Resultant of two binary forms of formal degrees m and n: the determinant
/// of the (m+n)x(m+n) Sylvester matrix with the m rows of G on top.
inline BigInt resultant(const HomogForm& f, const HomogForm& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero form");
    const std::size_t m = f.degree(), n = g.degree(), size = m + n;
    std::vector<std::vector<BigInt>> s(size, std::vector<BigInt>(size, BigInt(0)));
    // Columns run from X^(m+n-1) down to Y^(m+n-1); coefficient of X^i sits
    // at column (degree - i) plus the row shift.
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[r][r + (n - i)] = g.coeff(static_cast<unsigned>(i));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i)
            s[m + r][r + (m - i)] = f.coeff(static_cast<unsigned>(i));
    return detail::bareiss_determinant(std::move(s));
}

/// H(F(X,Y), G(X,Y)) for F, G of a common degree d; result has degree D*d.
inline HomogForm substitute(const HomogForm& h, const HomogForm& f, const HomogForm& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("substitute: deg F != deg G");
    const unsigned big_d = h.degree();
    std::vector<HomogForm> fp{HomogForm(std::vector<BigInt>{BigInt(1)})};
    std::vector<HomogForm> gp{fp.front()};
    for (unsigned k = 1; k <= big_d; ++k) {
        fp.push_back(fp.back() * f);
        gp.push_back(gp.back() * g);
    }
    HomogForm out = HomogForm::zero(big_d * f.degree());
    for (unsigned i = 0; i <= big_d; ++i) {
        if (h.coeff(i) == 0) continue;
        out = out + h.coeff(i) * (fp[i] * gp[big_d - i]);
    }
    return out;
}

inline HomogForm partial_x(const HomogForm& h) {
    const unsigned d = h.degree();
    if (d == 0) return HomogForm();
    std::vector<BigInt> out(d);
    for (unsigned i = 1; i <= d; ++i) out[i - 1] = h.coeff(i) * i;
    return HomogForm(std::move(out));
}

inline HomogForm partial_y(const HomogForm& h) {
    const unsigned d = h.degree();
    if (d == 0) return HomogForm();
    std::vector<BigInt> out(d);
    for (unsigned i = 0; i < d; ++i) out[i] = h.coeff(i) * (d - i);
    return HomogForm(std::move(out));
}

/// F_X * G_Y - F_Y * G_X; its projective roots are the critical points of [F:G].
inline HomogForm wronskian(const HomogForm& f, const HomogForm& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("wronskian: deg F != deg G");
    if (f.degree() == 0) throw std::invalid_argument("wronskian: degree must be at least 1");
    return partial_x(f) * partial_y(g) - partial_y(f) * partial_x(g);
}

/// Exact quotient H / (b X - a Y) where P = [a:b]; nullopt if P is not a root.
inline std::optional<HomogForm> divide_by_linear(const HomogForm& h, const ProjPoint& p) {
    const unsigned d = h.degree();
    if (d == 0) return std::nullopt;
    const BigInt& a = p.x();
    const BigInt& b = p.y();
    std::vector<BigInt> q(d);
    // Coefficient identity: c_i = b*q_(i-1) - a*q_i, with q_(-1) = q_d = 0.
    if (a != 0) {
        BigInt rem;
        for (unsigned i = 0; i < d; ++i) {
            BigInt num = (i ? b * q[i - 1] : BigInt(0)) - h.coeff(i);
            BigInt quo;
            boost::multiprecision::divide_qr(num, a, quo, rem);
            if (rem != 0) return std::nullopt;
            q[i] = quo;
        }
        if (h.coeff(d) != b * q[d - 1]) return std::nullopt;
    } else {
        // P = [0:1]: divide by X.
        if (h.coeff(0) != 0) return std::nullopt;
        for (unsigned i = 1; i <= d; ++i) q[i - 1] = h.coeff(i);
    }
    return HomogForm(std::move(q));
}

/// Order of vanishing of H at P (0 when H(P) != 0).
inline unsigned root_multiplicity(const HomogForm& h, const ProjPoint& p) {
    if (h.is_zero()) throw std::domain_error("root_multiplicity: zero form");
    unsigned m = 0;
    HomogForm cur = h;
    while (auto next = divide_by_linear(cur, p)) {
        cur = std::move(*next);
        ++m;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Rational roots
// ---------------------------------------------------------------------------

enum class RootMethod {
    /// Divisor enumeration when both end coefficients factor within budget and
    /// the candidate count is modest; p-adic lifting otherwise.
    automatic,
    /// Divisor enumeration only; a factorization budget failure is an error.
    divisors,
    /// p-adic (Hensel) lifting only; never factors anything.
    padic,
};

struct RootOptions {
    RootMethod method = RootMethod::automatic;
    FactorBudget budget{1'000'000, std::uint64_t{1} << 16, 0x9e3779b97f4a7c15ULL};
    std::size_t max_candidates = 200'000;
};

/// Distinct rational roots of a form, with multiplicities available on demand.
class RootSet {
public:
    RootSet(HomogForm form, std::vector<ProjPoint> points)
        : form_(std::move(form)), points_(std::move(points)) {
        std::sort(points_.begin(), points_.end());
    }

    const std::vector<ProjPoint>& points() const noexcept { return points_; }
    const HomogForm& form() const noexcept { return form_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const ProjPoint& p) const {
        return std::binary_search(points_.begin(), points_.end(), p);
    }
    unsigned multiplicity(const ProjPoint& p) const { return root_multiplicity(form_, p); }

private:
    HomogForm form_;
    std::vector<ProjPoint> points_;
};

namespace detail {

using ModPoly = std::vector<std::uint64_t>;  // low to high, coefficients < p

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline void trim_mod(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly reduce_mod(std::span<const BigInt> coeffs, std::uint64_t p) {
    ModPoly out;
    out.reserve(coeffs.size());
    const BigInt bp(p);
    for (const auto& c : coeffs) out.push_back(static_cast<std::uint64_t>(mod_floor(c, bp)));
    trim_mod(out);
    return out;
}

inline ModPoly derivative_mod(const ModPoly& a, std::uint64_t p) {
    ModPoly out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(mul_mod(a[i], i % p, p));
    trim_mod(out);
    return out;
}

/// Degree of gcd(a, b) over F_p; -1 if both are zero.
inline int gcd_degree_mod(ModPoly a, ModPoly b, std::uint64_t p) {
    while (!b.empty()) {
        // a <- a mod b
        std::uint64_t inv = pow_mod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t q = mul_mod(a.back(), inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + p - mul_mod(q, b[j], p)) % p;
            trim_mod(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

inline std::uint64_t eval_mod(const ModPoly& a, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = (mul_mod(acc, x, p) + a[i]) % p;
    return acc;
}

inline BigInt eval_big_mod(std::span<const BigInt> c, const BigInt& x, const BigInt& m) {
    BigInt acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = mod_floor(acc * x + c[i], m);
    return acc;
}

/// Nonzero rational roots of a univariate integer polynomial sum c_i x^i with
/// c_0 != 0, c_n != 0, n >= 1, by lifting simple roots modulo a prime p that
/// keeps the (squarefree) polynomial squarefree. No integer is factored.
inline std::vector<Rational> padic_roots(const std::vector<BigInt>& poly) {
    std::vector<BigInt> sqf = poly;
    auto primes = small_primes(200'000);
    auto first = std::lower_bound(primes.begin(), primes.end(), 1009u);
    auto pick_prime = [&](const std::vector<BigInt>& f) -> std::optional<std::uint64_t> {
        int tried = 0;
        for (auto it = first; it != primes.end() && tried < 40; ++it) {
            std::uint64_t p = *it;
            if (f.back() % p == 0) continue;
            ++tried;
            ModPoly fm = reduce_mod(f, p);
            if (gcd_degree_mod(fm, derivative_mod(fm, p), p) == 0) return p;
        }
        return std::nullopt;
    };
    auto prime = pick_prime(sqf);
    if (!prime) {
        // Repeated factor over Q: pass to f / gcd(f, f').
        UniPoly f = UniPoly::from_integers(poly);
        UniPoly g = gcd(f, f.derivative());
        sqf = divmod(f, g).first.primitive_integer();
        prime = pick_prime(sqf);
    }
    if (!prime) throw std::runtime_error("rational_roots: no suitable prime for p-adic lifting");
    const std::uint64_t p = *prime;

    if (sqf.size() < 2) return {};
    const BigInt lead = sqf.back();
    const BigInt trail = sqf.front();
    // Any root a/b has |a| <= |trail|, b | lead, so lead*a/b is an integer of
    // absolute value at most |lead * trail|.
    const BigInt bound = 2 * abs(lead) * abs(trail) + 1;

    ModPoly fm = reduce_mod(sqf, p);
    ModPoly dfm = derivative_mod(fm, p);
    std::vector<Rational> out;
    const BigInt bp(p);
    for (std::uint64_t r0 = 0; r0 < p; ++r0) {
        if (eval_mod(fm, r0, p) != 0) continue;
        if (eval_mod(dfm, r0, p) == 0) continue;  // cannot happen for squarefree fm
        // Newton lifting with quadratic precision growth.
        BigInt x(r0), modulus = bp;
        std::vector<BigInt> dcoef;
        for (std::size_t i = 1; i < sqf.size(); ++i) dcoef.push_back(sqf[i] * BigInt(i));
        while (modulus <= bound) {
            modulus *= modulus;
            BigInt fx = eval_big_mod(sqf, x, modulus);
            BigInt dfx = eval_big_mod(dcoef, x, modulus);
            x = mod_floor(x - fx * mod_inverse(dfx, modulus), modulus);
        }
        BigInt m = mod_floor(lead * x, modulus);
        if (m > modulus / 2) m -= modulus;
        Rational cand(m, lead);
        if (cand.is_zero()) continue;
        // Exact confirmation on the original polynomial.
        const BigInt& a = cand.numerator();
        const BigInt& b = cand.denominator();
        BigInt acc = poly.back(), bpow = 1;
        for (std::size_t i = poly.size() - 1; i-- > 0;) {
            bpow *= b;
            acc = acc * a + poly[i] * bpow;
        }
        if (acc == 0) out.push_back(cand);
    }
    return out;
}

/// Nonzero rational roots by enumerating a | trail, b | lead.
inline std::optional<std::vector<Rational>> divisor_roots(const std::vector<BigInt>& poly,
                                                          const RootOptions& opts, bool strict) {
    const BigInt lead = abs(poly.back());
    const BigInt trail = abs(poly.front());
    auto divisors_or_fail = [&](const BigInt& n,
                                const char* which) -> std::optional<std::vector<BigInt>> {
        if (!strict && boost::multiprecision::msb(n) > 160) return std::nullopt;
        try {
            return divisors(n, opts.budget);
        } catch (const budget_exceeded& e) {
            if (strict)
                throw budget_exceeded(std::string("rational_roots: factorization budget exceeded on ") +
                                          which + " coefficient " + n.str(),
                                      e.residue());
            return std::nullopt;
        }
    };
    auto bdivs = divisors_or_fail(lead, "leading");
    if (!bdivs) return std::nullopt;
    auto adivs = divisors_or_fail(trail, "trailing");
    if (!adivs) return std::nullopt;
    if (!strict && bdivs->size() * adivs->size() > opts.max_candidates) return std::nullopt;

    // Cheap sieve modulo a few word-size primes before exact evaluation.
    static constexpr std::uint64_t sieve_primes[] = {1000000007ULL, 998244353ULL, 2147483647ULL};
    std::vector<ModPoly> reduced;
    for (auto q : sieve_primes) {
        ModPoly r;
        for (const auto& c : poly) r.push_back(static_cast<std::uint64_t>(mod_floor(c, BigInt(q))));
        reduced.push_back(std::move(r));
    }
    auto hom_eval_mod = [](const ModPoly& c, std::uint64_t a, std::uint64_t b, std::uint64_t q) {
        std::uint64_t acc = c.back(), bpow = 1;
        for (std::size_t i = c.size() - 1; i-- > 0;) {
            bpow = mul_mod(bpow, b, q);
            acc = (mul_mod(acc, a, q) + mul_mod(c[i], bpow, q)) % q;
        }
        return acc;
    };

    std::vector<Rational> out;
    for (const auto& b : *bdivs) {
        for (const auto& a_abs : *adivs) {
            if (gcd(a_abs, b) != 1) continue;
            for (int s : {1, -1}) {
                BigInt a = s * a_abs;
                bool maybe = true;
                for (std::size_t k = 0; k < std::size(sieve_primes) && maybe; ++k) {
                    const BigInt q(sieve_primes[k]);
                    auto am = static_cast<std::uint64_t>(mod_floor(a, q));
                    auto bm = static_cast<std::uint64_t>(mod_floor(b, q));
                    maybe = hom_eval_mod(reduced[k], am, bm, sieve_primes[k]) == 0;
                }
                if (!maybe) continue;
                BigInt acc = poly.back(), bpow = 1;
                for (std::size_t i = poly.size() - 1; i-- > 0;) {
                    bpow *= b;
                    acc = acc * a + poly[i] * bpow;
                }
                if (acc == 0) out.emplace_back(a, b);
            }
        }
    }
    return out;
}

}  // namespace detail

/// Every point of P^1(Q) where H vanishes, each listed once, sorted.
inline RootSet rational_roots(const HomogForm& h, const RootOptions& opts = {}) {
    if (h.is_zero()) throw std::domain_error("rational_roots: zero form");
    std::vector<ProjPoint> roots;
    const auto c = h.coefficients();
    std::size_t lo = 0, hi = c.size() - 1;
    while (c[lo] == 0) ++lo;
    while (c[hi] == 0) --hi;
    if (lo > 0) roots.push_back(ProjPoint::from_pair(0, 1));  // X divides H
    if (hi < c.size() - 1) roots.push_back(ProjPoint::infinity());  // Y divides H

    if (hi > lo) {
        std::vector<BigInt> poly(c.begin() + lo, c.begin() + hi + 1);
        BigInt g = 0;
        for (const auto& v : poly) g = gcd(g, abs(v));
        for (auto& v : poly) v /= g;

        std::optional<std::vector<Rational>> found;
        switch (opts.method) {
            case RootMethod::divisors:
                found = detail::divisor_roots(poly, opts, true);
                break;
            case RootMethod::padic:
                found = detail::padic_roots(poly);
                break;
            case RootMethod::automatic:
                found = detail::divisor_roots(poly, opts, false);
                if (!found) found = detail::padic_roots(poly);
                break;
        }
        for (const auto& q : *found) roots.push_back(ProjPoint::from_rational(q));
    }
    return RootSet(h, std::move(roots));
}

}  // namespace arithdyn
