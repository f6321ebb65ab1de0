#pragma once

/**
 * @file rational_map.hpp
 * @brief Endomorphisms of P^1 over Q as primitive pairs [F : G].
 *
 * A RationalMap always holds a primitive pair (the gcd of all coefficients of
 * F and G is 1) with nonzero resultant, and the first nonzero coefficient of G
 * (lowest X power) is positive. Over Z, which is a PID, such a pair has good
 * reduction at p exactly when p does not divide Res(F, G).
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact_arith.hpp"
#include "homog_form.hpp"
#include "proj_point.hpp"
#include "univariate.hpp"

namespace arithdyn {

class RationalMap {
public:
    /// Validates and normalizes; rejects pairs with a common factor.
    static RationalMap from_pair(HomogForm f, HomogForm g) {
        if (f.degree() != g.degree())
            throw std::invalid_argument("RationalMap: deg F != deg G");
        if (f.degree() == 0) throw std::invalid_argument("RationalMap: degree must be at least 1");
        if (f.is_zero() || g.is_zero() || resultant(f, g) == 0)
            throw std::invalid_argument("RationalMap: degenerate pair (common factor)");
        return normalized(std::move(f), std::move(g));
    }

    /// [c*f_hom(X,Y) : c*Y^d] with c clearing denominators, then normalized.
    static RationalMap from_polynomial(const UniPoly& f) {
        if (f.degree() < 1) throw std::invalid_argument("RationalMap: constant polynomial");
        const auto d = static_cast<unsigned>(f.degree());
        BigInt l = 1;
        for (const auto& c : f.coefficients()) l = lcm(l, c.denominator());
        std::vector<BigInt> fc;
        for (const auto& c : f.coefficients()) fc.push_back(c.numerator() * (l / c.denominator()));
        return from_pair(HomogForm(std::move(fc)), HomogForm::monomial(d, 0, l));
    }

    static RationalMap identity() { return RationalMap(HomogForm::X(), HomogForm::Y()); }

    const HomogForm& F() const noexcept { return f_; }
    const HomogForm& G() const noexcept { return g_; }
    unsigned degree() const { return f_.degree(); }

    ProjPoint operator()(const ProjPoint& p) const {
        return ProjPoint::from_pair(f_(p.x(), p.y()), g_(p.x(), p.y()));
    }

    /// True when G is a constant times Y^d, i.e. the map fixes infinity with
    /// no finite poles.
    bool is_polynomial() const {
        for (unsigned i = 1; i <= degree(); ++i)
            if (g_.coeff(i) != 0) return false;
        return f_.coeff(degree()) != 0;
    }

    /// [f_hom : Y^d] with f monic in Z[x].
    bool is_monic_integer_polynomial() const {
        return is_polynomial() && g_.coeff(0) == 1 && f_.coeff(degree()) == 1;
    }

    /// Affine polynomial when is_polynomial(); nullopt otherwise.
    std::optional<UniPoly> as_polynomial() const {
        if (!is_polynomial()) return std::nullopt;
        std::vector<Rational> c;
        for (unsigned i = 0; i <= degree(); ++i) c.emplace_back(f_.coeff(i), g_.coeff(0));
        return UniPoly(std::move(c));
    }

    /// "x^2 - 1" for polynomial maps, "[F : G]" otherwise.
    std::string str() const {
        if (auto p = as_polynomial()) return p->str();
        return "[" + f_.str() + " : " + g_.str() + "]";
    }

    friend bool operator==(const RationalMap&, const RationalMap&) = default;

    friend RationalMap compose(const RationalMap& psi, const RationalMap& phi);

private:
    RationalMap(HomogForm f, HomogForm g) : f_(std::move(f)), g_(std::move(g)) {}

    /// Content removal and sign normalization, without the resultant test.
    static RationalMap normalized(HomogForm f, HomogForm g) {
        BigInt c = gcd(content(f), content(g));
        if (c != 1) {
            f = f.divided_exactly(c);
            g = g.divided_exactly(c);
        }
        const HomogForm& lead_form = g.is_zero() ? f : g;
        for (const auto& v : lead_form.coefficients()) {
            if (v == 0) continue;
            if (v < 0) {
                f = BigInt(-1) * f;
                g = BigInt(-1) * g;
            }
            break;
        }
        return RationalMap(std::move(f), std::move(g));
    }

    HomogForm f_;
    HomogForm g_;
};

inline ProjPoint evaluate(const RationalMap& phi, const ProjPoint& p) { return phi(p); }

/// psi o phi. The composite of two maps with nonzero resultant has nonzero
/// resultant, so the (expensive) resultant test is skipped here.
inline RationalMap compose(const RationalMap& psi, const RationalMap& phi) {
    return RationalMap::normalized(substitute(psi.F(), phi.F(), phi.G()),
                                   substitute(psi.G(), phi.F(), phi.G()));
}

inline constexpr std::uint64_t default_degree_cap = 4096;

/// phi^n; throws when d^n exceeds the degree cap.
inline RationalMap iterate(const RationalMap& phi, unsigned n,
                           std::uint64_t degree_cap = default_degree_cap) {
    if (n == 0) throw std::invalid_argument("iterate: n must be positive");
    std::uint64_t deg = 1;
    for (unsigned k = 0; k < n; ++k) {
        deg *= phi.degree();
        if (deg > degree_cap)
            throw std::length_error("iterate: degree " + std::to_string(phi.degree()) + "^" +
                                    std::to_string(n) + " exceeds cap " +
                                    std::to_string(degree_cap));
    }
    RationalMap out = phi;
    for (unsigned k = 1; k < n; ++k) out = compose(phi, out);
    return out;
}

inline BigInt resultant(const RationalMap& phi) { return resultant(phi.F(), phi.G()); }

/// Primes dividing Res(F, G) of the primitive pair.
inline PlaceSet bad_primes(const RationalMap& phi, const FactorBudget& budget = {}) {
    BigInt r = abs(resultant(phi));
    if (r == 1) return {};
    return PlaceSet(factorize(r, budget).primes());
}

inline bool has_good_reduction(const RationalMap& phi, const BigInt& p) {
    return resultant(phi) % p != 0;
}

/// The induced map on P^1(F_p). Point k < p stands for [k:1]; point p is [1:0].
struct ReductionTable {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> image;

    std::uint64_t infinity() const { return p; }
    std::uint64_t operator()(std::uint64_t point) const { return image.at(point); }
};

/// Index of the reduction of P in a table for p.
inline std::uint64_t reduce_point(const ProjPoint& pt, std::uint64_t p) {
    const BigInt bp(p);
    BigInt b = mod_floor(pt.y(), bp);
    if (b == 0) return p;
    BigInt a = mod_floor(pt.x(), bp);
    return static_cast<std::uint64_t>(mod_floor(a * mod_inverse(b, bp), bp));
}

inline ReductionTable reduce_mod_p(const RationalMap& phi, std::uint64_t p) {
    if (!is_prime(BigInt(p))) throw std::invalid_argument("reduce_mod_p: modulus is not prime");
    if (!has_good_reduction(phi, BigInt(p)))
        throw std::invalid_argument("reduce_mod_p: " + std::to_string(p) + " is a bad prime");
    auto fm = detail::reduce_mod(phi.F().coefficients(), p);
    auto gm = detail::reduce_mod(phi.G().coefficients(), p);
    // reduce_mod trims high zeros; pad back to the formal degree.
    fm.resize(phi.degree() + 1, 0);
    gm.resize(phi.degree() + 1, 0);
    ReductionTable table{p, std::vector<std::uint64_t>(p + 1)};
    auto project = [p](std::uint64_t fv, std::uint64_t gv) {
        if (gv == 0) return p;
        return detail::mul_mod(fv, detail::pow_mod(gv, p - 2, p), p);
    };
    for (std::uint64_t x = 0; x < p; ++x)
        table.image[x] = project(detail::eval_mod(fm, x, p), detail::eval_mod(gm, x, p));
    table.image[p] = project(fm.back(), gm.back());
    return table;
}

struct CriticalPoint {
    ProjPoint point;
    unsigned multiplicity = 0;

    friend bool operator==(const CriticalPoint&, const CriticalPoint&) = default;
};

/// Rational roots of the Wronskian with their multiplicities.
inline std::vector<CriticalPoint> rational_critical_points(const RationalMap& phi,
                                                           const RootOptions& opts = {}) {
    if (phi.degree() < 2) throw std::invalid_argument("rational_critical_points: degree < 2");
    HomogForm w = wronskian(phi.F(), phi.G());
    RootSet roots = rational_roots(w, opts);
    std::vector<CriticalPoint> out;
    for (const auto& p : roots.points()) out.push_back({p, roots.multiplicity(p)});
    return out;
}

/// P is ramified iff the Wronskian vanishes there.
inline bool is_ramified(const RationalMap& phi, const ProjPoint& p) {
    if (phi.degree() < 2) return false;
    return wronskian(phi.F(), phi.G())(p) == 0;
}

/// [[a, b], [c, d]] acting as [X:Y] -> [aX + bY : cX + dY].
struct Matrix2 {
    BigInt a, b, c, d;

    BigInt det() const { return a * d - b * c; }
    ProjPoint operator()(const ProjPoint& p) const {
        return ProjPoint::from_pair(a * p.x() + b * p.y(), c * p.x() + d * p.y());
    }
    static Matrix2 identity() { return {1, 0, 0, 1}; }
};

/// M o phi o M^-1.
inline RationalMap conjugate(const RationalMap& phi, const Matrix2& m) {
    if (m.det() == 0) throw std::invalid_argument("conjugate: singular matrix");
    // adj(M) = [[d, -b], [-c, a]] represents M^-1 projectively.
    HomogForm inv_x(std::vector<BigInt>{BigInt(-m.b), m.d});
    HomogForm inv_y(std::vector<BigInt>{m.a, BigInt(-m.c)});
    HomogForm f1 = substitute(phi.F(), inv_x, inv_y);
    HomogForm g1 = substitute(phi.G(), inv_x, inv_y);
    return RationalMap::from_pair(m.a * f1 + m.b * g1, m.c * f1 + m.d * g1);
}

}  // namespace arithdyn
