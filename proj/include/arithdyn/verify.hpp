#pragma once

/**
 * @file verify.hpp
 * @brief Executable checks of the distance, integrality, membership and
 *        counting statements, each returning a self-certifying report.
 *
 * "For all p outside S" conditions are decided on the finite set of primes
 * dividing the relevant cross terms; every other prime gives 0 = 0. The
 * primes that were actually compared are listed as witnesses.
 *
 * The lemmas assume good reduction outside S, so the integrality checks work
 * with S_eff = S u bad_primes(phi) and say so in the notes when that enlarges S.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "dynamics.hpp"
#include "exact_arith.hpp"
#include "homog_form.hpp"
#include "proj_point.hpp"
#include "rational_map.hpp"

namespace arithdyn {

enum class Status { pass, fail, vacuous };

inline std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::vacuous: return "VACUOUS";
    }
    return "?";
}

inline Status parse_status(std::string_view s) {
    if (s == "PASS") return Status::pass;
    if (s == "FAIL") return Status::fail;
    if (s == "VACUOUS") return Status::vacuous;
    throw std::invalid_argument("unknown status '" + std::string(s) + "'");
}

/// One compared quantity. For valuation checks lhs/rhs are the two delta values.
struct Witness {
    std::string label;
    std::optional<BigInt> prime;
    std::string lhs;
    std::string rhs;
    std::vector<ProjPoint> points;
    bool holds = true;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
    std::string claim;
    std::string subject;
    Status status = Status::vacuous;
    std::vector<Witness> witnesses;
    std::string notes;

    bool failed() const { return status == Status::fail; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

namespace detail {

inline VerificationReport vacuous(std::string claim, std::string subject, std::string why) {
    return {std::move(claim), std::move(subject), Status::vacuous, {}, std::move(why)};
}

/// PASS iff every witness holds.
inline void settle(VerificationReport& r) {
    bool ok = std::all_of(r.witnesses.begin(), r.witnesses.end(),
                          [](const Witness& w) { return w.holds; });
    r.status = ok ? Status::pass : Status::fail;
}

inline void add_note(VerificationReport& r, const std::string& note) {
    if (!r.notes.empty()) r.notes += "; ";
    r.notes += note;
}

/// Primes outside S dividing at least one of the nonzero terms.
inline std::vector<BigInt> material_primes(const std::vector<BigInt>& terms, const PlaceSet& s,
                                           const FactorBudget& budget = {}) {
    std::set<BigInt> out;
    for (const auto& t : terms) {
        BigInt rest = part_outside(t, s);
        if (rest <= 1) continue;
        for (auto& p : factorize(rest, budget).primes()) out.insert(p);
    }
    return {out.begin(), out.end()};
}

inline std::string points_str(const std::vector<ProjPoint>& pts) {
    std::string out = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ",";
        out += pts[i].str();
    }
    return out + "}";
}

inline bool all_periodic(const RationalMap& phi, std::initializer_list<const ProjPoint*> pts,
                         unsigned cap) {
    for (const auto* p : pts)
        if (!minimal_period(phi, *p, cap)) return false;
    return true;
}

/// Compares delta_p(P, Q) with delta_p(phi P, phi Q) outside S. Returns the
/// witnesses; an empty list means no prime was material.
inline std::vector<Witness> compare_distances(const RationalMap& phi, const ProjPoint& p,
                                              const ProjPoint& q, const PlaceSet& s) {
    const ProjPoint fp = phi(p), fq = phi(q);
    const BigInt c0 = cross_term(p, q), c1 = cross_term(fp, fq);
    std::vector<Witness> out;
    if ((c0 == 0) != (c1 == 0)) {
        // One side is infinite at every prime.
        out.push_back({"delta(P,Q) = delta(phi P, phi Q) at every prime", std::nullopt,
                       c0 == 0 ? "inf" : "finite", c1 == 0 ? "inf" : "finite", {p, q}, false});
        return out;
    }
    if (c0 == 0) return out;
    for (const auto& prime : material_primes({c0, c1}, s)) {
        auto l = chordal_valuation(p, q, prime), r = chordal_valuation(fp, fq, prime);
        out.push_back({"delta(P,Q) = delta(phi P, phi Q)", prime, l.str(), r.str(), {p, q}, l == r});
    }
    return out;
}

inline PlaceSet effective_places(const RationalMap& phi, const PlaceSet& s, VerificationReport& r) {
    PlaceSet bad = bad_primes(phi);
    if (s.includes(bad)) return s;
    PlaceSet eff = s.merged_with(bad);
    add_note(r, "S enlarged by bad primes to " + eff.str());
    return eff;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Distance preservation and integrality
// ---------------------------------------------------------------------------

/// delta_p(P,Q) = delta_p(phi P, phi Q) for periodic P != Q and every good p outside S.
inline VerificationReport check_distance_preservation(const RationalMap& phi, const ProjPoint& p,
                                                      const ProjPoint& q, const PlaceSet& s,
                                                      unsigned period_cap = 4) {
    if (p == q) throw std::invalid_argument("check_distance_preservation: P = Q");
    std::string subject = "phi = " + phi.str() + "; P = " + p.str() + "; Q = " + q.str() +
                          "; S = " + s.str();
    if (!detail::all_periodic(phi, {&p, &q}, period_cap))
        return detail::vacuous("distance-preservation", subject,
                               "P or Q not periodic within cap " + std::to_string(period_cap));
    VerificationReport r{"distance-preservation", subject, Status::pass, {}, {}};
    PlaceSet eff = detail::effective_places(phi, s, r);
    r.witnesses = detail::compare_distances(phi, p, q, eff);
    if (r.witnesses.empty()) detail::add_note(r, "no material primes (both cross terms are S-units)");
    detail::settle(r);
    return r;
}

/// P is S-integral with respect to Q when Q is ramified (lemma mode) or when
/// Q's cycle passes through a ramified point (cycle mode).
inline VerificationReport check_ramified_integrality(const RationalMap& phi, const ProjPoint& q,
                                                     const ProjPoint& p, const PlaceSet& s,
                                                     unsigned period_cap = 4) {
    std::string subject = "phi = " + phi.str() + "; Q = " + q.str() + "; P = " + p.str() +
                          "; S = " + s.str();
    const std::string claim = "ramified-integrality";
    if (p == q) return detail::vacuous(claim, subject, "P = Q");
    if (phi.degree() < 2) return detail::vacuous(claim, subject, "degree 1 maps have no ramification");

    VerificationReport r{claim, subject, Status::pass, {}, {}};
    PlaceSet eff = detail::effective_places(phi, s, r);
    if (is_ramified(phi, q)) {
        auto pre = detail::compare_distances(phi, p, q, eff);
        bool holds = std::all_of(pre.begin(), pre.end(), [](const Witness& w) { return w.holds; });
        if (!holds)
            return detail::vacuous(claim, subject,
                                   "delta(P,Q) = delta(phi P, phi Q) fails outside S");
        detail::add_note(r, "mode: Q ramified");
    } else {
        if (!detail::all_periodic(phi, {&p, &q}, period_cap))
            return detail::vacuous(claim, subject,
                                   "Q not ramified and P, Q not both periodic within cap " +
                                       std::to_string(period_cap));
        auto orb = orbit(phi, q, period_cap);
        auto hit = std::find_if(orb.points.begin(), orb.points.end(),
                                [&](const ProjPoint& x) { return is_ramified(phi, x); });
        if (hit == orb.points.end())
            return detail::vacuous(claim, subject, "orbit of Q contains no ramified point");
        detail::add_note(r, "mode: ramified cycle through " + hit->str());
    }
    const BigInt c = cross_term(p, q);
    for (const auto& prime : detail::material_primes({c}, eff))
        r.witnesses.push_back({"delta(P,Q) = 0", prime,
                               chordal_valuation(p, q, prime).str(), "0", {p, q}, false});
    if (r.witnesses.empty())
        r.witnesses.push_back({"cross term is an S-unit", std::nullopt, c.str(), "S-unit", {p, q}, true});
    detail::settle(r);
    return r;
}

/// For periodic P, a tail point Q (phi Q = phi P, Q != P) and periodic R != P,
/// R is S-integral with respect to Q.
inline VerificationReport check_tail_integrality(const RationalMap& phi, const ProjPoint& p,
                                                 const ProjPoint& q, const ProjPoint& rpt,
                                                 const PlaceSet& s, unsigned period_cap = 4) {
    std::string subject = "phi = " + phi.str() + "; P = " + p.str() + "; Q = " + q.str() +
                          "; R = " + rpt.str() + "; S = " + s.str();
    const std::string claim = "tail-integrality";
    if (q == p || phi(q) != phi(p))
        return detail::vacuous(claim, subject, "Q is not a tail point for phi(P)");
    if (rpt == p) return detail::vacuous(claim, subject, "R = P");
    if (rpt == q) return detail::vacuous(claim, subject, "R = Q");
    if (!detail::all_periodic(phi, {&p, &rpt}, period_cap))
        return detail::vacuous(claim, subject,
                               "P or R not periodic within cap " + std::to_string(period_cap));
    VerificationReport r{claim, subject, Status::pass, {}, {}};
    PlaceSet eff = detail::effective_places(phi, s, r);
    const BigInt c = cross_term(rpt, q);
    for (const auto& prime : detail::material_primes({c}, eff))
        r.witnesses.push_back({"delta(R,Q) = 0", prime,
                               chordal_valuation(rpt, q, prime).str(), "0", {rpt, q}, false});
    if (r.witnesses.empty())
        r.witnesses.push_back({"cross term is an S-unit", std::nullopt, c.str(), "S-unit", {rpt, q}, true});
    detail::settle(r);
    return r;
}

// ---------------------------------------------------------------------------
// Fibers and the three-point condition
// ---------------------------------------------------------------------------

struct FiberPoint {
    ProjPoint point;
    unsigned multiplicity = 0;

    friend bool operator==(const FiberPoint&, const FiberPoint&) = default;
};

/// Rational preimages of Q with multiplicity.
inline std::vector<FiberPoint> fiber(const RationalMap& phi, const ProjPoint& q,
                                     const RootOptions& opts = {}) {
    HomogForm h = q.y() * phi.F() - q.x() * phi.G();
    RootSet roots = rational_roots(h, opts);
    std::vector<FiberPoint> out;
    for (const auto& p : roots.points()) out.push_back({p, roots.multiplicity(p)});
    return out;
}

/// #(ramified points of A) + #(rational points of phi^-1(phi(A)) outside A).
inline std::size_t condition_count(const RationalMap& phi, const std::vector<ProjPoint>& a) {
    if (a.empty()) throw std::invalid_argument("condition_count: A is empty");
    std::set<ProjPoint> members(a.begin(), a.end());
    std::size_t ramified = 0;
    for (const auto& x : members)
        if (is_ramified(phi, x)) ++ramified;
    std::set<ProjPoint> images, extra;
    for (const auto& x : members) images.insert(phi(x));
    for (const auto& y : images)
        for (const auto& fp : fiber(phi, y))
            if (!members.count(fp.point)) extra.insert(fp.point);
    return ramified + extra.size();
}

/// A subset of the candidates of size at most 3 with condition_count >= 3,
/// searched in canonical order.
inline std::optional<std::vector<ProjPoint>> find_three_point_set(
    const RationalMap& phi, const std::vector<ProjPoint>& candidates) {
    if (phi.degree() < 2) return std::nullopt;
    const std::size_t n = candidates.size();
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::vector<ProjPoint> a;
            for (auto i : idx) a.push_back(candidates[i]);
            if (condition_count(phi, a) >= 3) return a;
            // next combination
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Four-point membership
// ---------------------------------------------------------------------------

using PointQuad = std::array<ProjPoint, 4>;

struct MembershipAudit {
    bool member = true;
    std::vector<Witness> checks;
};

inline MembershipAudit four_point_audit(const RationalMap& phi, const PointQuad& quad,
                                        const ProjPoint& p, const PlaceSet& s) {
    std::array<ProjPoint, 4> images{phi(quad[0]), phi(quad[1]), phi(quad[2]), phi(quad[3])};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (quad[i] == quad[j])
                throw std::invalid_argument("four_point_membership: points are not distinct");
            if (images[i] == images[j])
                throw std::invalid_argument("four_point_membership: images " + quad[i].str() +
                                            " -> " + images[i].str() + " and " + quad[j].str() +
                                            " -> " + images[j].str() + " coincide");
        }
    MembershipAudit audit;
    for (const auto& x : quad) {
        auto w = detail::compare_distances(phi, x, p, s);
        for (auto& item : w) {
            audit.member = audit.member && item.holds;
            audit.checks.push_back(std::move(item));
        }
    }
    return audit;
}

/// True iff delta_p(X,P) = delta_p(phi X, phi P) for X in the quad and every p outside S.
inline bool four_point_membership(const RationalMap& phi, const PointQuad& quad,
                                  const ProjPoint& p, const PlaceSet& s) {
    return four_point_audit(phi, quad, p, s).member;
}

// ---------------------------------------------------------------------------
// Whole-map pipelines
// ---------------------------------------------------------------------------

/// Counts Per(psi o phi) up to the cap against kappa*d + lambda, audits
/// four-point membership, and applies the degree-free bounds when their
/// hypotheses are met.
inline VerificationReport verify_main_theorem(const RationalMap& phi, const RationalMap& psi,
                                              const PlaceSet& s, unsigned period_cap,
                                              BoundFamily family = BoundFamily::evertse,
                                              const PeriodicOptions& opts = {}) {
    if (phi.degree() < 2) throw std::invalid_argument("verify_main_theorem: deg phi must be >= 2");
    const bool psi_identity = psi == RationalMap::identity();
    VerificationReport r{"main-theorem",
                         "phi = " + phi.str() + "; psi = " + (psi_identity ? "id" : psi.str()) +
                             "; S = " + s.str() + "; cap = " + std::to_string(period_cap),
                         Status::pass, {}, {}};
    PlaceSet bad = bad_primes(phi).merged_with(bad_primes(psi));
    PlaceSet eff = s.merged_with(bad);
    if (!s.includes(bad)) detail::add_note(r, "S enlarged by bad primes to " + eff.str());
    const unsigned sv = static_cast<unsigned>(eff.s_value());

    RationalMap chi = psi_identity ? phi : compose(psi, phi);
    std::vector<ProjPoint> per;
    for (auto& pp : periodic_points(chi, period_cap, opts)) per.push_back(pp.point);
    const BigInt count(per.size());

    BoundValue main = main_theorem_bound(phi.degree(), sv, family);
    r.witnesses.push_back({"count <= kappa*d + lambda (" + to_string(family) + ")", std::nullopt,
                           count.str(), main.display(), {}, main.admits(count)});

    if (per.size() >= 4) {
        PointQuad quad{per[0], per[1], per[2], per[3]};
        detail::add_note(r, "four points: " + detail::points_str({quad.begin(), quad.end()}));
        for (const auto& p : per) {
            auto audit = four_point_audit(phi, quad, p, eff);
            Witness w{"periodic point lies in the four-point set", std::nullopt,
                      std::to_string(audit.checks.size()) + " material checks",
                      audit.member ? "all equal" : "mismatch", {p}, audit.member};
            r.witnesses.push_back(std::move(w));
            for (auto& c : audit.checks)
                if (!c.holds) r.witnesses.push_back(std::move(c));
        }
    } else {
        detail::add_note(r, "fewer than four periodic points, membership audit skipped");
    }

    if (auto a = find_three_point_set(phi, per)) {
        detail::add_note(r, "three-point set A = " + detail::points_str(*a));
        BoundValue three = three_point_bound(sv);
        r.witnesses.push_back({"count <= 3*7^(4s) + 3", std::nullopt, count.str(), three.display(),
                               *a, three.admits(count)});
        if (psi_identity && bad.empty())
            r.witnesses.push_back({"count <= 4 (everywhere good reduction)", std::nullopt,
                                   count.str(), "4", *a, count <= 4});
    }
    if (psi_identity && bad.empty()) {
        BoundValue good = everywhere_good_bound(phi.degree());
        r.witnesses.push_back({"count <= d + 5 (everywhere good reduction)", std::nullopt,
                               count.str(), good.display(), {}, good.admits(count)});
    }
    detail::settle(r);
    return r;
}

/// Count, fixed-point/2-cycle and 2-cycle/2-cycle identities for a monic
/// integer polynomial.
inline std::vector<VerificationReport> verify_baron(const RationalMap& f, unsigned period_cap = 2,
                                                    const PeriodicOptions& opts = {}) {
    if (!f.is_monic_integer_polynomial())
        throw std::invalid_argument("verify_baron: map is not a monic integer polynomial");
    if (f.degree() < 2) throw std::invalid_argument("verify_baron: degree must be at least 2");
    const std::string subject = "f = " + f.str() + "; cap = " + std::to_string(period_cap);
    auto per = periodic_points(f, period_cap, opts);

    std::vector<Rational> fixed;
    std::vector<std::pair<Rational, Rational>> cycles;
    std::vector<ProjPoint> long_period;
    for (const auto& pp : per) {
        if (pp.point.is_infinity()) continue;
        Rational a = *pp.point.affine();
        if (pp.minimal_period == 1) {
            fixed.push_back(a);
        } else if (pp.minimal_period == 2) {
            Rational b = *f(pp.point).affine();
            if (a < b) cycles.emplace_back(a, b);
        } else {
            long_period.push_back(pp.point);
        }
    }

    std::vector<VerificationReport> out;
    {
        VerificationReport r{"baron-count", subject, Status::pass, {}, {}};
        BigInt count(per.size());
        r.witnesses.push_back({"count <= d + 1", std::nullopt, count.str(),
                               std::to_string(f.degree() + 1), {}, count <= f.degree() + 1});
        r.witnesses.push_back({"periods <= 2", std::nullopt,
                               std::to_string(long_period.size()) + " points of period > 2", "0",
                               long_period, long_period.empty()});
        detail::settle(r);
        out.push_back(std::move(r));
    }
    {
        VerificationReport r{"baron-fixed-cycle-sum", subject, Status::pass, {}, {}};
        for (const auto& [a, b] : cycles)
            for (const auto& e : fixed)
                r.witnesses.push_back({"2e = a + b", std::nullopt, (Rational(2) * e).str(),
                                       (a + b).str(),
                                       {ProjPoint::from_rational(e), ProjPoint::from_rational(a),
                                        ProjPoint::from_rational(b)},
                                       Rational(2) * e == a + b});
        if (r.witnesses.empty()) {
            r.status = Status::vacuous;
            r.notes = cycles.empty() ? "no 2-cycles" : "no finite fixed points";
        } else {
            detail::settle(r);
        }
        out.push_back(std::move(r));
    }
    {
        VerificationReport r{"baron-cycle-pair-sum", subject, Status::pass, {}, {}};
        for (std::size_t i = 0; i < cycles.size(); ++i)
            for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                const auto& [a, b] = cycles[i];
                const auto& [c, d] = cycles[j];
                r.witnesses.push_back({"a + b = c + d", std::nullopt, (a + b).str(), (c + d).str(),
                                       {ProjPoint::from_rational(a), ProjPoint::from_rational(b),
                                        ProjPoint::from_rational(c), ProjPoint::from_rational(d)},
                                       a + b == c + d});
            }
        if (r.witnesses.empty()) {
            r.status = Status::vacuous;
            r.notes = "fewer than two 2-cycles";
        } else {
            detail::settle(r);
        }
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Unit equations
// ---------------------------------------------------------------------------

struct UnitEqSolution {
    Rational x;
    Rational y;
    std::map<BigInt, int> x_exponents;
    std::map<BigInt, int> y_exponents;

    friend bool operator==(const UnitEqSolution&, const UnitEqSolution&) = default;
};

namespace detail {

/// Exponents of q over S when q is an S-unit with all |e_p| <= cap.
inline std::optional<std::map<BigInt, int>> s_unit_exponents(const Rational& q, const PlaceSet& s,
                                                             unsigned cap) {
    if (q.sign() == 0) return std::nullopt;
    if (part_outside(q.numerator(), s) != 1 || part_outside(q.denominator(), s) != 1)
        return std::nullopt;
    std::map<BigInt, int> e;
    for (const auto& p : s.primes()) {
        int v = vp(q, p);
        if (static_cast<unsigned>(v < 0 ? -v : v) > cap) return std::nullopt;
        e[p] = v;
    }
    return e;
}

}  // namespace detail

/// All solutions of a*x + b*y = 1 with x, y = +-prod p^e_p over S, |e_p| <= cap.
inline std::vector<UnitEqSolution> solve_unit_equation_bounded(const Rational& a, const Rational& b,
                                                               const PlaceSet& s, unsigned cap) {
    if (a.sign() == 0 || b.sign() == 0)
        throw std::invalid_argument("solve_unit_equation_bounded: coefficients must be nonzero");
    const auto& primes = s.primes();
    std::vector<int> e(primes.size(), -static_cast<int>(cap));
    std::vector<UnitEqSolution> out;
    while (true) {
        Rational mag = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            BigInt pk = pow(primes[i], static_cast<unsigned>(e[i] < 0 ? -e[i] : e[i]));
            mag = e[i] < 0 ? mag / Rational(pk) : mag * Rational(pk);
        }
        for (int sign : {1, -1}) {
            Rational x = sign == 1 ? mag : -mag;
            Rational y = (Rational(1) - a * x) / b;
            if (auto ye = detail::s_unit_exponents(y, s, cap)) {
                std::map<BigInt, int> xe;
                for (std::size_t i = 0; i < primes.size(); ++i) xe[primes[i]] = e[i];
                out.push_back({x, y, std::move(xe), std::move(*ye)});
            }
        }
        std::size_t i = 0;
        while (i < e.size() && e[i] == static_cast<int>(cap)) e[i++] = -static_cast<int>(cap);
        if (i == e.size()) break;
        ++e[i];
    }
    std::sort(out.begin(), out.end(), [](const UnitEqSolution& u, const UnitEqSolution& v) {
        return u.x != v.x ? u.x < v.x : u.y < v.y;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Finite-field cross-check
// ---------------------------------------------------------------------------

/// Distinct periodic points stay distinct mod p, and the rational periodic
/// count does not exceed the periodic count of the reduction.
inline VerificationReport check_injectivity_mod_p(const RationalMap& phi, std::uint64_t p,
                                                  unsigned period_cap = 4,
                                                  const PeriodicOptions& opts = {}) {
    const BigInt bp(p);
    if (!is_prime(bp)) throw std::invalid_argument("check_injectivity_mod_p: modulus is not prime");
    if (!has_good_reduction(phi, bp))
        throw std::invalid_argument("check_injectivity_mod_p: " + std::to_string(p) + " is a bad prime");
    VerificationReport r{"injectivity-mod-p",
                         "phi = " + phi.str() + "; p = " + std::to_string(p) + "; cap = " +
                             std::to_string(period_cap),
                         Status::pass, {}, {}};
    auto per = periodic_points(phi, period_cap, opts);
    for (std::size_t i = 0; i < per.size(); ++i)
        for (std::size_t j = i + 1; j < per.size(); ++j) {
            BigInt c = cross_term(per[i].point, per[j].point);
            if (c % bp == 0)
                r.witnesses.push_back({"p does not divide the cross term", bp,
                                       std::to_string(vp(c, bp)), "0",
                                       {per[i].point, per[j].point}, false});
        }
    CycleCensus census = fp_cycle_census(phi, p);
    r.witnesses.push_back({"rational periodic count <= periodic residues mod p", bp,
                           std::to_string(per.size()), std::to_string(census.periodic_count), {},
                           per.size() <= census.periodic_count});
    detail::settle(r);
    return r;
}

}  // namespace arithdyn
