#include <gtest/gtest.h>

#include <set>

#include "arithdyn/arithdyn.hpp"
#include "corpus.hpp"

using namespace arithdyn;

namespace {

ProjPoint pt(long a, long b) { return ProjPoint::from_pair(BigInt(a), BigInt(b)); }

RationalMap period2_map() { return RationalMap::from_polynomial(period2_polynomial({1, 2})); }

// Periodic points found by iterating from every point of the box.
std::set<ProjPoint> orbit_oracle(const RationalMap& phi, unsigned cap, int box) {
    std::set<ProjPoint> out;
    for (const auto& p : corpus::small_points(box)) {
        auto rec = orbit(phi, p, cap);
        if (rec.is_periodic() && *rec.cycle_length <= cap) out.insert(p);
    }
    return out;
}

bool in_box(const ProjPoint& p, int box) { return abs(p.x()) <= box && abs(p.y()) <= box; }

}  // namespace

TEST(Orbit, Examples) {
    auto sq = parse_map("x^2");
    auto grow = orbit(sq, pt(2, 1), 10);
    EXPECT_TRUE(grow.exceeded());
    EXPECT_EQ(grow.points.size(), 11u);
    EXPECT_EQ(grow.points[3], pt(256, 1));

    auto fixed = orbit(sq, pt(1, 1), 10);
    EXPECT_EQ(fixed.tail_length, 0u);
    EXPECT_EQ(fixed.cycle_length, 1u);

    auto two = orbit(period2_map(), pt(1, 1), 10);
    EXPECT_EQ(two.points, (std::vector<ProjPoint>{pt(1, 1), pt(-1, 1)}));
    EXPECT_EQ(two.tail_length, 0u);
    EXPECT_EQ(two.cycle_length, 2u);

    auto tail = orbit(sq, pt(-1, 1), 10);
    EXPECT_EQ(tail.tail_length, 1u);
    EXPECT_EQ(tail.cycle_length, 1u);
    EXPECT_FALSE(tail.is_periodic());
    EXPECT_THROW(orbit(sq, pt(0, 1), 0), std::invalid_argument);
}

TEST(PeriodicPoints, Examples) {
    EXPECT_EQ(periodic_points(parse_map("x^2"), 2),
              (std::vector<PeriodicPoint>{{pt(0, 1), 1}, {pt(1, 1), 1}, {ProjPoint::infinity(), 1}}));
    EXPECT_EQ(periodic_points(RationalMap::from_polynomial(dfixed_polynomial(3)), 2),
              (std::vector<PeriodicPoint>{
                  {pt(1, 1), 1}, {pt(2, 1), 1}, {pt(3, 1), 1}, {ProjPoint::infinity(), 1}}));
    EXPECT_EQ(periodic_points(period2_map(), 2),
              (std::vector<PeriodicPoint>{{pt(-2, 1), 2},
                                          {pt(-1, 1), 2},
                                          {pt(1, 1), 2},
                                          {pt(2, 1), 2},
                                          {ProjPoint::infinity(), 1}}));
}

TEST(PeriodicPoints, Errors) {
    EXPECT_THROW(periodic_points(parse_map("x^2"), 0), std::invalid_argument);
    EXPECT_THROW(periodic_points(parse_map("x^2"), 13), std::length_error);
    PeriodicOptions tight;
    tight.degree_cap = 100;
    EXPECT_THROW(periodic_points(parse_map("x^5"), 3, tight), std::length_error);
    // 1/x has every point of period dividing 2.
    EXPECT_THROW(periodic_points(parse_map("F=Y; G=X"), 2), std::domain_error);
}

TEST(PeriodicPoints, MinimalPeriodAndDefiningEquation) {
    for (const auto& e : corpus::named()) {
        if (e.map.degree() > 4) continue;
        for (const auto& pp : periodic_points(e.map, 3)) {
            EXPECT_EQ(fixed_point_form(iterate(e.map, pp.minimal_period))(pp.point), 0) << e.name;
            ProjPoint cur = pp.point;
            for (unsigned k = 1; k < pp.minimal_period; ++k) {
                cur = e.map(cur);
                EXPECT_NE(cur, pp.point) << e.name;
            }
            EXPECT_EQ(e.map(cur), pp.point) << e.name;
        }
    }
}

TEST(PeriodicPoints, MatchesOrbitOracle) {
    for (const char* text : {"x^2-29/16", "x^2-1", "F=X^2-Y^2; G=2*X*Y", "(x^2-x)/(x+2)", "x^3-x^2"}) {
        auto phi = parse_map(text);
        auto oracle = orbit_oracle(phi, 3, 30);
        std::set<ProjPoint> found;
        for (const auto& pp : periodic_points(phi, 3))
            if (in_box(pp.point, 30)) found.insert(pp.point);
        EXPECT_EQ(found, oracle) << text;
    }
    // x^2 - 29/16 has a rational 3-cycle: -1/4 -> -7/4 -> 5/4.
    auto pts = periodic_points(parse_map("x^2-29/16"), 3);
    std::size_t threes = 0;
    for (const auto& pp : pts) threes += pp.minimal_period == 3;
    EXPECT_EQ(threes, 3u);
}

TEST(MinimalPeriod, Examples) {
    EXPECT_EQ(minimal_period(parse_map("x^2"), pt(1, 1), 5), 1u);
    EXPECT_EQ(minimal_period(parse_map("x^2"), pt(2, 1), 5), std::nullopt);
    EXPECT_EQ(minimal_period(period2_map(), pt(2, 1), 5), 2u);
    EXPECT_THROW(minimal_period(parse_map("x^2"), pt(1, 1), 0), std::invalid_argument);
}

TEST(Census, Examples) {
    auto sq = parse_map("x^2");
    EXPECT_EQ(fp_cycle_census(sq, 3), (CycleCensus{3, {1, 1, 1}}));
    EXPECT_EQ(fp_cycle_census(sq, 5), (CycleCensus{3, {1, 1, 1}}));
    EXPECT_EQ(fp_cycle_census(sq, 7), (CycleCensus{5, {1, 1, 1, 2}}));
    EXPECT_THROW(fp_cycle_census(parse_map("F=X^2; G=5*Y^2"), 5), std::invalid_argument);
}

TEST(Census, AgreesWithNaiveCycleSearch) {
    for (const auto& e : corpus::named())
        for (std::uint64_t p : {7u, 11u, 13u, 101u}) {
            if (!has_good_reduction(e.map, BigInt(p))) continue;
            auto table = reduce_mod_p(e.map, p);
            // x is periodic iff iterating p+1 times from x comes back to x at some step.
            std::size_t count = 0;
            for (std::uint64_t x = 0; x <= p; ++x) {
                std::uint64_t y = x;
                for (std::uint64_t k = 0; k <= p; ++k) {
                    y = table(y);
                    if (y == x) {
                        ++count;
                        break;
                    }
                }
            }
            auto census = fp_cycle_census(e.map, p);
            EXPECT_EQ(census.periodic_count, count) << e.name << " p=" << p;
            std::size_t sum = 0;
            for (auto len : census.cycle_lengths) sum += len;
            EXPECT_EQ(sum, count);
        }
}

TEST(Periodic, DistancePreservedBetweenPeriodicPoints) {
    for (const auto& e : corpus::named()) {
        if (e.map.degree() > 4) continue;
        auto bad = bad_primes(e.map);
        auto pts = periodic_points(e.map, 3);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                const auto &P = pts[i].point, &Q = pts[j].point;
                ProjPoint fP = e.map(P), fQ = e.map(Q);
                std::set<BigInt> primes;
                for (const auto& c : {cross_term(P, Q), cross_term(fP, fQ)})
                    for (const auto& p : factorize(c).primes()) primes.insert(p);
                for (const auto& p : primes) {
                    if (bad.contains(p)) continue;
                    EXPECT_EQ(chordal_valuation(P, Q, p), chordal_valuation(fP, fQ, p))
                        << e.name << " " << P.str() << " " << Q.str() << " p=" << p;
                }
            }
    }
}
