#include <gtest/gtest.h>

#include <set>

#include "arithdyn/arithdyn.hpp"
#include "corpus.hpp"

using namespace arithdyn;

namespace {

ProjPoint pt(long a, long b) { return ProjPoint::from_pair(BigInt(a), BigInt(b)); }
const ProjPoint inf = ProjPoint::infinity();

RationalMap cycle_cubic() { return parse_map("x^3-3*x^2+x+2"); }
RationalMap dfixed3() { return RationalMap::from_polynomial(dfixed_polynomial(3)); }
RationalMap period2() { return RationalMap::from_polynomial(period2_polynomial({1, 2})); }

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Every witness must reproduce its own verdict.
void expect_self_certifying(const VerificationReport& r) {
    if (r.status == Status::fail) {
        EXPECT_FALSE(r.witnesses.empty());
        EXPECT_TRUE(std::any_of(r.witnesses.begin(), r.witnesses.end(),
                                [](const Witness& w) { return !w.holds; }));
    }
    if (r.status == Status::pass)
        EXPECT_TRUE(std::all_of(r.witnesses.begin(), r.witnesses.end(),
                                [](const Witness& w) { return w.holds; }));
}

}  // namespace

TEST(DistancePreservation, Examples) {
    auto r1 = check_distance_preservation(cycle_cubic(), pt(0, 1), pt(1, 1), PlaceSet{});
    EXPECT_EQ(r1.status, Status::pass);
    EXPECT_EQ(check_distance_preservation(period2(), pt(1, 1), pt(2, 1), PlaceSet{}).status, Status::pass);
    EXPECT_EQ(check_distance_preservation(parse_map("x^2"), pt(0, 1), inf, PlaceSet{}).status, Status::pass);
    EXPECT_THROW(check_distance_preservation(parse_map("x^2"), pt(0, 1), pt(0, 1), PlaceSet{}),
                 std::invalid_argument);
    EXPECT_EQ(check_distance_preservation(parse_map("x^2"), pt(2, 1), pt(0, 1), PlaceSet{}).status,
              Status::vacuous);
}

TEST(DistancePreservation, WitnessesCarryBothValuations) {
    // Fixed points 1 and 4 of (x-1)(x-4)+x: the cross term is -3.
    auto phi = parse_map("(x-1)*(x-4)+x");
    auto r = check_distance_preservation(phi, pt(1, 1), pt(4, 1), PlaceSet{});
    EXPECT_EQ(r.status, Status::pass);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0].prime, BigInt(3));
    EXPECT_EQ(r.witnesses[0].lhs, "1");
    EXPECT_EQ(r.witnesses[0].rhs, "1");
    expect_self_certifying(r);
    // With 3 in S nothing is material.
    EXPECT_TRUE(check_distance_preservation(phi, pt(1, 1), pt(4, 1), PlaceSet({3})).witnesses.empty());
}

TEST(Fiber, Examples) {
    auto sq = parse_map("x^2");
    EXPECT_EQ(fiber(sq, pt(4, 1)), (std::vector<FiberPoint>{{pt(-2, 1), 1}, {pt(2, 1), 1}}));
    EXPECT_EQ(fiber(sq, inf), (std::vector<FiberPoint>{{inf, 2}}));
    EXPECT_EQ(fiber(parse_map("x^3-x^2"), pt(0, 1)), (std::vector<FiberPoint>{{pt(0, 1), 2}, {pt(1, 1), 1}}));
    EXPECT_TRUE(fiber(sq, pt(2, 1)).empty());
}

TEST(ConditionCount, Examples) {
    EXPECT_EQ(condition_count(parse_map("x^3-x^2"), {pt(0, 1), inf}), 3u);
    EXPECT_EQ(condition_count(parse_map("x^2"), {pt(0, 1), inf}), 2u);
    EXPECT_EQ(condition_count(parse_map("x^2"), {pt(1, 1)}), 1u);
    EXPECT_THROW(condition_count(parse_map("x^2"), {}), std::invalid_argument);
    auto a = find_three_point_set(parse_map("x^3-x^2"), {pt(0, 1), pt(1, 1), inf});
    ASSERT_TRUE(a.has_value());
    EXPECT_GE(condition_count(parse_map("x^3-x^2"), *a), 3u);
}

TEST(RamifiedIntegrality, Examples) {
    EXPECT_EQ(check_ramified_integrality(parse_map("x^2"), pt(0, 1), pt(1, 1), PlaceSet{}).status, Status::pass);
    EXPECT_EQ(check_ramified_integrality(parse_map("x^3-x^2"), inf, pt(0, 1), PlaceSet{}).status, Status::pass);
    auto r = check_ramified_integrality(period2(), inf, pt(2, 1), PlaceSet{});
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_NE(r.notes.find("ramified"), std::string::npos);
    EXPECT_EQ(check_ramified_integrality(parse_map("x^2"), pt(1, 1), pt(1, 1), PlaceSet{}).status,
              Status::vacuous);
    // 1 is not ramified and its orbit {1} has no ramified point.
    EXPECT_EQ(check_ramified_integrality(parse_map("x^2"), pt(1, 1), pt(0, 1), PlaceSet{}).status,
              Status::vacuous);
}

TEST(RamifiedIntegrality, CycleMode) {
    // x^2 - 1: 0 -> -1 -> 0 and 0 is critical, so -1's cycle is ramified.
    auto r = check_ramified_integrality(parse_map("x^2-1"), pt(-1, 1), inf, PlaceSet{});
    EXPECT_EQ(r.status, Status::pass);
    EXPECT_NE(r.notes.find("cycle"), std::string::npos);
}

TEST(TailIntegrality, Examples) {
    auto sq = parse_map("x^2");
    EXPECT_EQ(check_tail_integrality(sq, pt(1, 1), pt(-1, 1), pt(0, 1), PlaceSet{}).status, Status::pass);
    EXPECT_EQ(check_tail_integrality(sq, pt(1, 1), pt(-1, 1), inf, PlaceSet{}).status, Status::pass);
    EXPECT_EQ(check_tail_integrality(parse_map("x^3-x^2"), pt(0, 1), pt(1, 1), inf, PlaceSet{}).status,
              Status::pass);
    EXPECT_EQ(check_tail_integrality(sq, pt(1, 1), pt(2, 1), pt(0, 1), PlaceSet{}).status, Status::vacuous);
    EXPECT_EQ(check_tail_integrality(sq, pt(1, 1), pt(-1, 1), pt(1, 1), PlaceSet{}).status, Status::vacuous);
}

TEST(FourPoint, Examples) {
    PointQuad quad{pt(1, 1), pt(2, 1), pt(3, 1), inf};
    EXPECT_TRUE(four_point_membership(dfixed3(), quad, pt(1, 1), PlaceSet{}));
    EXPECT_TRUE(four_point_membership(dfixed3(), quad, pt(2, 1), PlaceSet{}));
    EXPECT_THROW(four_point_membership(parse_map("x^2"), {pt(0, 1), pt(1, 1), pt(-1, 1), inf}, pt(2, 1),
                                       PlaceSet{}),
                 std::invalid_argument);
    EXPECT_THROW(four_point_membership(dfixed3(), {pt(1, 1), pt(1, 1), pt(3, 1), inf}, pt(2, 1), PlaceSet{}),
                 std::invalid_argument);
}

TEST(FourPoint, NonPeriodicPointCanFail) {
    // 0 is not periodic for (x-1)(x-2)(x-3)+x: it maps to -6, cross term with 1 changes from -1 to 7.
    PointQuad quad{pt(1, 1), pt(2, 1), pt(3, 1), inf};
    auto audit = four_point_audit(dfixed3(), quad, pt(0, 1), PlaceSet{});
    EXPECT_FALSE(audit.member);
    EXPECT_TRUE(std::any_of(audit.checks.begin(), audit.checks.end(),
                            [](const Witness& w) { return !w.holds; }));
}

TEST(MainTheorem, Examples) {
    auto r = verify_main_theorem(period2(), RationalMap::identity(), PlaceSet{}, 2);
    EXPECT_EQ(r.status, Status::pass);
    std::size_t members = 0;
    for (const auto& w : r.witnesses)
        if (w.label == "periodic point lies in the four-point set") ++members;
    EXPECT_EQ(members, 5u);
    EXPECT_EQ(r.witnesses.front().lhs, "5");
    expect_self_certifying(r);

    auto sq = parse_map("x^2");
    auto r2 = verify_main_theorem(sq, sq, PlaceSet{}, 2);
    EXPECT_EQ(r2.status, Status::pass);
    EXPECT_EQ(r2.witnesses.front().lhs, "3");

    auto r3 = verify_main_theorem(parse_map("F=X^2; G=5*Y^2"), RationalMap::identity(), PlaceSet{}, 2);
    EXPECT_NE(r3.notes.find("S enlarged"), std::string::npos);
    EXPECT_THROW(verify_main_theorem(parse_map("3*x+1"), RationalMap::identity(), PlaceSet{}, 2),
                 std::invalid_argument);
}

TEST(MainTheorem, DegreeTwoThreePointBound) {
    // x^2 - 1 has the ramified 2-cycle {0, -1}; the three-point bound applies.
    auto r = verify_main_theorem(parse_map("x^2-1"), parse_map("x^2+x"), PlaceSet{}, 2);
    EXPECT_NE(r.status, Status::fail);
    expect_self_certifying(r);
}

TEST(Baron, Examples) {
    auto r1 = verify_baron(cycle_cubic());
    ASSERT_EQ(r1.size(), 3u);
    EXPECT_EQ(r1[0].status, Status::pass);
    EXPECT_EQ(r1[0].witnesses[0].lhs, "4");
    EXPECT_EQ(r1[1].status, Status::pass);
    EXPECT_EQ(r1[1].witnesses.size(), 1u);
    EXPECT_EQ(r1[1].witnesses[0].lhs, "2");
    EXPECT_EQ(r1[2].status, Status::vacuous);

    auto r2 = verify_baron(dfixed3());
    EXPECT_EQ(r2[0].status, Status::pass);
    EXPECT_EQ(r2[0].witnesses[0].lhs, "4");
    EXPECT_EQ(r2[1].status, Status::vacuous);

    auto r3 = verify_baron(period2());
    EXPECT_EQ(r3[0].witnesses[0].lhs, "5");
    EXPECT_EQ(r3[2].status, Status::pass);
    ASSERT_EQ(r3[2].witnesses.size(), 1u);
    EXPECT_EQ(r3[2].witnesses[0].lhs, "0");
    EXPECT_EQ(r3[2].witnesses[0].rhs, "0");

    EXPECT_THROW(verify_baron(parse_map("2*x^2+1")), std::invalid_argument);
    EXPECT_THROW(verify_baron(parse_map("x^2+1/2")), std::invalid_argument);
    EXPECT_THROW(verify_baron(parse_map("F=X^2+Y^2; G=X*Y")), std::invalid_argument);
}

TEST(UnitEquation, TwoThreeExamples) {
    auto sols = solve_unit_equation_bounded(q(1), q(1), PlaceSet({2, 3}), 4);
    std::set<std::pair<Rational, Rational>> got;
    for (const auto& s : sols) {
        EXPECT_EQ(s.x + s.y, q(1));
        got.insert({s.x, s.y});
    }
    std::vector<std::pair<Rational, Rational>> listed{
        {q(3), q(-2)},     {q(-2), q(3)},    {q(9), q(-8)},    {q(-8), q(9)},    {q(4), q(-3)},
        {q(-3), q(4)},     {q(2), q(-1)},    {q(-1), q(2)},    {q(1, 2), q(1, 2)}, {q(3, 2), q(-1, 2)},
        {q(-1, 2), q(3, 2)}, {q(1, 4), q(3, 4)}, {q(3, 4), q(1, 4)}, {q(1, 3), q(2, 3)}, {q(2, 3), q(1, 3)},
        {q(-1, 3), q(4, 3)}, {q(4, 3), q(-1, 3)}, {q(9, 8), q(-1, 8)}, {q(-1, 8), q(9, 8)}, {q(1, 9), q(8, 9)},
        {q(8, 9), q(1, 9)}};
    for (const auto& p : listed) EXPECT_TRUE(got.count(p)) << p.first.str() << ", " << p.second.str();
    for (const auto& s : sols) EXPECT_TRUE(got.count({s.y, s.x}));

    // Independent recount over both exponent boxes.
    std::vector<Rational> units;
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) {
            Rational u = 1;
            for (int k = 0; k < std::abs(i); ++k) u = i > 0 ? u * q(2) : u / q(2);
            for (int k = 0; k < std::abs(j); ++k) u = j > 0 ? u * q(3) : u / q(3);
            units.push_back(u);
            units.push_back(-u);
        }
    std::set<Rational> unit_set(units.begin(), units.end());
    std::size_t oracle = 0;
    for (const auto& x : units)
        if (unit_set.count(q(1) - x)) ++oracle;
    EXPECT_EQ(sols.size(), oracle);
    EXPECT_TRUE(unit_equation_bound(3, BoundFamily::evertse).admits(BigInt(sols.size())));

    const auto& nine = *std::find_if(sols.begin(), sols.end(), [](const UnitEqSolution& s) { return s.x == q(9); });
    EXPECT_EQ(nine.x_exponents.at(3), 2);
    EXPECT_EQ(nine.x_exponents.at(2), 0);
    EXPECT_EQ(nine.y_exponents.at(2), 3);
}

TEST(UnitEquation, EmptyPlaceSet) {
    auto s1 = solve_unit_equation_bounded(q(2), q(1), PlaceSet{}, 3);
    ASSERT_EQ(s1.size(), 1u);
    EXPECT_EQ(s1[0].x, q(1));
    EXPECT_EQ(s1[0].y, q(-1));
    EXPECT_TRUE(solve_unit_equation_bounded(q(1), q(1), PlaceSet{}, 3).empty());
    EXPECT_THROW(solve_unit_equation_bounded(q(0), q(1), PlaceSet{}, 3), std::invalid_argument);
}

TEST(UnitEquation, SymmetricAndBounded) {
    for (long a : {1L, 2L, 3L, 5L})
        for (const auto& s : {PlaceSet({2}), PlaceSet({2, 3}), PlaceSet({2, 5}), PlaceSet({3, 7})}) {
            auto sols = solve_unit_equation_bounded(q(a), q(a), s, 3);
            std::set<std::pair<Rational, Rational>> got;
            for (const auto& u : sols) {
                EXPECT_EQ(q(a) * u.x + q(a) * u.y, q(1));
                got.insert({u.x, u.y});
            }
            for (const auto& u : sols) EXPECT_TRUE(got.count({u.y, u.x}));
            EXPECT_TRUE(unit_equation_bound(static_cast<unsigned>(s.s_value()), BoundFamily::evertse)
                            .admits(BigInt(sols.size())));
        }
}

TEST(Injectivity, Examples) {
    auto r1 = check_injectivity_mod_p(parse_map("x^2"), 3);
    EXPECT_EQ(r1.status, Status::pass);
    EXPECT_EQ(r1.witnesses.back().lhs, "3");
    EXPECT_EQ(r1.witnesses.back().rhs, "3");
    EXPECT_EQ(check_injectivity_mod_p(period2(), 7).status, Status::pass);
    EXPECT_EQ(check_injectivity_mod_p(dfixed3(), 5).status, Status::pass);
    EXPECT_THROW(check_injectivity_mod_p(parse_map("F=X^2; G=5*Y^2"), 5), std::invalid_argument);
    EXPECT_THROW(check_injectivity_mod_p(parse_map("x^2"), 9), std::invalid_argument);
}

TEST(Injectivity, SmallPrimesCanCollide) {
    // Fixed points 1 and 3 agree mod 2.
    auto r = check_injectivity_mod_p(dfixed3(), 2);
    EXPECT_EQ(r.status, Status::fail);
    expect_self_certifying(r);
}

TEST(Corpus, DegreeFreeBoundsHold) {
    for (const auto& e : corpus::named()) {
        if (e.map.degree() < 2 || e.map.degree() > 4) continue;
        auto per = periodic_points(e.map, 3);
        std::vector<ProjPoint> pts;
        for (const auto& pp : per) pts.push_back(pp.point);
        auto bad = bad_primes(e.map);
        auto a = find_three_point_set(e.map, pts);
        if (a) EXPECT_TRUE(three_point_bound(static_cast<unsigned>(bad.s_value())).admits(BigInt(pts.size())));
        if (bad.empty()) {
            EXPECT_LE(pts.size(), e.map.degree() + 5) << e.name;
            if (a) EXPECT_LE(pts.size(), 4u) << e.name;
        }
    }
}

TEST(Status, RoundTrip) {
    for (auto s : {Status::pass, Status::fail, Status::vacuous}) EXPECT_EQ(parse_status(to_string(s)), s);
    EXPECT_EQ(to_string(Status::vacuous), "VACUOUS");
    EXPECT_THROW(parse_status("maybe"), std::invalid_argument);
}
