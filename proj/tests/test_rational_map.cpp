#include <gtest/gtest.h>

#include <random>

#include "arithdyn/arithdyn.hpp"

using namespace arithdyn;

namespace {

const HomogForm X = HomogForm::X();
const HomogForm Y = HomogForm::Y();

ProjPoint pt(long a, long b) { return ProjPoint::from_pair(BigInt(a), BigInt(b)); }

RationalMap poly(const char* text) { return parse_map(text); }

std::vector<ProjPoint> sample_points(std::mt19937_64& rng, int count, int h) {
    std::uniform_int_distribution<int> dist(-h, h);
    std::vector<ProjPoint> out{ProjPoint::infinity(), pt(0, 1)};
    while (static_cast<int>(out.size()) < count) {
        int a = dist(rng), b = dist(rng);
        if (a || b) out.push_back(pt(a, b));
    }
    return out;
}

RationalMap random_map(std::mt19937_64& rng, unsigned d, int h) {
    std::uniform_int_distribution<int> dist(-h, h);
    for (;;) {
        std::vector<BigInt> f, g;
        for (unsigned i = 0; i <= d; ++i) {
            f.emplace_back(dist(rng));
            g.emplace_back(dist(rng));
        }
        HomogForm F(f), G(g);
        if (F.is_zero() || G.is_zero() || resultant(F, G) == 0) continue;
        return RationalMap::from_pair(F, G);
    }
}

}  // namespace

TEST(RationalMap, FromPolynomial) {
    EXPECT_EQ(poly("x^2"), RationalMap::from_pair(X * X, Y * Y));
    RationalMap cubic = poly("x^3-3*x^2+x+2");
    EXPECT_EQ(cubic.F(), X * X * X - BigInt(3) * X * X * Y + X * Y * Y + BigInt(2) * Y * Y * Y);
    EXPECT_EQ(cubic.G(), Y * Y * Y);
    RationalMap p2 = RationalMap::from_polynomial(period2_polynomial({1, 2}));
    HomogForm y4 = Y * Y * Y * Y;
    EXPECT_EQ(p2.F(), X * X * X * X - BigInt(5) * X * X * Y * Y + BigInt(4) * y4 - X * Y * Y * Y);
    EXPECT_EQ(p2.G(), y4);
    EXPECT_THROW(RationalMap::from_polynomial(UniPoly(Rational(3))), std::invalid_argument);
    // Rational coefficients are cleared into a primitive pair.
    RationalMap half = poly("x^2/2 + 1/3");
    EXPECT_EQ(half.F(), BigInt(3) * X * X + BigInt(2) * Y * Y);
    EXPECT_EQ(half.G(), BigInt(6) * Y * Y);
}

TEST(RationalMap, FromPair) {
    auto sq = RationalMap::from_pair(X * X, Y * Y);
    EXPECT_EQ(sq.degree(), 2u);
    EXPECT_EQ(RationalMap::from_pair(BigInt(2) * X * X, BigInt(2) * Y * Y), sq);
    EXPECT_EQ(RationalMap::from_pair(BigInt(-1) * X * X, BigInt(-1) * Y * Y), sq);
    EXPECT_THROW(RationalMap::from_pair(X * Y, Y * Y), std::invalid_argument);
    EXPECT_THROW(RationalMap::from_pair(X * Y, Y), std::invalid_argument);
}

TEST(RationalMap, Evaluate) {
    EXPECT_EQ(evaluate(poly("x^2"), pt(3, 1)), pt(9, 1));
    EXPECT_EQ(evaluate(poly("x^2"), ProjPoint::infinity()), ProjPoint::infinity());
    EXPECT_EQ(evaluate(poly("x^3-3*x^2+x+2"), pt(0, 1)), pt(2, 1));
    EXPECT_EQ(evaluate(parse_map("F=X^2+Y^2; G=X*Y"), pt(0, 1)), ProjPoint::infinity());
}

TEST(RationalMap, ComposeAndIterate) {
    auto sq = poly("x^2");
    EXPECT_EQ(compose(sq, sq), RationalMap::from_pair(X * X * X * X, Y * Y * Y * Y));
    auto cubic = poly("x^3-3*x^2+x+2");
    EXPECT_EQ(compose(RationalMap::identity(), cubic), cubic);
    EXPECT_EQ(compose(cubic, RationalMap::identity()), cubic);
    EXPECT_EQ(iterate(sq, 2), poly("x^4"));
    EXPECT_EQ(iterate(sq, 3), poly("x^8"));
    EXPECT_EQ(iterate(cubic, 1), cubic);
    EXPECT_THROW(iterate(sq, 13), std::length_error);
    EXPECT_THROW(iterate(sq, 0), std::invalid_argument);
}

TEST(RationalMap, CompositionIsSound) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        auto phi = random_map(rng, 1 + i % 3, 5), psi = random_map(rng, 1 + (i / 3) % 3, 5);
        auto both = compose(psi, phi);
        EXPECT_NE(resultant(both), 0);
        for (const auto& p : sample_points(rng, 20, 30)) EXPECT_EQ(both(p), psi(phi(p)));
    }
}

TEST(BadPrimes, Examples) {
    EXPECT_TRUE(bad_primes(poly("x^2")).empty());
    EXPECT_EQ(bad_primes(parse_map("F=X^2; G=5*Y^2")), PlaceSet({5}));
    EXPECT_EQ(abs(resultant(parse_map("F=X^2; G=5*Y^2"))), 25);
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> coef(-50, 50);
    for (int i = 0; i < 50; ++i) {
        std::vector<BigInt> c;
        for (int k = 0; k < 2 + i % 4; ++k) c.emplace_back(coef(rng));
        c.emplace_back(1);
        EXPECT_TRUE(bad_primes(RationalMap::from_polynomial(UniPoly::from_integers(c))).empty());
    }
    EXPECT_EQ(bad_primes(poly("x^2/6")), PlaceSet({2, 3}));
}

TEST(BadPrimes, InvariantUnderRescaling) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        auto phi = random_map(rng, 2 + i % 2, 7);
        BigInt k(2 + i);
        EXPECT_EQ(bad_primes(RationalMap::from_pair(k * phi.F(), k * phi.G())), bad_primes(phi));
        EXPECT_EQ(RationalMap::from_pair(BigInt(-1) * k * phi.F(), BigInt(-1) * k * phi.G()), phi);
    }
}

TEST(Reduction, Tables) {
    auto t3 = reduce_mod_p(poly("x^2"), 3);
    EXPECT_EQ(t3.image, (std::vector<std::uint64_t>{0, 1, 1, 3}));
    auto t5 = reduce_mod_p(poly("x^2"), 5);
    EXPECT_EQ(t5.image, (std::vector<std::uint64_t>{0, 1, 4, 4, 1, 5}));
    auto t2 = reduce_mod_p(poly("x^3-x^2"), 2);
    EXPECT_EQ(t2.image, (std::vector<std::uint64_t>{0, 0, 2}));
    EXPECT_EQ(t2(t2.infinity()), t2.infinity());
    EXPECT_THROW(reduce_mod_p(parse_map("F=X^2; G=5*Y^2"), 5), std::invalid_argument);
    EXPECT_THROW(reduce_mod_p(poly("x^2"), 4), std::invalid_argument);
    // Reduction drops degree at infinity when the leading terms vanish mod p.
    auto t = reduce_mod_p(parse_map("F=3*X^2+X*Y+Y^2; G=X^2+Y^2"), 3);
    EXPECT_EQ(t(t.infinity()), 0u);
}

TEST(Reduction, CommutesWithEvaluation) {
    std::mt19937_64 rng(24);
    std::vector<RationalMap> maps{poly("x^2"), poly("x^3-x^2"), poly("x^2-29/16"),
                                  parse_map("F=X^2+Y^2; G=X*Y"), parse_map("(x^2-x)/(x+2)")};
    for (int i = 0; i < 10; ++i) maps.push_back(random_map(rng, 2 + i % 3, 9));
    std::vector<ProjPoint> points;
    for (int a = -50; a <= 50; a += 7)
        for (int b = 0; b <= 50; b += 5)
            if (a || b) points.push_back(pt(a, b));
    for (const auto& phi : maps)
        for (std::uint64_t p = 2; p <= 50; ++p) {
            if (!is_prime(BigInt(p)) || !has_good_reduction(phi, BigInt(p))) continue;
            auto table = reduce_mod_p(phi, p);
            for (const auto& P : points)
                EXPECT_EQ(reduce_point(phi(P), p), table(reduce_point(P, p))) << phi.str() << " p=" << p;
        }
}

TEST(Reduction, ChordalValuationNeverDecreases) {
    std::mt19937_64 rng(25);
    for (int i = 0; i < 40; ++i) {
        auto phi = random_map(rng, 2 + i % 3, 6);
        auto pts = sample_points(rng, 12, 40);
        for (long p : {2, 3, 5, 7, 11, 13}) {
            if (!has_good_reduction(phi, BigInt(p))) continue;
            for (std::size_t a = 0; a < pts.size(); ++a)
                for (std::size_t b = a + 1; b < pts.size(); ++b) {
                    if (pts[a] == pts[b]) continue;
                    EXPECT_GE(chordal_valuation(phi(pts[a]), phi(pts[b]), p),
                              chordal_valuation(pts[a], pts[b], p));
                }
        }
    }
}

TEST(CriticalPoints, Examples) {
    auto sq = rational_critical_points(poly("x^2"));
    EXPECT_EQ(sq, (std::vector<CriticalPoint>{{pt(0, 1), 1}, {ProjPoint::infinity(), 1}}));
    auto cubic = rational_critical_points(poly("x^3-x^2"));
    std::vector<ProjPoint> where;
    for (const auto& c : cubic) where.push_back(c.point);
    EXPECT_NE(std::find(where.begin(), where.end(), pt(0, 1)), where.end());
    EXPECT_NE(std::find(where.begin(), where.end(), ProjPoint::infinity()), where.end());
    auto rat = rational_critical_points(parse_map("F=X^2+Y^2; G=X*Y"));
    EXPECT_EQ(rat, (std::vector<CriticalPoint>{{pt(-1, 1), 1}, {pt(1, 1), 1}}));
    EXPECT_TRUE(is_ramified(poly("x^2"), pt(0, 1)));
    EXPECT_FALSE(is_ramified(poly("x^2"), pt(1, 1)));
    EXPECT_THROW(rational_critical_points(poly("3*x+1")), std::invalid_argument);
}

TEST(CriticalPoints, CountedWithMultiplicityAtMost2dMinus2) {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 60; ++i) {
        auto phi = random_map(rng, 2 + i % 4, 8);
        unsigned total = 0;
        for (const auto& c : rational_critical_points(phi)) total += c.multiplicity;
        EXPECT_LE(total, 2 * phi.degree() - 2);
    }
    // A polynomial is totally ramified at infinity: multiplicity d - 1.
    auto c = rational_critical_points(poly("x^5+1"));
    EXPECT_EQ(c, (std::vector<CriticalPoint>{{pt(0, 1), 4}, {ProjPoint::infinity(), 4}}));
}

TEST(Conjugate, IdentityAndTranslation) {
    auto sq = poly("x^2");
    EXPECT_EQ(conjugate(sq, Matrix2::identity()), sq);
    Matrix2 shift{1, 1, 0, 1};
    auto conj = conjugate(sq, shift);
    EXPECT_EQ(conj, poly("(x-1)^2+1"));
    EXPECT_EQ(bad_primes(conj), bad_primes(sq));
    for (int a = -5; a < 5; ++a) EXPECT_EQ(conj(shift(pt(a, 1))), shift(sq(pt(a, 1))));
    EXPECT_THROW(conjugate(sq, Matrix2{1, 2, 2, 4}), std::invalid_argument);
}

TEST(Conjugate, CommutesPointwise) {
    std::mt19937_64 rng(27);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int i = 0; i < 30; ++i) {
        auto phi = random_map(rng, 2 + i % 2, 6);
        Matrix2 m{entry(rng), entry(rng), entry(rng), entry(rng)};
        if (m.det() == 0) continue;
        auto psi = conjugate(phi, m);
        EXPECT_EQ(psi.degree(), phi.degree());
        for (const auto& p : sample_points(rng, 10, 25)) EXPECT_EQ(psi(m(p)), m(phi(p)));
    }
}
