#pragma once

// Maps shared by the unit and acceptance tests.

#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "arithdyn/arithdyn.hpp"

namespace corpus {

using namespace arithdyn;

struct Entry {
    std::string name;
    RationalMap map;
};

/// Hand-picked maps: the two example families, Baron's cycle example, and a
/// few maps with bad reduction or non-polynomial shape.
inline std::vector<Entry> named() {
    std::vector<Entry> out;
    for (unsigned d = 2; d <= 6; ++d)
        out.push_back({"dfixed-" + std::to_string(d), RationalMap::from_polynomial(dfixed_polynomial(d))});
    out.push_back({"period2-{1,2}", RationalMap::from_polynomial(period2_polynomial({1, 2}))});
    out.push_back({"period2-{1,2,3}", RationalMap::from_polynomial(period2_polynomial({1, 2, 3}))});
    out.push_back({"baron-cycle", RationalMap::from_polynomial(baron_cycle_polynomial())});
    for (const char* text : {"x^2", "x^3-x^2", "x^2-1", "x^2-2", "x^3", "x^2-29/16", "2*x^3-x",
                             "F=X^2+Y^2; G=X*Y", "F=X^2; G=5*Y^2", "F=Y^2; G=X^2",
                             "F=X^2-Y^2; G=2*X*Y", "(x^2-x)/(x+2)", "3*x^2-4*x"})
        out.push_back({text, parse_map(text)});
    return out;
}

/// Monic integer polynomials of degree 2..5 with coefficients in [-10, 10].
inline std::vector<Entry> random_monic(std::size_t count = 200, std::uint64_t seed = 20240601) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-10, 10), deg(2, 5);
    std::vector<Entry> out;
    for (std::size_t k = 0; k < count; ++k) {
        int d = deg(rng);
        std::vector<BigInt> c;
        for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
        c.emplace_back(1);
        auto f = UniPoly::from_integers(c);
        out.push_back({"random-" + std::to_string(k) + ": " + f.str(), RationalMap::from_polynomial(f)});
    }
    return out;
}

inline std::vector<Entry> all() {
    auto out = named();
    for (auto& e : random_monic()) out.push_back(std::move(e));
    return out;
}

/// Every normalized point [a:b] with |a|, |b| <= h.
inline std::vector<ProjPoint> small_points(int h) {
    std::vector<ProjPoint> out;
    for (int b = 0; b <= h; ++b)
        for (int a = -h; a <= h; ++a) {
            if (a == 0 && b == 0) continue;
            if (std::gcd(a, b) != 1) continue;
            if (b == 0 && a != 1) continue;
            out.push_back(ProjPoint::from_pair(a, b));
        }
    return out;
}

}  // namespace corpus
