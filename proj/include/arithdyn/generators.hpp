#pragma once

// Example families of monic integer polynomials with many rational periodic points.

#include <set>
#include <stdexcept>
#include <vector>

#include "exact_arith.hpp"
#include "univariate.hpp"

namespace arithdyn {

/// (x-1)(x-2)...(x-d) + x: fixes 1..d and infinity.
inline UniPoly dfixed_polynomial(unsigned d) {
    if (d < 2) throw std::invalid_argument("dfixed: d must be at least 2");
    UniPoly f(Rational(1));
    for (unsigned i = 1; i <= d; ++i) f = f * (UniPoly::x() - UniPoly(Rational(i)));
    return f + UniPoly::x();
}

/// prod (x^2 - n_i^2) - x: each {n_i, -n_i} is a 2-cycle.
inline UniPoly period2_polynomial(const std::vector<BigInt>& ns) {
    if (ns.size() < 2) throw std::invalid_argument("period2: need at least two values");
    std::set<BigInt> seen;
    for (const auto& n : ns) {
        if (n <= 0) throw std::invalid_argument("period2: values must be positive");
        if (!seen.insert(n).second) throw std::invalid_argument("period2: repeated value " + n.str());
    }
    const UniPoly x = UniPoly::x();
    UniPoly f(Rational(1));
    for (const auto& n : ns) f = f * (x * x - UniPoly(Rational(n * n)));
    return f - x;
}

/// (x-a)(x-b)(x-e) + (a+b) - x with e = (a+b)/2: the 2-cycle (a,b) and the fixed point e.
inline UniPoly baron_cycle_polynomial(const BigInt& a = 0, const BigInt& b = 2) {
    if (a == b) throw std::invalid_argument("baron-cycle: a and b must differ");
    if ((a + b) % 2 != 0) throw std::invalid_argument("baron-cycle: a + b must be even");
    const BigInt e = (a + b) / 2;
    const UniPoly x = UniPoly::x();
    auto lin = [&](const BigInt& r) { return x - UniPoly(Rational(r)); };
    return lin(a) * lin(b) * lin(e) + UniPoly(Rational(a + b)) - x;
}

}  // namespace arithdyn
