// Periodic points of the two example families, with a reduction census.

#include <iostream>

#include "arithdyn/arithdyn.hpp"

using namespace arithdyn;

int main() {
    for (unsigned d = 2; d <= 4; ++d) {
        auto phi = RationalMap::from_polynomial(dfixed_polynomial(d));
        std::cout << phi.str() << ":";
        for (const auto& p : periodic_points(phi, 2)) std::cout << " " << p.point.str();
        std::cout << "\n";
    }

    auto phi = parse_map("(x^2-1)*(x^2-4)-x");
    std::cout << phi.str() << ":";
    for (const auto& p : periodic_points(phi, 2))
        std::cout << " " << p.point.str() << "(" << p.minimal_period << ")";
    std::cout << "\n";

    for (std::uint64_t p : {3, 5, 7}) {
        auto c = fp_cycle_census(phi, p);
        std::cout << "  mod " << p << ": " << c.periodic_count << " periodic residues\n";
    }

    for (const auto& r : verify_baron(phi)) std::cout << "  " << r.claim << ": " << to_string(r.status) << "\n";
}
