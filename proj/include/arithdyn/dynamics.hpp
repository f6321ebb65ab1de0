#pragma once

// Orbits, exact periodic-point enumeration, and cycle censuses over F_p.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "homog_form.hpp"
#include "proj_point.hpp"
#include "rational_map.hpp"

namespace arithdyn {

struct PeriodicPoint {
    ProjPoint point;
    unsigned minimal_period = 1;

    friend bool operator==(const PeriodicPoint&, const PeriodicPoint&) = default;
};

struct OrbitRecord {
    ProjPoint start;
    std::vector<ProjPoint> points;             // start, phi(start), ...
    std::optional<std::size_t> tail_length;    // nullopt: cap exceeded
    std::optional<std::size_t> cycle_length;   // nullopt: cap exceeded

    bool exceeded() const { return !cycle_length.has_value(); }
    bool is_periodic() const { return tail_length && *tail_length == 0; }
};

/// Applies phi up to max_steps times, stopping at the first repeated point.
inline OrbitRecord orbit(const RationalMap& phi, const ProjPoint& start, std::size_t max_steps) {
    if (max_steps == 0) throw std::invalid_argument("orbit: max_steps must be positive");
    OrbitRecord rec{start, {start}, std::nullopt, std::nullopt};
    std::map<ProjPoint, std::size_t> seen{{start, 0}};
    for (std::size_t step = 0; step < max_steps; ++step) {
        ProjPoint next = phi(rec.points.back());
        if (auto it = seen.find(next); it != seen.end()) {
            rec.tail_length = it->second;
            rec.cycle_length = rec.points.size() - it->second;
            return rec;
        }
        seen.emplace(next, rec.points.size());
        rec.points.push_back(std::move(next));
    }
    return rec;
}

/// Smallest n <= cap with phi^n(P) = P, by direct iteration.
inline std::optional<unsigned> minimal_period(const RationalMap& phi, const ProjPoint& p,
                                              unsigned cap) {
    if (cap == 0) throw std::invalid_argument("minimal_period: cap must be positive");
    ProjPoint cur = p;
    for (unsigned n = 1; n <= cap; ++n) {
        cur = phi(cur);
        if (cur == p) return n;
    }
    return std::nullopt;
}

/// Y*F(X,Y) - X*G(X,Y): its roots are the fixed points of [F:G].
inline HomogForm fixed_point_form(const RationalMap& phi) {
    return HomogForm::Y() * phi.F() - HomogForm::X() * phi.G();
}

struct PeriodicOptions {
    std::uint64_t degree_cap = default_degree_cap;
    RootOptions roots{};
};

/// Every rational periodic point with minimal period <= period_cap, sorted by
/// point and labelled with its minimal period.
inline std::vector<PeriodicPoint> periodic_points(const RationalMap& phi, unsigned period_cap,
                                                  const PeriodicOptions& opts = {}) {
    if (period_cap == 0) throw std::invalid_argument("periodic_points: period cap must be positive");
    {
        std::uint64_t deg = 1;
        for (unsigned k = 0; k < period_cap; ++k) {
            deg *= phi.degree();
            if (deg > opts.degree_cap)
                throw std::length_error("periodic_points: degree " + std::to_string(phi.degree()) +
                                        "^" + std::to_string(period_cap) + " exceeds cap " +
                                        std::to_string(opts.degree_cap));
        }
    }
    std::vector<ProjPoint> found;
    RationalMap iterate_n = phi;
    for (unsigned n = 1; n <= period_cap; ++n) {
        if (n > 1) iterate_n = compose(phi, iterate_n);
        HomogForm h = fixed_point_form(iterate_n);
        if (h.is_zero())
            throw std::domain_error("periodic_points: iterate " + std::to_string(n) +
                                    " is the identity, every point is periodic");
        RootSet roots = rational_roots(h, opts.roots);
        found.insert(found.end(), roots.points().begin(), roots.points().end());
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<PeriodicPoint> out;
    out.reserve(found.size());
    for (auto& p : found) {
        auto n = minimal_period(phi, p, period_cap);
        if (!n) throw std::logic_error("periodic_points: root of a periodic equation is not periodic");
        out.push_back({std::move(p), *n});
    }
    return out;
}

struct CycleCensus {
    std::size_t periodic_count = 0;
    std::vector<std::size_t> cycle_lengths;  // ascending

    friend bool operator==(const CycleCensus&, const CycleCensus&) = default;
};

/// Cycles of a functional graph given as an image table.
inline CycleCensus cycle_census(const std::vector<std::uint64_t>& image) {
    const std::size_t n = image.size();
    // 0 = unvisited, 1 = on the current path, 2 = finished.
    std::vector<std::uint8_t> state(n, 0);
    std::vector<std::size_t> position(n, 0);
    CycleCensus census;
    std::vector<std::uint64_t> path;
    for (std::size_t s = 0; s < n; ++s) {
        if (state[s]) continue;
        path.clear();
        std::uint64_t v = s;
        while (state[v] == 0) {
            state[v] = 1;
            position[v] = path.size();
            path.push_back(v);
            v = image[v];
        }
        if (state[v] == 1) {
            std::size_t len = path.size() - position[v];
            census.cycle_lengths.push_back(len);
            census.periodic_count += len;
        }
        for (auto u : path) state[u] = 2;
    }
    std::sort(census.cycle_lengths.begin(), census.cycle_lengths.end());
    return census;
}

inline CycleCensus fp_cycle_census(const RationalMap& phi, std::uint64_t p) {
    return cycle_census(reduce_mod_p(phi, p).image);
}

}  // namespace arithdyn
