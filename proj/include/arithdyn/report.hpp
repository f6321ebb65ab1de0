#pragma once

/**
 * @file report.hpp
 * @brief The analysis pipeline and JSON (de)serialization of every report type.
 *
 * Big integers and rationals are written as decimal strings, points in the
 * CLI point syntax ("inf", "5", "-3/7"). Every document carries
 * "schema": "arithdyn/1". from_json(to_json(x)) == x for all types here.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "dynamics.hpp"
#include "rational_map.hpp"
#include "verify.hpp"

namespace arithdyn {

inline constexpr const char* schema_version = "arithdyn/1";

struct NamedBound {
    std::string name;
    BoundValue value;

    friend bool operator==(const NamedBound&, const NamedBound&) = default;
};

struct AnalysisReport {
    std::string map;
    unsigned degree = 0;
    BigInt resultant = 0;
    PlaceSet bad_primes;
    unsigned s = 1;
    BoundFamily family = BoundFamily::evertse;
    std::vector<CriticalPoint> critical_points;
    unsigned period_cap = 4;
    std::vector<PeriodicPoint> periodic_points;
    std::vector<NamedBound> bounds;
    std::vector<VerificationReport> verifications;

    bool any_failure() const {
        for (const auto& v : verifications)
            if (v.failed()) return true;
        return false;
    }

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Folds per-pair reports into one: FAIL if any failed, PASS if any passed.
inline VerificationReport merge_reports(std::string claim, std::string subject,
                                        const std::vector<VerificationReport>& parts) {
    VerificationReport r{std::move(claim), std::move(subject), Status::vacuous, {}, {}};
    std::size_t passed = 0, failed = 0, vacuous = 0;
    for (const auto& p : parts) {
        if (p.status == Status::pass) ++passed;
        if (p.status == Status::fail) ++failed;
        if (p.status == Status::vacuous) ++vacuous;
        if (p.status != Status::vacuous)
            r.witnesses.insert(r.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    }
    r.status = failed ? Status::fail : passed ? Status::pass : Status::vacuous;
    r.notes = std::to_string(passed) + " pass, " + std::to_string(failed) + " fail, " +
              std::to_string(vacuous) + " vacuous";
    return r;
}

/// Runs every applicable operation on phi with S = bad primes.
inline AnalysisReport analyze(const RationalMap& phi, unsigned period_cap = 4,
                              BoundFamily family = BoundFamily::evertse,
                              const PeriodicOptions& opts = {}) {
    AnalysisReport rep;
    rep.map = phi.str();
    rep.degree = phi.degree();
    rep.resultant = resultant(phi);
    rep.bad_primes = bad_primes(phi);
    rep.s = static_cast<unsigned>(rep.bad_primes.s_value());
    rep.family = family;
    rep.period_cap = period_cap;
    const unsigned d = phi.degree();
    if (d >= 2) rep.critical_points = rational_critical_points(phi, opts.roots);
    rep.periodic_points = periodic_points(phi, period_cap, opts);

    if (d >= 2) {
        rep.bounds.push_back({"kappa*d+lambda", main_theorem_bound(d, rep.s, family)});
        rep.bounds.push_back({"four-point", four_point_bound(d, rep.s, family)});
        rep.bounds.push_back({"three-point", three_point_bound(rep.s)});
        if (rep.bad_primes.empty()) rep.bounds.push_back({"d+5", everywhere_good_bound(d)});
        if (phi.is_monic_integer_polynomial()) rep.bounds.push_back({"d+1", baron_bound(d)});
        rep.bounds.push_back(
            {"period (Morton-Silverman)",
             ms_period_bound(static_cast<unsigned>(rep.bad_primes.primes().size()), 1)});
        rep.bounds.push_back({"orbit length (Canci)", canci_orbit_bound(rep.s)});
    }

    std::vector<ProjPoint> per;
    for (const auto& pp : rep.periodic_points) per.push_back(pp.point);
    const std::string subject = "phi = " + rep.map + "; S = " + rep.bad_primes.str();

    if (d >= 2) {
        rep.verifications.push_back(
            verify_main_theorem(phi, RationalMap::identity(), rep.bad_primes, period_cap, family, opts));
        if (phi.is_monic_integer_polynomial())
            for (auto& r : verify_baron(phi, period_cap, opts)) rep.verifications.push_back(std::move(r));
    }
    std::vector<VerificationReport> dist, ram;
    for (std::size_t i = 0; i < per.size(); ++i)
        for (std::size_t j = 0; j < per.size(); ++j) {
            if (i == j) continue;
            if (i < j)
                dist.push_back(check_distance_preservation(phi, per[i], per[j], rep.bad_primes, period_cap));
            if (d >= 2)
                ram.push_back(check_ramified_integrality(phi, per[i], per[j], rep.bad_primes, period_cap));
        }
    rep.verifications.push_back(merge_reports("distance-preservation", subject, dist));
    if (d >= 2) rep.verifications.push_back(merge_reports("ramified-integrality", subject, ram));
    return rep;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline Rational rational_from_json(const nlohmann::json& j) { return Rational::parse(j.get<std::string>()); }
inline BigInt bigint_from_json(const nlohmann::json& j) { return BigInt(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const ProjPoint& p) { j = p.str(); }
inline void from_json(const nlohmann::json& j, ProjPoint& p) { p = parse_point(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, const BoundValue& b) {
    if (b.is_exact()) {
        j = {{"kind", "EXACT"}, {"value", b.value().str()}, {"display", b.display()}};
    } else {
        j = {{"kind", "LOG10"},
             {"log10_upper", b.log10_upper().str()},
             {"log10_lower", b.log10_lower().str()},
             {"display", b.display()}};
    }
    if (!b.note().empty()) j["note"] = b.note();
}

inline void from_json(const nlohmann::json& j, BoundValue& b) {
    std::string note = j.value("note", std::string{});
    if (j.at("kind") == "EXACT") {
        b = BoundValue::from_parts(BoundKind::exact, bigint_from_json(j.at("value")), 0, 0, note);
    } else {
        b = BoundValue::from_parts(BoundKind::log10, 0, rational_from_json(j.at("log10_lower")),
                                   rational_from_json(j.at("log10_upper")), note);
    }
}

inline void to_json(nlohmann::json& j, const Witness& w) {
    j = {{"label", w.label}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"holds", w.holds}, {"points", w.points}};
    j["prime"] = w.prime ? nlohmann::json(w.prime->str()) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, Witness& w) {
    w.label = j.at("label").get<std::string>();
    w.lhs = j.at("lhs").get<std::string>();
    w.rhs = j.at("rhs").get<std::string>();
    w.holds = j.at("holds").get<bool>();
    w.points = j.at("points").get<std::vector<ProjPoint>>();
    w.prime = j.at("prime").is_null() ? std::nullopt : std::optional<BigInt>(bigint_from_json(j.at("prime")));
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = {{"claim", r.claim},
         {"subject", r.subject},
         {"status", to_string(r.status)},
         {"witnesses", r.witnesses},
         {"notes", r.notes}};
}

inline void from_json(const nlohmann::json& j, VerificationReport& r) {
    r.claim = j.at("claim").get<std::string>();
    r.subject = j.at("subject").get<std::string>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.witnesses = j.at("witnesses").get<std::vector<Witness>>();
    r.notes = j.at("notes").get<std::string>();
}

inline void to_json(nlohmann::json& j, const PeriodicPoint& p) {
    j = {{"point", p.point}, {"minimal_period", p.minimal_period}};
}
inline void from_json(const nlohmann::json& j, PeriodicPoint& p) {
    p.point = j.at("point").get<ProjPoint>();
    p.minimal_period = j.at("minimal_period").get<unsigned>();
}

inline void to_json(nlohmann::json& j, const CriticalPoint& c) {
    j = {{"point", c.point}, {"multiplicity", c.multiplicity}};
}
inline void from_json(const nlohmann::json& j, CriticalPoint& c) {
    c.point = j.at("point").get<ProjPoint>();
    c.multiplicity = j.at("multiplicity").get<unsigned>();
}

inline void to_json(nlohmann::json& j, const NamedBound& b) { j = {{"name", b.name}, {"bound", b.value}}; }
inline void from_json(const nlohmann::json& j, NamedBound& b) {
    b.name = j.at("name").get<std::string>();
    b.value = j.at("bound").get<BoundValue>();
}

inline void to_json(nlohmann::json& j, const CycleCensus& c) {
    j = {{"periodic_count", c.periodic_count}, {"cycle_lengths", c.cycle_lengths}};
}
inline void from_json(const nlohmann::json& j, CycleCensus& c) {
    c.periodic_count = j.at("periodic_count").get<std::size_t>();
    c.cycle_lengths = j.at("cycle_lengths").get<std::vector<std::size_t>>();
}

inline void to_json(nlohmann::json& j, const UnitEqSolution& u) {
    auto exps = [](const std::map<BigInt, int>& m) {
        nlohmann::json o = nlohmann::json::object();
        for (const auto& [p, e] : m) o[p.str()] = e;
        return o;
    };
    j = {{"x", u.x.str()}, {"y", u.y.str()}, {"x_exponents", exps(u.x_exponents)},
         {"y_exponents", exps(u.y_exponents)}};
}
inline void from_json(const nlohmann::json& j, UnitEqSolution& u) {
    auto exps = [](const nlohmann::json& o) {
        std::map<BigInt, int> m;
        for (const auto& [k, v] : o.items()) m[BigInt(k)] = v.get<int>();
        return m;
    };
    u.x = rational_from_json(j.at("x"));
    u.y = rational_from_json(j.at("y"));
    u.x_exponents = exps(j.at("x_exponents"));
    u.y_exponents = exps(j.at("y_exponents"));
}

inline nlohmann::json place_set_json(const PlaceSet& s) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : s.primes()) a.push_back(p.str());
    return a;
}

inline void to_json(nlohmann::json& j, const AnalysisReport& r) {
    j = {{"schema", schema_version},
         {"map", r.map},
         {"degree", r.degree},
         {"resultant", r.resultant.str()},
         {"bad_primes", place_set_json(r.bad_primes)},
         {"s", r.s},
         {"family", to_string(r.family)},
         {"critical_points", r.critical_points},
         {"period_cap", r.period_cap},
         {"periodic_points", r.periodic_points},
         {"bounds", r.bounds},
         {"verifications", r.verifications}};
}

inline void from_json(const nlohmann::json& j, AnalysisReport& r) {
    if (j.at("schema") != schema_version) throw std::invalid_argument("unsupported report schema");
    r.map = j.at("map").get<std::string>();
    r.degree = j.at("degree").get<unsigned>();
    r.resultant = bigint_from_json(j.at("resultant"));
    std::vector<BigInt> primes;
    for (const auto& p : j.at("bad_primes")) primes.push_back(bigint_from_json(p));
    r.bad_primes = PlaceSet(std::move(primes));
    r.s = j.at("s").get<unsigned>();
    r.family = parse_family(j.at("family").get<std::string>());
    r.critical_points = j.at("critical_points").get<std::vector<CriticalPoint>>();
    r.period_cap = j.at("period_cap").get<unsigned>();
    r.periodic_points = j.at("periodic_points").get<std::vector<PeriodicPoint>>();
    r.bounds = j.at("bounds").get<std::vector<NamedBound>>();
    r.verifications = j.at("verifications").get<std::vector<VerificationReport>>();
}

}  // namespace arithdyn
