#pragma once

/**
 * @file cli.hpp
 * @brief The arithdyn command line: analyze, bounds, generate, verify, census.
 *
 * Exit codes: 0 all PASS, 1 some FAIL, 2 usage or parse error,
 * 3 resource budget exceeded (factorization effort or degree cap).
 */

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bounds.hpp"
#include "dynamics.hpp"
#include "generators.hpp"
#include "map_parser.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace arithdyn {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_budget = 3 };

namespace cli {

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

inline std::vector<ProjPoint> parse_points(const std::string& text) {
    std::vector<ProjPoint> out;
    for (const auto& item : split_list(text)) out.push_back(parse_point(item));
    return out;
}

inline std::string kind_tag(const BoundValue& b) { return b.is_exact() ? "EXACT" : "LOG10"; }

inline void print_report(std::ostream& out, const VerificationReport& r) {
    out << std::left << std::setw(8) << to_string(r.status) << r.claim << "  [" << r.subject << "]\n";
    for (const auto& w : r.witnesses) {
        out << "    " << (w.holds ? "ok   " : "FAIL ");
        if (w.prime) out << "p=" << w.prime->str() << " ";
        out << w.label << ": " << w.lhs << " vs " << w.rhs;
        if (!w.points.empty()) {
            out << " at";
            for (const auto& p : w.points) out << " " << p.str();
        }
        out << "\n";
    }
    if (!r.notes.empty()) out << "    note: " << r.notes << "\n";
}

inline void print_analysis(std::ostream& out, const AnalysisReport& a) {
    out << "map:         " << a.map << "\n"
        << "degree:      " << a.degree << "\n"
        << "resultant:   " << a.resultant.str() << "\n"
        << "bad primes:  " << a.bad_primes.str() << "\n"
        << "s:           " << a.s << "\n";
    out << "critical:    ";
    if (a.critical_points.empty()) out << "(none rational)";
    for (std::size_t i = 0; i < a.critical_points.size(); ++i)
        out << (i ? ", " : "") << a.critical_points[i].point.str() << " (mult "
            << a.critical_points[i].multiplicity << ")";
    out << "\nperiodic points (cap " << a.period_cap << "): " << a.periodic_points.size() << "\n";
    for (const auto& p : a.periodic_points)
        out << "    " << std::left << std::setw(12) << p.point.str() << " period " << p.minimal_period << "\n";
    if (!a.bounds.empty()) {
        out << "bounds (family " << to_string(a.family) << "):\n";
        for (const auto& b : a.bounds)
            out << "    " << std::left << std::setw(28) << b.name << std::setw(7) << kind_tag(b.value)
                << b.value.display() << "\n";
    }
    out << "verifications:\n";
    for (const auto& v : a.verifications) print_report(out, v);
    out << "result: " << (a.any_failure() ? "FAIL" : "PASS") << "\n";
}

inline int emit_reports(std::ostream& out, const std::vector<VerificationReport>& reports, bool json) {
    bool failed = false;
    for (const auto& r : reports) failed = failed || r.failed();
    if (json) {
        nlohmann::json j = {{"schema", schema_version}, {"reports", reports}};
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report(out, r);
    }
    return failed ? exit_fail : exit_pass;
}

struct Options {
    std::string map;
    unsigned period_cap = 4;
    bool json = false;
    std::string family = "evertse";
    // bounds
    unsigned d = 2;
    unsigned s = 1;
    // generate
    std::string generator;
    std::string ns = "1,2";
    std::string cycle = "0,2";
    // verify
    std::string lemma;
    std::string P, Q, R, A, S;
    std::uint64_t p = 0;
};

inline int cmd_analyze(const Options& o, std::ostream& out) {
    AnalysisReport a = analyze(parse_map(o.map), o.period_cap, parse_family(o.family));
    if (o.json) {
        out << nlohmann::json(a).dump(2) << "\n";
    } else {
        print_analysis(out, a);
    }
    return a.any_failure() ? exit_fail : exit_pass;
}

inline int cmd_bounds(const Options& o, std::ostream& out) {
    const BoundFamily fam = parse_family(o.family);
    std::vector<NamedBound> rows{
        {"B(s)", unit_equation_bound(o.s, fam)},
        {"C(3,s)", multi_unit_equation_bound(3, o.s, fam)},
        {"C(5,s)", multi_unit_equation_bound(5, o.s, fam)},
        {"kappa", kappa(o.s, fam)},
        {"lambda", lambda(o.s, fam)},
        {"kappa*d+lambda", main_theorem_bound(o.d, o.s, fam)},
        {"four-point", four_point_bound(o.d, o.s, fam)},
        {"three-point", three_point_bound(o.s)},
        {"d+5", everywhere_good_bound(o.d)},
        {"d+1", baron_bound(o.d)},
        {"period (Morton-Silverman)", ms_period_bound(o.s - 1, 1)},
        {"orbit length (Canci)", canci_orbit_bound(o.s)},
    };
    if (o.json) {
        nlohmann::json j = {{"schema", schema_version}, {"d", o.d}, {"s", o.s},
                            {"family", to_string(fam)}, {"bounds", rows}};
        out << j.dump(2) << "\n";
        return exit_pass;
    }
    out << "d = " << o.d << ", s = " << o.s << ", family " << to_string(fam) << "\n";
    for (const auto& r : rows)
        out << std::left << std::setw(28) << r.name << std::setw(7) << kind_tag(r.value)
            << r.value.display() << "\n";
    return exit_pass;
}

inline int cmd_generate(const Options& o, std::ostream& out) {
    UniPoly f;
    if (o.generator == "dfixed") {
        f = dfixed_polynomial(o.d);
    } else if (o.generator == "period2") {
        std::vector<BigInt> ns;
        for (const auto& item : split_list(o.ns)) {
            Rational q = Rational::parse(item);
            if (!q.is_integer()) throw std::invalid_argument("period2: values must be integers");
            ns.push_back(q.numerator());
        }
        f = period2_polynomial(ns);
    } else if (o.generator == "baron-cycle") {
        auto ab = split_list(o.cycle);
        if (ab.size() != 2) throw std::invalid_argument("baron-cycle: --cycle takes two integers a,b");
        Rational a = Rational::parse(ab[0]), b = Rational::parse(ab[1]);
        if (!a.is_integer() || !b.is_integer())
            throw std::invalid_argument("baron-cycle: cycle points must be integers");
        f = baron_cycle_polynomial(a.numerator(), b.numerator());
    } else {
        throw std::invalid_argument("unknown family '" + o.generator + "'");
    }
    out << f.str() << "\n";
    return exit_pass;
}

inline ProjPoint require_point(const std::string& value, const char* flag) {
    if (value.empty()) throw std::invalid_argument(std::string("missing ") + flag);
    return parse_point(value);
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    RationalMap phi = parse_map(o.map);
    PlaceSet s = PlaceSet::parse(o.S);
    std::vector<VerificationReport> reports;
    const std::string& lemma = o.lemma;
    if (lemma == "distance") {
        reports.push_back(check_distance_preservation(phi, require_point(o.P, "--P"),
                                                      require_point(o.Q, "--Q"), s, o.period_cap));
    } else if (lemma == "ramified") {
        reports.push_back(check_ramified_integrality(phi, require_point(o.Q, "--Q"),
                                                     require_point(o.P, "--P"), s, o.period_cap));
    } else if (lemma == "tail") {
        reports.push_back(check_tail_integrality(phi, require_point(o.P, "--P"),
                                                 require_point(o.Q, "--Q"),
                                                 require_point(o.R, "--R"), s, o.period_cap));
    } else if (lemma == "condition-count") {
        auto a = parse_points(o.A);
        std::size_t count = condition_count(phi, a);
        VerificationReport r{"condition-count",
                             "phi = " + phi.str() + "; A = " + detail::points_str(a) + "; S = " + s.str(),
                             Status::pass, {}, {}};
        r.witnesses.push_back({"condition count", std::nullopt, std::to_string(count), ">= 3 triggers the three-point bound", a, true});
        if (count >= 3) {
            PlaceSet eff = s.merged_with(bad_primes(phi));
            auto per = periodic_points(phi, o.period_cap);
            BoundValue three = three_point_bound(static_cast<unsigned>(eff.s_value()));
            BigInt n(per.size());
            r.witnesses.push_back({"periodic count <= 3*7^(4s) + 3", std::nullopt, n.str(),
                                   three.display(), {}, three.admits(n)});
            if (eff.empty() && phi.degree() >= 2)
                r.witnesses.push_back({"periodic count <= 4 (everywhere good reduction)",
                                       std::nullopt, n.str(), "4", {}, n <= 4});
            r.notes = "periodic count taken with cap " + std::to_string(o.period_cap);
        }
        detail::settle(r);
        reports.push_back(std::move(r));
    } else if (lemma == "four-point") {
        auto a = parse_points(o.A);
        if (a.size() != 4) throw std::invalid_argument("four-point: --A takes exactly four points");
        PointQuad quad{a[0], a[1], a[2], a[3]};
        std::vector<ProjPoint> targets;
        if (!o.P.empty()) {
            targets.push_back(parse_point(o.P));
        } else {
            for (const auto& pp : periodic_points(phi, o.period_cap)) targets.push_back(pp.point);
        }
        VerificationReport r{"four-point-membership",
                             "phi = " + phi.str() + "; (A,C,E,G) = " + detail::points_str(a) +
                                 "; S = " + s.str(),
                             Status::pass, {}, {}};
        for (const auto& t : targets) {
            auto audit = four_point_audit(phi, quad, t, s);
            r.witnesses.push_back({"point lies in the four-point set", std::nullopt,
                                   std::to_string(audit.checks.size()) + " material checks",
                                   audit.member ? "all equal" : "mismatch", {t}, audit.member});
        }
        if (o.P.empty()) r.notes = "periodic points with cap " + std::to_string(o.period_cap);
        detail::settle(r);
        reports.push_back(std::move(r));
    } else if (lemma == "baron") {
        reports = verify_baron(phi, o.period_cap);
    } else if (lemma == "injectivity") {
        if (o.p == 0) throw std::invalid_argument("injectivity: missing --p");
        reports.push_back(check_injectivity_mod_p(phi, o.p, o.period_cap));
    } else {
        throw std::invalid_argument("unknown lemma '" + lemma + "'");
    }
    return emit_reports(out, reports, o.json);
}

inline int cmd_census(const Options& o, std::ostream& out) {
    if (o.p == 0) throw std::invalid_argument("census: missing --p");
    RationalMap phi = parse_map(o.map);
    CycleCensus c = fp_cycle_census(phi, o.p);
    if (o.json) {
        nlohmann::json j = {{"schema", schema_version}, {"map", phi.str()}, {"p", o.p}, {"census", c}};
        out << j.dump(2) << "\n";
        return exit_pass;
    }
    out << "map: " << phi.str() << "\np = " << o.p << ": " << c.periodic_count
        << " periodic residues; cycle lengths";
    for (auto len : c.cycle_lengths) out << " " << len;
    out << "\n";
    return exit_pass;
}

}  // namespace cli

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    cli::Options o;
    CLI::App app{"Exact arithmetic dynamics on the projective line over Q", "arithdyn"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Periodic points, reduction, bounds and checks for a map");
    analyze->add_option("map", o.map, "Map expression, e.g. \"x^2-1\" or \"F=X^2+Y^2; G=X*Y\"")->required();
    analyze->add_option("--period-cap", o.period_cap, "Largest period enumerated")->check(CLI::PositiveNumber);
    analyze->add_flag("--json", o.json, "Emit JSON");
    analyze->add_option("--family", o.family, "Unit-equation constants: evertse or bs-ess");

    auto* bounds = app.add_subcommand("bounds", "Tabulate the explicit bounds");
    bounds->add_option("--d", o.d, "Degree (>= 2)")->check(CLI::Range(2u, 1000000u));
    bounds->add_option("--s", o.s, "|S| including the archimedean place (>= 1)")->check(CLI::Range(1u, 100000u));
    bounds->add_option("--family", o.family, "evertse or bs-ess");
    bounds->add_flag("--json", o.json, "Emit JSON");

    auto* generate = app.add_subcommand("generate", "Print an example polynomial");
    generate->add_option("family", o.generator, "dfixed, period2 or baron-cycle")->required();
    generate->add_option("--d", o.d, "dfixed degree");
    generate->add_option("--ns", o.ns, "period2 values, comma separated");
    generate->add_option("--cycle", o.cycle, "baron-cycle 2-cycle a,b");

    auto* verify = app.add_subcommand("verify", "Run one lemma check");
    verify->add_option("map", o.map, "Map expression")->required();
    verify->add_option("--lemma", o.lemma,
                       "distance, ramified, tail, condition-count, four-point, baron, injectivity")
        ->required();
    verify->add_option("--P", o.P, "Point P");
    verify->add_option("--Q", o.Q, "Point Q");
    verify->add_option("--R", o.R, "Point R");
    verify->add_option("--A", o.A, "Comma-separated point list");
    verify->add_option("--S", o.S, "Comma-separated primes");
    verify->add_option("--p", o.p, "Prime for injectivity");
    verify->add_option("--period-cap", o.period_cap, "Largest period enumerated")->check(CLI::PositiveNumber);
    verify->add_flag("--json", o.json, "Emit JSON");

    auto* census = app.add_subcommand("census", "Cycle structure of the reduction mod p");
    census->add_option("map", o.map, "Map expression")->required();
    census->add_option("--p", o.p, "Good prime")->required();
    census->add_flag("--json", o.json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (analyze->parsed()) return cli::cmd_analyze(o, out);
        if (bounds->parsed()) return cli::cmd_bounds(o, out);
        if (generate->parsed()) return cli::cmd_generate(o, out);
        if (verify->parsed()) return cli::cmd_verify(o, out);
        if (census->parsed()) return cli::cmd_census(o, out);
    } catch (const budget_exceeded& e) {
        err << "budget exceeded: " << e.what() << " (unfactored residue " << e.residue().str() << ")\n";
        return exit_budget;
    } catch (const std::length_error& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace arithdyn
