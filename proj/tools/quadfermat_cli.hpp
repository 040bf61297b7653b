#pragma once

// Command-line front end. `run` is kept separate from main() so tests can
// drive it with captured streams.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "quadfermat/quadfermat.hpp"

namespace quadfermat::cli {

enum ExitCode : int { kOk = 0, kToolError = 1, kInconsistent = 2 };

enum class Format { Text, Records, Csv };

struct CliConfig {
    std::string command;
    std::string A = "1", B = "1", C = "1";
    std::uint64_t p = 5;
    std::int64_t d = 2;
    std::uint64_t height = 2;
    std::string scope = "full-k";
    std::string format = "text";
    std::uint64_t seed = 1;
    std::uint64_t threads = default_threads();
    // command specific
    std::string x, y, z, X, Y, e;
    unsigned n_max = 1;
    unsigned unit_range = 2;
    bool skip_trivial = false;
    bool raw = false;
    bool timing = false;
    std::uint64_t samples = 200;
    std::uint64_t bound = 6;
};

namespace detail {

inline Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "records") return Format::Records;
    if (s == "csv") return Format::Csv;
    throw ValidationError("unknown format '" + s + "' (expected text, records or csv)");
}

inline EquationSpec equation(const CliConfig& c) {
    return make_equation(parse_int(c.A), parse_int(c.B), parse_int(c.C), c.p, c.d);
}

inline QuadElem elem(const std::string& text, const char* name, std::int64_t d) {
    if (text.empty()) throw ValidationError(std::string("missing --") + name);
    return parse_quad(text, d);
}

inline void no_csv(Format f, const std::string& cmd) {
    if (f == Format::Csv) throw ValidationError("--format csv is only available for search and family, not " + cmd);
}

inline int cmd_power_test(const CliConfig& c, Format f, std::ostream& out) {
    no_csv(f, "power-test");
    const QuadElem e = elem(c.e, "e", c.d);
    const PowerParts parts = power_parts(e.re(), e.im(), c.d, c.p);
    const VanishVerdict re = vanish_decide(Component::Re, e.re(), e.im(), c.d, c.p);
    const VanishVerdict im = vanish_decide(Component::Im, e.re(), e.im(), c.d, c.p);
    const PowerClass cls = rational_power_test(e, c.p);
    const bool agree = re.vanishes == (parts.re_part == 0) && im.vanishes == (parts.im_part == 0);
    auto shape = [](const VanishVerdict& v) { return v.forced_shape ? to_string(*v.forced_shape) : std::string(); };
    if (f == Format::Records) {
        records::Json j{{"kind", "power"},
                        {"e", to_string(e)},
                        {"p", c.p},
                        {"re", to_string(parts.re_part)},
                        {"im", to_string(parts.im_part)},
                        {"re_vanishes", re.vanishes},
                        {"re_shape", shape(re)},
                        {"im_vanishes", im.vanishes},
                        {"im_shape", shape(im)},
                        {"class", to_string(cls)},
                        {"decision_matches_expansion", agree}};
        out << j.dump() << '\n';
    } else {
        out << "e^p = " << to_string(QuadElem(parts.re_part, parts.im_part, c.d)) << '\n'
            << "RE vanishes: " << (re.vanishes ? "yes" : "no") << (re.forced_shape ? " (" + shape(re) + ")" : "") << '\n'
            << "IM vanishes: " << (im.vanishes ? "yes" : "no") << (im.forced_shape ? " (" + shape(im) + ")" : "") << '\n'
            << "class: " << to_string(cls) << '\n';
    }
    return agree ? kOk : kInconsistent;
}

inline int cmd_classify_equation(const CliConfig& c, Format f, std::ostream& out) {
    no_csv(f, "classify-equation");
    const EquationSpec eq = equation(c);
    const QuadElem alpha = QuadElem::rational(eq.alpha, eq.d);
    if (f == Format::Records) {
        records::Json j{{"kind", "equation"},
                        {"equation", records::equation_json(eq)},
                        {"alpha", to_string(eq.alpha)},
                        {"pairwise_coprime", eq.pairwise_coprime},
                        {"bc_unit", eq.bc_unit()},
                        {"ab_unit", eq.ab_unit()},
                        {"solutions_outside_q_possible", eq.bc_unit()},
                        {"warnings", eq.warnings}};
        out << j.dump() << '\n';
        return kOk;
    }
    out << "equation: " << equation_string(eq) << '\n'
        << "curve: Y^2 = X^" << eq.p << " + " << to_string(alpha) << '\n'
        << "pairwise coprime: " << (eq.pairwise_coprime ? "yes" : "no") << '\n'
        << "BC = +-1: " << (eq.bc_unit() ? "yes" : "no") << '\n'
        << "AB = +-1: " << (eq.ab_unit() ? "yes" : "no") << '\n'
        << "solutions outside Q possible: " << (eq.bc_unit() ? "yes (conjugate-unit shape)" : "no") << '\n';
    for (const auto& w : eq.warnings) out << "warning: " << w << '\n';
    return kOk;
}

inline bool point_consistent(const PointClassification& pc) {
    return pc.coefficients_match && pc.x_rational == (pc.y_class != YClass::Mixed);
}

inline int cmd_map_solution(const CliConfig& c, Format f, std::ostream& out) {
    no_csv(f, "map-solution");
    const EquationSpec eq = equation(c);
    const QuadElem x = elem(c.x, "x", eq.d), y = elem(c.y, "y", eq.d), z = elem(c.z, "z", eq.d);
    const SolutionTriple s = classify_solution(eq, x, y, z);
    const CurvePoint pt = forward_map(eq, x, y, z);
    const PointClassification pc = classify_point(eq, pt);
    const bool consistent = !is_nontrivial(x, y, z) || point_consistent(pc);
    if (f == Format::Records) {
        out << records::solution_json(eq, s, pc, pt).dump() << '\n';
    } else {
        out << "X = " << to_string(pt.X) << '\n'
            << "Y = " << to_string(pt.Y) << '\n'
            << "on curve: " << (on_curve(eq, pt) ? "yes" : "no") << '\n'
            << "class: " << to_string(pc.y_class) << '\n'
            << "prediction: " << to_string(pc.prediction) << '\n'
            << "solution class: " << to_string(s.cls) << '\n';
        if (s.unit) out << "unit: " << to_string(*s.unit) << '\n';
    }
    return consistent ? kOk : kInconsistent;
}

inline int cmd_classify_point(const CliConfig& c, Format f, std::ostream& out) {
    no_csv(f, "classify-point");
    const EquationSpec eq = equation(c);
    const CurvePoint pt = make_point(elem(c.X, "X", eq.d), elem(c.Y, "Y", eq.d));
    const PointClassification pc = classify_point(eq, pt);
    if (f == Format::Records) {
        out << records::point_record_json(eq, pt, pc).dump() << '\n';
    } else {
        out << "class: " << to_string(pc.y_class) << '\n'
            << "prediction: " << to_string(pc.prediction) << '\n'
            << "X rational: " << (pc.x_rational ? "yes" : "no") << '\n'
            << "coefficients match prediction: " << (pc.coefficients_match ? "yes" : "no") << '\n';
    }
    return pc.x_rational == (pc.y_class != YClass::Mixed) ? kOk : kInconsistent;
}

inline int cmd_search(const CliConfig& c, Format f, std::ostream& out, std::ostream& err) {
    const EquationSpec eq = equation(c);
    const SearchBox box{c.height, parse_scope(c.scope), c.skip_trivial, !c.raw};
    const SearchReport rep = search(eq, box, c.threads);
    switch (f) {
        case Format::Records: out << records::report_records(rep, c.timing); break;
        case Format::Csv: out << records::report_csv(rep); break;
        case Format::Text:
            out << "equation: " << equation_string(eq) << '\n'
                << "box: height " << box.height << ", scope " << to_string(box.scope) << ", " << rep.box_size
                << " elements per component\n"
                << "enumerated: " << rep.enumerated << '\n'
                << "hits: " << rep.hits.size() << " (raw " << rep.raw_hits << ")\n"
                << "hits outside Q: " << count_outside_q(rep) << '\n';
            for (const auto& h : rep.hits) {
                out << "  (" << to_string(h.solution.x) << ", " << to_string(h.solution.y) << ", "
                    << to_string(h.solution.z) << ") " << to_string(h.solution.cls);
                if (h.point) out << " Y=" << to_string(h.point->Y) << ' ' << to_string(h.point->y_class);
                if (h.orbit_size != 1) out << " orbit " << h.orbit_size;
                out << '\n';
            }
            for (const auto& fnd : rep.findings) out << "finding: " << fnd << '\n';
            out << "verdict: " << to_string(rep.verdict) << '\n';
            if (c.timing) out << "elapsed_ms: " << std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count() << '\n';
            break;
    }
    if (!c.timing) err << "elapsed_ms: " << std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count() << '\n';
    return rep.verdict == Verdict::Consistent ? kOk : kInconsistent;
}

inline int cmd_family(const CliConfig& c, Format f, std::ostream& out) {
    const auto fam = gen_conjugate_family(parse_int(c.B), parse_int(c.C), c.p, c.d, c.height, c.unit_range);
    bool consistent = verify_mn_theorem(fam);
    if (f == Format::Csv) out << records::csv_header() << '\n';
    for (const auto& [eq, s] : fam) {
        const CurvePoint pt = forward_map(eq, s.x, s.y, s.z);
        const PointClassification pc = classify_point(eq, pt);
        consistent = consistent && point_consistent(pc) && mn_identities_hold(eq, s.x, s.y, s.z);
        switch (f) {
            case Format::Records: out << records::solution_json(eq, s, pc, pt).dump() << '\n'; break;
            case Format::Csv:
                out << eq.A << ',' << eq.B << ',' << eq.C << ',' << eq.p << ',' << eq.d << ',' << to_string(s.x) << ','
                    << to_string(s.y) << ',' << to_string(s.z) << ',' << to_string(s.cls) << ',' << to_string(pt.X)
                    << ',' << to_string(pt.Y) << ',' << to_string(pt.y_class) << ",1\n";
                break;
            case Format::Text:
                out << "A=" << eq.A << "  (1, " << to_string(s.y) << ", " << to_string(s.z) << ")  Y=" << to_string(pt.Y)
                    << ' ' << to_string(pt.y_class) << '\n';
                break;
        }
    }
    if (f == Format::Text) out << fam.size() << " equations; mn = 0 for all: " << (consistent ? "yes" : "no") << '\n';
    return consistent ? kOk : kInconsistent;
}

inline int cmd_units(const CliConfig& c, Format f, std::ostream& out) {
    no_csv(f, "units");
    const RingDesc ring = make_ring(c.d);
    const auto us = units(c.d, c.n_max);
    if (f == Format::Records) {
        records::Json list = records::Json::array();
        for (const auto& u : us) list.push_back({{"u", records::int_json(u.u)}, {"v", records::int_json(u.v)},
                                                 {"value", to_string(u.to_quad())}, {"norm", records::int_json(norm(u))}});
        out << records::Json{{"kind", "units"}, {"d", c.d}, {"omega", omega_header(ring)}, {"units", list}}.dump()
            << '\n';
        return kOk;
    }
    out << omega_header(ring) << '\n';
    for (const auto& u : us) out << to_string(u) << "    = " << to_string(u.to_quad()) << "    norm " << norm(u) << '\n';
    return kOk;
}

// Seeded spot-checks of the main statements; exit 2 on any disagreement.
inline int cmd_verify(const CliConfig& c, Format f, std::ostream& out) {
    no_csv(f, "verify");
    std::mt19937_64 rng(c.seed);
    std::vector<std::pair<std::string, bool>> results;

    {  // vanishing conditions on a small exhaustive grid
        bool ok = true;
        const auto b = std::int64_t(c.bound);
        for (std::int64_t d = -30; d <= 30 && ok; ++d) {
            if (d == 0 || d == 1 || !is_squarefree(d)) continue;
            for (std::uint64_t p : {2u, 3u, 5u, 7u})
                for (std::int64_t x = -b; x <= b; ++x)
                    for (std::int64_t y = -b; y <= b; ++y) {
                        const auto parts = power_parts(x, y, d, p);
                        ok = ok && vanish_decide(Component::Re, x, y, d, p).vanishes == (parts.re_part == 0) &&
                             vanish_decide(Component::Im, x, y, d, p).vanishes == (parts.im_part == 0);
                    }
        }
        results.emplace_back("vanishing conditions", ok);
    }
    {  // forward-map identity: A, B random, C solved in K so that (x, y, z) is a solution
        bool ok = true;
        std::uniform_int_distribution<int> coord(-10, 10), pos(1, 10);
        const std::int64_t ds[] = {-5, -3, -1, 2, 3, 5, 7};
        for (std::uint64_t i = 0; i < c.samples && ok; ++i) {
            const std::int64_t d = ds[rng() % std::size(ds)];
            const std::uint64_t p = std::array<std::uint64_t, 3>{5, 7, 11}[rng() % 3];
            auto rnd = [&] { return QuadElem(BigRational(coord(rng), pos(rng)), BigRational(coord(rng), pos(rng)), d); };
            const QuadElem x = rnd(), y = rnd(), z = rnd();
            if (x.is_zero() || z.is_zero()) continue;
            const QuadElem a = QuadElem::rational(BigRational(coord(rng), pos(rng)), d);
            const QuadElem b = QuadElem::rational(BigRational(coord(rng), pos(rng)), d);
            const QuadElem cc = -(a * pow(x, p) + b * pow(y, p)) / pow(z, p);
            const CurvePoint pt = forward_map_raw(b, cc, p, x, y, z);
            ok = pt.Y * pt.Y - pow(pt.X, p) == a * a * pow(b * cc, p - 1) / QuadElem::rational(4, d);
        }
        results.emplace_back("forward-map identity", ok);
    }
    {  // conjugate-unit families: mn = 0
        bool ok = true;
        for (std::int64_t d : {-1, 2, 5}) {
            const auto fam = gen_conjugate_family(1, 1, c.p, d, 2, 1);
            ok = ok && verify_mn_theorem(fam);
        }
        results.emplace_back("mn = 0 on conjugate families", ok);
    }
    results.emplace_back("trivial solutions", verify_trivial_lemma(make_equation(1, -1, 5, c.p, c.d), 1));
    {
        const SearchReport rep = search(make_equation(1, 2, 3, c.p, c.d), SearchBox{1, Scope::FullK, true, true}, c.threads);
        results.emplace_back("no solutions outside Q for BC != +-1", rep.verdict == Verdict::Consistent);
    }

    bool all = true;
    for (const auto& [name, ok] : results) {
        all = all && ok;
        if (f == Format::Records)
            out << records::Json{{"kind", "check"}, {"name", name}, {"pass", ok}}.dump() << '\n';
        else
            out << (ok ? "PASS " : "FAIL ") << name << '\n';
    }
    return all ? kOk : kInconsistent;
}

}  // namespace detail

/// Runs one invocation. Exit codes: 0 success, 1 tool/validation error,
/// 2 mathematical inconsistency found by a verification.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for A x^p + B y^p + C z^p = 0 over quadratic fields", "quadfermat"};
    app.require_subcommand(1, 1);
    CliConfig cfg;

    auto add_equation = [&](CLI::App* sub) {
        sub->add_option("-A", cfg.A, "coefficient A")->required();
        sub->add_option("-B", cfg.B, "coefficient B")->required();
        sub->add_option("-C", cfg.C, "coefficient C")->required();
    };
    auto add_field = [&](CLI::App* sub, bool with_p) {
        if (with_p) sub->add_option("-p", cfg.p, "prime exponent")->required();
        sub->add_option("-d", cfg.d, "squarefree d of Q(sqrt(d))")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "text | records | csv")->capture_default_str();
    };

    auto* power = app.add_subcommand("power-test", "Re/Im of e^p and the vanishing decision");
    power->add_option("--e", cfg.e, "element, e.g. \"1 + sqrt(-3)\"")->required();
    add_field(power, true);
    add_format(power);

    auto* ceq = app.add_subcommand("classify-equation", "validate (A,B,C,p,d) and show the curve");
    add_equation(ceq);
    add_field(ceq, true);
    add_format(ceq);

    auto* msol = app.add_subcommand("map-solution", "map a solution to its curve point");
    add_equation(msol);
    add_field(msol, true);
    msol->add_option("--x", cfg.x)->required();
    msol->add_option("--y", cfg.y)->required();
    msol->add_option("--z", cfg.z)->required();
    add_format(msol);

    auto* cpt = app.add_subcommand("classify-point", "classify a point of Y^2 = X^p + alpha");
    add_equation(cpt);
    add_field(cpt, true);
    cpt->add_option("--X", cfg.X)->required();
    cpt->add_option("--Y", cfg.Y)->required();
    add_format(cpt);

    auto* srch = app.add_subcommand("search", "exhaustive bounded-height solution search");
    add_equation(srch);
    add_field(srch, true);
    srch->add_option("--height", cfg.height)->capture_default_str();
    srch->add_option("--scope", cfg.scope, "rational | ok | full-k")->capture_default_str();
    srch->add_flag("--skip-trivial", cfg.skip_trivial, "drop solutions with xyz = 0");
    srch->add_flag("--raw", cfg.raw, "do not group hits by scaling orbit");
    srch->add_flag("--timing", cfg.timing, "include wall time in the report");
    srch->add_option("--threads", cfg.threads)->envname("QUADFERMAT_THREADS")->check(CLI::PositiveNumber);
    add_format(srch);

    auto* fam = app.add_subcommand("family", "conjugate-unit solution families for BC = +-1");
    fam->add_option("-B", cfg.B)->required();
    fam->add_option("-C", cfg.C)->required();
    add_field(fam, true);
    fam->add_option("--height", cfg.height)->capture_default_str();
    fam->add_option("--unit-range", cfg.unit_range, "max |k| of eps^k for d > 0")->capture_default_str();
    add_format(fam);

    auto* un = app.add_subcommand("units", "unit group of O_K");
    add_field(un, false);
    un->add_option("--n-max", cfg.n_max)->capture_default_str();
    add_format(un);

    auto* ver = app.add_subcommand("verify", "seeded spot-checks of the main identities");
    ver->add_option("-p", cfg.p)->capture_default_str();
    ver->add_option("-d", cfg.d)->capture_default_str();
    ver->add_option("--seed", cfg.seed)->capture_default_str();
    ver->add_option("--samples", cfg.samples)->capture_default_str();
    ver->add_option("--bound", cfg.bound)->capture_default_str();
    ver->add_option("--threads", cfg.threads)->envname("QUADFERMAT_THREADS")->check(CLI::PositiveNumber);
    add_format(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kToolError;
    }

    try {
        const Format f = detail::parse_format(cfg.format);
        if (power->parsed()) return detail::cmd_power_test(cfg, f, out);
        if (ceq->parsed()) return detail::cmd_classify_equation(cfg, f, out);
        if (msol->parsed()) return detail::cmd_map_solution(cfg, f, out);
        if (cpt->parsed()) return detail::cmd_classify_point(cfg, f, out);
        if (srch->parsed()) return detail::cmd_search(cfg, f, out, err);
        if (fam->parsed()) return detail::cmd_family(cfg, f, out);
        if (un->parsed()) return detail::cmd_units(cfg, f, out);
        if (ver->parsed()) return detail::cmd_verify(cfg, f, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kToolError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kToolError;
    }
    return kToolError;
}

}  // namespace quadfermat::cli
