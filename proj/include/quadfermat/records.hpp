#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadfermat/search.hpp"

namespace quadfermat::records {

// Line-delimited records, one JSON object per line. Keys keep insertion order
// so output is byte-stable. Elements use the canonical QuadElem rendering.
using Json = nlohmann::ordered_json;

inline Json int_json(const BigInt& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return Json(static_cast<std::int64_t>(n));
    return Json(n.str());
}

inline BigInt int_from_json(const Json& j) {
    if (j.is_string()) return parse_int(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}

inline Json equation_json(const EquationSpec& eq) {
    return Json{{"A", int_json(eq.A)}, {"B", int_json(eq.B)}, {"C", int_json(eq.C)}, {"p", eq.p}, {"d", eq.d}};
}

inline EquationSpec equation_from_json(const Json& j) {
    return make_equation(int_from_json(j.at("A")), int_from_json(j.at("B")), int_from_json(j.at("C")),
                         j.at("p").get<std::uint64_t>(), j.at("d").get<std::int64_t>());
}

inline Json point_json(const CurvePoint& pt) { return Json{{"X", to_string(pt.X)}, {"Y", to_string(pt.Y)}}; }

inline Json solution_json(const EquationSpec& eq, const SolutionTriple& s, const std::optional<PointClassification>& pc,
                          const std::optional<CurvePoint>& pt, std::uint64_t orbit_size = 1) {
    Json j{{"kind", "solution"},
           {"equation", equation_json(eq)},
           {"triple", {{"x", to_string(s.x)}, {"y", to_string(s.y)}, {"z", to_string(s.z)}}},
           {"class", to_string(s.cls)}};
    if (s.unit) j["unit"] = to_string(*s.unit);
    if (pt) j["point"] = point_json(*pt);
    j["prediction"] = pc ? to_string(pc->prediction) : "TRIVIAL";
    if (orbit_size != 1) j["orbit_size"] = orbit_size;
    return j;
}

inline Json point_record_json(const EquationSpec& eq, const CurvePoint& pt, const PointClassification& pc) {
    return Json{{"kind", "point"},
                {"equation", equation_json(eq)},
                {"point", point_json(pt)},
                {"class", to_string(pc.y_class)},
                {"prediction", to_string(pc.prediction)},
                {"coefficients_match", pc.coefficients_match}};
}

inline Json summary_json(const SearchReport& rep, bool include_timing) {
    Json j{{"kind", "summary"},
           {"equation", equation_json(rep.equation)},
           {"box", {{"height", rep.box.height}, {"scope", to_string(rep.box.scope)},
                    {"skip_trivial", rep.box.skip_trivial}, {"grouped", rep.box.group_orbits}}},
           {"box_size", rep.box_size},
           {"enumerated", rep.enumerated},
           {"raw_hits", rep.raw_hits},
           {"hits", rep.hits.size()},
           {"outside_q", count_outside_q(rep)},
           {"findings", rep.findings},
           {"verdict", to_string(rep.verdict)}};
    if (include_timing) j["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(rep.elapsed).count();
    return j;
}

/// One solution record per hit followed by the summary record. Wall time is
/// left out unless asked for, so equal searches give equal bytes.
inline std::string report_records(const SearchReport& rep, bool include_timing = false) {
    std::ostringstream os;
    for (const auto& h : rep.hits)
        os << solution_json(rep.equation, h.solution, h.point_class, h.point, h.orbit_size).dump() << '\n';
    os << summary_json(rep, include_timing).dump() << '\n';
    return os.str();
}

inline std::string csv_header() { return "A,B,C,p,d,x,y,z,class,X,Y,y_class,orbit_size"; }

/// One row per hit. Fields never contain commas, so no quoting is needed.
inline std::string report_csv(const SearchReport& rep) {
    std::ostringstream os;
    os << csv_header() << '\n';
    const auto& eq = rep.equation;
    for (const auto& h : rep.hits) {
        const auto& s = h.solution;
        os << eq.A << ',' << eq.B << ',' << eq.C << ',' << eq.p << ',' << eq.d << ',' << to_string(s.x) << ','
           << to_string(s.y) << ',' << to_string(s.z) << ',' << to_string(s.cls) << ','
           << (h.point ? to_string(h.point->X) : "") << ',' << (h.point ? to_string(h.point->Y) : "") << ','
           << (h.point ? to_string(h.point->y_class) : "") << ',' << h.orbit_size << '\n';
    }
    return os.str();
}

/// A solution record read back: the triple is re-validated and re-classified
/// against the equation, so a record that lies does not survive parsing.
struct ParsedSolution {
    EquationSpec equation;
    SolutionTriple solution;
    std::string recorded_class;
    std::uint64_t orbit_size = 1;
};

inline ParsedSolution parse_solution_record(const std::string& line) {
    try {
        const Json j = Json::parse(line);
        if (j.at("kind") != "solution") throw ValidationError("not a solution record");
        const EquationSpec eq = equation_from_json(j.at("equation"));
        const auto& t = j.at("triple");
        auto elem = [&](const char* key) { return parse_quad(t.at(key).get<std::string>(), eq.d); };
        return ParsedSolution{eq, classify_solution(eq, elem("x"), elem("y"), elem("z")),
                              j.at("class").get<std::string>(), j.value("orbit_size", std::uint64_t{1})};
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("malformed record: ") + e.what());
    }
}

}  // namespace quadfermat::records
