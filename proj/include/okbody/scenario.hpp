#pragma once

// Scenario files: structured JSON with exact-rational strings describing a
// model, a flag, or a surface lattice, plus the command to run.  Validation
// errors carry the offending field path.

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "okbody/errors.hpp"
#include "okbody/sections.hpp"
#include "okbody/surface.hpp"
#include "okbody/valuation.hpp"

namespace okbody {

struct SurfaceScenario {
    SurfaceModel model;
    DivisorClass divisor;
    std::optional<DivisorClass> flag_class;
    std::map<std::size_t, int> ord_at_point;
    bool has_ord = false;
};

struct Scenario {
    std::string command; // may be empty; must agree with the CLI subcommand
    std::optional<SectionModel> model;
    std::optional<FlagChart> flag;
    std::optional<SurfaceScenario> surface;
    int max_degree = 12;
    PointMode point_mode = PointMode::generic;
    std::string out;  // optional output path from options.out
    std::string raw;  // original bytes, hashed into the result document
};

namespace scenario_detail {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw validation_error("field " + path + ": " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) fail(path + "." + key, "missing");
    return j.at(key);
}

inline std::string str_at(const json& j, const std::string& key, const std::string& path) {
    const json& v = field(j, key, path);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

inline int int_at(const json& j, const std::string& key, const std::string& path) {
    const json& v = field(j, key, path);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<int>();
}

inline Q rational(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Q(v.get<long long>());
    if (!v.is_string()) fail(path, "expected a rational string \"p/q\"");
    try {
        return q_parse(v.get<std::string>());
    } catch (const parse_error& e) {
        fail(path, e.what());
    }
}

inline std::vector<Q> rational_row(const json& v, const std::string& path) {
    if (!v.is_array()) fail(path, "expected an array of rationals");
    std::vector<Q> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(rational(v.at(i), path + "[" + std::to_string(i) + "]"));
    return out;
}

inline SectionModel parse_model(const json& j, const std::string& path) {
    std::string variant = str_at(j, "variant", path);
    if (variant == "projective_twist")
        return SectionModel{ProjectiveTwist{int_at(j, "n", path), int_at(j, "d", path)}};
    if (variant == "veronese_surface") return SectionModel{VeroneseSurface{}};
    if (variant == "curve_divisor") return SectionModel{CurveDivisor{int_at(j, "c", path)}};
    if (variant == "toric_polytope") {
        const json& vs = field(j, "vertices", path);
        if (!vs.is_array() || vs.empty()) fail(path + ".vertices", "expected a nonempty array");
        std::vector<QVector> pts;
        for (std::size_t i = 0; i < vs.size(); ++i)
            pts.emplace_back(rational_row(vs.at(i), path + ".vertices[" + std::to_string(i) + "]"));
        return SectionModel{ToricPolytopeModel{QPolytope::hull(pts)}};
    }
    fail(path + ".variant", "unknown model variant \"" + variant + "\"");
}

inline MPoly poly(const json& v, const std::vector<std::string>& vars, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a polynomial string");
    try {
        return MPoly::parse(v.get<std::string>(), vars);
    } catch (const parse_error& e) {
        fail(path, e.what());
    }
}

inline std::size_t var_index(const std::string& name, const std::vector<std::string>& vars,
                             const std::string& path) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    fail(path, "unknown variable \"" + name + "\"");
}

inline FlagChart parse_flag(const json& j, const SectionModel& model, const std::string& path) {
    std::string kind = str_at(j, "kind", path);
    if (kind == "general") return general_flag(model);
    if (kind == "coordinate") return CoordinateFlag{model_dim(model)};
    if (kind == "toric") {
        const json& vj = field(j, "vertex", path);
        std::vector<Int> vertex;
        for (const auto& x : rational_row(vj, path + ".vertex")) {
            if (q_den(x) != 1) fail(path + ".vertex", "expected lattice coordinates");
            vertex.push_back(q_num(x));
        }
        const json& bj = field(j, "basis", path);
        if (!bj.is_array()) fail(path + ".basis", "expected an array of rows");
        std::vector<std::vector<Int>> basis;
        for (std::size_t i = 0; i < bj.size(); ++i) {
            std::vector<Int> row;
            for (const auto& x : rational_row(bj.at(i), path + ".basis[" + std::to_string(i) + "]")) {
                if (q_den(x) != 1) fail(path + ".basis", "expected integer entries");
                row.push_back(q_num(x));
            }
            basis.push_back(std::move(row));
        }
        return ToricFlag::make(std::move(vertex), std::move(basis));
    }
    auto vars = model_vars(model);
    if (kind == "surface_curve") {
        MPoly divisor = poly(field(j, "divisor", path), vars, path + ".divisor");
        const json& pj = field(j, "param", path);
        if (!pj.is_array()) fail(path + ".param", "expected an array of polynomials in t");
        std::vector<MPoly> comps;
        for (std::size_t i = 0; i < pj.size(); ++i)
            comps.push_back(poly(pj.at(i), {"t"}, path + ".param[" + std::to_string(i) + "]"));
        Q t0 = j.contains("base_param") ? rational(j.at("base_param"), path + ".base_param") : Q(0);
        return SurfaceCurveFlag::make(std::move(divisor), CurveParam::make(std::move(comps), t0));
    }
    if (kind == "substitution") {
        std::size_t chart = var_index(str_at(j, "chart_var", path), vars, path + ".chart_var");
        std::size_t order = var_index(str_at(j, "order_var", path), vars, path + ".order_var");
        const json& sj = field(j, "steps", path);
        if (!sj.is_array()) fail(path + ".steps", "expected an array of steps");
        std::vector<SubstitutionStep> steps;
        for (std::size_t i = 0; i < sj.size(); ++i) {
            std::string sp = path + ".steps[" + std::to_string(i) + "]";
            steps.push_back(SubstitutionStep{
                var_index(str_at(sj.at(i), "var", sp), vars, sp + ".var"),
                poly(field(sj.at(i), "rhs", sp), vars, sp + ".rhs"),
                poly(field(sj.at(i), "divisor", sp), vars, sp + ".divisor")});
        }
        return SubstitutionFlag::make(chart, std::move(steps), order);
    }
    fail(path + ".kind", "unknown flag kind \"" + kind + "\"");
}

inline SurfaceScenario parse_surface(const json& j, const std::string& path) {
    const json& cj = field(j, "classes", path);
    if (!cj.is_array() || cj.empty()) fail(path + ".classes", "expected a nonempty array");
    std::vector<std::string> classes;
    for (const auto& c : cj) classes.push_back(c.get<std::string>());
    const json& gj = field(j, "gram", path);
    if (!gj.is_array() || gj.size() != classes.size())
        fail(path + ".gram", "expected one row per class");
    QMatrix gram;
    for (std::size_t i = 0; i < gj.size(); ++i) {
        auto row = rational_row(gj.at(i), path + ".gram[" + std::to_string(i) + "]");
        if (row.size() != classes.size())
            fail(path + ".gram[" + std::to_string(i) + "]", "row length mismatch");
        gram.push_back(std::move(row));
    }
    const json& uj = field(j, "curves", path);
    if (!uj.is_array()) fail(path + ".curves", "expected an array");
    std::vector<std::string> curve_names;
    std::vector<DivisorClass> curves;
    for (std::size_t i = 0; i < uj.size(); ++i) {
        std::string cp = path + ".curves[" + std::to_string(i) + "]";
        curve_names.push_back(str_at(uj.at(i), "name", cp));
        curves.push_back(DivisorClass{rational_row(field(uj.at(i), "class", cp), cp + ".class")});
    }
    SurfaceScenario s{SurfaceModel::make(classes, gram, curve_names, curves),
                      DivisorClass{rational_row(field(j, "divisor", path), path + ".divisor")},
                      std::nullopt,
                      {},
                      false};
    if (j.contains("flag_class"))
        s.flag_class = DivisorClass{rational_row(j.at("flag_class"), path + ".flag_class")};
    if (j.contains("ord_at_point")) {
        const json& oj = j.at("ord_at_point");
        if (!oj.is_object()) fail(path + ".ord_at_point", "expected an object");
        for (auto it = oj.begin(); it != oj.end(); ++it) {
            bool found = false;
            for (std::size_t c = 0; c < curve_names.size(); ++c) {
                if (curve_names[c] == it.key()) {
                    if (!it.value().is_number_integer() || it.value().get<int>() < 0)
                        fail(path + ".ord_at_point." + it.key(), "expected a nonnegative integer");
                    s.ord_at_point[c] = it.value().get<int>();
                    found = true;
                }
            }
            if (!found) fail(path + ".ord_at_point." + it.key(), "unknown curve name");
        }
        s.has_ord = true;
    }
    return s;
}

} // namespace scenario_detail

inline Scenario parse_scenario(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw validation_error("field <root>: expected a JSON object");
    Scenario s;
    s.raw = text;
    if (j.contains("command")) s.command = j.at("command").get<std::string>();
    if (j.contains("model")) s.model = scenario_detail::parse_model(j.at("model"), "model");
    if (j.contains("flag")) {
        if (!s.model) scenario_detail::fail("flag", "flag given without a model");
        s.flag = scenario_detail::parse_flag(j.at("flag"), *s.model, "flag");
    }
    if (s.model && !s.flag && !std::holds_alternative<ToricPolytopeModel>(*s.model))
        s.flag = general_flag(*s.model);
    if (j.contains("surface")) s.surface = scenario_detail::parse_surface(j.at("surface"), "surface");
    if (j.contains("options")) {
        const auto& o = j.at("options");
        if (o.contains("max_degree")) {
            s.max_degree = scenario_detail::int_at(o, "max_degree", "options");
            if (s.max_degree < 2) scenario_detail::fail("options.max_degree", "must be at least 2");
        }
        if (o.contains("point_mode")) {
            std::string pm = scenario_detail::str_at(o, "point_mode", "options");
            if (pm == "generic")
                s.point_mode = PointMode::generic;
            else if (pm == "explicit")
                s.point_mode = PointMode::explicit_ord;
            else
                scenario_detail::fail("options.point_mode", "expected \"generic\" or \"explicit\"");
        }
        if (o.contains("out")) s.out = scenario_detail::str_at(o, "out", "options");
    }
    if (!s.model && !s.surface)
        throw validation_error("field <root>: scenario needs a \"model\" or a \"surface\"");
    return s;
}

} // namespace okbody
