#pragma once

// Scenario runner and verification suite.  Result documents are JSON with
// exact-rational strings and a provenance block; identical scenario bytes
// reproduce identical documents.

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "okbody/errors.hpp"
#include "okbody/scenario.hpp"
#include "okbody/semigroup.hpp"
#include "okbody/surface.hpp"
#include "okbody/version.hpp"

namespace okbody {

namespace harness_detail {

using nlohmann::json;

inline json vec_json(const QVector& v) {
    json a = json::array();
    for (const auto& c : v.coords) a.push_back(q_str(c));
    return a;
}

inline json polytope_json(const QPolytope& p) {
    json out;
    out["affine_dim"] = p.affine_dim();
    json verts = json::array();
    for (const auto& v : p.vertices()) verts.push_back(vec_json(v));
    out["vertices"] = verts;
    json hs = json::array();
    for (const auto& h : p.halfspaces()) {
        json e;
        e["normal"] = vec_json(h.normal);
        e["offset"] = q_str(h.offset);
        hs.push_back(e);
    }
    out["halfspaces"] = hs;
    out["volume"] = q_str(p.volume());
    return out;
}

inline json linfn_json(const LinFn& f) {
    json out;
    out["c0"] = q_str(f.c0);
    out["c1"] = q_str(f.c1);
    return out;
}

inline json divisor_json(const DivisorClass& d) {
    json a = json::array();
    for (const auto& c : d.coeffs) a.push_back(q_str(c));
    return a;
}

} // namespace harness_detail

inline nlohmann::json run_command(const Scenario& s, const std::string& command);

// Runs the scenario's command and wraps the result with provenance.
inline nlohmann::json run(const std::string& scenario_text, const std::string& command = "") {
    Scenario s = parse_scenario(scenario_text);
    std::string cmd = command.empty() ? s.command : command;
    if (cmd.empty()) throw validation_error("field command: missing");
    // plot renders a body scenario, so the pair is compatible.
    bool compatible = s.command == command || (command == "plot" && s.command == "body");
    if (!s.command.empty() && !command.empty() && !compatible)
        throw validation_error("field command: scenario says \"" + s.command +
                               "\" but the CLI invoked \"" + command + "\"");
    nlohmann::json doc;
    doc["command"] = cmd;
    doc["library_version"] = library_version;
    doc["scenario_hash"] = "fnv1a64:" + fnv1a64_hex(scenario_text);
    doc["result"] = run_command(s, cmd);
    return doc;
}

inline nlohmann::json run_command(const Scenario& s, const std::string& command) {
    using nlohmann::json;
    using namespace harness_detail;

    auto surface_body = [&](const SurfaceScenario& ss) {
        if (!ss.flag_class) throw validation_error("field surface.flag_class: missing");
        return okounkov_body_surface(ss.model, ss.divisor, *ss.flag_class, s.point_mode,
                                     ss.has_ord ? &ss.ord_at_point : nullptr);
    };

    if (command == "body" || command == "plot") {
        json out;
        if (s.surface) {
            auto body = surface_body(*s.surface);
            out = polytope_json(body.as_polytope);
            out["a"] = q_str(body.a);
            out["mu"] = q_str(body.mu);
            json knots = json::array();
            for (const auto& k : body.knots) knots.push_back(q_str(k));
            out["knots"] = knots;
            json alpha = json::array(), beta = json::array();
            for (const auto& f : body.alpha) alpha.push_back(linfn_json(f));
            for (const auto& f : body.beta) beta.push_back(linfn_json(f));
            out["alpha"] = alpha;
            out["beta"] = beta;
        } else {
            auto sb = stabilized_body(*s.model, *s.flag, s.max_degree);
            out = polytope_json(sb.body);
            out["stabilized"] = sb.stabilized;
            out["stabilized_at"] = sb.at;
            out["max_degree"] = s.max_degree;
        }
        return out;
    }
    if (command == "zariski") {
        if (!s.surface) throw validation_error("field surface: required by command zariski");
        auto dec = zariski(s.surface->model, s.surface->divisor);
        json out;
        out["P"] = divisor_json(dec.P);
        out["N"] = divisor_json(dec.N);
        json coeffs = json::array();
        for (const auto& [c, a] : dec.coefficients) {
            json e;
            e["curve"] = s.surface->model.curve_names[c];
            e["coeff"] = q_str(a);
            coeffs.push_back(e);
        }
        out["N_coefficients"] = coeffs;
        out["P_self_intersection"] = q_str(intersect(s.surface->model, dec.P, dec.P));
        return out;
    }
    if (command == "scan") {
        if (!s.surface) throw validation_error("field surface: required by command scan");
        if (!s.surface->flag_class) throw validation_error("field surface.flag_class: missing");
        auto scan = chamber_scan(s.surface->model, s.surface->divisor, *s.surface->flag_class);
        json out;
        json bps = json::array();
        for (const auto& t : scan.breakpoints) bps.push_back(q_str(t));
        out["breakpoints"] = bps;
        out["mu"] = q_str(scan.mu);
        json chambers = json::array();
        for (const auto& ch : scan.chambers) {
            json e;
            e["t_begin"] = q_str(ch.t_begin);
            e["t_end"] = q_str(ch.t_end);
            json support = json::array();
            json coeff = json::array();
            for (std::size_t i = 0; i < ch.support.size(); ++i) {
                support.push_back(s.surface->model.curve_names[ch.support[i]]);
                json c = linfn_json(ch.coefficients[i]);
                c["curve"] = s.surface->model.curve_names[ch.support[i]];
                coeff.push_back(c);
            }
            e["support"] = support;
            e["coefficients"] = coeff;
            e["beta"] = linfn_json(ch.beta);
            chambers.push_back(e);
        }
        out["chambers"] = chambers;
        return out;
    }
    if (command == "semigroup") {
        if (!s.model) throw validation_error("field model: required by command semigroup");
        auto gamma = build(*s.model, *s.flag, s.max_degree);
        json out;
        out["rank"] = gamma.rank;
        out["bound"] = gamma.bound;
        json levels;
        for (const auto& [m, level] : gamma.levels) {
            json l = json::array();
            for (const auto& nu : level) {
                json v = json::array();
                for (int x : nu) v.push_back(x);
                l.push_back(v);
            }
            levels[std::to_string(m)] = l;
        }
        out["levels"] = levels;
        return out;
    }
    if (command == "certify") {
        if (!s.model) throw validation_error("field model: required by command certify");
        auto gamma = build(*s.model, *s.flag, s.max_degree);
        std::vector<ValVector> gens;
        for (const auto& nu : gamma.levels.at(1)) gens.push_back(ValVector{1, nu});
        auto report = is_generated_up_to(gamma, gens, s.max_degree);
        auto body = body_estimate(gamma);
        json out;
        out["generated_up_to"] = report.generated_up_to;
        json missing = json::array();
        for (const auto& w : report.witnesses_missing) {
            json e;
            e["m"] = w.degree;
            json v = json::array();
            for (int x : w.nu) v.push_back(x);
            e["nu"] = v;
            missing.push_back(e);
        }
        out["witnesses_missing"] = missing;
        out["vertex_hit"] = report.vertex_hit;
        out["body"] = polytope_json(body);
        Q vol = body.volume();
        Q fact = 1;
        for (int i = 2; i <= gamma.rank; ++i) fact *= i;
        out["n_factorial_volume"] = q_str(fact * vol);
        out["self_intersection"] = q_str(Q(self_intersection(*s.model)));
        return out;
    }
    throw validation_error("field command: unknown command \"" + command + "\"");
}

// ---------------------------------------------------------------------------
// Emitters: exact CSV of the vertices, float SVG for plots.

inline std::string emit_csv(const QPolytope& p) {
    std::string out;
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < v.coords.size(); ++i) {
            if (i) out += ",";
            out += q_str(v[i]);
        }
        out += "\n";
    }
    return out;
}

inline std::string emit_svg(const QPolytope& p) {
    if (p.ambient_dim() != 2) throw validation_error("svg emission needs a 2-dimensional body");
    auto [xlo, xhi] = p.coord_range(0);
    auto [ylo, yhi] = p.coord_range(1);
    double x0 = static_cast<double>(xlo), x1 = static_cast<double>(xhi);
    double y0 = static_cast<double>(ylo), y1 = static_cast<double>(yhi);
    double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
    double margin = 0.08 * std::max(w, h);
    const double scale = 360.0 / std::max(w, h);
    auto X = [&](double x) { return (x - x0 + margin) * scale; };
    auto Y = [&](double y) { return (y1 - y + margin) * scale; };
    char buf[160];
    std::string out;
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.2f\" height=\"%.2f\">\n",
                  (w + 2 * margin) * scale, (h + 2 * margin) * scale);
    out += buf;
    // Vertices in convex-position order around the centroid.
    std::vector<QVector> vs = p.vertices();
    QVector c{Q(0), Q(0)};
    for (const auto& v : vs) {
        c[0] += v[0];
        c[1] += v[1];
    }
    c[0] /= static_cast<int>(vs.size());
    c[1] /= static_cast<int>(vs.size());
    auto cyc = detail::angular_cycle(vs, c);
    out += "  <polygon points=\"";
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s%.6f,%.6f", i ? " " : "",
                      X(static_cast<double>(cyc[i][0])), Y(static_cast<double>(cyc[i][1])));
        out += buf;
    }
    out += "\" fill=\"#9ecae1\" stroke=\"#3182bd\" stroke-width=\"1.5\"/>\n";
    for (const auto& v : cyc) {
        std::snprintf(buf, sizeof(buf),
                      "  <circle cx=\"%.6f\" cy=\"%.6f\" r=\"3\" fill=\"#08519c\"/>\n",
                      X(static_cast<double>(v[0])), Y(static_cast<double>(v[1])));
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

inline QPolytope parse_csv_vertices(const std::string& csv) {
    std::vector<QVector> pts;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        QVector v;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) v.coords.push_back(q_parse(cell));
        pts.push_back(std::move(v));
    }
    return QPolytope::hull(pts);
}

// ---------------------------------------------------------------------------
// Paper verification: runs the bundled scenario corpus and a few in-code
// checks, comparing result documents byte-for-byte against golden files.

struct VerifyEntry {
    std::string anchor;
    bool pass = false;
    std::string detail;
};

struct VerifySummary {
    std::vector<VerifyEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    std::string text() const {
        std::string out;
        for (const auto& e : entries) {
            out += e.pass ? "PASS " : "FAIL ";
            out += e.anchor;
            if (!e.detail.empty()) out += ": " + e.detail;
            out += "\n";
        }
        out += all_pass() ? "all paper anchors verified\n" : "paper verification FAILED\n";
        return out;
    }
};

namespace harness_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw computation_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One scenario/golden pair; pass iff the produced document matches byte-wise.
inline bool check_golden(const std::string& corpus, const std::string& name, std::string& detail) {
    try {
        std::string scenario = read_file(corpus + "/" + name + ".json");
        std::string produced = run(scenario).dump(2) + "\n";
        std::string golden = read_file(corpus + "/golden/" + name + ".golden.json");
        if (produced == golden) return true;
        detail = name + " differs from golden";
        return false;
    } catch (const std::exception& e) {
        detail = name + ": " + e.what();
        return false;
    }
}

inline bool check_goldens(const std::string& corpus, const std::vector<std::string>& names,
                          std::string& detail) {
    for (const auto& n : names)
        if (!check_golden(corpus, n, detail)) return false;
    return true;
}

inline nlohmann::json translate_instances_doc() {
    using nlohmann::json;
    SurfaceModel bl = SurfaceModel::make(
        {"H", "E"}, {{Q(1), Q(0)}, {Q(0), Q(-1)}}, {"E", "L1"},
        {DivisorClass{{Q(0), Q(1)}}, DivisorClass{{Q(1), Q(-1)}}});
    struct Inst {
        const char* name;
        DivisorClass D;
        DivisorClass C;
    };
    std::vector<Inst> instances{
        {"H+E against L1", DivisorClass{{Q(1), Q(1)}}, DivisorClass{{Q(1), Q(-1)}}},
        {"nef 2H-E against L1", DivisorClass{{Q(2), Q(-1)}}, DivisorClass{{Q(1), Q(-1)}}},
        {"H+2E against E", DivisorClass{{Q(1), Q(2)}}, DivisorClass{{Q(0), Q(1)}}},
    };
    json out = json::array();
    for (const auto& inst : instances) {
        auto tr = translate_decomposition(bl, inst.D, inst.C);
        json e;
        e["instance"] = inst.name;
        e["shift"] = vec_json(tr.shift);
        e["body_of_P"] = polytope_json(tr.body_of_P.as_polytope);
        e["body_of_D"] = polytope_json(tr.body_of_D.as_polytope);
        e["translate_identity"] =
            tr.body_of_D.as_polytope ==
            tr.body_of_P.as_polytope.affine_image(Q(1), tr.shift);
        out.push_back(e);
    }
    return out;
}

inline nlohmann::json denominator_remark_doc() {
    using nlohmann::json;
    json out = json::array();
    auto add = [&](const char* vol, int d, int n) {
        json e;
        e["volume"] = vol;
        e["d"] = d;
        e["n"] = n;
        e["divides"] = volume_denominator_check(q_parse(vol), d, n);
        out.push_back(e);
    };
    add("1/4", 2, 2);
    add("1/3", 2, 2);
    for (int d = 2; d < 5; ++d) add("1/5", d, 2);
    return out;
}

inline bool check_doc_golden(const std::string& corpus, const std::string& name,
                             const nlohmann::json& doc, std::string& detail) {
    try {
        std::string produced = doc.dump(2) + "\n";
        std::string golden = read_file(corpus + "/golden/" + name + ".golden.json");
        if (produced == golden) return true;
        detail = name + " differs from golden";
        return false;
    } catch (const std::exception& e) {
        detail = std::string(name) + ": " + e.what();
        return false;
    }
}

} // namespace harness_detail

inline const std::vector<std::string>& corpus_scenarios() {
    static const std::vector<std::string> names{
        "veronese-body",  "curve-c1-body",    "curve-c2-body",    "curve-c5-body",
        "curve-c7-body",  "twist-n1-d1-body", "twist-n1-d3-body", "twist-n2-d1-body",
        "twist-n2-d2-body", "twist-n2-d3-body", "twist-n3-d1-body", "twist-n3-d2-body",
        "prop-surface-body", "prop-surface-scan", "veronese-certify", "blowup-body",
        "blowup-toric-body"};
    return names;
}

// Regenerates every golden document from the current library output.
inline int update_goldens(const std::string& corpus_dir) {
    using namespace harness_detail;
    int written = 0;
    auto write = [&](const std::string& name, const std::string& data) {
        std::ofstream out(corpus_dir + "/golden/" + name + ".golden.json", std::ios::binary);
        if (!out) throw computation_error("cannot write golden for " + name);
        out << data;
        ++written;
    };
    for (const auto& name : corpus_scenarios())
        write(name, run(read_file(corpus_dir + "/" + name + ".json")).dump(2) + "\n");
    write("translate-corollary", translate_instances_doc().dump(2) + "\n");
    write("denominator-remark", denominator_remark_doc().dump(2) + "\n");
    return written;
}

inline VerifySummary verify_paper(const std::string& corpus_dir) {
    using namespace harness_detail;
    VerifySummary summary;
    auto anchor = [&](const std::string& name, auto&& fn) {
        VerifyEntry e;
        e.anchor = name;
        try {
            e.pass = fn(e.detail);
        } catch (const std::exception& ex) {
            e.pass = false;
            e.detail = ex.what();
        }
        summary.entries.push_back(std::move(e));
    };

    anchor("example-triangle", [&](std::string& d) { return check_golden(corpus_dir, "veronese-body", d); });
    anchor("curve-case", [&](std::string& d) {
        return check_goldens(corpus_dir,
                             {"curve-c1-body", "curve-c2-body", "curve-c5-body", "curve-c7-body"}, d);
    });
    anchor("very-ample-simplices", [&](std::string& d) {
        return check_goldens(corpus_dir,
                             {"twist-n1-d1-body", "twist-n1-d3-body", "twist-n2-d1-body",
                              "twist-n2-d2-body", "twist-n2-d3-body", "twist-n3-d1-body",
                              "twist-n3-d2-body"},
                             d);
    });
    anchor("surface-simplex-schema", [&](std::string& d) {
        return check_goldens(corpus_dir, {"prop-surface-body", "prop-surface-scan"}, d);
    });
    anchor("translate-corollary", [&](std::string& d) {
        return check_doc_golden(corpus_dir, "translate-corollary", translate_instances_doc(), d);
    });
    anchor("denominator-remark", [&](std::string& d) {
        return check_doc_golden(corpus_dir, "denominator-remark", denominator_remark_doc(), d);
    });
    anchor("vertex-hit-criterion", [&](std::string& d) {
        if (!check_goldens(corpus_dir, {"veronese-certify", "blowup-body", "blowup-toric-body"}, d))
            return false;
        // Negative control: dropping (0,4) from level 1 must break the hit.
        auto gamma = build(SectionModel{VeroneseSurface{}},
                           general_flag(SectionModel{VeroneseSurface{}}), 3);
        ValueSemigroup truncated = gamma;
        truncated.levels.at(1).erase({0, 4});
        if (vertex_hit_check(truncated, body_estimate(truncated))) {
            d = "synthetic truncated semigroup unexpectedly passes the vertex-hit check";
            return false;
        }
        return true;
    });
    return summary;
}

} // namespace okbody
