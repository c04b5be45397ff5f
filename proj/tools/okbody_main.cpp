// okbody: Okounkov bodies of divisors from explicit section models, Zariski
// decompositions and chamber scans on surfaces, and finite-generation
// certificates for value semigroups.  All computation is exact rational;
// results are deterministic JSON documents.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "okbody/harness.hpp"

namespace {

using namespace okbody;

struct Options {
    std::string scenario_path;
    std::optional<int> max_degree;
    std::optional<std::string> point_mode;
    std::string out;
    std::string format = "doc";
};

std::string effective_scenario_text(const Options& opt) {
    std::string text = harness_detail::read_file(opt.scenario_path);
    if (!opt.max_degree && !opt.point_mode) return text;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (opt.max_degree) j["options"]["max_degree"] = *opt.max_degree;
    if (opt.point_mode) j["options"]["point_mode"] = *opt.point_mode;
    return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw computation_error("cannot write file: " + path);
    out << data;
}

QPolytope polytope_from_doc(const nlohmann::json& doc) {
    std::vector<QVector> pts;
    for (const auto& v : doc.at("result").at("vertices")) {
        QVector p;
        for (const auto& c : v) p.coords.push_back(q_parse(c.get<std::string>()));
        pts.push_back(std::move(p));
    }
    return QPolytope::hull(pts);
}

int run_scenario_command(const std::string& command, Options opt) {
    std::string text = effective_scenario_text(opt);
    if (opt.out.empty()) opt.out = parse_scenario(text).out;
    nlohmann::json doc = run(text, command == "plot" ? "plot" : command);
    std::string rendered = doc.dump(2) + "\n";

    if (command == "plot" || opt.format != "doc") {
        QPolytope body = polytope_from_doc(doc);
        if (command == "plot") {
            if (opt.out.empty()) throw validation_error("plot requires --out");
            std::string base = opt.out;
            if (auto dot = base.rfind('.'); dot != std::string::npos) base = base.substr(0, dot);
            write_file(opt.out, opt.format == "csv" ? emit_csv(body) : emit_svg(body));
            write_file(base + ".csv", emit_csv(body));
            std::cout << rendered;
            return 0;
        }
        std::string payload = opt.format == "csv" ? emit_csv(body) : emit_svg(body);
        if (opt.out.empty())
            std::cout << payload;
        else
            write_file(opt.out, payload);
        return 0;
    }
    if (!opt.out.empty())
        write_file(opt.out, rendered);
    else
        std::cout << rendered;
    return 0;
}

int protected_main(int argc, char** argv) {
    CLI::App app{"Okounkov bodies, Zariski chamber scans and value-semigroup certificates"};
    app.require_subcommand(1);

    Options opt;
    std::string corpus;
    if (const char* env = std::getenv("OKBODY_CORPUS")) corpus = env;
    if (corpus.empty()) corpus = "scenarios";

    auto add_scenario_cmd = [&](const char* name, const char* help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("scenario", opt.scenario_path, "scenario JSON file")->required();
        c->add_option("--max-degree", opt.max_degree, "override options.max_degree");
        c->add_option("--point-mode", opt.point_mode, "override options.point_mode (generic|explicit)");
        c->add_option("--out", opt.out, "write the result to this path");
        c->add_option("--format", opt.format, "output format: doc|csv|svg")
            ->check(CLI::IsMember({"doc", "csv", "svg"}));
        return c;
    };

    add_scenario_cmd("body", "compute the Okounkov body of a scenario");
    add_scenario_cmd("zariski", "Zariski decomposition of a surface divisor");
    add_scenario_cmd("scan", "parametric Zariski chamber scan along the flag curve");
    add_scenario_cmd("semigroup", "enumerate the value semigroup up to the degree bound");
    add_scenario_cmd("certify", "degree-bounded finite-generation certificate");
    CLI::App* plot = add_scenario_cmd("plot", "emit an SVG plot and exact CSV of a 2D body");
    (void)plot;

    CLI::App* verify = app.add_subcommand("verify-paper", "run the bundled reproduction corpus");
    verify->add_option("--corpus", corpus, "corpus directory (default: scenarios, env OKBODY_CORPUS)");
    bool update_golden = false;
    verify->add_flag("--update-golden", update_golden,
                     "rewrite every golden document from the current output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (verify->parsed()) {
        if (update_golden) {
            int n = update_goldens(corpus);
            std::cout << "updated " << n << " golden documents\n";
        }
        auto summary = verify_paper(corpus);
        std::cout << summary.text();
        return summary.all_pass() ? 0 : 1;
    }
    for (const char* name : {"body", "zariski", "scan", "semigroup", "certify", "plot"})
        if (app.get_subcommand(name)->parsed()) return run_scenario_command(name, opt);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return protected_main(argc, argv);
    } catch (const okbody::parse_error& e) {
        std::cout << nlohmann::json{{"error", {{"kind", "parse"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 2;
    } catch (const okbody::validation_error& e) {
        std::cout << nlohmann::json{{"error", {{"kind", "validation"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 3;
    } catch (const okbody::computation_error& e) {
        std::cout << nlohmann::json{{"error", {{"kind", "computation"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cout << nlohmann::json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2)
                  << "\n";
        return 4;
    }
}
