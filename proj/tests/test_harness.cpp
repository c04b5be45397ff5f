#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "okbody/harness.hpp"

using namespace okbody;
namespace fs = std::filesystem;

namespace {

std::string corpus() { return OKBODY_TEST_CORPUS; }

std::string read_all(const fs::path& p) { return harness_detail::read_file(p.string()); }

void write_all(const fs::path& p, const std::string& data) {
    std::ofstream out(p, std::ios::binary);
    out << data;
}

const char* kVeroneseScenario = R"({
  "command": "body",
  "model": {"variant": "veronese_surface"},
  "flag": {"kind": "general"},
  "options": {"max_degree": 6}
})";

} // namespace

TEST(Scenario, ParsesModelsFlagsAndSurfaces) {
    auto s = parse_scenario(read_all(fs::path(corpus()) / "veronese-body.json"));
    EXPECT_EQ(s.command, "body");
    ASSERT_TRUE(s.model.has_value());
    ASSERT_TRUE(s.flag.has_value());
    EXPECT_TRUE(std::holds_alternative<SurfaceCurveFlag>(*s.flag));
    EXPECT_EQ(s.max_degree, 6);

    auto t = parse_scenario(read_all(fs::path(corpus()) / "prop-surface-body.json"));
    ASSERT_TRUE(t.surface.has_value());
    EXPECT_EQ(t.surface->model.rank(), 3u);
    ASSERT_TRUE(t.surface->flag_class.has_value());
}

TEST(Scenario, ErrorsCarryFieldPaths) {
    // Malformed Gram row: the error names the offending field.
    const char* bad = R"({
      "command": "zariski",
      "surface": {
        "classes": ["H", "E"],
        "gram": [["1", "0"], ["0"]],
        "curves": [],
        "divisor": ["1", "0"]
      }
    })";
    try {
        parse_scenario(bad);
        FAIL() << "expected validation_error";
    } catch (const validation_error& e) {
        EXPECT_NE(std::string(e.what()).find("surface.gram[1]"), std::string::npos) << e.what();
    }

    EXPECT_THROW(parse_scenario("not json"), parse_error);
    EXPECT_THROW(parse_scenario(R"({"command": "body"})"), validation_error);
    EXPECT_THROW(parse_scenario(R"({"model": {"variant": "nonsense"}})"), validation_error);
    try {
        parse_scenario(R"({"model": {"variant": "projective_twist", "n": 2}})");
        FAIL() << "expected validation_error";
    } catch (const validation_error& e) {
        EXPECT_NE(std::string(e.what()).find("model.d"), std::string::npos);
    }
}

TEST(Run, DeterministicDocuments) {
    auto a = run(kVeroneseScenario).dump(2);
    auto b = run(kVeroneseScenario).dump(2);
    EXPECT_EQ(a, b);
    // A one-byte scenario change changes the provenance hash.
    std::string other = kVeroneseScenario;
    other.replace(other.find("6"), 1, "7");
    EXPECT_NE(run(other).at("scenario_hash"), run(kVeroneseScenario).at("scenario_hash"));
}

TEST(Run, CommandMismatchIsRejected) {
    EXPECT_THROW(run(kVeroneseScenario, "zariski"), validation_error);
    auto doc = run(kVeroneseScenario, "body");
    EXPECT_EQ(doc.at("command"), "body");
}

TEST(Run, CertifyReportsGenerationAndVolume) {
    auto doc = run(read_all(fs::path(corpus()) / "veronese-certify.json"));
    const auto& r = doc.at("result");
    EXPECT_EQ(r.at("generated_up_to"), 6);
    EXPECT_TRUE(r.at("vertex_hit").get<bool>());
    EXPECT_TRUE(r.at("witnesses_missing").empty());
    EXPECT_EQ(r.at("n_factorial_volume"), "4");
    EXPECT_EQ(r.at("self_intersection"), "4");
}

TEST(Emit, CsvRoundTripsThroughHull) {
    auto tri = QPolytope::hull(
        {QVector{Q(0), Q(0)}, QVector{Q(1), Q(0)}, QVector{Q(0), Q(4)}, QVector{Q(1, 2), Q(1)}});
    std::string csv = emit_csv(tri);
    EXPECT_EQ(csv, "0,0\n0,4\n1,0\n");
    EXPECT_EQ(parse_csv_vertices(csv), tri);
}

TEST(Emit, SvgContainsPolygonAndIsDeterministic) {
    auto tri = QPolytope::hull({QVector{Q(0), Q(0)}, QVector{Q(1), Q(0)}, QVector{Q(0), Q(4)}});
    std::string svg = emit_svg(tri);
    EXPECT_NE(svg.find("<polygon"), std::string::npos);
    EXPECT_EQ(svg, emit_svg(tri));
    auto seg = QPolytope::hull({QVector{Q(0), Q(0)}, QVector{Q(1), Q(2)}});
    EXPECT_NE(emit_svg(seg).find("<polygon"), std::string::npos); // degenerate renders as a line
    EXPECT_THROW(emit_svg(QPolytope::segment(Q(0), Q(1))), validation_error);
}

TEST(VerifyPaper, FreshCorpusPassesAndIsByteStable) {
    auto s1 = verify_paper(corpus());
    EXPECT_TRUE(s1.all_pass()) << s1.text();
    auto s2 = verify_paper(corpus());
    EXPECT_EQ(s1.text(), s2.text());
}

TEST(VerifyPaper, PerturbedGoldenFailsExactlyThatAnchor) {
    fs::path tmp = fs::temp_directory_path() / "okbody-corpus-negctl";
    fs::remove_all(tmp);
    fs::copy(corpus(), tmp, fs::copy_options::recursive);
    fs::path golden = tmp / "golden" / "veronese-body.golden.json";
    std::string text = read_all(golden);
    auto pos = text.find("\"0\",\n        \"4\"");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 16, "\"0\",\n        \"5\"");
    write_all(golden, text);

    auto summary = verify_paper(tmp.string());
    for (const auto& e : summary.entries) {
        if (e.anchor == "example-triangle")
            EXPECT_FALSE(e.pass);
        else
            EXPECT_TRUE(e.pass) << e.anchor << ": " << e.detail;
    }
    fs::remove_all(tmp);
}
