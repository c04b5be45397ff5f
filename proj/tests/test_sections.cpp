#include <gtest/gtest.h>

#include <set>

#include "okbody/sections.hpp"

using namespace okbody;

namespace {
QVector v2(const char* x, const char* y) { return QVector{q_parse(x), q_parse(y)}; }

QPolytope unit_triangle() {
    return QPolytope::hull({v2("0", "0"), v2("1", "0"), v2("0", "1")});
}

// Polytope of 2H - E on the blow-up of the plane in a point.
QPolytope blp2_trapezoid() {
    return QPolytope::hull({v2("0", "0"), v2("2", "0"), v2("1", "1"), v2("0", "1")});
}
} // namespace

TEST(Basis, ProjectiveAndVeroneseEnumerations) {
    auto b = basis(SectionModel{ProjectiveTwist{2, 1}}, 1);
    ASSERT_EQ(b.polys.size(), 3u);
    EXPECT_EQ(b.polys[0].str(), "u");
    EXPECT_EQ(b.polys[1].str(), "v");
    EXPECT_EQ(b.polys[2].str(), "w");

    auto ver = basis(SectionModel{VeroneseSurface{}}, 1);
    ASSERT_EQ(ver.polys.size(), 6u);
    std::set<std::string> names;
    for (const auto& p : ver.polys) {
        EXPECT_TRUE(p.is_homogeneous());
        EXPECT_EQ(p.total_degree(), 2);
        names.insert(p.str());
    }
    EXPECT_EQ(names.size(), 6u);
}

TEST(Basis, ToricLatticePointsAndCurve) {
    auto tri = basis(SectionModel{ToricPolytopeModel{unit_triangle()}}, 3);
    EXPECT_EQ(tri.points.size(), 10u);
    auto cur = basis(SectionModel{CurveDivisor{5}}, 2);
    ASSERT_EQ(cur.polys.size(), 11u);
    EXPECT_EQ(cur.polys[10].str(), "t^10");
}

TEST(Basis, CardinalityMatchesClosedFormH0) {
    std::vector<SectionModel> models{
        SectionModel{ProjectiveTwist{1, 3}}, SectionModel{ProjectiveTwist{2, 2}},
        SectionModel{ProjectiveTwist{3, 1}}, SectionModel{VeroneseSurface{}},
        SectionModel{CurveDivisor{4}},       SectionModel{ToricPolytopeModel{blp2_trapezoid()}}};
    for (const auto& model : models) {
        for (int m = 1; m <= 10; ++m) {
            auto b = basis(model, m);
            Int count = Int(b.polys.size() + b.points.size());
            EXPECT_EQ(count, h0(model, m));
        }
    }
}

TEST(Basis, MonomialMultiplicativity) {
    // Products of basis elements of degrees m1 and m2 are basis elements of
    // degree m1 + m2 (as sets, for these monomial models).
    SectionModel model{ProjectiveTwist{2, 2}};
    for (int m1 = 1; m1 <= 3; ++m1) {
        for (int m2 = m1; m1 + m2 <= 5; ++m2) {
            std::set<std::string> target;
            for (const auto& p : basis(model, m1 + m2).polys) target.insert(p.str());
            for (const auto& a : basis(model, m1).polys)
                for (const auto& b : basis(model, m2).polys)
                    EXPECT_TRUE(target.count((a * b).str())) << (a * b).str();
        }
    }
    SectionModel toric{ToricPolytopeModel{unit_triangle()}};
    auto pts1 = basis(toric, 1).points;
    auto pts2 = basis(toric, 2).points;
    auto pts3 = basis(toric, 3).points;
    std::set<std::vector<Int>> target(pts3.begin(), pts3.end());
    for (const auto& a : pts1)
        for (const auto& b : pts2)
            EXPECT_TRUE(target.count({a[0] + b[0], a[1] + b[1]}));
}

TEST(SelfIntersection, SpecExamples) {
    EXPECT_EQ(self_intersection(SectionModel{ProjectiveTwist{2, 2}}), Int(4));
    EXPECT_EQ(self_intersection(SectionModel{CurveDivisor{5}}), Int(5));
    EXPECT_EQ(self_intersection(SectionModel{VeroneseSurface{}}), Int(4));
    EXPECT_EQ(self_intersection(SectionModel{ToricPolytopeModel{blp2_trapezoid()}}), Int(3));
}

TEST(SelfIntersection, ToricAgainstPickOracle) {
    // Pick: area = interior + boundary/2 - 1, so normalized area is
    // recoverable from lattice-point counts alone.
    auto P = blp2_trapezoid();
    auto all = P.lattice_points();
    int boundary = 0;
    for (const auto& p : all) {
        bool on_edge = false;
        for (const auto& h : P.halfspaces())
            if (dot(h.normal, p) == h.offset) on_edge = true;
        if (on_edge) ++boundary;
    }
    int interior = static_cast<int>(all.size()) - boundary;
    Q pick_area = Q(interior) + Q(boundary, 2) - 1;
    EXPECT_EQ(Q(self_intersection(SectionModel{ToricPolytopeModel{P}})), 2 * pick_area);
}

TEST(PredictedSimplex, SpecExamples) {
    EXPECT_EQ(predicted_simplex(2, Int(4)),
              QPolytope::hull({v2("0", "0"), v2("1", "0"), v2("0", "4")}));
    EXPECT_EQ(predicted_simplex(1, Int(3)), QPolytope::segment(Q(0), Q(3)));
    auto std3 = predicted_simplex(3, Int(1));
    EXPECT_TRUE(std3.is_simplex());
    EXPECT_EQ(std3.vertices().size(), 4u);
    EXPECT_EQ(std3.volume(), Q(1, 6));
}

TEST(PredictedSimplex, VolumeIdentity) {
    // n! * volume = c, the paper's normalization.
    for (auto [n, d] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 1}, {2, 2},
                                                        {2, 3}, {3, 1}, {3, 2}}) {
        SectionModel model{ProjectiveTwist{n, d}};
        Q vol = predicted_simplex(model).volume();
        Q fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        EXPECT_EQ(fact * vol, Q(self_intersection(model)));
    }
}

TEST(GeneralFlag, KindsPerModel) {
    EXPECT_TRUE(std::holds_alternative<CoordinateFlag>(
        general_flag(SectionModel{ProjectiveTwist{2, 1}})));
    EXPECT_TRUE(std::holds_alternative<CoordinateFlag>(general_flag(SectionModel{CurveDivisor{5}})));
    EXPECT_TRUE(std::holds_alternative<SurfaceCurveFlag>(
        general_flag(SectionModel{ProjectiveTwist{2, 3}})));
    EXPECT_TRUE(std::holds_alternative<SubstitutionFlag>(
        general_flag(SectionModel{ProjectiveTwist{3, 2}})));
    EXPECT_THROW(general_flag(SectionModel{ToricPolytopeModel{unit_triangle()}}), validation_error);
}

TEST(Models, ValidationErrors) {
    EXPECT_THROW(basis(SectionModel{ProjectiveTwist{4, 1}}, 1), validation_error);
    EXPECT_THROW(basis(SectionModel{CurveDivisor{0}}, 1), validation_error);
    EXPECT_THROW(basis(SectionModel{ProjectiveTwist{2, 1}}, 0), validation_error);
    auto thin = QPolytope::hull({v2("0", "0"), v2("1", "0")});
    EXPECT_THROW(validate_model(SectionModel{ToricPolytopeModel{thin}}), validation_error);
    auto frac = QPolytope::hull({v2("0", "0"), v2("1/2", "0"), v2("0", "1")});
    EXPECT_THROW(validate_model(SectionModel{ToricPolytopeModel{frac}}), validation_error);
}
