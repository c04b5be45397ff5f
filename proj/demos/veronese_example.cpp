// The running example: the plane re-embedded by conics, flagged by a smooth
// conic and a point on it.  The Okounkov body comes out as the triangle with
// vertices (0,0), (1,0), (0,4), and the degree-one values already generate
// the whole value semigroup.

#include <iostream>

#include "okbody/semigroup.hpp"

using namespace okbody;

int main() {
    SectionModel model{VeroneseSurface{}};
    auto flag = SurfaceCurveFlag::make(
        MPoly::parse("v^2 - u*w", {"u", "v", "w"}),
        CurveParam::make({MPoly::parse("1", {"t"}), MPoly::parse("t", {"t"}),
                          MPoly::parse("t^2", {"t"})}));

    auto gamma = build(model, flag, 6);
    std::cout << "level 1 values:";
    for (const auto& nu : gamma.levels.at(1))
        std::cout << " (" << nu[0] << "," << nu[1] << ")";
    std::cout << "\n";

    auto sb = stabilized_body(model, flag, 6);
    std::cout << "body stabilized at degree " << sb.at << "; vertices:";
    for (const auto& v : sb.body.vertices())
        std::cout << " (" << q_str(v[0]) << "," << q_str(v[1]) << ")";
    std::cout << "\narea = " << q_str(sb.body.volume())
              << ", 2 * area = " << q_str(2 * sb.body.volume())
              << " = (L.L) = " << self_intersection(model) << "\n";

    std::vector<ValVector> gens;
    for (const auto& nu : gamma.levels.at(1)) gens.push_back(ValVector{1, nu});
    auto report = is_generated_up_to(gamma, gens, 6);
    std::cout << "generated up to degree " << report.generated_up_to
              << ", vertex hit: " << (report.vertex_hit ? "yes" : "no") << "\n";
    return 0;
}
