// Chamber walk on the blow-up of the plane in two points: scanning
// D = 2H - E1 along the second exceptional curve crosses the wall where the
// line through both points enters the negative part.

#include <iostream>

#include "okbody/surface.hpp"

using namespace okbody;

int main() {
    auto model = SurfaceModel::make(
        {"H", "E1", "E2"},
        {{Q(1), Q(0), Q(0)}, {Q(0), Q(-1), Q(0)}, {Q(0), Q(0), Q(-1)}},
        {"E1", "E2", "L12"},
        {DivisorClass{{Q(0), Q(1), Q(0)}}, DivisorClass{{Q(0), Q(0), Q(1)}},
         DivisorClass{{Q(1), Q(-1), Q(-1)}}});
    DivisorClass D{{Q(2), Q(-1), Q(0)}};
    DivisorClass flag{{Q(0), Q(0), Q(1)}};

    auto scan = chamber_scan(model, D, flag);
    std::cout << "mu = " << q_str(scan.mu) << "\n";
    for (const auto& ch : scan.chambers) {
        std::cout << "chamber [" << q_str(ch.t_begin) << ", " << q_str(ch.t_end) << "] support {";
        for (std::size_t i = 0; i < ch.support.size(); ++i)
            std::cout << (i ? ", " : "") << model.curve_names[ch.support[i]];
        std::cout << "}  beta(t) = " << q_str(ch.beta.c0) << " + " << q_str(ch.beta.c1) << "*t\n";
    }

    auto body = okounkov_body_surface(model, D, flag);
    std::cout << "body vertices:";
    for (const auto& v : body.as_polytope.vertices())
        std::cout << " (" << q_str(v[0]) << "," << q_str(v[1]) << ")";
    std::cout << "\n2 * area = " << q_str(2 * body.as_polytope.volume())
              << " = vol(D) = " << q_str(volume_surface(model, D)) << "\n";
    return 0;
}
