#pragma once

// The value semigroup Gamma = { (m, nu(s)) : s in H^0(mL) \ 0 } up to a
// degree bound, the Okounkov body as a stabilized hull of nu/m, and
// degree-bounded finite-generation certificates.
//
// For the monomial models a basis does not see sections with positive order
// along a non-coordinate flag divisor (the divisor polynomial itself is a
// combination of basis monomials), so each level also enumerates the
// divisor-power multiples g^k * basis(deg - k*deg g).  On these models the
// resulting level sets equal the full valuation sets: monomials pull back to
// monomials along the flag data, so every section's value is already
// attained by a basis element times a divisor power.

#include <map>
#include <set>
#include <vector>

#include "okbody/errors.hpp"
#include "okbody/sections.hpp"
#include "okbody/valuation.hpp"

namespace okbody {

struct ValueSemigroup {
    int rank = 0;                                // valuation rank n
    int bound = 0;                               // levels built for m = 1..bound
    std::map<int, std::set<std::vector<int>>> levels;
};

struct GenerationReport {
    int generated_up_to = 0;
    std::vector<ValVector> witnesses_missing;
    bool vertex_hit = false;
};

namespace detail {

inline std::vector<int> to_int_vec(const std::vector<Int>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(static_cast<int>(x));
    return out;
}

// Divisor forms whose powers multiply the basis at each level.
inline std::vector<MPoly> flag_divisor_forms(const FlagChart& flag) {
    if (const auto* sc = std::get_if<SurfaceCurveFlag>(&flag)) return {sc->divisor_poly};
    if (const auto* sub = std::get_if<SubstitutionFlag>(&flag)) {
        std::vector<MPoly> forms;
        for (const auto& step : sub->steps) forms.push_back(step.hom_divisor);
        return forms;
    }
    return {};
}

inline std::vector<int> valuate(const MPoly& f, const FlagChart& flag, const SectionModel& model) {
    if (const auto* cf = std::get_if<CoordinateFlag>(&flag)) {
        if (std::holds_alternative<CurveDivisor>(model)) return coord_flag_valuation(f, cf->n);
        return coord_flag_valuation(f.dehomogenize(0), cf->n);
    }
    if (const auto* sc = std::get_if<SurfaceCurveFlag>(&flag)) return surface_flag_valuation(f, *sc);
    if (const auto* sub = std::get_if<SubstitutionFlag>(&flag))
        return substitution_flag_valuation(f, *sub);
    throw validation_error("toric flags valuate lattice points, not polynomials");
}

} // namespace detail

inline int flag_rank(const FlagChart& flag) {
    if (const auto* cf = std::get_if<CoordinateFlag>(&flag)) return cf->n;
    if (std::holds_alternative<SurfaceCurveFlag>(flag)) return 2;
    if (const auto* sub = std::get_if<SubstitutionFlag>(&flag))
        return static_cast<int>(sub->steps.size()) + 1;
    return static_cast<int>(std::get<ToricFlag>(flag).vertex.size());
}

inline ValueSemigroup build(const SectionModel& model, const FlagChart& flag, int bound) {
    if (bound < 1) throw validation_error("build: bound must be positive");
    validate_model(model);
    const int n = flag_rank(flag);
    if (n != model_dim(model))
        throw validation_error("flag rank does not match model dimension");
    if (std::holds_alternative<ToricFlag>(flag) != std::holds_alternative<ToricPolytopeModel>(model))
        throw validation_error("toric flags pair with toric models");

    ValueSemigroup gamma;
    gamma.rank = n;
    gamma.bound = bound;

    if (const auto* tf = std::get_if<ToricFlag>(&flag)) {
        for (int m = 1; m <= bound; ++m) {
            // Sections of mL are lattice points of m * P; vanishing orders
            // are measured from the corresponding corner m * vertex.
            ToricFlag scaled = *tf;
            for (auto& c : scaled.vertex) c *= m;
            auto& level = gamma.levels[m];
            for (const auto& p : basis(model, m).points)
                level.insert(detail::to_int_vec(toric_flag_valuation(p, scaled)));
        }
        return gamma;
    }

    const auto divisors = detail::flag_divisor_forms(flag);
    for (int m = 1; m <= bound; ++m) {
        auto& level = gamma.levels[m];
        const int D = section_degree(model, m);
        // Multi-indices k over the divisor forms with sum k_i * deg(q_i) <= D.
        std::vector<int> k(divisors.size(), 0);
        auto enumerate = [&](auto&& self, std::size_t i, int used, const MPoly& factor) -> void {
            if (i == divisors.size()) {
                int rem = D - used;
                if (rem == 0 && used > 0) {
                    level.insert(detail::valuate(factor, flag, model));
                    return;
                }
                auto vars = model_vars(model);
                for (const auto& e : detail::monomial_exponents(rem, vars.size())) {
                    MPoly f = MPoly::monomial(vars, e);
                    if (used > 0) f = f * factor;
                    level.insert(detail::valuate(f, flag, model));
                }
                return;
            }
            const int dq = divisors[i].total_degree();
            MPoly cur = factor;
            for (int ki = 0; used + ki * dq <= D; ++ki) {
                if (ki > 0) cur = cur * divisors[i];
                self(self, i + 1, used + ki * dq, cur);
            }
        };
        if (std::holds_alternative<CurveDivisor>(model)) {
            for (const auto& f : basis(model, m).polys)
                level.insert(detail::valuate(f, flag, model));
        } else {
            auto vars = model_vars(model);
            enumerate(enumerate, 0, 0, MPoly::constant(vars, Q(1)));
        }
    }
    return gamma;
}

// Hull of all nu/m seen so far.
inline QPolytope body_estimate(const ValueSemigroup& gamma) {
    if (gamma.levels.empty()) throw validation_error("body_estimate: empty semigroup");
    std::vector<QVector> pts;
    for (const auto& [m, level] : gamma.levels)
        for (const auto& nu : level) {
            QVector p;
            for (int x : nu) p.coords.push_back(Q(x, m));
            pts.push_back(std::move(p));
        }
    return QPolytope::hull(pts);
}

struct StabilizedBody {
    QPolytope body;
    bool stabilized = false;
    int at = 0; // first degree whose hull equals the previous one
};

// Finite certificate that the hull has stopped growing: the first M >= 2
// with body_estimate(M) == body_estimate(M-1).
inline StabilizedBody stabilized_body(const SectionModel& model, const FlagChart& flag, int m_max) {
    if (m_max < 2) throw validation_error("stabilized_body: bound must be at least 2");
    ValueSemigroup gamma = build(model, flag, 1);
    QPolytope prev = body_estimate(gamma);
    for (int m = 2; m <= m_max; ++m) {
        ValueSemigroup next = build(model, flag, m);
        QPolytope cur = body_estimate(next);
        if (cur == prev) return {cur, true, m};
        prev = cur;
    }
    return {prev, false, m_max};
}

inline bool vertex_hit_check(const ValueSemigroup& gamma, const QPolytope& body) {
    auto level1 = gamma.levels.find(1);
    if (level1 == gamma.levels.end()) return false;
    for (const auto& v : body.vertices()) {
        std::vector<int> nu;
        bool integral = true;
        for (const auto& c : v.coords) {
            if (q_den(c) != 1) {
                integral = false;
                break;
            }
            nu.push_back(static_cast<int>(q_num(c)));
        }
        if (!integral || level1->second.find(nu) == level1->second.end()) return false;
    }
    return true;
}

// Dynamic-programming reachability: an element is reachable iff it is a
// generator or a generator plus a reachable element of lower degree.
inline GenerationReport is_generated_up_to(const ValueSemigroup& gamma,
                                           const std::vector<ValVector>& gens, int m_bound) {
    if (m_bound > gamma.bound) throw validation_error("is_generated_up_to: bound exceeds build bound");
    for (const auto& g : gens) {
        auto it = gamma.levels.find(g.degree);
        if (it == gamma.levels.end() || it->second.find(g.nu) == it->second.end())
            throw validation_error("generator outside the semigroup");
    }
    std::map<int, std::set<std::vector<int>>> reach;
    for (int m = 1; m <= m_bound; ++m) {
        auto& rm = reach[m];
        for (const auto& g : gens) {
            if (g.degree == m) rm.insert(g.nu);
            if (g.degree < m) {
                for (const auto& r : reach[m - g.degree]) {
                    std::vector<int> sum = r;
                    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += g.nu[i];
                    rm.insert(std::move(sum));
                }
            }
        }
    }
    GenerationReport report;
    report.generated_up_to = m_bound;
    for (int m = 1; m <= m_bound; ++m) {
        const auto& level = gamma.levels.at(m);
        const auto& rm = reach[m];
        bool complete = true;
        for (const auto& nu : level) {
            if (rm.find(nu) == rm.end()) {
                report.witnesses_missing.push_back(ValVector{m, nu});
                complete = false;
            }
        }
        if (!complete && report.generated_up_to >= m) report.generated_up_to = m - 1;
    }
    report.vertex_hit = vertex_hit_check(gamma, body_estimate(gamma));
    return report;
}

// The simplex Delta_c with vertices 0, e_1, ..., e_{n-1}, c*e_n: the moment
// polytope of the weighted projective space P(1,...,1,c).
inline QPolytope weighted_projective_data(int n, const Int& c) {
    return predicted_simplex(n, c);
}

// True iff the reduced denominator of vol divides d^n.
inline bool volume_denominator_check(const Q& vol, int d, int n) {
    if (vol <= 0) throw validation_error("volume_denominator_check: volume must be positive");
    Int p = 1;
    for (int i = 0; i < n; ++i) p *= d;
    return p % q_den(vol) == 0;
}

} // namespace okbody
