#pragma once

// Graded section models: explicit bases of H^0(X, mL) together with
// intersection-theoretic metadata, for the closed-form families the library
// supports (projective spaces with a twist, the Veronese surface model,
// rational curve divisors, and toric surfaces given by lattice polytopes).

#include <string>
#include <variant>
#include <vector>

#include "okbody/errors.hpp"
#include "okbody/mpoly.hpp"
#include "okbody/polytope.hpp"
#include "okbody/rational.hpp"
#include "okbody/valuation.hpp"

namespace okbody {

// X = P^n with L = O(d).
struct ProjectiveTwist {
    int n = 1;
    int d = 1;
};

// X = P^2 re-embedded by O(2): the running example model.  Equivalent to
// ProjectiveTwist{2,2} but kept as its own variant so scenarios can name it.
struct VeroneseSurface {};

// X a rational curve with a degree-c divisor.
struct CurveDivisor {
    int c = 1;
};

// Toric model: sections of mL are the lattice points of m * polytope.
struct ToricPolytopeModel {
    QPolytope polytope;
};

using SectionModel = std::variant<ProjectiveTwist, VeroneseSurface, CurveDivisor, ToricPolytopeModel>;

struct GradedBasis {
    int degree = 0;
    std::vector<MPoly> polys;                  // polynomial models
    std::vector<std::vector<Int>> points;      // toric models
};

namespace detail {

inline std::vector<std::string> projective_vars(int n) {
    static const std::vector<std::string> names{"u", "v", "w", "z"};
    if (n < 1 || n > 3) throw validation_error("projective model: dimension must be 1..3");
    return {names.begin(), names.begin() + n + 1};
}

// All monomials of the given total degree, leading variable first.
inline void monomials_rec(int degree, std::size_t var, Exp& cur, std::vector<Exp>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = degree;
        out.push_back(cur);
        return;
    }
    for (int e = degree; e >= 0; --e) {
        cur[var] = e;
        monomials_rec(degree - e, var + 1, cur, out);
    }
    cur[var] = 0;
}

inline std::vector<Exp> monomial_exponents(int degree, std::size_t nvars) {
    std::vector<Exp> out;
    Exp cur(nvars, 0);
    monomials_rec(degree, 0, cur, out);
    return out;
}

} // namespace detail

inline int model_dim(const SectionModel& model) {
    return std::visit(
        [](const auto& m) -> int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProjectiveTwist>) return m.n;
            if constexpr (std::is_same_v<T, VeroneseSurface>) return 2;
            if constexpr (std::is_same_v<T, CurveDivisor>) return 1;
            if constexpr (std::is_same_v<T, ToricPolytopeModel>) return m.polytope.ambient_dim();
        },
        model);
}

// Total polynomial degree of a section in H^0(mL), for polynomial models.
inline int section_degree(const SectionModel& model, int m) {
    return std::visit(
        [m](const auto& mod) -> int {
            using T = std::decay_t<decltype(mod)>;
            if constexpr (std::is_same_v<T, ProjectiveTwist>) return m * mod.d;
            if constexpr (std::is_same_v<T, VeroneseSurface>) return 2 * m;
            if constexpr (std::is_same_v<T, CurveDivisor>) return m * mod.c;
            if constexpr (std::is_same_v<T, ToricPolytopeModel>)
                throw validation_error("toric models have no polynomial sections");
        },
        model);
}

inline std::vector<std::string> model_vars(const SectionModel& model) {
    return std::visit(
        [](const auto& m) -> std::vector<std::string> {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProjectiveTwist>) return detail::projective_vars(m.n);
            if constexpr (std::is_same_v<T, VeroneseSurface>) return detail::projective_vars(2);
            if constexpr (std::is_same_v<T, CurveDivisor>) return {"t"};
            if constexpr (std::is_same_v<T, ToricPolytopeModel>)
                throw validation_error("toric models have no polynomial variables");
        },
        model);
}

inline void validate_model(const SectionModel& model) {
    std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProjectiveTwist>) {
                if (m.n < 1 || m.n > 3) throw validation_error("projective twist: n must be 1..3");
                if (m.d < 1) throw validation_error("projective twist: d must be positive");
            }
            if constexpr (std::is_same_v<T, CurveDivisor>) {
                if (m.c < 1) throw validation_error("curve divisor: degree must be positive");
            }
            if constexpr (std::is_same_v<T, ToricPolytopeModel>) {
                if (m.polytope.affine_dim() != m.polytope.ambient_dim())
                    throw validation_error("toric polytope must be full-dimensional");
                if (!m.polytope.is_lattice_polytope())
                    throw validation_error("toric polytope must have lattice vertices");
            }
        },
        model);
}

// Deterministic basis of H^0(X, mL); monomials enumerated leading variable
// first, toric lattice points sorted lexicographically.
inline GradedBasis basis(const SectionModel& model, int m) {
    if (m < 1) throw validation_error("basis: degree must be positive");
    validate_model(model);
    GradedBasis out;
    out.degree = m;
    if (std::holds_alternative<ToricPolytopeModel>(model)) {
        const auto& poly = std::get<ToricPolytopeModel>(model).polytope;
        QVector zero(std::vector<Q>(static_cast<std::size_t>(poly.ambient_dim()), Q(0)));
        auto pts = poly.affine_image(Q(m), zero).lattice_points();
        for (const auto& p : pts) {
            std::vector<Int> z;
            for (const auto& c : p.coords) z.push_back(q_num(c));
            out.points.push_back(std::move(z));
        }
        return out;
    }
    if (std::holds_alternative<CurveDivisor>(model)) {
        int c = std::get<CurveDivisor>(model).c;
        for (int j = 0; j <= m * c; ++j)
            out.polys.push_back(MPoly::monomial({"t"}, Exp{j}));
        return out;
    }
    auto vars = model_vars(model);
    for (const auto& e : detail::monomial_exponents(section_degree(model, m), vars.size()))
        out.polys.push_back(MPoly::monomial(vars, e));
    return out;
}

// Closed-form h^0(mL) for the basis-cardinality invariant.
inline Int h0(const SectionModel& model, int m) {
    return std::visit(
        [m](const auto& mod) -> Int {
            using T = std::decay_t<decltype(mod)>;
            if constexpr (std::is_same_v<T, ProjectiveTwist> || std::is_same_v<T, VeroneseSurface>) {
                int n = std::is_same_v<T, VeroneseSurface> ? 2 : 0;
                int d = std::is_same_v<T, VeroneseSurface> ? 2 : 0;
                if constexpr (std::is_same_v<T, ProjectiveTwist>) {
                    n = mod.n;
                    d = mod.d;
                }
                Int num = 1, den = 1;
                for (int i = 1; i <= n; ++i) {
                    num *= m * d + i;
                    den *= i;
                }
                return num / den;
            }
            if constexpr (std::is_same_v<T, CurveDivisor>) return Int(m) * mod.c + 1;
            if constexpr (std::is_same_v<T, ToricPolytopeModel>) {
                QVector zero(std::vector<Q>(static_cast<std::size_t>(mod.polytope.ambient_dim()), Q(0)));
                return Int(mod.polytope.affine_image(Q(m), zero).lattice_points().size());
            }
        },
        model);
}

// c = (L^n), the degree of L.
inline Int self_intersection(const SectionModel& model) {
    validate_model(model);
    return std::visit(
        [](const auto& m) -> Int {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ProjectiveTwist>) {
                Int c = 1;
                for (int i = 0; i < m.n; ++i) c *= m.d;
                return c;
            }
            if constexpr (std::is_same_v<T, VeroneseSurface>) return Int(4);
            if constexpr (std::is_same_v<T, CurveDivisor>) return Int(m.c);
            if constexpr (std::is_same_v<T, ToricPolytopeModel>) {
                Q nv = m.polytope.volume();
                int n = m.polytope.ambient_dim();
                for (int i = 2; i <= n; ++i) nv *= i;
                if (q_den(nv) != 1)
                    throw validation_error("toric polytope has non-integral normalized volume");
                return q_num(nv);
            }
        },
        model);
}

// The simplex with vertices 0, e_1, ..., e_{n-1}, c * e_n cut out by
// x_i >= 0 and x_1 + ... + x_{n-1} + (1/c) x_n <= 1.
inline QPolytope predicted_simplex(int n, const Int& c) {
    if (n < 1 || c < 1) throw validation_error("predicted_simplex: need n >= 1, c >= 1");
    std::vector<QVector> verts;
    verts.emplace_back(std::vector<Q>(static_cast<std::size_t>(n), Q(0)));
    for (int i = 0; i + 1 < n; ++i) {
        QVector e(std::vector<Q>(static_cast<std::size_t>(n), Q(0)));
        e[static_cast<std::size_t>(i)] = 1;
        verts.push_back(std::move(e));
    }
    QVector last(std::vector<Q>(static_cast<std::size_t>(n), Q(0)));
    last[static_cast<std::size_t>(n - 1)] = Q(c);
    verts.push_back(std::move(last));
    return QPolytope::hull(verts);
}

inline QPolytope predicted_simplex(const SectionModel& model) {
    return predicted_simplex(model_dim(model), self_intersection(model));
}

// The flag of general sections of |L| realized with explicit rational data:
//  n = 1          -- order of vanishing at a point (coordinate flag);
//  d = 1          -- hyperplane sections are coordinates after a change of
//                    basis, so the coordinate flag is the general flag;
//  n = 2, d >= 2  -- the rational curve u^{d-1} w = v^d in |O(d)| with the
//                    parametrization (1, t, t^d) and flag point t = 0;
//  n = 3, d = 2   -- the quadric chain { w = v^2 }, { z = v^4 } carrying the
//                    monomial curve (1, t, t^2, t^4).
inline FlagChart general_flag(const SectionModel& model) {
    validate_model(model);
    if (std::holds_alternative<CurveDivisor>(model)) return CoordinateFlag{1};
    if (std::holds_alternative<VeroneseSurface>(model))
        return general_flag(SectionModel{ProjectiveTwist{2, 2}});
    if (std::holds_alternative<ToricPolytopeModel>(model))
        throw validation_error("toric models use explicit toric flags");
    auto pt = std::get<ProjectiveTwist>(model);
    if (pt.n == 1 || pt.d == 1) return CoordinateFlag{pt.n};
    auto vars = detail::projective_vars(pt.n);
    if (pt.n == 2) {
        std::string g = "u";
        if (pt.d > 2) g += "^" + std::to_string(pt.d - 1);
        g += "*w - v^" + std::to_string(pt.d);
        std::vector<MPoly> comps{MPoly::parse("1", {"t"}), MPoly::parse("t", {"t"}),
                                 MPoly::parse("t^" + std::to_string(pt.d), {"t"})};
        return SurfaceCurveFlag::make(MPoly::parse(g, vars), CurveParam::make(std::move(comps)));
    }
    // n = 3: triangular chain w = v^d, z = v^{d^2}.
    auto power = [](const std::string& var, int k) {
        return k == 1 ? var : var + "^" + std::to_string(k);
    };
    std::vector<SubstitutionStep> steps;
    steps.push_back(SubstitutionStep{
        2, MPoly::parse(power("v", pt.d), vars),
        MPoly::parse(power("u", pt.d - 1) + "*w - " + power("v", pt.d), vars)});
    steps.push_back(SubstitutionStep{
        3, MPoly::parse(power("v", pt.d * pt.d), vars),
        MPoly::parse(power("w", pt.d) + " - " + power("u", pt.d - 1) + "*z", vars)});
    return SubstitutionFlag::make(0, std::move(steps), 1);
}

} // namespace okbody
