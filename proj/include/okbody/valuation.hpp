#pragma once

// Flag valuations on explicit polynomial sections.  Four flag kinds:
//
//  * CoordinateFlag      -- iterated order of vanishing along coordinate
//                           hyperplanes (lex-minimal exponent vector);
//  * SurfaceCurveFlag    -- order along an irreducible plane curve, then
//                           order at a point of the curve computed through a
//                           polynomial parametrization (surfaces only);
//  * ToricFlag           -- unimodular change of lattice coordinates at a
//                           vertex, for lattice-point models;
//  * SubstitutionFlag    -- iterated divisor order along a triangular chain
//                           of graph hypersurfaces x_k = p(earlier vars).
//                           This realizes the flags cut out by linear spaces
//                           on d-uple embeddings in dimension 3, where the
//                           flag curve itself is not a plane divisor.

#include <string>
#include <variant>
#include <vector>

#include "okbody/errors.hpp"
#include "okbody/mpoly.hpp"
#include "okbody/polytope.hpp"
#include "okbody/rational.hpp"

namespace okbody {

struct ValVector {
    int degree = 0;           // section lives in H^0(X, degree * L)
    std::vector<int> nu;      // successive orders of vanishing

    friend bool operator==(const ValVector& a, const ValVector& b) {
        return a.degree == b.degree && a.nu == b.nu;
    }
    friend bool operator<(const ValVector& a, const ValVector& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.nu < b.nu;
    }
};

// Projective coordinates of a rational curve as polynomials in one
// parameter t, with a marked parameter value mapping to the flag point.
struct CurveParam {
    std::vector<MPoly> components;
    Q base_point_param = Q(0);

    static CurveParam make(std::vector<MPoly> comps, Q t0 = Q(0)) {
        CurveParam p{std::move(comps), std::move(t0)};
        if (p.components.empty()) throw validation_error("curve parametrization: no components");
        for (const auto& c : p.components)
            if (c.var_count() != 1)
                throw validation_error("curve parametrization: components must be univariate");
        // Clear the common power of (t - t0) so some component is nonzero at t0.
        int common = -1;
        for (const auto& c : p.components) {
            if (c.is_zero()) continue;
            int o = order_at(c, p.base_point_param);
            common = common < 0 ? o : std::min(common, o);
        }
        if (common < 0)
            throw validation_error("curve parametrization: all components are zero");
        if (common > 0) {
            MPoly lin = MPoly::variable(p.components.front().vars(), 0) -
                        MPoly::constant(p.components.front().vars(), p.base_point_param);
            MPoly div = lin.pow(common);
            for (auto& c : p.components)
                if (!c.is_zero()) c = *c.divided_by(div);
        }
        return p;
    }
};

// Gram-matrix rank of a quadratic form in three variables.
inline int conic_rank(const MPoly& q) {
    if (q.var_count() != 3 || q.is_zero() || !q.is_homogeneous() || q.total_degree() != 2)
        throw validation_error("conic_rank: expected a nonzero quadratic form in 3 variables");
    QMatrix gram(3, QRow(3, Q(0)));
    for (const auto& [e, c] : q.terms()) {
        int i = -1, j = -1;
        for (int k = 0; k < 3; ++k) {
            if (e[static_cast<std::size_t>(k)] == 2) i = j = k;
            if (e[static_cast<std::size_t>(k)] == 1) (i < 0 ? i : j) = k;
        }
        if (i == j)
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = c;
        else {
            gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c / 2;
            gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c / 2;
        }
    }
    return matrix_rank(gram);
}

struct CoordinateFlag {
    int n = 0; // valuation rank
};

struct SurfaceCurveFlag {
    MPoly divisor_poly; // homogeneous, declared irreducible by the model author
    CurveParam param;

    static SurfaceCurveFlag make(MPoly divisor, CurveParam param) {
        SurfaceCurveFlag f{std::move(divisor), std::move(param)};
        if (f.divisor_poly.is_zero() || !f.divisor_poly.is_homogeneous())
            throw validation_error("flag divisor must be a nonzero homogeneous polynomial");
        if (f.param.components.size() != f.divisor_poly.var_count())
            throw validation_error("flag parametrization arity does not match ambient coordinates");
        if (f.divisor_poly.var_count() == 3 && f.divisor_poly.total_degree() == 2 &&
            conic_rank(f.divisor_poly) < 3)
            throw validation_error("flag divisor is a degenerate conic (Gram rank < 3)");
        // The parametrization must actually land on the divisor.
        if (!f.divisor_poly.substitute(f.param.components).is_zero())
            throw validation_error("flag parametrization does not lie on the flag divisor");
        return f;
    }
};

struct ToricFlag {
    std::vector<Int> vertex;              // lattice vertex of the model polytope
    std::vector<std::vector<Int>> basis;  // unimodular edge basis, rows applied to (p - vertex)

    static ToricFlag make(std::vector<Int> vertex, std::vector<std::vector<Int>> basis) {
        ToricFlag f{std::move(vertex), std::move(basis)};
        const std::size_t n = f.vertex.size();
        if (f.basis.size() != n) throw validation_error("toric flag: basis must be square");
        QMatrix m(n, QRow(n));
        for (std::size_t i = 0; i < n; ++i) {
            if (f.basis[i].size() != n) throw validation_error("toric flag: basis must be square");
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Q(f.basis[i][j]);
        }
        Q det = determinant(m);
        if (det != 1 && det != -1)
            throw validation_error("toric flag: edge basis must be unimodular");
        return f;
    }
};

// One step of a triangular substitution chain: the graph hypersurface
// { var = rhs } with rhs free of var; hom_divisor is its homogeneous form,
// used by the semigroup builder to reach sections with positive order.
struct SubstitutionStep {
    std::size_t var;
    MPoly rhs;
    MPoly hom_divisor;
};

struct SubstitutionFlag {
    std::size_t chart_var = 0;
    std::vector<SubstitutionStep> steps;
    std::size_t order_var = 0; // final valuation: order in this variable at 0

    static SubstitutionFlag make(std::size_t chart_var, std::vector<SubstitutionStep> steps,
                                 std::size_t order_var) {
        SubstitutionFlag f{chart_var, std::move(steps), order_var};
        for (const auto& s : f.steps) {
            if (s.var == f.chart_var || s.var == f.order_var)
                throw validation_error("substitution flag: step variable collides");
            for (const auto& [e, c] : s.rhs.terms()) {
                (void)c;
                if (e[s.var] != 0)
                    throw validation_error("substitution flag: step is not triangular");
            }
        }
        return f;
    }
};

using FlagChart = std::variant<CoordinateFlag, SurfaceCurveFlag, ToricFlag, SubstitutionFlag>;

// ---------------------------------------------------------------------------

// Iterated coordinate valuation: nu_k is the minimal exponent of variable k
// among the terms surviving the previous steps.  Equals the lex-minimal
// exponent vector of f truncated to the first n variables.
inline std::vector<int> coord_flag_valuation(const MPoly& f, int n) {
    if (f.is_zero()) throw validation_error("zero section");
    if (static_cast<int>(f.var_count()) < n)
        throw validation_error("coordinate flag: polynomial has fewer variables than the flag rank");
    std::vector<Exp> live;
    for (const auto& [e, c] : f.terms()) {
        (void)c;
        live.push_back(e);
    }
    std::vector<int> nu;
    for (int k = 0; k < n; ++k) {
        int m = live.front()[static_cast<std::size_t>(k)];
        for (const auto& e : live) m = std::min(m, e[static_cast<std::size_t>(k)]);
        nu.push_back(m);
        std::vector<Exp> next;
        for (const auto& e : live)
            if (e[static_cast<std::size_t>(k)] == m) next.push_back(e);
        live = std::move(next);
    }
    return nu;
}

// Order of vanishing at t0 of the pullback f(param(t)).
inline int restriction_order(const MPoly& f, const CurveParam& param) {
    if (f.is_zero()) throw validation_error("zero section");
    MPoly pullback = f.substitute(param.components);
    if (pullback.is_zero())
        throw computation_error("section vanishes on flag curve");
    return order_at(pullback, param.base_point_param);
}

// t-adic order of the pullback: the intersection multiplicity of {s = 0}
// with a unibranch parametrized curve at the marked point.
inline int local_multiplicity(const MPoly& s, const CurveParam& param) {
    return restriction_order(s, param);
}

// Two-step valuation on a surface: order along the flag curve, then order of
// the residual section at the flag point.
inline std::vector<int> surface_flag_valuation(const MPoly& f, const SurfaceCurveFlag& flag) {
    if (f.is_zero()) throw validation_error("zero section");
    int nu1 = divisor_order(f, flag.divisor_poly);
    MPoly residual = f;
    for (int i = 0; i < nu1; ++i) residual = *residual.divided_by(flag.divisor_poly);
    return {nu1, restriction_order(residual, flag.param)};
}

inline std::vector<Int> toric_flag_valuation(const std::vector<Int>& point, const ToricFlag& flag) {
    const std::size_t n = flag.vertex.size();
    if (point.size() != n) throw validation_error("toric flag: point dimension mismatch");
    std::vector<Int> nu(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) nu[i] += flag.basis[i][j] * (point[j] - flag.vertex[j]);
        if (nu[i] < 0)
            throw computation_error("flag vertex/basis inconsistent with polytope");
    }
    return nu;
}

// Valuation along a triangular substitution chain.  At each step the section
// is expanded in powers of (var - rhs); the order is the first nonvanishing
// coefficient, which becomes the section on the next stratum.
inline std::vector<int> substitution_flag_valuation(const MPoly& f, const SubstitutionFlag& flag) {
    if (f.is_zero()) throw validation_error("zero section");
    if (f.var_count() != flag.steps.size() + 2 || !f.is_homogeneous())
        throw validation_error(
            "substitution flag: expected a homogeneous section in rank+1 variables");
    MPoly cur = f.dehomogenize(flag.chart_var);
    // Variable indices shift after dehomogenization.
    auto shifted = [&](std::size_t v) { return v > flag.chart_var ? v - 1 : v; };
    std::vector<int> nu;
    for (const auto& step : flag.steps) {
        std::size_t v = shifted(step.var);
        // Substitute var -> var + rhs; the var-adic order is the divisor order.
        std::vector<MPoly> images;
        for (std::size_t i = 0; i < cur.var_count(); ++i)
            images.push_back(MPoly::variable(cur.vars(), i));
        MPoly rhs_local(cur.vars());
        for (const auto& [e, c] : step.rhs.terms()) {
            Exp shifted_e(cur.var_count(), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) shifted_e[shifted(i)] = e[i];
            rhs_local.add_term(std::move(shifted_e), c);
        }
        images[v] = images[v] + rhs_local;
        MPoly expanded = cur.substitute(images);
        int k = expanded.min_exponent_of(v);
        nu.push_back(k);
        // Extract the coefficient of var^k and drop var.
        MPoly next(cur.vars());
        for (const auto& [e, c] : expanded.terms()) {
            if (e[v] != k) continue;
            Exp f2 = e;
            f2[v] = 0;
            next.add_term(std::move(f2), c);
        }
        cur = std::move(next);
    }
    nu.push_back(cur.min_exponent_of(shifted(flag.order_var)));
    return nu;
}

} // namespace okbody
