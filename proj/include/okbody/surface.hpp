#pragma once

// Intersection theory on a user-declared Picard lattice, Zariski
// decompositions, the chamber scan of D_t = D - t*C along a flag curve, and
// the resulting Okounkov polygon { a <= t <= mu, alpha(t) <= y <= beta(t) }.
//
// Correctness is relative to the declared curve list: pseudo-effectivity and
// nefness are only tested against the declared curves plus the (P.P) >= 0
// check.  Rays whose pseudo-effective threshold is irrational relative to
// the declared data are reported as computation errors rather than
// approximated.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "okbody/errors.hpp"
#include "okbody/polytope.hpp"
#include "okbody/rational.hpp"

namespace okbody {

struct DivisorClass {
    std::vector<Q> coeffs;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coeffs == b.coeffs;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
        return r;
    }
    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
        return r;
    }
    friend DivisorClass operator*(const Q& s, const DivisorClass& a) {
        DivisorClass r = a;
        for (auto& c : r.coeffs) c *= s;
        return r;
    }
};

struct SurfaceModel {
    std::vector<std::string> class_names;
    QMatrix gram; // symmetric intersection form
    std::vector<std::string> curve_names;
    std::vector<DivisorClass> curves; // declared irreducible effective classes

    std::size_t rank() const { return class_names.size(); }

    static SurfaceModel make(std::vector<std::string> class_names, QMatrix gram,
                             std::vector<std::string> curve_names,
                             std::vector<DivisorClass> curves) {
        SurfaceModel m{std::move(class_names), std::move(gram), std::move(curve_names),
                       std::move(curves)};
        const std::size_t r = m.rank();
        if (m.gram.size() != r) throw validation_error("gram matrix rank mismatch");
        for (std::size_t i = 0; i < r; ++i) {
            if (m.gram[i].size() != r) throw validation_error("gram matrix is not square");
            for (std::size_t j = 0; j < i; ++j)
                if (m.gram[i][j] != m.gram[j][i])
                    throw validation_error("gram matrix is not symmetric");
        }
        if (m.curve_names.size() != m.curves.size())
            throw validation_error("curve names do not match curve classes");
        for (const auto& c : m.curves)
            if (c.coeffs.size() != r) throw validation_error("curve class length mismatch");
        return m;
    }
};

inline Q intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
    const std::size_t r = model.rank();
    if (a.coeffs.size() != r || b.coeffs.size() != r)
        throw validation_error("divisor class length mismatch");
    Q s = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < r; ++j) s += a.coeffs[i] * model.gram[i][j] * b.coeffs[j];
    }
    return s;
}

struct ZariskiDecomp {
    DivisorClass P;
    DivisorClass N;
    std::vector<std::pair<std::size_t, Q>> coefficients; // (curve index, a_C > 0), sorted
};

namespace surface_detail {

inline QMatrix support_gram(const SurfaceModel& model, const std::vector<std::size_t>& support) {
    QMatrix m(support.size(), QRow(support.size()));
    for (std::size_t i = 0; i < support.size(); ++i)
        for (std::size_t j = 0; j < support.size(); ++j)
            m[i][j] = intersect(model, model.curves[support[i]], model.curves[support[j]]);
    return m;
}

} // namespace surface_detail

// Zariski decomposition D = P + N relative to the declared curves, by the
// standard enlarging fixpoint on the negative support.
inline ZariskiDecomp zariski(const SurfaceModel& model, const DivisorClass& D) {
    std::set<std::size_t> support;
    const std::size_t ncurves = model.curves.size();
    for (std::size_t iter = 0; iter <= ncurves + 1; ++iter) {
        std::vector<std::size_t> sup(support.begin(), support.end());
        QRow a(sup.size(), Q(0));
        if (!sup.empty()) {
            QMatrix m = surface_detail::support_gram(model, sup);
            if (!is_negative_definite(m))
                throw computation_error(
                    "not pseudo-effective relative to declared curves (support not negative definite)");
            QRow b(sup.size());
            for (std::size_t i = 0; i < sup.size(); ++i)
                b[i] = intersect(model, D, model.curves[sup[i]]);
            auto sol = solve_linear(m, b);
            a = *sol; // negative definite => nonsingular
            for (const auto& x : a)
                if (x < 0)
                    throw computation_error(
                        "not pseudo-effective relative to declared curves (negative coefficient)");
        }
        DivisorClass N{std::vector<Q>(model.rank(), Q(0))};
        for (std::size_t i = 0; i < sup.size(); ++i) N = N + a[i] * model.curves[sup[i]];
        DivisorClass P = D - N;
        bool grew = false;
        for (std::size_t c = 0; c < ncurves; ++c) {
            if (support.count(c)) continue;
            if (intersect(model, P, model.curves[c]) < 0) {
                support.insert(c);
                grew = true;
            }
        }
        if (grew) continue;
        if (intersect(model, P, P) < 0)
            throw computation_error("not pseudo-effective relative to declared curves ((P.P) < 0)");
        ZariskiDecomp out{P, N, {}};
        for (std::size_t i = 0; i < sup.size(); ++i)
            if (a[i] > 0) out.coefficients.emplace_back(sup[i], a[i]);
        return out;
    }
    throw computation_error("zariski fixpoint did not stabilize");
}

inline Q volume_surface(const SurfaceModel& model, const DivisorClass& D) {
    auto dec = zariski(model, D);
    Q vol = intersect(model, dec.P, dec.P);
    if (vol <= 0) throw computation_error("divisor is not big");
    return vol;
}

// An affine-linear function c0 + c1 * t.
struct LinFn {
    Q c0, c1;
    Q at(const Q& t) const { return c0 + c1 * t; }
};

struct Chamber {
    Q t_begin, t_end;
    std::vector<std::size_t> support;   // declared curve indices, ascending
    std::vector<LinFn> coefficients;    // aligned with support
    LinFn beta;                         // (P_t . C_flag)
};

struct ChamberScan {
    std::vector<Q> breakpoints; // 0 = t_0 < ... < t_k = mu
    std::vector<Chamber> chambers;
    Q mu;
};

namespace surface_detail {

struct ChamberModel {
    std::vector<std::size_t> support;
    std::vector<LinFn> coeff;       // aligned with support
    DivisorClass P0, P1;            // P_t = P0 + t * P1
};

// Solves the orthogonality system on the given support for D_t = D - t*C:
// coefficients are affine-linear in t within a chamber.
inline std::optional<ChamberModel> chamber_model(const SurfaceModel& model, const DivisorClass& D,
                                                 const DivisorClass& C,
                                                 const std::vector<std::size_t>& sup) {
    ChamberModel cm;
    cm.support = sup;
    QRow a0(sup.size(), Q(0)), a1(sup.size(), Q(0));
    if (!sup.empty()) {
        QMatrix m = support_gram(model, sup);
        if (!is_negative_definite(m)) return std::nullopt;
        QRow b0(sup.size()), b1(sup.size());
        for (std::size_t i = 0; i < sup.size(); ++i) {
            b0[i] = intersect(model, D, model.curves[sup[i]]);
            b1[i] = -intersect(model, C, model.curves[sup[i]]);
        }
        a0 = *solve_linear(m, b0);
        a1 = *solve_linear(m, b1);
    }
    for (std::size_t i = 0; i < sup.size(); ++i) cm.coeff.push_back(LinFn{a0[i], a1[i]});
    cm.P0 = D;
    cm.P1 = Q(-1) * C;
    for (std::size_t i = 0; i < sup.size(); ++i) {
        cm.P0 = cm.P0 - a0[i] * model.curves[sup[i]];
        cm.P1 = cm.P1 - a1[i] * model.curves[sup[i]];
    }
    return cm;
}

// Smallest root of c2 t^2 + c1 t + c0 = 0 in [lo, hi] (hi absent = +inf).
// Irrationality is reported only when an irrational root actually lies in
// the interval; roots beyond it are irrelevant and never computed.
inline std::optional<Q> smallest_root_in(const Q& c2, const Q& c1, const Q& c0, const Q& lo,
                                         const std::optional<Q>& hi) {
    auto in_range = [&](const Q& t) { return t >= lo && (!hi || t <= *hi); };
    if (c2 == 0) {
        if (c1 == 0) return std::nullopt; // constant; no isolated root
        Q t = -c0 / c1;
        return in_range(t) ? std::optional<Q>(t) : std::nullopt;
    }
    Q disc = c1 * c1 - 4 * c2 * c0;
    if (disc < 0) return std::nullopt;
    if (auto r = q_sqrt_exact(disc)) {
        Q r1 = (-c1 - *r) / (2 * c2), r2 = (-c1 + *r) / (2 * c2);
        if (r1 > r2) std::swap(r1, r2);
        if (in_range(r1)) return r1;
        if (in_range(r2)) return r2;
        return std::nullopt;
    }
    // Roots are irrational, hence distinct from the rational endpoints; q is
    // nonzero on [lo, hi] iff it keeps one strict sign there, which for a
    // parabola is decided by the endpoint signs and the vertex position.
    auto val = [&](const Q& t) { return c0 + c1 * t + c2 * t * t; };
    Q vertex = -c1 / (2 * c2);
    bool lo_pos = val(lo) > 0, hi_pos = hi ? val(*hi) > 0 : c2 > 0;
    bool vertex_outside = vertex < lo || (hi && vertex > *hi);
    bool no_root = (lo_pos && hi_pos && (c2 < 0 || vertex_outside)) ||
                   (!lo_pos && !hi_pos && (c2 > 0 || vertex_outside));
    if (no_root) return std::nullopt;
    throw computation_error("pseudo-effective threshold is irrational relative to declared data");
}

} // namespace surface_detail

// Walks D_t = D - t*C_flag through its Zariski chambers with exact rational
// breakpoints; the scan ends at mu, the pseudo-effective threshold.
inline ChamberScan chamber_scan(const SurfaceModel& model, const DivisorClass& D,
                                const DivisorClass& C_flag, int chamber_cap = 64) {
    {
        auto dec = zariski(model, D);
        if (intersect(model, dec.P, dec.P) <= 0) throw computation_error("divisor is not big");
    }
    bool declared = false;
    for (const auto& c : model.curves)
        if (c == C_flag) declared = true;
    if (!declared)
        throw validation_error("flag class must be one of the declared curve classes");

    ChamberScan scan;
    Q t_cur = 0;
    std::set<std::size_t> support;
    {
        auto dec = zariski(model, D);
        for (const auto& [c, a] : dec.coefficients) {
            (void)a;
            support.insert(c);
        }
    }
    scan.breakpoints.push_back(t_cur);

    for (int step = 0; step < chamber_cap; ++step) {
        // Stabilize the support at t_cur+: drop curves whose coefficient is
        // zero and falling, add curves with (P_t . C) = 0 and falling.
        surface_detail::ChamberModel cm;
        for (std::size_t guard = 0;; ++guard) {
            if (guard > model.curves.size() * model.curves.size() + 4)
                throw computation_error("chamber support did not stabilize");
            std::vector<std::size_t> sup(support.begin(), support.end());
            auto maybe = surface_detail::chamber_model(model, D, C_flag, sup);
            if (!maybe) {
                // Adding the required curve destroys negative definiteness:
                // the ray leaves the pseudo-effective cone here.
                scan.mu = t_cur;
                if (scan.breakpoints.back() != t_cur) scan.breakpoints.push_back(t_cur);
                return scan;
            }
            cm = *maybe;
            bool changed = false;
            for (std::size_t i = 0; i < sup.size(); ++i) {
                Q val = cm.coeff[i].at(t_cur);
                if (val < 0) throw computation_error("negative Zariski coefficient in chamber");
                if (val == 0 && cm.coeff[i].c1 < 0) {
                    support.erase(sup[i]);
                    changed = true;
                }
            }
            if (changed) continue;
            for (std::size_t c = 0; c < model.curves.size(); ++c) {
                if (support.count(c)) continue;
                Q g0 = intersect(model, cm.P0, model.curves[c]);
                Q g1 = intersect(model, cm.P1, model.curves[c]);
                Q val = g0 + g1 * t_cur;
                if (val < 0 || (val == 0 && g1 < 0)) {
                    support.insert(c);
                    changed = true;
                }
            }
            if (!changed) break;
        }

        // Volume within this chamber: q(t) = (P_t . P_t).
        Q q2 = intersect(model, cm.P1, cm.P1);
        Q q1 = 2 * intersect(model, cm.P0, cm.P1);
        Q q0 = intersect(model, cm.P0, cm.P0);
        Q vol_now = q0 + q1 * t_cur + q2 * t_cur * t_cur;
        if (vol_now == 0 && (q1 + 2 * q2 * t_cur) < 0) {
            scan.mu = t_cur;
            if (scan.breakpoints.back() != t_cur) scan.breakpoints.push_back(t_cur);
            return scan;
        }

        std::optional<Q> next;
        bool next_is_mu = false;
        auto consider = [&](const std::optional<Q>& t, bool is_mu) {
            if (!t || *t <= t_cur) return;
            if (!next || *t < *next) {
                next = *t;
                next_is_mu = is_mu;
            }
        };
        // Coefficient hits zero.
        for (const auto& fn : cm.coeff)
            if (fn.c1 < 0) consider(-fn.c0 / fn.c1, false);
        // A declared curve outside the support crosses (P_t . C) = 0 downward.
        for (std::size_t c = 0; c < model.curves.size(); ++c) {
            if (support.count(c)) continue;
            Q g0 = intersect(model, cm.P0, model.curves[c]);
            Q g1 = intersect(model, cm.P1, model.curves[c]);
            if (g1 < 0) consider(std::optional<Q>(-g0 / g1), false);
        }
        // Volume hits zero; only roots before the earliest linear event can
        // matter, so the search is bounded by it.
        consider(surface_detail::smallest_root_in(q2, q1, q0, t_cur, next), true);

        if (!next)
            throw computation_error(
                "ray admits no further rational events; model data is inconsistent");

        Q t_end = *next;
        scan.chambers.push_back(Chamber{
            t_cur, t_end, cm.support, cm.coeff,
            LinFn{intersect(model, cm.P0, C_flag), intersect(model, cm.P1, C_flag)}});
        scan.breakpoints.push_back(t_end);
        if (next_is_mu) {
            scan.mu = t_end;
            return scan;
        }
        t_cur = t_end;
    }
    throw computation_error("chamber cap exceeded");
}

inline Q mu(const SurfaceModel& model, const DivisorClass& D, const DivisorClass& C_flag) {
    return chamber_scan(model, D, C_flag).mu;
}

enum class PointMode { generic, explicit_ord };

struct OkBody2D {
    Q a, mu;
    std::vector<Q> knots;          // a = knots[0] < ... < knots.back() = mu
    std::vector<LinFn> alpha;      // per interval between knots
    std::vector<LinFn> beta;
    QPolytope as_polytope;
};

// The Okounkov polygon of a big divisor: a is the flag-curve coefficient in
// N(D); in generic point mode (x outside every declared curve) alpha = 0; in
// explicit mode the caller supplies ord_x(C|_Y1) per declared curve.
inline OkBody2D okounkov_body_surface(const SurfaceModel& model, const DivisorClass& D,
                                      const DivisorClass& C_flag,
                                      PointMode mode = PointMode::generic,
                                      const std::map<std::size_t, int>* ord_at_point = nullptr) {
    if (mode == PointMode::explicit_ord) {
        if (!ord_at_point) throw validation_error("explicit point mode requires ord data");
        for (std::size_t c = 0; c < model.curves.size(); ++c)
            if (!ord_at_point->count(c))
                throw validation_error("explicit point mode: missing ord data for curve \"" +
                                       model.curve_names[c] + "\"");
    }
    auto scan = chamber_scan(model, D, C_flag);

    Q a = 0;
    {
        auto dec = zariski(model, D);
        for (const auto& [c, coeff] : dec.coefficients)
            if (model.curves[c] == C_flag) a = coeff;
    }

    OkBody2D body;
    body.a = a;
    body.mu = scan.mu;
    std::vector<QVector> corners;
    auto alpha_of = [&](const Chamber& ch) {
        LinFn fn{Q(0), Q(0)};
        if (mode == PointMode::explicit_ord) {
            for (std::size_t i = 0; i < ch.support.size(); ++i) {
                int ord = ord_at_point->at(ch.support[i]);
                fn.c0 += ord * ch.coefficients[i].c0;
                fn.c1 += ord * ch.coefficients[i].c1;
            }
        }
        return fn;
    };
    for (const auto& ch : scan.chambers) {
        if (ch.t_end <= a) continue;
        Q lo = std::max(ch.t_begin, a);
        LinFn alpha = alpha_of(ch);
        LinFn beta{alpha.c0 + ch.beta.c0, alpha.c1 + ch.beta.c1};
        if (body.knots.empty()) body.knots.push_back(lo);
        body.knots.push_back(ch.t_end);
        body.alpha.push_back(alpha);
        body.beta.push_back(beta);
        if (alpha.at(lo) > beta.at(lo) || alpha.at(ch.t_end) > beta.at(ch.t_end))
            throw computation_error("alpha exceeds beta on the body interval");
        corners.push_back(QVector{lo, alpha.at(lo)});
        corners.push_back(QVector{lo, beta.at(lo)});
        corners.push_back(QVector{ch.t_end, alpha.at(ch.t_end)});
        corners.push_back(QVector{ch.t_end, beta.at(ch.t_end)});
    }
    if (corners.empty()) {
        // mu == a: the body degenerates to the vertical slice at t = a.
        if (scan.chambers.empty())
            throw computation_error("empty chamber scan for a big divisor; model data inconsistent");
        const auto& last = scan.chambers.back();
        LinFn alpha = alpha_of(last);
        LinFn beta{alpha.c0 + last.beta.c0, alpha.c1 + last.beta.c1};
        corners.push_back(QVector{a, alpha.at(a)});
        corners.push_back(QVector{a, beta.at(a)});
        body.knots.push_back(a);
        body.alpha.push_back(alpha);
        body.beta.push_back(beta);
    }
    body.as_polytope = QPolytope::hull(corners);
    return body;
}

struct TranslateDecomposition {
    OkBody2D body_of_P;
    QVector shift;
    OkBody2D body_of_D;
};

// Okounkov bodies of D and of its nef part differ by the rational translate
// (coefficient of the flag curve in N, ord_x(N|_Y1)); both sides are
// computed and the identity is asserted exactly.
inline TranslateDecomposition translate_decomposition(const SurfaceModel& model,
                                                      const DivisorClass& D,
                                                      const DivisorClass& C_flag,
                                                      PointMode mode = PointMode::generic,
                                                      const std::map<std::size_t, int>* ord = nullptr) {
    auto dec = zariski(model, D);
    Q shift_t = 0, shift_y = 0;
    for (const auto& [c, coeff] : dec.coefficients) {
        if (model.curves[c] == C_flag) shift_t = coeff;
        if (mode == PointMode::explicit_ord) shift_y += ord->at(c) * coeff;
    }
    TranslateDecomposition out{okounkov_body_surface(model, dec.P, C_flag, mode, ord),
                               QVector{shift_t, shift_y},
                               okounkov_body_surface(model, D, C_flag, mode, ord)};
    if (out.body_of_D.as_polytope != out.body_of_P.as_polytope.affine_image(Q(1), out.shift))
        throw computation_error("translate identity failed; declared model data is inconsistent");
    return out;
}

} // namespace okbody
