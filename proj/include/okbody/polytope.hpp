#pragma once

// Exact rational polytopes in ambient dimension 1..3: convex hulls with
// canonical minimal vertex lists, derived halfspaces, volumes, axis slices
// and affine images.  Lower-dimensional hulls are first-class values that
// carry their affine dimension.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "okbody/errors.hpp"
#include "okbody/rational.hpp"

namespace okbody {

struct QVector {
    std::vector<Q> coords;

    QVector() = default;
    explicit QVector(std::vector<Q> c) : coords(std::move(c)) {}
    QVector(std::initializer_list<Q> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }
    const Q& operator[](std::size_t i) const { return coords[i]; }
    Q& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const QVector& a, const QVector& b) { return a.coords == b.coords; }
    friend bool operator!=(const QVector& a, const QVector& b) { return !(a == b); }
    friend bool operator<(const QVector& a, const QVector& b) {
        return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                            b.coords.end());
    }
    friend QVector operator+(const QVector& a, const QVector& b) {
        QVector r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
        return r;
    }
    friend QVector operator-(const QVector& a, const QVector& b) {
        QVector r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
        return r;
    }
    friend QVector operator*(const Q& s, const QVector& a) {
        QVector r = a;
        for (auto& c : r.coords) c *= s;
        return r;
    }
};

inline Q dot(const QVector& a, const QVector& b) {
    Q s = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
    return s;
}

// Closed halfspace { x : <normal, x> <= offset }.  Normals are primitive
// integer vectors so halfspace lists are canonical.
struct Halfspace {
    QVector normal;
    Q offset;

    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
    friend bool operator<(const Halfspace& a, const Halfspace& b) {
        if (a.normal != b.normal) return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

inline Halfspace normalize_halfspace(QVector normal, Q offset) {
    Int scale = 1;
    for (const Q& c : normal.coords) scale = lcm(scale, q_den(c));
    Int g = 0;
    for (const Q& c : normal.coords) g = gcd(g, q_num(c) * (scale / q_den(c)));
    if (g == 0) throw computation_error("zero halfspace normal");
    Q f = Q(scale, g);
    for (auto& c : normal.coords) c *= f;
    offset *= f;
    return Halfspace{std::move(normal), std::move(offset)};
}

namespace detail {

inline Q cross2(const QVector& o, const QVector& a, const QVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline Q det3(const QVector& u, const QVector& v, const QVector& w) {
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
           u[2] * (v[0] * w[1] - v[1] * w[0]);
}

// Strict 2D hull (Andrew monotone chain); returns the CCW cycle without
// collinear points.  Input must be deduplicated and of affine dimension 2.
inline std::vector<QVector> hull2d_ccw(std::vector<QVector> pts) {
    std::sort(pts.begin(), pts.end());
    const std::size_t n = pts.size();
    std::vector<QVector> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

struct Tri {
    std::size_t a, b, c;
};

// Incremental exact 3D hull.  Points must be deduplicated, of affine
// dimension 3, and are inserted in lexicographic order so that every point
// processed after the seed tetrahedron is strictly outside the current hull
// or strictly inside/on it (in which case it is skipped, correctly, because
// it can be expressed through earlier points).
inline std::vector<Tri> hull3d_faces(const std::vector<QVector>& pts) {
    const std::size_t n = pts.size();
    // Seed tetrahedron: greedily pick 4 affinely independent points.
    std::size_t i0 = 0, i1 = 0, i2 = 0, i3 = 0;
    for (i1 = 1; i1 < n && pts[i1] == pts[i0]; ++i1) {}
    bool found = false;
    for (i2 = i1 + 1; i2 < n; ++i2) {
        QVector u = pts[i1] - pts[i0], v = pts[i2] - pts[i0];
        QVector cr{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                   u[0] * v[1] - u[1] * v[0]};
        if (cr[0] != 0 || cr[1] != 0 || cr[2] != 0) {
            found = true;
            break;
        }
    }
    if (!found) throw computation_error("hull3d: points not full-dimensional");
    found = false;
    for (i3 = 0; i3 < n; ++i3) {
        if (i3 == i0 || i3 == i1 || i3 == i2) continue;
        if (det3(pts[i1] - pts[i0], pts[i2] - pts[i0], pts[i3] - pts[i0]) != 0) {
            found = true;
            break;
        }
    }
    if (!found) throw computation_error("hull3d: points not full-dimensional");

    auto orient = [&](const Tri& t, const QVector& p) {
        return det3(pts[t.b] - pts[t.a], pts[t.c] - pts[t.a], p - pts[t.a]);
    };
    std::vector<Tri> faces;
    auto add_face = [&](std::size_t a, std::size_t b, std::size_t c, const QVector& inside) {
        Tri t{a, b, c};
        if (orient(t, inside) > 0) std::swap(t.b, t.c);
        faces.push_back(t);
    };
    QVector centroid{(pts[i0][0] + pts[i1][0] + pts[i2][0] + pts[i3][0]) / 4,
                     (pts[i0][1] + pts[i1][1] + pts[i2][1] + pts[i3][1]) / 4,
                     (pts[i0][2] + pts[i1][2] + pts[i2][2] + pts[i3][2]) / 4};
    add_face(i0, i1, i2, centroid);
    add_face(i0, i1, i3, centroid);
    add_face(i0, i2, i3, centroid);
    add_face(i1, i2, i3, centroid);

    for (std::size_t p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        std::vector<char> visible(faces.size(), 0);
        bool any = false;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (orient(faces[f], pts[p]) > 0) {
                visible[f] = 1;
                any = true;
            }
        }
        if (!any) continue; // inside or on the boundary of the current hull
        // Horizon: directed edges of visible faces whose reverse is not visible.
        std::map<std::pair<std::size_t, std::size_t>, int> edge_count;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!visible[f]) continue;
            const Tri& t = faces[f];
            std::array<std::pair<std::size_t, std::size_t>, 3> es{
                std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}};
            for (auto& e : es) {
                auto rev = std::make_pair(e.second, e.first);
                if (auto it = edge_count.find(rev); it != edge_count.end())
                    edge_count.erase(it);
                else
                    edge_count[e] = 1;
            }
        }
        std::vector<Tri> next;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (!visible[f]) next.push_back(faces[f]);
        for (const auto& [e, cnt] : edge_count) {
            (void)cnt;
            next.push_back(Tri{e.first, e.second, p});
        }
        faces = std::move(next);
    }
    return faces;
}

// Exact cyclic (angular) order of 2D points around an interior point.
inline std::vector<QVector> angular_cycle(std::vector<QVector> pts, const QVector& center) {
    auto half = [&](const QVector& p) {
        Q dy = p[1] - center[1], dx = p[0] - center[0];
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const QVector& p, const QVector& q) {
        int hp = half(p), hq = half(q);
        if (hp != hq) return hp < hq;
        Q cr = (p[0] - center[0]) * (q[1] - center[1]) - (p[1] - center[1]) * (q[0] - center[0]);
        if (cr != 0) return cr > 0;
        return p < q;
    });
    return pts;
}

} // namespace detail

class QPolytope {
public:
    QPolytope() = default;

    // Convex hull of points sharing an ambient dimension in {1,2,3}.
    static QPolytope hull(const std::vector<QVector>& points);

    static QPolytope segment(const Q& a, const Q& b) {
        return hull({QVector{a}, QVector{b}});
    }

    int ambient_dim() const { return ambient_dim_; }
    int affine_dim() const { return affine_dim_; }
    const std::vector<QVector>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

    bool contains(const QVector& p) const {
        if (p.dim() != ambient_dim_) throw validation_error("contains: dimension mismatch");
        for (const auto& h : halfspaces_)
            if (dot(h.normal, p) > h.offset) return false;
        return true;
    }

    bool contains(const QPolytope& other) const {
        for (const auto& v : other.vertices_)
            if (!contains(v)) return false;
        return true;
    }

    // Euclidean volume of the appropriate dimension; 0 for bodies that are
    // not full-dimensional in their ambient space.
    Q volume() const;

    // { x in P : x[axis] = t } with the axis coordinate dropped.
    QPolytope slice(int axis, const Q& t) const;

    // { scale * x + translate : x in P }, scale > 0.
    QPolytope affine_image(const Q& scale, const QVector& translate) const;

    bool is_simplex() const {
        return static_cast<int>(vertices_.size()) == affine_dim_ + 1;
    }

    std::array<Q, 2> coord_range(int axis) const {
        Q lo = vertices_.front()[static_cast<std::size_t>(axis)];
        Q hi = lo;
        for (const auto& v : vertices_) {
            lo = std::min(lo, v[static_cast<std::size_t>(axis)]);
            hi = std::max(hi, v[static_cast<std::size_t>(axis)]);
        }
        return {lo, hi};
    }

    static QPolytope minkowski_sum(const QPolytope& a, const QPolytope& b) {
        if (a.ambient_dim_ != b.ambient_dim_)
            throw validation_error("minkowski_sum: dimension mismatch");
        std::vector<QVector> sums;
        for (const auto& u : a.vertices_)
            for (const auto& v : b.vertices_) sums.push_back(u + v);
        return hull(sums);
    }

    std::vector<QVector> lattice_points() const;

    bool is_lattice_polytope() const {
        for (const auto& v : vertices_)
            for (const auto& c : v.coords)
                if (q_den(c) != 1) return false;
        return true;
    }

    friend bool operator==(const QPolytope& a, const QPolytope& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }
    friend bool operator!=(const QPolytope& a, const QPolytope& b) { return !(a == b); }

private:
    int ambient_dim_ = 0;
    int affine_dim_ = -1;
    std::vector<QVector> vertices_;     // lexicographically sorted, minimal
    std::vector<Halfspace> halfspaces_; // sorted; equality pairs for thin bodies

    static QPolytope hull_full_dim(std::vector<QVector> pts);
    static QPolytope from_halfspace_section(int dim, const std::vector<Halfspace>& hs);

    // CCW vertex cycle of a full-dimensional 2D polytope.
    std::vector<QVector> cycle2d() const {
        QVector c{Q(0), Q(0)};
        for (const auto& v : vertices_) {
            c[0] += v[0];
            c[1] += v[1];
        }
        c[0] /= static_cast<int>(vertices_.size());
        c[1] /= static_cast<int>(vertices_.size());
        return detail::angular_cycle(vertices_, c);
    }
};

inline QPolytope QPolytope::hull(const std::vector<QVector>& points) {
    if (points.empty()) throw validation_error("hull: no points");
    const int dim = points.front().dim();
    if (dim < 1 || dim > 3) throw validation_error("hull: ambient dimension must be 1..3");
    for (const auto& p : points)
        if (p.dim() != dim) throw validation_error("hull: mixed dimensions");

    std::vector<QVector> pts = points;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Affine dimension via the rank of displacements from the first point.
    QMatrix disp;
    for (std::size_t i = 1; i < pts.size(); ++i) disp.push_back((pts[i] - pts[0]).coords);
    const int adim = disp.empty() ? 0 : matrix_rank(disp);

    if (adim == 0) {
        QPolytope p;
        p.ambient_dim_ = dim;
        p.affine_dim_ = 0;
        p.vertices_ = {pts[0]};
        for (int i = 0; i < dim; ++i) {
            QVector n(std::vector<Q>(static_cast<std::size_t>(dim), Q(0)));
            n[static_cast<std::size_t>(i)] = 1;
            p.halfspaces_.push_back(normalize_halfspace(n, pts[0][static_cast<std::size_t>(i)]));
            n[static_cast<std::size_t>(i)] = -1;
            p.halfspaces_.push_back(normalize_halfspace(n, -pts[0][static_cast<std::size_t>(i)]));
        }
        std::sort(p.halfspaces_.begin(), p.halfspaces_.end());
        return p;
    }

    if (adim == dim) return hull_full_dim(std::move(pts));

    // Lower-dimensional body: map the affine hull isomorphically onto
    // Q^adim, hull there, and pull vertices and halfspaces back.
    QMatrix basis; // rows: adim independent displacement directions
    for (std::size_t i = 1; i < pts.size() && static_cast<int>(basis.size()) < adim; ++i) {
        basis.push_back((pts[i] - pts[0]).coords);
        if (matrix_rank(basis) < static_cast<int>(basis.size())) basis.pop_back();
    }
    // Pivot coordinates R: adim independent columns of the basis matrix.
    std::vector<int> piv_cols;
    {
        QMatrix cols_so_far;
        for (int c = 0; c < dim && static_cast<int>(piv_cols.size()) < adim; ++c) {
            QRow col(basis.size());
            for (std::size_t r = 0; r < basis.size(); ++r) col[r] = basis[r][static_cast<std::size_t>(c)];
            cols_so_far.push_back(col);
            if (matrix_rank(cols_so_far) == static_cast<int>(cols_so_far.size()))
                piv_cols.push_back(c);
            else
                cols_so_far.pop_back();
        }
    }
    // chart(x) solves basis_R^T * lambda = (x - p0)_R.
    QMatrix brt(static_cast<std::size_t>(adim), QRow(static_cast<std::size_t>(adim)));
    for (int i = 0; i < adim; ++i)
        for (int j = 0; j < adim; ++j)
            brt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(piv_cols[static_cast<std::size_t>(i)])];
    auto chart = [&](const QVector& x) {
        QRow rhs(static_cast<std::size_t>(adim));
        for (int i = 0; i < adim; ++i)
            rhs[static_cast<std::size_t>(i)] =
                x[static_cast<std::size_t>(piv_cols[static_cast<std::size_t>(i)])] -
                pts[0][static_cast<std::size_t>(piv_cols[static_cast<std::size_t>(i)])];
        auto sol = solve_linear(brt, rhs);
        return QVector(*sol);
    };

    std::vector<QVector> mapped;
    mapped.reserve(pts.size());
    for (const auto& x : pts) mapped.push_back(chart(x));
    QPolytope low = hull_full_dim(std::move(mapped));

    QPolytope p;
    p.ambient_dim_ = dim;
    p.affine_dim_ = adim;
    std::map<QVector, QVector> back; // chart image -> original
    for (const auto& x : pts) back.emplace(chart(x), x);
    for (const auto& v : low.vertices()) p.vertices_.push_back(back.at(v));
    std::sort(p.vertices_.begin(), p.vertices_.end());

    // Facet halfspaces pulled back through the chart: <a, lambda(x)> <= b
    // becomes <c, x_R> <= b + <c, p0_R> with c solving brt^T c = a.
    QMatrix brt_t(static_cast<std::size_t>(adim), QRow(static_cast<std::size_t>(adim)));
    for (int i = 0; i < adim; ++i)
        for (int j = 0; j < adim; ++j)
            brt_t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                brt[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    for (const auto& h : low.halfspaces()) {
        auto c = solve_linear(brt_t, h.normal.coords);
        QVector n(std::vector<Q>(static_cast<std::size_t>(dim), Q(0)));
        Q off = h.offset;
        for (int i = 0; i < adim; ++i) {
            n[static_cast<std::size_t>(piv_cols[static_cast<std::size_t>(i)])] = (*c)[static_cast<std::size_t>(i)];
            off += (*c)[static_cast<std::size_t>(i)] * pts[0][static_cast<std::size_t>(piv_cols[static_cast<std::size_t>(i)])];
        }
        p.halfspaces_.push_back(normalize_halfspace(n, off));
    }
    // Affine-hull equations, each as a pair of opposite halfspaces.
    for (const auto& n : null_space(basis, static_cast<std::size_t>(dim))) {
        QVector nv(n);
        Q off = dot(nv, pts[0]);
        p.halfspaces_.push_back(normalize_halfspace(nv, off));
        p.halfspaces_.push_back(normalize_halfspace(Q(-1) * nv, -off));
    }
    std::sort(p.halfspaces_.begin(), p.halfspaces_.end());
    p.halfspaces_.erase(std::unique(p.halfspaces_.begin(), p.halfspaces_.end()),
                        p.halfspaces_.end());
    return p;
}

inline QPolytope QPolytope::hull_full_dim(std::vector<QVector> pts) {
    const int dim = pts.front().dim();
    QPolytope p;
    p.ambient_dim_ = dim;
    p.affine_dim_ = dim;

    if (dim == 1) {
        Q lo = pts.front()[0], hi = lo;
        for (const auto& v : pts) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        p.vertices_ = {QVector{lo}, QVector{hi}};
        p.halfspaces_.push_back(normalize_halfspace(QVector{Q(1)}, hi));
        p.halfspaces_.push_back(normalize_halfspace(QVector{Q(-1)}, -lo));
        std::sort(p.halfspaces_.begin(), p.halfspaces_.end());
        return p;
    }

    if (dim == 2) {
        auto cyc = detail::hull2d_ccw(pts);
        p.vertices_ = cyc;
        std::sort(p.vertices_.begin(), p.vertices_.end());
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const QVector& a = cyc[i];
            const QVector& b = cyc[(i + 1) % cyc.size()];
            QVector n{b[1] - a[1], a[0] - b[0]}; // outward for CCW
            p.halfspaces_.push_back(normalize_halfspace(n, dot(n, a)));
        }
        std::sort(p.halfspaces_.begin(), p.halfspaces_.end());
        return p;
    }

    auto faces = detail::hull3d_faces(pts);
    std::set<Halfspace> planes;
    for (const auto& t : faces) {
        const QVector &a = pts[t.a], &b = pts[t.b], &c = pts[t.c];
        QVector u = b - a, v = c - a;
        QVector n{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        planes.insert(normalize_halfspace(n, dot(n, a)));
    }
    p.halfspaces_.assign(planes.begin(), planes.end());
    // A point of the hull is a vertex iff its active facet normals span Q^3.
    for (const auto& x : pts) {
        QMatrix active;
        for (const auto& h : p.halfspaces_)
            if (dot(h.normal, x) == h.offset) active.push_back(h.normal.coords);
        if (static_cast<int>(active.size()) >= 3 && matrix_rank(active) == 3)
            p.vertices_.push_back(x);
    }
    std::sort(p.vertices_.begin(), p.vertices_.end());
    return p;
}

inline Q QPolytope::volume() const {
    if (affine_dim_ < ambient_dim_) return Q(0);
    if (ambient_dim_ == 1) return vertices_.back()[0] - vertices_.front()[0];
    if (ambient_dim_ == 2) {
        // Fan triangulation from the first canonical vertex.
        auto cyc = cycle2d();
        std::size_t start = 0;
        while (cyc[start] != vertices_.front()) ++start;
        Q twice = 0;
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i)
            twice += detail::cross2(cyc[start], cyc[(start + i) % cyc.size()],
                                    cyc[(start + i + 1) % cyc.size()]);
        return abs(twice) / 2;
    }
    // dim 3: cone from the first canonical vertex over facets avoiding it,
    // each facet fanned in its cyclic order.
    const QVector& apex = vertices_.front();
    Q six_vol = 0;
    for (const auto& h : halfspaces_) {
        if (dot(h.normal, apex) == h.offset) continue;
        std::vector<QVector> facet;
        for (const auto& v : vertices_)
            if (dot(h.normal, v) == h.offset) facet.push_back(v);
        // Project the facet onto a coordinate plane where it stays 2D.
        int drop = 0;
        for (int i = 0; i < 3; ++i)
            if (h.normal[static_cast<std::size_t>(i)] != 0) drop = i;
        auto flat = [&](const QVector& v) {
            QVector r;
            for (int i = 0; i < 3; ++i)
                if (i != drop) r.coords.push_back(v[static_cast<std::size_t>(i)]);
            return r;
        };
        std::vector<QVector> flat_pts;
        QVector center{Q(0), Q(0)};
        for (const auto& v : facet) {
            auto f = flat(v);
            center[0] += f[0];
            center[1] += f[1];
            flat_pts.push_back(f);
        }
        center[0] /= static_cast<int>(flat_pts.size());
        center[1] /= static_cast<int>(flat_pts.size());
        auto order = detail::angular_cycle(flat_pts, center);
        std::map<QVector, QVector> back;
        for (const auto& v : facet) back.emplace(flat(v), v);
        std::vector<QVector> cyc;
        for (const auto& f : order) cyc.push_back(back.at(f));
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i)
            six_vol += abs(detail::det3(cyc[0] - apex, cyc[i] - apex, cyc[i + 1] - apex));
    }
    return six_vol / 6;
}

inline QPolytope QPolytope::from_halfspace_section(int dim, const std::vector<Halfspace>& hs) {
    // Vertex enumeration for bounded regions in dimension 1 or 2.
    if (dim == 1) {
        std::optional<Q> lo, hi;
        for (const auto& h : hs) {
            const Q& a = h.normal[0];
            if (a == 0) {
                if (h.offset < 0) return QPolytope(); // empty
                continue;
            }
            Q bound = h.offset / a;
            if (a > 0)
                hi = hi ? std::min(*hi, bound) : bound;
            else
                lo = lo ? std::max(*lo, bound) : bound;
        }
        if (!lo || !hi || *lo > *hi) return QPolytope();
        return hull({QVector{*lo}, QVector{*hi}});
    }
    std::vector<QVector> cand;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            Q det = hs[i].normal[0] * hs[j].normal[1] - hs[i].normal[1] * hs[j].normal[0];
            if (det == 0) continue;
            QVector x{(hs[i].offset * hs[j].normal[1] - hs[j].offset * hs[i].normal[1]) / det,
                      (hs[i].normal[0] * hs[j].offset - hs[j].normal[0] * hs[i].offset) / det};
            bool ok = true;
            for (const auto& h : hs)
                if (dot(h.normal, x) > h.offset) {
                    ok = false;
                    break;
                }
            if (ok) cand.push_back(x);
        }
    }
    if (cand.empty()) return QPolytope();
    return hull(cand);
}

inline QPolytope QPolytope::slice(int axis, const Q& t) const {
    if (ambient_dim_ < 2) throw validation_error("slice: ambient dimension must be >= 2");
    if (axis < 0 || axis >= ambient_dim_) throw validation_error("slice: axis out of range");
    auto [lo, hi] = coord_range(axis);
    if (t < lo || t > hi) throw computation_error("empty slice");
    std::vector<Halfspace> hs;
    for (const auto& h : halfspaces_) {
        QVector n;
        for (int i = 0; i < ambient_dim_; ++i)
            if (i != axis) n.coords.push_back(h.normal[static_cast<std::size_t>(i)]);
        Q off = h.offset - h.normal[static_cast<std::size_t>(axis)] * t;
        bool zero = true;
        for (const auto& c : n.coords)
            if (c != 0) zero = false;
        if (zero) {
            if (off < 0) throw computation_error("empty slice");
            continue;
        }
        hs.push_back(normalize_halfspace(n, off));
    }
    QPolytope s = from_halfspace_section(ambient_dim_ - 1, hs);
    if (s.affine_dim_ < 0) throw computation_error("empty slice");
    return s;
}

inline QPolytope QPolytope::affine_image(const Q& scale, const QVector& translate) const {
    if (scale <= 0) throw validation_error("affine_image: scale must be positive");
    if (translate.dim() != ambient_dim_)
        throw validation_error("affine_image: translate dimension mismatch");
    std::vector<QVector> mapped;
    mapped.reserve(vertices_.size());
    for (const auto& v : vertices_) mapped.push_back(scale * v + translate);
    return hull(mapped);
}

inline std::vector<QVector> QPolytope::lattice_points() const {
    std::vector<QVector> out;
    std::vector<std::array<Int, 2>> box;
    for (int i = 0; i < ambient_dim_; ++i) {
        auto [lo, hi] = coord_range(i);
        box.push_back({ceil_q(lo), floor_q(hi)});
    }
    std::vector<Int> cur(static_cast<std::size_t>(ambient_dim_));
    auto rec = [&](auto&& self, int i) -> void {
        if (i == ambient_dim_) {
            QVector p;
            for (const auto& z : cur) p.coords.push_back(Q(z));
            if (contains(p)) out.push_back(p);
            return;
        }
        for (Int z = box[static_cast<std::size_t>(i)][0]; z <= box[static_cast<std::size_t>(i)][1]; ++z) {
            cur[static_cast<std::size_t>(i)] = z;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace okbody
