#pragma once

// Exact rational scalar type and the small dense linear algebra used
// throughout the library.  Everything is over Q; no floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "okbody/errors.hpp"

namespace okbody {

using Int = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

using QRow = std::vector<Q>;
using QMatrix = std::vector<QRow>;

inline std::string q_str(const Q& q) { return q.str(); }

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Q q_parse(std::string_view s) {
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    std::string_view num_body = num;
    if (!num_body.empty() && (num_body[0] == '-' || num_body[0] == '+')) num_body.remove_prefix(1);
    if (!digits(num_body) || !digits(den))
        throw parse_error("not a rational: \"" + std::string(s) + "\"");
    Int d{std::string(den)};
    if (d == 0) throw parse_error("zero denominator: \"" + std::string(s) + "\"");
    Int n{std::string(num)};
    return Q(n, d);
}

inline Int q_num(const Q& q) { return numerator(q); }
inline Int q_den(const Q& q) { return denominator(q); }

inline Int floor_q(const Q& q) {
    Int n = numerator(q), d = denominator(q);
    Int r = n / d;
    if (n % d != 0 && n < 0) --r;
    return r;
}

inline Int ceil_q(const Q& q) { return -floor_q(-q); }

// True square root test for nonnegative rationals; returns the root when exact.
inline std::optional<Q> q_sqrt_exact(const Q& q) {
    if (q < 0) return std::nullopt;
    Int n = numerator(q), d = denominator(q);
    Int rn = sqrt(n), rd = sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Q(rn, rd);
}

// ---------------------------------------------------------------------------
// Dense exact linear algebra (dimensions here never exceed a handful).

inline int matrix_rank(QMatrix a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Q f = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline Q determinant(QMatrix a) {
    const std::size_t n = a.size();
    Q det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Q(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Q f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

// Solves a x = b; nullopt when the system is singular or inconsistent.
inline std::optional<QRow> solve_linear(QMatrix a, QRow b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Q f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    QRow x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// Right null space basis of a (rows are constraints on vectors of length cols).
inline std::vector<QRow> null_space(QMatrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[row]);
        Q lead = a[row][col];
        for (std::size_t c = 0; c < cols; ++c) a[row][c] /= lead;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Q f = a[r][col];
            for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<QRow> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        QRow v(cols, Q(0));
        v[free_col] = 1;
        for (std::size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0) v[col] = -a[pivot_of_col[col]][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Sylvester criterion; `a` must be symmetric.
inline bool is_negative_definite(const QMatrix& a) {
    const std::size_t n = a.size();
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix minor(k, QRow(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
        Q d = determinant(minor);
        if (k % 2 == 1 ? d >= 0 : d <= 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    return out;
}

} // namespace okbody
