#ifndef BOTT_LINALG_HPP
#define BOTT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "bott/rational.hpp"

namespace bott {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline Rat dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Int vec_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g; // 0 iff v == 0
}

/// Divides by the gcd of the entries; sign is preserved.  Zero vectors are
/// returned unchanged.
inline IntVec primitivize(IntVec v) {
    Int g = vec_gcd(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

/// Row-reduces a copy of m in place and returns its rank.
inline int rank(RatMat m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Determinant of a square matrix by fraction-full Gaussian elimination.
inline Rat det(RatMat m) {
    const std::size_t n = m.size();
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == n) return Rat(0);
        if (piv != c) { std::swap(m[c], m[piv]); d = -d; }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

/// Solves the square system A x = b; nullopt when A is singular.
inline std::optional<RatVec> solve_square(RatMat a, RatVec b) {
    const std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == n) return std::nullopt;
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            b[i] -= f * b[c];
        }
    }
    RatVec x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

/// Solves a (possibly overdetermined) system A x = b that is required to
/// have a unique solution; nullopt when inconsistent or rank-deficient.
inline std::optional<RatVec> solve_unique(RatMat a, RatVec b) {
    const std::size_t rows = a.size();
    if (rows == 0) return std::nullopt;
    const std::size_t cols = a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        std::swap(b[r], b[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() < cols) return std::nullopt;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    RatVec x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

/// Any nonzero kernel vector of the row system, or nullopt when the kernel
/// is trivial.
inline std::optional<RatVec> kernel_vector(RatMat m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_of_col(cols, rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_of_col[c] == rows) { free_col = c; break; }
    if (free_col == cols) return std::nullopt;
    RatVec y(cols);
    y[free_col] = 1;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = pivot_of_col[c];
        if (p != rows) y[c] = -m[p][free_col] / m[p][c];
    }
    return y;
}

/// Dimension of the affine hull of a point set (-1 for the empty set).
inline int affine_dim(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec d(pts[0].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return rank(std::move(diffs));
}

} // namespace bott

#endif // BOTT_LINALG_HPP
