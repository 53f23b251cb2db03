#include "bott/parametric.hpp"

#include <algorithm>

#include "bott/errors.hpp"

namespace bott {

namespace {

template <typename F>
void for_each_subset(int m, int k, F&& fn) {
    if (k > m || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

ParametricPolytope make_parametric(const HPolytope& base, const RatVec& slope) {
    if (slope.size() != base.halfspaces().size())
        throw InvalidInput("slope vector length mismatch");
    ParametricPolytope fam;
    fam.dim = base.dim();
    for (const HalfSpace& h : base.halfspaces()) {
        fam.normals.push_back(h.normal);
        fam.off0.push_back(h.offset);
    }
    fam.slope = slope;
    return fam;
}

HPolytope polytope_at(const ParametricPolytope& fam, const Rat& t) {
    std::vector<HalfSpace> hs;
    hs.reserve(fam.normals.size());
    for (std::size_t i = 0; i < fam.normals.size(); ++i)
        hs.emplace_back(fam.normals[i], fam.off0[i] + fam.slope[i] * t);
    return HPolytope(fam.dim, std::move(hs));
}

std::vector<Rat> combinatorics_breakpoints(const ParametricPolytope& fam, const Rat& lo,
                                           const Rat& hi, bool unbounded_hi) {
    const int n = fam.dim;
    const int m = static_cast<int>(fam.normals.size());
    std::vector<Rat> roots;

    RatMat normals(m);
    for (int i = 0; i < m; ++i) normals[i] = to_rat(fam.normals[i]);

    for_each_subset(m, n, [&](const std::vector<int>& s) {
        RatMat a;
        RatVec b0, b1;
        for (int i : s) {
            a.push_back(normals[i]);
            b0.push_back(-fam.off0[i]);
            b1.push_back(-fam.slope[i]);
        }
        auto p0 = solve_square(a, std::move(b0));
        if (!p0) return;
        auto p1 = solve_square(std::move(a), std::move(b1));
        for (int j = 0; j < m; ++j) {
            if (std::find(s.begin(), s.end(), j) != s.end()) continue;
            Rat c0 = dot(normals[j], *p0) + fam.off0[j];
            Rat c1 = dot(normals[j], *p1) + fam.slope[j];
            if (c1 == 0) continue;
            Rat root = -c0 / c1;
            if (root > lo && (unbounded_hi || root < hi)) roots.push_back(root);
        }
    });

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

PiecewisePolynomial family_profile(const ParametricPolytope& fam, const std::vector<Rat>& grid,
                                   int deg_bound, const std::function<Rat(const HPolytope&)>& q) {
    auto multi = family_profile_multi(fam, grid, deg_bound, 1,
                                      [&](const HPolytope& p) { return RatVec{q(p)}; });
    return multi.front();
}

std::vector<PiecewisePolynomial> family_profile_multi(
    const ParametricPolytope& fam, const std::vector<Rat>& grid, int deg_bound,
    std::size_t count, const std::function<RatVec(const HPolytope&)>& q) {
    if (grid.size() < 2) throw InvalidInput("profile grid needs at least two points");
    const int samples = deg_bound + 1;
    std::vector<std::vector<Poly>> pieces(count);

    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        RatVec xs;
        std::vector<RatVec> ys(count);
        for (int r = 1; r <= samples; ++r) {
            Rat x = grid[j] + (grid[j + 1] - grid[j]) * Rat(r) / Rat(samples + 1);
            xs.push_back(x);
            RatVec vals = q(polytope_at(fam, x));
            if (vals.size() != count) throw Error("profile quantity arity mismatch");
            for (std::size_t c = 0; c < count; ++c) ys[c].push_back(vals[c]);
        }
        for (std::size_t c = 0; c < count; ++c) pieces[c].push_back(poly_interpolate(xs, ys[c]));
    }

    std::vector<PiecewisePolynomial> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c)
        out.emplace_back(PiecewisePolynomial(grid, std::move(pieces[c])).simplified());
    return out;
}

} // namespace bott
