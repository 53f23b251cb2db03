#include "bott/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <utility>

#include "bott/errors.hpp"

namespace bott {

namespace {

Rat factorial(int k) {
    Rat f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

/// Calls fn on every size-k subset of {0, ..., m-1}, ascending.
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

struct Analysis {
    std::vector<Vertex> vertices;              // sorted lexicographically
    std::vector<std::vector<int>> tight_verts; // per half-space
    int adim = -1;                             // affine dimension of the vertex set
};

/// True when half-space i repeats an earlier identical half-space; repeated
/// copies are charged no facet so boundary sums count each facet once.
bool is_duplicate_halfspace(const HPolytope& p, int i) {
    for (int j = 0; j < i; ++j)
        if (p.halfspaces()[j] == p.halfspaces()[i]) return true;
    return false;
}

Analysis analyze(const HPolytope& p) {
    const int n = p.dim();
    const int m = static_cast<int>(p.halfspaces().size());

    RatMat normals(m);
    for (int i = 0; i < m; ++i) normals[i] = to_rat(p.halfspaces()[i].normal);

    if (rank(normals) < n) throw UnboundedPolytope();
    for_each_subset(m, n - 1, [&](const std::vector<int>& s) {
        RatMat rows;
        rows.reserve(s.size());
        for (int i : s) rows.push_back(normals[i]);
        if (rank(rows) != n - 1) return;
        auto y = kernel_vector(rows, n);
        assert(y.has_value());
        for (int sign = 0; sign < 2; ++sign) {
            bool feasible_ray = true;
            for (int i = 0; i < m; ++i)
                if (dot(p.halfspaces()[i].normal, *y) < 0) { feasible_ray = false; break; }
            if (feasible_ray) throw UnboundedPolytope();
            for (Rat& c : *y) c = -c;
        }
    });

    std::map<RatVec, bool> points;
    for_each_subset(m, n, [&](const std::vector<int>& s) {
        RatMat a;
        RatVec b;
        a.reserve(n);
        b.reserve(n);
        for (int i : s) {
            a.push_back(normals[i]);
            b.push_back(-p.halfspaces()[i].offset);
        }
        auto x = solve_square(std::move(a), std::move(b));
        if (!x) return;
        for (int i = 0; i < m; ++i)
            if (p.halfspaces()[i].eval(*x) < 0) return;
        points.emplace(std::move(*x), true);
    });

    Analysis an;
    an.tight_verts.resize(m);
    for (auto& [pt, unused] : points) {
        Vertex v;
        v.point = pt;
        for (int i = 0; i < m; ++i)
            if (p.halfspaces()[i].eval(pt) == 0) v.tight.push_back(i);
        an.vertices.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < an.vertices.size(); ++k)
        for (int i : an.vertices[k].tight) an.tight_verts[i].push_back(static_cast<int>(k));

    std::vector<RatVec> pts;
    pts.reserve(an.vertices.size());
    for (const Vertex& v : an.vertices) pts.push_back(v.point);
    an.adim = affine_dim(pts);
    return an;
}

RatVec points_mean(const std::vector<RatVec>& pts) {
    RatVec c(pts[0].size(), Rat(0));
    for (const RatVec& p : pts)
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += p[j];
    Rat inv = Rat(1) / Rat(static_cast<long>(pts.size()));
    for (Rat& x : c) x *= inv;
    return c;
}

std::vector<RatVec> face_points(const Analysis& an, const std::vector<int>& face) {
    std::vector<RatVec> pts;
    pts.reserve(face.size());
    for (int k : face) pts.push_back(an.vertices[k].point);
    return pts;
}

/// Triangulates a d-dimensional face given by a sorted vertex-index set.
/// Recursive coning over face barycenters; each simplex is d+1 points.
std::vector<std::vector<RatVec>> face_simplices(const Analysis& an, const std::vector<int>& face, int d) {
    if (static_cast<int>(face.size()) == d + 1) return {face_points(an, face)};
    assert(d >= 1);

    std::set<std::vector<int>> subfaces;
    for (std::size_t j = 0; j < an.tight_verts.size(); ++j) {
        std::vector<int> s;
        std::set_intersection(face.begin(), face.end(), an.tight_verts[j].begin(),
                              an.tight_verts[j].end(), std::back_inserter(s));
        if (s.empty() || s.size() == face.size()) continue;
        if (affine_dim(face_points(an, s)) != d - 1) continue;
        subfaces.insert(std::move(s));
    }

    RatVec bary = points_mean(face_points(an, face));
    std::vector<std::vector<RatVec>> out;
    for (const std::vector<int>& s : subfaces) {
        for (std::vector<RatVec>& simplex : face_simplices(an, s, d - 1)) {
            simplex.push_back(bary);
            out.push_back(std::move(simplex));
        }
    }
    return out;
}

Rat simplex_volume(const std::vector<RatVec>& simplex) {
    const std::size_t d = simplex.size() - 1;
    RatMat m(d, RatVec(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = simplex[i + 1][j] - simplex[0][j];
    Rat v = det(std::move(m)) / factorial(static_cast<int>(d));
    return v < 0 ? -v : v;
}

struct BodyIntegrals {
    Rat vol;
    RatVec moment; // integral of each coordinate over the body
};

BodyIntegrals body_integrals(const HPolytope& p, const Analysis& an) {
    const int n = p.dim();
    BodyIntegrals out{Rat(0), RatVec(n, Rat(0))};
    if (an.adim < n) return out;

    std::vector<std::vector<RatVec>> simplices;
    std::vector<int> all(an.vertices.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    simplices = face_simplices(an, all, n);

    for (const auto& simplex : simplices) {
        Rat v = simplex_volume(simplex);
        if (v == 0) continue;
        out.vol += v;
        RatVec c = points_mean(simplex);
        for (int j = 0; j < n; ++j) out.moment[j] += v * c[j];
    }
    return out;
}

struct FacetIntegrals {
    Rat measure;
    RatVec moment; // integral of each coordinate over the facet, measure dsigma
};

FacetIntegrals facet_integrals(const HPolytope& p, const Analysis& an, int i) {
    const int n = p.dim();
    FacetIntegrals out{Rat(0), RatVec(n, Rat(0))};
    if (is_duplicate_halfspace(p, i)) return out;
    const std::vector<int>& face = an.tight_verts[i];
    if (face.empty()) return out;
    if (affine_dim(face_points(an, face)) != n - 1) return out;

    const IntVec& normal = p.halfspaces()[i].normal;
    if (n == 1) {
        // A facet is a single point; its lattice measure is 1.
        out.measure = 1;
        out.moment[0] = an.vertices[face[0]].point[0];
        return out;
    }

    int k = 0;
    while (normal[k] == 0) ++k;
    Rat scale = Rat(abs(normal[k])) * factorial(n - 1);

    for (const auto& simplex : face_simplices(an, face, n - 1)) {
        RatMat m(n - 1, RatVec(n - 1));
        for (int r = 0; r < n - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == k) continue;
                m[r][cc++] = simplex[r + 1][c] - simplex[0][c];
            }
        }
        Rat d = det(std::move(m));
        if (d < 0) d = -d;
        if (d == 0) continue;
        Rat mu = d / scale;
        out.measure += mu;
        RatVec c = points_mean(simplex);
        for (int j = 0; j < n; ++j) out.moment[j] += mu * c[j];
    }
    return out;
}

} // namespace

HalfSpace::HalfSpace(IntVec n, Rat a) : normal(std::move(n)), offset(std::move(a)) {
    Int g = vec_gcd(normal);
    if (g == 0) throw InvalidInput("half-space normal must be nonzero");
    if (g > 1) {
        for (Int& x : normal) x /= g;
        offset /= Rat(g);
    }
}

HPolytope::HPolytope(int dim, std::vector<HalfSpace> halfspaces)
    : dim_(dim), halfspaces_(std::move(halfspaces)) {
    if (dim_ < 1) throw InvalidInput("polytope dimension must be at least 1");
    for (const HalfSpace& h : halfspaces_)
        if (static_cast<int>(h.normal.size()) != dim_)
            throw InvalidInput("half-space dimension mismatch");
}

HPolytope HPolytope::box(const RatVec& lo, const RatVec& hi) {
    if (lo.size() != hi.size() || lo.empty()) throw InvalidInput("box corners must match");
    const int n = static_cast<int>(lo.size());
    std::vector<HalfSpace> hs;
    for (int k = 0; k < n; ++k) {
        IntVec e(n, Int(0)), me(n, Int(0));
        e[k] = 1;
        me[k] = -1;
        hs.emplace_back(e, -lo[k]);
        hs.emplace_back(me, hi[k]);
    }
    return HPolytope(n, std::move(hs));
}

HPolytope HPolytope::empty_box(int dim) {
    RatVec lo(dim, Rat(0)), hi(dim, Rat(1));
    HPolytope b = box(lo, hi);
    // Flip the first lower bound to x_1 >= 1 to make the box infeasible
    // while keeping the recession cone trivial.
    std::vector<HalfSpace> hs = b.halfspaces();
    hs[0] = HalfSpace(hs[0].normal, Rat(-1));
    return HPolytope(dim, std::move(hs));
}

bool is_bounded(const HPolytope& p) {
    try {
        analyze(p);
        return true;
    } catch (const UnboundedPolytope&) {
        return false;
    }
}

VPolytope vertex_enumerate(const HPolytope& p) {
    Analysis an = analyze(p);
    if (an.vertices.empty()) throw EmptyPolytope();
    return VPolytope{p.dim(), an.vertices};
}

Rat volume(const HPolytope& p) {
    Analysis an = analyze(p);
    if (an.vertices.empty()) return Rat(0);
    return body_integrals(p, an).vol;
}

Rat moment_first(const HPolytope& p, int i) {
    if (i < 0 || i >= p.dim()) throw InvalidInput("coordinate index out of range");
    Analysis an = analyze(p);
    if (an.vertices.empty()) return Rat(0);
    return body_integrals(p, an).moment[i];
}

Rat facet_measure(const HPolytope& p, int i) {
    if (i < 0 || i >= static_cast<int>(p.halfspaces().size()))
        throw InvalidInput("half-space index out of range");
    Analysis an = analyze(p);
    if (an.vertices.empty()) return Rat(0);
    return facet_integrals(p, an, i).measure;
}

RatVec all_facet_measures(const HPolytope& p) {
    Analysis an = analyze(p);
    RatVec out(p.halfspaces().size(), Rat(0));
    if (an.vertices.empty()) return out;
    for (int i = 0; i < static_cast<int>(out.size()); ++i)
        out[i] = facet_integrals(p, an, i).measure;
    return out;
}

Rat boundary_volume(const HPolytope& p) {
    Analysis an = analyze(p);
    if (an.adim < p.dim()) throw DegeneratePolytope();
    Rat s = 0;
    for (int i = 0; i < static_cast<int>(p.halfspaces().size()); ++i)
        s += facet_integrals(p, an, i).measure;
    return s;
}

Rat boundary_moment_first(const HPolytope& p, int i) {
    if (i < 0 || i >= p.dim()) throw InvalidInput("coordinate index out of range");
    Analysis an = analyze(p);
    if (an.adim < p.dim()) throw DegeneratePolytope();
    Rat s = 0;
    for (int j = 0; j < static_cast<int>(p.halfspaces().size()); ++j)
        s += facet_integrals(p, an, j).moment[i];
    return s;
}

HPolytope slice_at(const HPolytope& p, int axis, const Rat& u) {
    const int n = p.dim();
    if (n < 2) throw InvalidInput("slice requires ambient dimension at least 2");
    if (axis < 0 || axis >= n) throw InvalidInput("slice axis out of range");

    std::vector<HalfSpace> hs;
    for (const HalfSpace& h : p.halfspaces()) {
        IntVec nv;
        nv.reserve(n - 1);
        for (int c = 0; c < n; ++c)
            if (c != axis) nv.push_back(h.normal[c]);
        Rat off = h.offset + u * Rat(h.normal[axis]);
        if (vec_gcd(nv) == 0) {
            if (off < 0) return HPolytope::empty_box(n - 1);
            continue; // constraint holds identically on the slice
        }
        hs.emplace_back(std::move(nv), std::move(off));
    }
    return HPolytope(n - 1, std::move(hs));
}

AxisProfiles axis_profiles(const HPolytope& p, int axis) {
    const int n = p.dim();
    if (n < 2) throw InvalidInput("profiles require ambient dimension at least 2");
    if (axis < 0 || axis >= n) throw InvalidInput("profile axis out of range");

    Analysis an = analyze(p);
    if (an.adim < n) throw DegeneratePolytope();

    std::vector<Rat> breaks;
    for (const Vertex& v : an.vertices) breaks.push_back(v.point[axis]);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    assert(breaks.size() >= 2);

    // Section volume has degree <= n-1 on each piece, so n interior samples
    // pin it down; likewise for the cumulative boundary area below height s.
    std::vector<Poly> f_pieces, b_pieces;
    IntVec cap(n, Int(0));
    cap[axis] = -1;
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        RatVec xs, fvals, bvals;
        for (int r = 1; r <= n; ++r) {
            Rat x = breaks[j] + (breaks[j + 1] - breaks[j]) * Rat(r) / Rat(n + 1);
            xs.push_back(x);
            fvals.push_back(volume(slice_at(p, axis, x)));
            std::vector<HalfSpace> hs = p.halfspaces();
            hs.emplace_back(cap, x);
            bvals.push_back(boundary_volume(HPolytope(n, std::move(hs))));
        }
        f_pieces.push_back(poly_interpolate(xs, fvals));
        b_pieces.push_back(poly_interpolate(xs, bvals));
    }

    PiecewisePolynomial f(breaks, std::move(f_pieces));
    PiecewisePolynomial b(breaks, std::move(b_pieces));
    // The boundary of the part below height s consists of the bottom cap,
    // the moving cap f(s), and the side; remove the caps before taking the
    // derivative.
    Rat f_lo = f(f.domain_lo());
    PiecewisePolynomial side = b - f.plus_constant(f_lo);
    return AxisProfiles{f.simplified(), side.derivative().simplified()};
}

HPolytope apply_unimodular(const HPolytope& p, const std::vector<IntVec>& w) {
    const int n = p.dim();
    if (static_cast<int>(w.size()) != n) throw InvalidInput("matrix dimension mismatch");
    RatMat wr(n, RatVec(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(w[i].size()) != n) throw InvalidInput("matrix dimension mismatch");
        for (int j = 0; j < n; ++j) wr[i][j] = Rat(w[i][j]);
    }
    Rat d = det(wr);
    if (d != 1 && d != -1) throw InvalidInput("matrix is not unimodular");

    // Points map by x -> W x, so normals map by v -> W^{-T} v (integer
    // because W is unimodular) and offsets are unchanged.  W^{-T} v is the
    // solution y of W^T y = v.
    RatMat wt(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) wt[i][j] = wr[j][i];
    std::vector<HalfSpace> hs;
    for (const HalfSpace& h : p.halfspaces()) {
        auto y = solve_square(wt, to_rat(h.normal));
        IntVec nv(n);
        for (int j = 0; j < n; ++j) {
            assert(denominator((*y)[j]) == 1);
            nv[j] = numerator((*y)[j]);
        }
        hs.emplace_back(std::move(nv), h.offset);
    }
    return HPolytope(n, std::move(hs));
}

HPolytope translated(const HPolytope& p, const RatVec& t) {
    if (static_cast<int>(t.size()) != p.dim()) throw InvalidInput("translation dimension mismatch");
    std::vector<HalfSpace> hs;
    for (const HalfSpace& h : p.halfspaces())
        hs.emplace_back(h.normal, h.offset - dot(h.normal, t));
    return HPolytope(p.dim(), std::move(hs));
}

} // namespace bott
