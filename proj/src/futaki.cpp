#include "bott/futaki.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <mutex>
#include <thread>
#include <utility>

#include "bott/errors.hpp"
#include "bott/parametric.hpp"

namespace bott {

Rat futaki_component(const HPolytope& p, int i) {
    Rat vol = volume(p);
    Rat bvol = boundary_volume(p);
    Rat bm = boundary_moment_first(p, i);
    Rat m = moment_first(p, i);
    return vol * bm - bvol * m;
}

FutakiVector futaki_vector(const HPolytope& p) {
    FutakiVector f;
    f.values.reserve(p.dim());
    for (int i = 0; i < p.dim(); ++i) f.values.push_back(futaki_component(p, i));
    return f;
}

namespace {

/// The section family Q_u of the pillar of A: the first 2n-2 rays projected
/// to the base coordinates, with offsets affine in the height u.
ParametricPolytope section_family(const BottMatrix& a, const RatVec& base_offsets) {
    const int n = a.n();
    BottFan fan = fan_from_matrix(a);
    ParametricPolytope fam;
    fam.dim = n - 1;
    for (int i = 0; i < 2 * n - 2; ++i) {
        IntVec proj(fan.rays[i].begin(), fan.rays[i].end() - 1);
        fam.normals.push_back(std::move(proj));
        fam.off0.push_back(base_offsets[i]);
        fam.slope.push_back(Rat(fan.rays[i][n - 1]));
    }
    return fam;
}

/// The truncated pillar family P_[0,s]: all 2n rays, bottom cap fixed at 0,
/// top cap offset s.
ParametricPolytope pillar_family(const BottMatrix& a, const RatVec& base_offsets) {
    const int n = a.n();
    BottFan fan = fan_from_matrix(a);
    ParametricPolytope fam;
    fam.dim = n;
    for (int i = 0; i < 2 * n; ++i) {
        fam.normals.push_back(fan.rays[i]);
        fam.off0.push_back(i < 2 * n - 2 ? base_offsets[i] : Rat(0));
        fam.slope.push_back(i == 2 * n - 2 ? Rat(1) : Rat(0));
    }
    return fam;
}

bool section_degenerate(const HPolytope& q) {
    VPolytope v;
    try {
        v = vertex_enumerate(q);
    } catch (const EmptyPolytope&) {
        return true;
    }
    std::vector<RatVec> pts;
    pts.reserve(v.vertices.size());
    for (const Vertex& vx : v.vertices) pts.push_back(vx.point);
    return affine_dim(pts) < q.dim();
}

Rat binomial(unsigned n, unsigned k) {
    Rat b = 1;
    for (unsigned i = 0; i < k; ++i) b = b * Rat(static_cast<long>(n - i)) / Rat(static_cast<long>(i + 1));
    return b;
}

RatVec vertex_mean(const VPolytope& v) {
    RatVec c(v.dim, Rat(0));
    for (const Vertex& vx : v.vertices)
        for (int j = 0; j < v.dim; ++j) c[j] += vx.point[j];
    Rat inv = Rat(1) / Rat(static_cast<long>(v.vertices.size()));
    for (Rat& x : c) x *= inv;
    return c;
}

} // namespace

PillarProfile pillar_profile(const BottMatrix& a, const RatVec& base_offsets) {
    const int n = a.n();
    if (n < 2) throw InvalidInput("pillar needs at least two stages");
    if (static_cast<int>(base_offsets.size()) != 2 * n - 2)
        throw InvalidInput("pillar needs 2n-2 base support numbers");

    ParametricPolytope sections = section_family(a, base_offsets);
    if (section_degenerate(polytope_at(sections, Rat(0))))
        throw DegenerateSlice("base section is not (n-1)-dimensional");

    // Heights at which the section combinatorics can change; the section
    // stays full-dimensional from 0 until the first chamber that collapses.
    std::vector<Rat> thresholds = combinatorics_breakpoints(sections, Rat(0), Rat(0), true);

    Rat s_max;
    bool collapse_found = false;
    {
        std::vector<Rat> walls{Rat(0)};
        walls.insert(walls.end(), thresholds.begin(), thresholds.end());
        for (std::size_t j = 0; j < walls.size(); ++j) {
            Rat mid = (j + 1 < walls.size()) ? (walls[j] + walls[j + 1]) / 2 : walls[j] + 1;
            if (section_degenerate(polytope_at(sections, mid))) {
                s_max = walls[j];
                collapse_found = true;
                break;
            }
        }
        if (!collapse_found) s_max = walls.back() + 1;
    }
    if (s_max == 0) throw DegenerateSlice("section collapses immediately above the base");

    ParametricPolytope pillar = pillar_family(a, base_offsets);
    std::vector<Rat> grid{Rat(0)};
    for (const Rat& t : thresholds)
        if (t < s_max) grid.push_back(t);
    for (const Rat& t : combinatorics_breakpoints(pillar, Rat(0), s_max))
        grid.push_back(t);
    grid.push_back(s_max);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    PillarProfile prof{
        s_max,
        collapse_found,
        family_profile(sections, grid, n - 1, [](const HPolytope& q) { return volume(q); }),
        PiecewisePolynomial::constant(0, 1, 0), // placeholder, replaced below
        PiecewisePolynomial::constant(0, 1, 0),
        PiecewisePolynomial::constant(0, 1, 0),
        PiecewisePolynomial::constant(0, 1, 0),
        PiecewisePolynomial::constant(0, 1, 0),
    };

    PiecewisePolynomial total_boundary =
        family_profile(pillar, grid, n - 1, [](const HPolytope& p) { return boundary_volume(p); });

    Rat f0 = prof.f(Rat(0));
    PiecewisePolynomial side = total_boundary - prof.f.plus_constant(f0);
    prof.g = side.derivative().simplified();
    prof.a = prof.f.antiderivative().simplified();
    prof.b = (prof.g.antiderivative() + prof.f.plus_constant(f0)).simplified();
    prof.c = prof.f.times_x().antiderivative().simplified();
    prof.d = (prof.g.times_x().antiderivative() + prof.f.times_x()).simplified();
    return prof;
}

PiecewisePolynomial futaki_pillar(const PillarProfile& prof) {
    return (prof.a * prof.d - prof.b * prof.c).simplified();
}

PiecewisePolynomial futaki_pillar(const BottMatrix& a, const RatVec& base_offsets) {
    return futaki_pillar(pillar_profile(a, base_offsets));
}

std::vector<DerivativeRow> derivative_table(const PillarProfile& prof, unsigned m_max) {
    std::vector<DerivativeRow> rows;
    rows.reserve(m_max + 1);
    for (unsigned m = 0; m <= m_max; ++m)
        rows.push_back(DerivativeRow{
            prof.a.derivative_value(Rat(0), m),
            prof.b.derivative_value(Rat(0), m),
            prof.c.derivative_value(Rat(0), m),
            prof.d.derivative_value(Rat(0), m),
        });
    return rows;
}

ThirdDerivativeCheck check_third_derivative(const PillarProfile& prof) {
    std::vector<DerivativeRow> t = derivative_table(prof, 3);
    Rat lhs = 0;
    for (unsigned k = 0; k <= 3; ++k) {
        Rat coeff = binomial(3, k);
        lhs += coeff * (t[k].a * t[3 - k].d - t[k].b * t[3 - k].c);
    }
    Rat rhs = 2 * prof.f.derivative_value(Rat(0), 1) * prof.f(Rat(0));
    return ThirdDerivativeCheck{lhs, rhs, lhs == rhs};
}

CongruenceResult slice_congruence(const HPolytope& p, int axis, const Rat& u1, const Rat& u2) {
    const int d = p.dim() - 1;
    HPolytope t1 = slice_at(p, axis, u1);
    HPolytope t2 = slice_at(p, axis, u2);

    VPolytope v1, v2;
    try {
        v1 = vertex_enumerate(t1);
        v2 = vertex_enumerate(t2);
    } catch (const EmptyPolytope&) {
        throw DegenerateSlice();
    }
    auto pts = [](const VPolytope& v) {
        std::vector<RatVec> out;
        out.reserve(v.vertices.size());
        for (const Vertex& vx : v.vertices) out.push_back(vx.point);
        return out;
    };
    std::vector<RatVec> pts1 = pts(v1), pts2 = pts(v2);
    if (affine_dim(pts1) < d || affine_dim(pts2) < d) throw DegenerateSlice();

    CongruenceResult res;
    res.vol1 = volume(t1);
    res.vol2 = volume(t2);

    RatVec b1 = vertex_mean(v1), b2 = vertex_mean(v2);
    Rat r(1);
    if (res.vol1 != res.vol2) {
        auto root = rat_nth_root(res.vol1 / res.vol2, static_cast<unsigned>(d));
        if (!root) return res; // Incongruent: no exact homothety ratio exists
        r = *root;
    }
    // any homothety between the slices must use this ratio, so report it
    // even when the vertex match below fails
    res.ratio = r;

    // A homothety x -> r x + t with r > 0 preserves lexicographic order, so
    // the sorted vertex lists must match entrywise.
    if (pts1.size() != pts2.size()) return res;
    RatVec shift(d);
    for (int j = 0; j < d; ++j) shift[j] = b1[j] - r * b2[j];
    for (std::size_t k = 0; k < pts2.size(); ++k)
        for (int j = 0; j < d; ++j)
            if (pts1[k][j] != r * pts2[k][j] + shift[j]) return res;

    res.verdict = (r == 1) ? CongruenceVerdict::Congruent : CongruenceVerdict::Homothetic;
    res.ratio = r;
    res.translation = std::move(shift);
    return res;
}

std::optional<ProductSplit> product_split(const HPolytope& p, int axis) {
    const int n = p.dim();
    if (n < 2) throw InvalidInput("splitting needs ambient dimension at least 2");
    if (axis < 0 || axis >= n) throw InvalidInput("split axis out of range");

    VPolytope v = vertex_enumerate(p);
    std::vector<RatVec> pts;
    for (const Vertex& vx : v.vertices) pts.push_back(vx.point);
    if (affine_dim(pts) < n) throw DegeneratePolytope();

    RatVec measures = all_facet_measures(p);
    int plus = -1, minus = -1;
    for (std::size_t i = 0; i < measures.size(); ++i) {
        if (measures[i] == 0) continue;
        const IntVec& nv = p.halfspaces()[i].normal;
        if (nv[axis] == 0) continue;
        // A prism's only facets seeing the axis are the two flat caps.
        for (int j = 0; j < n; ++j)
            if (j != axis && nv[j] != 0) return std::nullopt;
        if (nv[axis] == 1) {
            if (plus >= 0) return std::nullopt;
            plus = static_cast<int>(i);
        } else {
            if (minus >= 0) return std::nullopt;
            minus = static_cast<int>(i);
        }
    }
    assert(plus >= 0 && minus >= 0);

    Rat lo = -p.halfspaces()[plus].offset;
    Rat hi = p.halfspaces()[minus].offset;

    std::vector<HalfSpace> base_hs;
    for (const HalfSpace& h : p.halfspaces()) {
        if (h.normal[axis] != 0) continue;
        IntVec proj;
        proj.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != axis) proj.push_back(h.normal[j]);
        base_hs.emplace_back(std::move(proj), h.offset);
    }
    HPolytope base(n - 1, std::move(base_hs));

    ProductSplit split{axis, base, lo, hi, hi - lo, futaki_vector(p), futaki_vector(base), false};
    Rat h2 = split.height * split.height;
    bool ok = split.futaki_p.values[axis] == 0;
    for (int j = 0, jq = 0; j < n; ++j) {
        if (j == axis) continue;
        if (split.futaki_p.values[j] != h2 * split.futaki_q.values[jq]) ok = false;
        ++jq;
    }
    split.identity_verified = ok;
    return split;
}

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// Candidate t of the deterministic scan stream.  The first eight entries
/// are the pillar family (staircase base, top cap 1..8); the rest are
/// seeded random classes with numerators and denominators bounded by 8.
KahlerClass scan_candidate(int n, std::uint64_t seed, std::uint64_t t) {
    KahlerClass k;
    k.a.assign(2 * n, Rat(0));
    if (t < 8) {
        for (int i = 0; i + 1 < n; ++i) {
            long stair = 1L << std::min(n - 2 - i, 3);
            k.a[2 * i] = stair;
        }
        k.a[2 * n - 2] = Rat(static_cast<long>(t) + 1);
        return k;
    }
    SplitMix64 rng{seed ^ (t * 0xD1B54A32D192ED03ULL)};
    for (int i = 0; i < n; ++i) {
        long num = 1 + static_cast<long>(rng.next() % 8);
        long den = 1 + static_cast<long>(rng.next() % 8);
        k.a[2 * i] = Rat(num) / Rat(den);
        long enum_ = static_cast<long>(rng.next() % 5) - 2;
        long eden = 1 + static_cast<long>(rng.next() % 4);
        k.a[2 * i + 1] = Rat(enum_) / Rat(eden);
    }
    return k;
}

struct ScanEval {
    bool valid = false;
    bool nonzero = false;
    KahlerClass kahler;
    FutakiVector futaki;
};

ScanEval scan_evaluate(const BottMatrix& a, std::uint64_t seed, std::uint64_t t, bool product) {
    ScanEval ev;
    ev.kahler = scan_candidate(a.n(), seed, t);
    if (!is_kahler_class(a, ev.kahler)) return ev;
    ev.valid = true;
    ev.futaki = futaki_vector(moment_polytope(a, ev.kahler));
    ev.nonzero = !ev.futaki.is_zero();
    if (product && ev.nonzero)
        throw Error("nonzero Futaki vector on a product of lines");
    return ev;
}

} // namespace

ScanResult scan_nonvanishing(const BottMatrix& a, int budget, std::uint64_t seed, bool parallel) {
    if (budget < 1) throw InvalidInput("scan budget must be positive");
    const bool product = is_product_of_lines(a);
    const std::uint64_t raw_cap = 8 + 64ULL * static_cast<std::uint64_t>(budget);

    ScanResult res;
    const std::size_t chunk =
        parallel ? 32 : 1;
    unsigned workers = parallel ? std::max(2u, std::min(8u, std::thread::hardware_concurrency())) : 1;

    for (std::uint64_t base = 0; base < raw_cap; base += chunk) {
        const std::uint64_t end = std::min(raw_cap, base + chunk);
        std::vector<ScanEval> evals(end - base);
        if (workers == 1) {
            for (std::uint64_t t = base; t < end; ++t)
                evals[t - base] = scan_evaluate(a, seed, t, product);
        } else {
            std::vector<std::thread> pool;
            std::atomic<std::uint64_t> cursor{base};
            std::exception_ptr error;
            std::mutex error_mutex;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&]() {
                    for (std::uint64_t t; (t = cursor.fetch_add(1)) < end;) {
                        try {
                            evals[t - base] = scan_evaluate(a, seed, t, product);
                        } catch (...) {
                            std::lock_guard<std::mutex> lock(error_mutex);
                            if (!error) error = std::current_exception();
                        }
                    }
                });
            for (std::thread& th : pool) th.join();
            if (error) std::rethrow_exception(error);
        }
        // Deterministic fold in enumeration order, independent of scheduling.
        for (ScanEval& ev : evals) {
            if (!ev.valid) continue;
            ++res.classes_examined;
            if (ev.nonzero) {
                res.witness = ScanWitness{std::move(ev.kahler), std::move(ev.futaki)};
                return res;
            }
            if (res.classes_examined == budget) return res;
        }
    }
    return res;
}

} // namespace bott
