// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Every tolerance and time limit is pinned here in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "bott/bott_tower.hpp"
#include "bott/errors.hpp"
#include "bott/futaki.hpp"
#include "bott/parametric.hpp"
#include "bott/polynomial.hpp"
#include "bott/polytope.hpp"
#include "bott/slope_stability.hpp"

#include "oracle_helpers.hpp"

using namespace bott;

namespace {

#define REQ(cond)                               \
    do {                                        \
        if (!(cond)) {                          \
            note = std::string("failed: ") + #cond; \
            return false;                       \
        }                                       \
    } while (0)

#define REQ_TIME(limit_ms)                                                            \
    do {                                                                              \
        auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(      \
                              std::chrono::steady_clock::now() - started)             \
                              .count();                                               \
        if (elapsed_ms >= (limit_ms)) {                                               \
            note = "time limit exceeded: " + std::to_string(elapsed_ms) + " ms";      \
            return false;                                                             \
        }                                                                             \
    } while (0)

BottMatrix hirzebruch() { return BottMatrix::from_full({{Int(1), Int(0)}, {Int(1), Int(1)}}); }

struct RandomPillar {
    BottMatrix matrix;
    RatVec base;
};

RandomPillar random_pillar(oracle::Rng& rng, int n) {
    for (;;) {
        BottMatrix a = oracle::random_matrix(rng, n);
        auto base = oracle::random_kahler(rng, a.truncated());
        if (base) return {a, base->a};
    }
}

bool criterion_1(std::string& note) {
    auto started = std::chrono::steady_clock::now();
    for (int n : {2, 3, 4}) {
        oracle::Rng rng(1000 + n);
        BottMatrix a = BottMatrix::identity(n);
        int count = 0;
        while (count < 50) {
            auto k = oracle::random_kahler(rng, a);
            if (!k) continue;
            REQ(is_kahler_class(a, *k));
            REQ(futaki_vector(moment_polytope(a, *k)).is_zero());
            ++count;
        }
    }
    REQ_TIME(10000);
    return true;
}

bool criterion_2(std::string& note) {
    auto started = std::chrono::steady_clock::now();
    BottMatrix a = hirzebruch();
    HPolytope p = moment_polytope(a, KahlerClass{{Rat(2), Rat(0), Rat(0), Rat(1)}});
    REQ(futaki_component(p, 1) == rat(-2, 3));
    // independent polygon oracle: shoelace area plus exact edge quadrature
    REQ(oracle::futaki_2d(p, 1) == rat(-2, 3));
    ScanResult scan = scan_nonvanishing(a, 100, 0);
    REQ(scan.witness.has_value());
    REQ(is_kahler_class(a, scan.witness->kahler));
    REQ(!scan.witness->futaki.is_zero());
    REQ_TIME(1000);
    return true;
}

bool criterion_3(std::string& note) {
    BottMatrix grow = BottMatrix::from_full({{Int(1), Int(0)}, {Int(-1), Int(1)}});
    for (const Rat& c : {Rat(1), Rat(2), rat(5, 2)}) {
        PillarProfile prof = pillar_profile(grow, {c, Rat(0)});
        PiecewisePolynomial expect({Rat(0), prof.s_max},
                                   {Poly{Rat(0), Rat(0), Rat(0), c / 3}});
        REQ(futaki_pillar(prof) == expect);
        ThirdDerivativeCheck tdc = check_third_derivative(prof);
        REQ(tdc.lhs == 2 * c);
        REQ(tdc.rhs == 2 * c);
        REQ(tdc.equal);
    }
    return true;
}

bool criterion_4(std::string& note) {
    oracle::Rng rng(77);
    int made = 0;
    for (int n : {2, 3, 4}) {
        int quota = (n == 4) ? 6 : 7;
        for (int trial = 0; trial < quota; ++trial, ++made) {
            RandomPillar rp = random_pillar(rng, n);
            PillarProfile prof = pillar_profile(rp.matrix, rp.base);
            // cumulative identities at interior sample heights
            for (int k = 1; k <= 4; ++k) {
                Rat s = prof.s_max * rat(k, 4);
                RatVec off = rp.base;
                off.push_back(s);
                off.push_back(Rat(0));
                HPolytope box = moment_polytope(rp.matrix, KahlerClass{off});
                REQ(prof.a(s) == volume(box));
                REQ(prof.b(s) == boundary_volume(box));
                REQ(prof.c(s) == moment_first(box, n - 1));
                REQ(prof.d(s) == boundary_moment_first(box, n - 1));
            }
            // derivative rows at zero against the closed forms
            auto f = [&](unsigned m) { return prof.f.derivative_value(Rat(0), m); };
            auto g = [&](unsigned m) { return prof.g.derivative_value(Rat(0), m); };
            std::vector<DerivativeRow> table = derivative_table(prof, 3);
            REQ(table[0].a == Rat(0));
            REQ(table[0].b == 2 * f(0));
            REQ(table[0].c == Rat(0));
            REQ(table[0].d == Rat(0));
            REQ(table[1].c == Rat(0));
            REQ(table[1].d == f(0));
            for (unsigned m = 1; m <= 3; ++m) {
                REQ(table[m].a == f(m - 1));
                REQ(table[m].b == g(m - 1) + f(m));
                if (m >= 2) {
                    REQ(table[m].c == Rat(m - 1) * f(m - 2));
                    REQ(table[m].d == Rat(m - 1) * g(m - 2) + Rat(m) * f(m - 1));
                }
            }
        }
    }
    REQ(made == 20);
    return true;
}

bool criterion_5(std::string& note) {
    oracle::Rng rng(88);
    for (int trial = 0; trial < 10; ++trial) {
        HPolytope base = oracle::random_polytope(rng, 2, 2);
        RatVec fq = futaki_vector(base).values;
        for (const Rat& a : {Rat(1), Rat(2), rat(7, 3)}) {
            HPolytope prism = oracle::make_prism(base, Rat(0), a);
            RatVec fp = futaki_vector(prism).values;
            REQ(fp[0] == a * a * fq[0]);
            REQ(fp[1] == a * a * fq[1]);
            REQ(fp[2] == Rat(0));
        }
    }
    return true;
}

bool criterion_6(std::string& note) {
    oracle::Rng rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        int n = (trial < 6) ? 2 : 3;
        HPolytope p = oracle::random_polytope(rng, n, 2);
        RatVec fms = all_facet_measures(p);
        for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
            RatVec slope(p.halfspaces().size(), Rat(0));
            slope[i] = 1;
            ParametricPolytope fam = make_parametric(p, slope);
            std::vector<Rat> bps = combinatorics_breakpoints(fam, Rat(0), Rat(1));
            Rat t1 = bps.empty() ? Rat(1) : bps.front();
            // volume is a polynomial of degree <= n before the first
            // combinatorial change; interpolate it and differentiate at 0
            RatVec xs, ys;
            for (int k = 0; k <= n; ++k) {
                Rat t = t1 * rat(k, 2 * (n + 1));
                xs.push_back(t);
                ys.push_back(volume(polytope_at(fam, t)));
            }
            Poly vol_poly = poly_interpolate(xs, ys);
            REQ(poly_derivative_value(vol_poly, 1, Rat(0)) == fms[i]);
        }
    }
    return true;
}

bool criterion_7(std::string& note) {
    oracle::Rng rng(111);
    int triples = 0;
    for (int trial = 0; trial < 10; ++trial) {
        RandomPillar rp = random_pillar(rng, 3);
        PillarProfile prof = pillar_profile(rp.matrix, rp.base);
        for (int k = 0; k < 5; ++k, ++triples) {
            Rat u1 = prof.s_max * rat(rng.range(0, 10), 20);
            Rat u2 = u1 + prof.s_max * rat(rng.range(1, 9), 20);
            Rat m = (u1 + u2) / 2;
            // concavity of the square root of the section area, exactly
            Rat lhs = 4 * prof.f(m) - prof.f(u1) - prof.f(u2);
            REQ(lhs >= 0);
            REQ(lhs * lhs >= 4 * prof.f(u1) * prof.f(u2));
        }
    }
    REQ(triples == 50);
    // equal section volumes force a unit homothety ratio
    HPolytope twist3(3, {HalfSpace({Int(1), Int(0), Int(0)}, Rat(0)),
                         HalfSpace({Int(0), Int(1), Int(0)}, Rat(0)),
                         HalfSpace({Int(0), Int(0), Int(1)}, Rat(0)),
                         HalfSpace({Int(0), Int(0), Int(-1)}, Rat(1)),
                         HalfSpace({Int(-1), Int(0), Int(1)}, Rat(1)),
                         HalfSpace({Int(0), Int(-1), Int(-1)}, Rat(2))});
    CongruenceResult eq = slice_congruence(twist3, 2, Rat(0), Rat(1));
    REQ(eq.vol1 == eq.vol2);
    REQ(eq.ratio == Rat(1));
    REQ(eq.verdict != CongruenceVerdict::Homothetic);
    return true;
}

bool criterion_8(std::string& note) {
    // box pillar: every pair of sections is congruent, and the product
    // structure is recognized with its exact quadratic scaling payload
    HPolytope box = moment_polytope(
        BottMatrix::identity(3),
        KahlerClass{{Rat(1), Rat(0), Rat(1), Rat(0), Rat(2), Rat(0)}});
    for (const auto& [u1, u2] : std::vector<std::pair<Rat, Rat>>{
             {Rat(0), Rat(2)}, {rat(1, 2), Rat(1)}, {rat(1, 3), rat(5, 3)}}) {
        CongruenceResult r = slice_congruence(box, 2, u1, u2);
        REQ(r.verdict == CongruenceVerdict::Congruent);
        REQ(r.ratio == Rat(1));
    }
    auto split = product_split(box, 2);
    REQ(split.has_value());
    REQ(split->height == Rat(2));
    REQ(split->identity_verified);
    REQ(split->futaki_p.is_zero());
    REQ(split->futaki_q.is_zero());

    // trapezoid: sections of different lengths are not congruent and no
    // product structure exists along either axis
    HPolytope trap = moment_polytope(hirzebruch(), KahlerClass{{Rat(2), Rat(0), Rat(0), Rat(1)}});
    CongruenceResult t = slice_congruence(trap, 1, Rat(0), Rat(-1));
    REQ(t.verdict != CongruenceVerdict::Congruent);
    REQ(!product_split(trap, 0).has_value());
    REQ(!product_split(trap, 1).has_value());
    return true;
}

bool criterion_9(std::string& note) {
    auto started = std::chrono::steady_clock::now();
    // split surface with a box polytope: top divisor degenerates cleanly
    auto [b1, b2] = stability_pair(BottMatrix::identity(2),
                                   DivisorClass{{Rat(1), Rat(0), Rat(1), Rat(0)}}, 2);
    for (const StabilityReport& r : {b1, b2}) {
        REQ(r.epsilon == Rat(1));
        REQ(r.mu == Rat(2));
        REQ(r.xi == Rat(0));
        REQ(r.assumption_holds);
        REQ(r.futaki_vD == Rat(0));
        REQ(r.consistent);
    }

    BottMatrix a = hirzebruch();
    DivisorClass l{{Rat(2), Rat(0), Rat(0), Rat(1)}};
    auto [lo, hi] = stability_pair(a, l, 2);
    REQ(lo.mu == rat(7, 5));
    REQ(hi.mu == rat(7, 5));
    REQ(lo.epsilon == Rat(1));
    REQ(hi.epsilon == Rat(1));
    REQ(lo.xi == rat(-8, 15));
    REQ(hi.xi == rat(8, 15));
    REQ(lo.assumption_holds);
    REQ(hi.assumption_holds);
    REQ(lo.consistent);
    REQ(hi.consistent);

    // the exact value against adaptive quadrature of the chopped family
    BottFan fan = fan_from_matrix(a);
    Rat mu = mu_invariant(fan, l);
    const int i0 = 3;
    auto integrand = [&](double x) {
        Rat xr = oracle::rat_approx(x);
        RatVec chopped = l.b;
        chopped[i0] -= xr;
        RatVec fm = all_facet_measures(moment_polytope(fan, KahlerClass{chopped}));
        Rat total = 0;
        for (int i = 0; i < 4; ++i) {
            Rat coeff = Rat(-1) + mu * l.b[i];
            if (i == i0) coeff += Rat(1) - mu * xr;
            total += coeff * fm[i];
        }
        return 2 * rat_to_double(total);
    };
    double num = oracle::adaptive_simpson(integrand, 0.0, 1.0, 1e-12);
    double exact = rat_to_double(hi.xi);
    REQ(std::abs(num - exact) <= 1e-9 * std::abs(exact));
    REQ_TIME(2000);
    return true;
}

bool criterion_10(std::string& note) {
    auto started = std::chrono::steady_clock::now();
    for (int bits = 0; bits < 8; ++bits) {
        IntVec row1{Int((bits >> 0) & 1)};
        IntVec row2{Int((bits >> 1) & 1), Int((bits >> 2) & 1)};
        BottMatrix a = BottMatrix::from_below(3, {row1, row2});
        bool is_identity = (bits == 0);
        REQ(is_product_of_lines(a) == is_identity);
        ScanResult scan = scan_nonvanishing(a, 200, 0);
        REQ(scan.witness.has_value() == !is_identity);
        if (scan.witness) {
            REQ(is_kahler_class(a, scan.witness->kahler));
            REQ(!scan.witness->futaki.is_zero());
        }
    }
    REQ_TIME(60000);
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* text;
        std::function<bool(std::string&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "products of lines have identically zero Futaki vector (n=2,3,4, 50 classes each)",
         criterion_1},
        {2, "reference surface: exact Futaki value, polygon oracle, scan witness", criterion_2},
        {3, "wedge pillars: cubic Futaki polynomial and third-derivative identity", criterion_3},
        {4, "profile identities and derivative rows on 20 seeded pillars", criterion_4},
        {5, "prisms scale the base Futaki vector by the squared height", criterion_5},
        {6, "volume derivative along a facet normal equals the facet measure", criterion_6},
        {7, "root-concavity of section profiles on 50 seeded triples", criterion_7},
        {8, "box sections congruent with product payload; trapezoid sections not congruent",
         criterion_8},
        {9, "slope stability invariants on the split and twisted surfaces", criterion_9},
        {10, "scan sweep over all binary three-stage towers", criterion_10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string note;
        bool ok = false;
        try {
            ok = c.fn(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (note.empty())
            std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", c.id, c.text);
        else
            std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.text,
                        note.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
