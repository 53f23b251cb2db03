#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bott/bott_tower.hpp"
#include "bott/errors.hpp"
#include "bott/futaki.hpp"

#include "oracle_helpers.hpp"

using namespace bott;

namespace {

BottMatrix hirzebruch() { return BottMatrix::from_full({{Int(1), Int(0)}, {Int(1), Int(1)}}); }

HPolytope trapezoid() { return moment_polytope(hirzebruch(), KahlerClass{{Rat(2), Rat(0), Rat(0), Rat(1)}}); }

// the pillar polytope P_[0,s]: base offsets, cap at height s, bottom at 0
HPolytope pillar_box(const BottMatrix& a, const RatVec& base, const Rat& s) {
    RatVec off = base;
    off.push_back(s);
    off.push_back(Rat(0));
    return moment_polytope(a, KahlerClass{off});
}

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

} // namespace

TEST_CASE("Futaki vector of the reference trapezoid") {
    HPolytope p = trapezoid();
    CHECK(futaki_component(p, 0) == rat(1, 3));
    CHECK(futaki_component(p, 1) == rat(-2, 3));
    CHECK(futaki_vector(p).values == RatVec{rat(1, 3), rat(-2, 3)});
    CHECK_FALSE(futaki_vector(p).is_zero());
    // the independent shoelace-plus-edge-quadrature oracle
    CHECK(oracle::futaki_2d(p, 0) == rat(1, 3));
    CHECK(oracle::futaki_2d(p, 1) == rat(-2, 3));
}

TEST_CASE("Futaki agrees with the 2D oracle on random polytopes") {
    oracle::Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        HPolytope p = oracle::random_polytope(rng, 2, static_cast<int>(rng.range(0, 3)));
        CHECK(futaki_component(p, 0) == oracle::futaki_2d(p, 0));
        CHECK(futaki_component(p, 1) == oracle::futaki_2d(p, 1));
    }
}

TEST_CASE("translation invariance") {
    oracle::Rng rng(42);
    HPolytope p = trapezoid();
    CHECK(futaki_vector(translated(p, {Rat(5), Rat(7)})).values == futaki_vector(p).values);
    for (int trial = 0; trial < 5; ++trial) {
        HPolytope q = oracle::random_polytope(rng, 3, 2);
        RatVec t = {rng.rational(-9, 9, 4), rng.rational(-9, 9, 4), rng.rational(-9, 9, 4)};
        CHECK(futaki_vector(translated(q, t)).values == futaki_vector(q).values);
    }
}

TEST_CASE("unimodular equivariance: F(W P) = W F(P)") {
    oracle::Rng rng(43);
    std::vector<std::vector<IntVec>> maps = {
        {{Int(1), Int(2)}, {Int(0), Int(1)}},
        {{Int(0), Int(-1)}, {Int(1), Int(0)}},
        {{Int(3), Int(2)}, {Int(1), Int(1)}},
        {{Int(-1), Int(3)}, {Int(0), Int(-1)}},
    };
    for (const auto& w : maps) {
        for (int trial = 0; trial < 3; ++trial) {
            HPolytope p = oracle::random_polytope(rng, 2, static_cast<int>(rng.range(0, 2)));
            RatVec f = futaki_vector(p).values;
            RatVec expect(2, Rat(0));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) expect[i] += Rat(w[i][j]) * f[j];
            CHECK(futaki_vector(apply_unimodular(p, w)).values == expect);
        }
    }
}

TEST_CASE("centrally symmetric polytopes have zero Futaki vector") {
    CHECK(futaki_vector(HPolytope::box({Rat(-1), Rat(-1), Rat(-1)}, {Rat(1), Rat(1), Rat(1)})).is_zero());
    CHECK(futaki_vector(HPolytope::box({Rat(0), Rat(-2)}, {Rat(5), Rat(3)})).is_zero());
}

TEST_CASE("pillar profile of the growing wedge") {
    BottMatrix grow = BottMatrix::from_full({{Int(1), Int(0)}, {Int(-1), Int(1)}});
    PillarProfile prof = pillar_profile(grow, {Rat(2), Rat(0)});
    CHECK_FALSE(prof.collapse_found);
    CHECK(prof.s_max > 0);
    Rat s = prof.s_max;
    CHECK(prof.f == PiecewisePolynomial({Rat(0), s}, {Poly{Rat(2), Rat(1)}}));
    CHECK(prof.g == PiecewisePolynomial::constant(Rat(0), s, Rat(2)));
    CHECK(prof.a == PiecewisePolynomial({Rat(0), s}, {Poly{Rat(0), Rat(2), rat(1, 2)}}));
    CHECK(prof.b == PiecewisePolynomial({Rat(0), s}, {Poly{Rat(4), Rat(3)}}));
    CHECK(prof.c == PiecewisePolynomial({Rat(0), s}, {Poly{Rat(0), Rat(0), Rat(1), rat(1, 3)}}));
    CHECK(prof.d == PiecewisePolynomial({Rat(0), s}, {Poly{Rat(0), Rat(2), Rat(2)}}));
    CHECK(futaki_pillar(prof) ==
          PiecewisePolynomial({Rat(0), s}, {Poly{Rat(0), Rat(0), Rat(0), rat(2, 3)}}));
}

TEST_CASE("pillar profile detects section collapse") {
    // shrinking section [0, 2-u] collapses at height 2
    PillarProfile prof = pillar_profile(hirzebruch(), {Rat(2), Rat(0)});
    CHECK(prof.collapse_found);
    CHECK(prof.s_max == Rat(2));
    CHECK(prof.f(Rat(0)) == Rat(2));
    CHECK(prof.f(Rat(2)) == Rat(0));
    CHECK_THROWS_AS(pillar_profile(hirzebruch(), {Rat(-1), Rat(0)}), DegenerateSlice);
}

TEST_CASE("pillar identity: F(s) equals the direct Futaki component") {
    oracle::Rng rng(44);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 3; ++trial) {
            RandomPillar rp = random_pillar(rng, n);
            PillarProfile prof = pillar_profile(rp.matrix, rp.base);
            PiecewisePolynomial fut = futaki_pillar(prof);
            for (int k = 1; k <= 20; ++k) {
                Rat s = prof.s_max * rat(k, 20);
                CHECK(fut(s) == futaki_component(pillar_box(rp.matrix, rp.base, s), n - 1));
            }
        }
    }
}

TEST_CASE("cumulative identities of the profile data") {
    oracle::Rng rng(45);
    for (int n : {2, 3, 4}) {
        RandomPillar rp = random_pillar(rng, n);
        PillarProfile prof = pillar_profile(rp.matrix, rp.base);
        for (int k = 1; k <= 6; ++k) {
            Rat s = prof.s_max * rat(k, 6);
            HPolytope box = pillar_box(rp.matrix, rp.base, s);
            CHECK(prof.a(s) == volume(box));
            CHECK(prof.b(s) == boundary_volume(box));
            CHECK(prof.c(s) == moment_first(box, n - 1));
            CHECK(prof.d(s) == boundary_moment_first(box, n - 1));
        }
    }
}

TEST_CASE("derivative table follows the closed-form rows") {
    oracle::Rng rng(46);
    for (int n : {2, 3, 4}) {
        RandomPillar rp = random_pillar(rng, n);
        PillarProfile prof = pillar_profile(rp.matrix, rp.base);
        auto f = [&](unsigned m) { return prof.f.derivative_value(Rat(0), m); };
        auto g = [&](unsigned m) { return prof.g.derivative_value(Rat(0), m); };
        std::vector<DerivativeRow> table = derivative_table(prof, 4);
        REQUIRE(table.size() == 5);
        CHECK(table[0].a == Rat(0));
        CHECK(table[0].b == 2 * f(0));
        CHECK(table[0].c == Rat(0));
        CHECK(table[0].d == Rat(0));
        CHECK(table[1].c == Rat(0));
        CHECK(table[1].d == f(0));
        for (unsigned m = 1; m <= 4; ++m) {
            CHECK(table[m].a == f(m - 1));
            CHECK(table[m].b == g(m - 1) + f(m));
            if (m >= 2) {
                CHECK(table[m].c == Rat(m - 1) * f(m - 2));
                CHECK(table[m].d == Rat(m - 1) * g(m - 2) + Rat(m) * f(m - 1));
            }
        }
    }
}

TEST_CASE("third derivative identity") {
    oracle::Rng rng(47);
    for (int n : {2, 3, 4}) {
        for (int trial = 0; trial < 3; ++trial) {
            RandomPillar rp = random_pillar(rng, n);
            PillarProfile prof = pillar_profile(rp.matrix, rp.base);
            ThirdDerivativeCheck check = check_third_derivative(prof);
            CHECK(check.equal);
            CHECK(check.lhs == check.rhs);
            CHECK(check.rhs == 2 * prof.f.derivative_value(Rat(0), 1) * prof.f(Rat(0)));
            // an initial slope forces a nonvanishing Futaki polynomial
            if (prof.f.derivative_value(Rat(0), 1) != 0)
                CHECK_FALSE(futaki_pillar(prof).is_zero());
        }
    }
}

TEST_CASE("prism pillars have zero Futaki polynomial and constant section") {
    oracle::Rng rng(48);
    for (int n : {2, 3}) {
        // untwisted last stage: the last matrix row is a standard basis row
        std::vector<IntVec> rows = oracle::random_matrix(rng, n).rows();
        for (int c = 0; c < n - 1; ++c) rows[n - 1][c] = 0;
        BottMatrix a = BottMatrix::from_full(rows);
        auto base = oracle::random_kahler(rng, a.truncated());
        REQUIRE(base.has_value());
        PillarProfile prof = pillar_profile(a, base->a);
        CHECK(futaki_pillar(prof).is_zero());
        // the profile representation itself is constant
        PiecewisePolynomial diff = prof.f - PiecewisePolynomial::constant(
            prof.f.breakpoints().front(), prof.f.breakpoints().back(), prof.f(Rat(0)));
        CHECK(diff.is_zero());
    }
}

TEST_CASE("slice congruence verdicts") {
    HPolytope box = HPolytope::box({Rat(0), Rat(0), Rat(0)}, {Rat(2), Rat(1), Rat(3)});
    CongruenceResult same = slice_congruence(box, 2, rat(1, 2), rat(5, 2));
    CHECK(same.verdict == CongruenceVerdict::Congruent);
    CHECK(same.ratio == Rat(1));
    CHECK(same.translation == RatVec{Rat(0), Rat(0)});

    // sheared prism: congruent slices with a nonzero translation
    HPolytope shear(2, {HalfSpace({Int(0), Int(1)}, Rat(0)), HalfSpace({Int(0), Int(-1)}, Rat(1)),
                        HalfSpace({Int(1), Int(-1)}, Rat(0)), HalfSpace({Int(-1), Int(1)}, Rat(1))});
    CongruenceResult sheared = slice_congruence(shear, 1, Rat(0), rat(3, 4));
    CHECK(sheared.verdict == CongruenceVerdict::Congruent);
    CHECK(sheared.ratio == Rat(1));
    CHECK(sheared.translation == RatVec{rat(-3, 4)});

    // trapezoid heights with different lengths are not congruent; they are
    // homothetic with the ratio fixed by the volumes
    CongruenceResult differ = slice_congruence(trapezoid(), 1, Rat(0), Rat(-1));
    CHECK(differ.verdict != CongruenceVerdict::Congruent);
    CHECK(differ.verdict == CongruenceVerdict::Homothetic);
    CHECK(differ.ratio == rat(2, 3));
    CHECK(differ.vol1 == Rat(2));
    CHECK(differ.vol2 == Rat(3));

    // equal volumes force ratio 1: verdict is Congruent or Incongruent
    HPolytope twist3(3, {HalfSpace({Int(1), Int(0), Int(0)}, Rat(0)),
                         HalfSpace({Int(0), Int(1), Int(0)}, Rat(0)),
                         HalfSpace({Int(0), Int(0), Int(1)}, Rat(0)),
                         HalfSpace({Int(0), Int(0), Int(-1)}, Rat(1)),
                         HalfSpace({Int(-1), Int(0), Int(1)}, Rat(1)),
                         HalfSpace({Int(0), Int(-1), Int(-1)}, Rat(2))});
    CongruenceResult equal = slice_congruence(twist3, 2, Rat(0), Rat(1));
    CHECK(equal.vol1 == equal.vol2);
    CHECK(equal.ratio == Rat(1));
    CHECK(equal.verdict == CongruenceVerdict::Incongruent);

    CHECK_THROWS_AS(slice_congruence(box, 2, Rat(0), Rat(99)), DegenerateSlice);
}

TEST_CASE("product splitting and the quadratic payload") {
    // cube [-1,1]^3 along the last axis
    HPolytope cube = HPolytope::box({Rat(-1), Rat(-1), Rat(-1)}, {Rat(1), Rat(1), Rat(1)});
    auto split = product_split(cube, 2);
    REQUIRE(split.has_value());
    CHECK(split->height == Rat(2));
    CHECK(split->lo == Rat(-1));
    CHECK(split->hi == Rat(1));
    CHECK(split->identity_verified);
    CHECK(split->futaki_p.is_zero());
    CHECK(split->futaki_q.is_zero());
    CHECK(volume(split->base) == Rat(4));

    // the trapezoid is not a prism along either axis
    CHECK_FALSE(product_split(trapezoid(), 0).has_value());
    CHECK_FALSE(product_split(trapezoid(), 1).has_value());

    // prism over an asymmetric polygon: exact quadratic scaling payload
    oracle::Rng rng(49);
    for (const Rat& h : {Rat(1), Rat(3), rat(7, 3)}) {
        HPolytope base = oracle::random_polytope(rng, 2, 2);
        HPolytope prism = oracle::make_prism(base, Rat(0), h);
        auto ps = product_split(prism, 2);
        REQUIRE(ps.has_value());
        CHECK(ps->height == h);
        CHECK(ps->identity_verified);
        RatVec fq = futaki_vector(base).values;
        for (int i = 0; i < 2; ++i) CHECK(ps->futaki_p.values[i] == h * h * fq[i]);
        CHECK(ps->futaki_p.values[2] == Rat(0));
    }
}

TEST_CASE("scan returns no witness on products of lines") {
    for (int n : {2, 3}) {
        ScanResult res = scan_nonvanishing(BottMatrix::identity(n), 60, 7);
        CHECK_FALSE(res.witness.has_value());
        CHECK(res.classes_examined == 60);
    }
}

TEST_CASE("scan finds witnesses on twisted towers") {
    for (const auto& below : {IntVec{Int(1)}, IntVec{Int(2)}}) {
        BottMatrix a = BottMatrix::from_below(2, {below});
        ScanResult res = scan_nonvanishing(a, 100, 0);
        REQUIRE(res.witness.has_value());
        CHECK(is_kahler_class(a, res.witness->kahler));
        CHECK_FALSE(res.witness->futaki.is_zero());
        // the reported vector is the actual Futaki vector of the class
        CHECK(futaki_vector(moment_polytope(a, res.witness->kahler)).values ==
              res.witness->futaki.values);
    }
}

TEST_CASE("scan is deterministic and parallel-stable") {
    BottMatrix a = BottMatrix::from_below(3, {{Int(1)}, {Int(0), Int(1)}});
    ScanResult one = scan_nonvanishing(a, 40, 5);
    ScanResult two = scan_nonvanishing(a, 40, 5);
    ScanResult par = scan_nonvanishing(a, 40, 5, true);
    CHECK(one.classes_examined == two.classes_examined);
    CHECK(one.classes_examined == par.classes_examined);
    CHECK(one.witness.has_value() == two.witness.has_value());
    CHECK(one.witness.has_value() == par.witness.has_value());
    if (one.witness) {
        CHECK(one.witness->kahler.a == two.witness->kahler.a);
        CHECK(one.witness->kahler.a == par.witness->kahler.a);
        CHECK(one.witness->futaki.values == par.witness->futaki.values);
    }
    // a different seed still yields a reproducible stream
    ScanResult other = scan_nonvanishing(a, 40, 9);
    ScanResult other2 = scan_nonvanishing(a, 40, 9);
    CHECK(other.witness.has_value() == other2.witness.has_value());
    if (other.witness && other2.witness)
        CHECK(other.witness->kahler.a == other2.witness->kahler.a);
}

TEST_CASE("midpoint concavity of the section profile") {
    oracle::Rng rng(50);
    // n-1 = 2: exact rational check
    for (int trial = 0; trial < 5; ++trial) {
        RandomPillar rp = random_pillar(rng, 3);
        PillarProfile prof = pillar_profile(rp.matrix, rp.base);
        for (int k = 0; k < 10; ++k) {
            Rat u1 = prof.s_max * rat(rng.range(0, 10), 20);
            Rat u2 = u1 + prof.s_max * rat(rng.range(1, 9), 20);
            Rat m = (u1 + u2) / 2;
            Rat lhs = 4 * prof.f(m) - prof.f(u1) - prof.f(u2);
            CHECK(lhs >= 0);
            CHECK(lhs * lhs >= 4 * prof.f(u1) * prof.f(u2));
        }
    }
    // n-1 = 3: floating point with tolerance
    for (int trial = 0; trial < 3; ++trial) {
        RandomPillar rp = random_pillar(rng, 4);
        PillarProfile prof = pillar_profile(rp.matrix, rp.base);
        for (int k = 0; k < 6; ++k) {
            Rat u1 = prof.s_max * rat(rng.range(0, 10), 20);
            Rat u2 = u1 + prof.s_max * rat(rng.range(1, 9), 20);
            Rat m = (u1 + u2) / 2;
            double fm = std::cbrt(rat_to_double(prof.f(m)));
            double f1 = std::cbrt(rat_to_double(prof.f(u1)));
            double f2 = std::cbrt(rat_to_double(prof.f(u2)));
            CHECK(fm >= (f1 + f2) / 2 - 1e-9);
        }
    }
}
