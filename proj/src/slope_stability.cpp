#include "bott/slope_stability.hpp"

#include <algorithm>
#include <cassert>

#include "bott/errors.hpp"
#include "bott/futaki.hpp"
#include "bott/parametric.hpp"
#include "bott/polytope.hpp"

namespace bott {

namespace {

Rat factorial(int k) {
    Rat f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

HPolytope class_polytope(const BottFan& fan, const DivisorClass& c) {
    return moment_polytope(fan, KahlerClass{c.b});
}

void check_support(const BottFan& fan, const DivisorClass& c) {
    if (c.b.size() != fan.rays.size())
        throw InvalidInput("divisor class needs one support number per ray");
}

} // namespace

std::vector<Wall> walls(const BottFan& fan) {
    const int n = fan.n;
    std::vector<Wall> out;
    for (int pair = 0; pair < n; ++pair) {
        std::vector<int> other_pairs;
        for (int j = 0; j < n; ++j)
            if (j != pair) other_pairs.push_back(j);
        const std::uint64_t count = std::uint64_t(1) << (n - 1);
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            Wall w;
            w.pair = pair;
            for (int k = 0; k + 1 < n; ++k)
                w.others.push_back(2 * other_pairs[k] + ((mask >> k) & 1));
            // Solve u_pair + e_pair + sum_k beta_k v_{others_k} = 0; the wall
            // rays extend to a basis in a smooth fan, so the solution exists
            // and is unique.
            RatMat cols(n, RatVec(n - 1));
            RatVec rhs(n);
            for (int r = 0; r < n; ++r) {
                for (int k = 0; k + 1 < n; ++k) cols[r][k] = Rat(fan.rays[w.others[k]][r]);
                rhs[r] = -Rat(fan.rays[2 * pair][r] + fan.rays[2 * pair + 1][r]);
            }
            auto beta = solve_unique(std::move(cols), std::move(rhs));
            assert(beta.has_value());
            w.beta = std::move(*beta);
            out.push_back(std::move(w));
        }
    }
    return out;
}

Rat wall_degree(const Wall& w, const DivisorClass& n) {
    Rat d = n.b[2 * w.pair] + n.b[2 * w.pair + 1];
    for (std::size_t k = 0; k < w.others.size(); ++k) d += w.beta[k] * n.b[w.others[k]];
    return d;
}

Rat wall_ray_coefficient(const Wall& w, int ray) {
    Rat c = 0;
    if (ray == 2 * w.pair || ray == 2 * w.pair + 1) c += 1;
    for (std::size_t k = 0; k < w.others.size(); ++k)
        if (w.others[k] == ray) c += w.beta[k];
    return c;
}

bool is_nef(const BottFan& fan, const DivisorClass& n) {
    check_support(fan, n);
    for (const Wall& w : walls(fan))
        if (wall_degree(w, n) < 0) return false;
    return true;
}

bool is_ample(const BottFan& fan, const DivisorClass& n) {
    check_support(fan, n);
    for (const Wall& w : walls(fan))
        if (wall_degree(w, n) <= 0) return false;
    return true;
}

Rat seshadri_constant(const BottFan& fan, const DivisorClass& ample, int i0) {
    check_support(fan, ample);
    if (i0 < 0 || i0 >= static_cast<int>(fan.rays.size()))
        throw InvalidInput("ray index out of range");
    if (!is_ample(fan, ample)) throw NotAmple();

    // L - xD stays nef exactly while every wall degree stays nonnegative;
    // walls with (D . C) <= 0 never bind for x >= 0.
    bool found = false;
    Rat eps;
    for (const Wall& w : walls(fan)) {
        Rat dc = wall_ray_coefficient(w, i0);
        if (dc <= 0) continue;
        Rat bound = wall_degree(w, ample) / dc;
        if (!found || bound < eps) {
            eps = bound;
            found = true;
        }
    }
    if (!found) throw Error("no wall meets the divisor positively");
    return eps;
}

Rat intersection_number(const BottFan& fan, const std::vector<DivisorClass>& classes) {
    const int n = fan.n;
    if (static_cast<int>(classes.size()) != n)
        throw InvalidInput("intersection number needs exactly n classes");
    for (const DivisorClass& c : classes) check_support(fan, c);

    std::vector<int> non_nef;
    for (int k = 0; k < n; ++k)
        if (!is_nef(fan, classes[k])) non_nef.push_back(k);
    if (non_nef.size() > 1) throw NotNef();

    if (non_nef.empty()) {
        // Polarization of N -> n! Vol(P_N) over the nef cone (where support
        // numbers add under Minkowski sums).
        Rat total = 0;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
            RatVec sum(2 * n, Rat(0));
            int bits = 0;
            for (int k = 0; k < n; ++k)
                if ((mask >> k) & 1) {
                    ++bits;
                    for (int i = 0; i < 2 * n; ++i) sum[i] += classes[k].b[i];
                }
            Rat v = volume(class_polytope(fan, DivisorClass{std::move(sum)}));
            total += ((n - bits) % 2 == 0) ? v : -v;
        }
        return total;
    }

    if (n == 1) {
        // On the line the class sum b_1 D_1 + b_2 D_2 has degree b_1 + b_2.
        return classes[0].b[0] + classes[0].b[1];
    }

    // Expand the single non-nef class in the D_i basis against the
    // polarization of facet measures of the nef part:
    // (N_1 ... N_{n-1} . D_i) = sum over subsets S of the nef classes of
    // (-1)^{n-1-|S|} facet_measure(P_{N_S}, i).
    std::vector<const DivisorClass*> nef;
    for (int k = 0; k < n; ++k)
        if (k != non_nef[0]) nef.push_back(&classes[k]);
    const DivisorClass& last = classes[non_nef[0]];

    RatVec facet_sums(2 * n, Rat(0));
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << (n - 1)); ++mask) {
        RatVec sum(2 * n, Rat(0));
        int bits = 0;
        for (int k = 0; k + 1 < n; ++k)
            if ((mask >> k) & 1) {
                ++bits;
                for (int i = 0; i < 2 * n; ++i) sum[i] += nef[k]->b[i];
            }
        RatVec fm = all_facet_measures(class_polytope(fan, DivisorClass{std::move(sum)}));
        Rat sign = ((n - 1 - bits) % 2 == 0) ? Rat(1) : Rat(-1);
        for (int i = 0; i < 2 * n; ++i) facet_sums[i] += sign * fm[i];
    }
    Rat total = 0;
    for (int i = 0; i < 2 * n; ++i) total += last.b[i] * facet_sums[i];
    return total;
}

Rat mu_invariant(const BottFan& fan, const DivisorClass& ample) {
    check_support(fan, ample);
    if (!is_ample(fan, ample)) throw NotAmple();
    HPolytope p = class_polytope(fan, ample);
    return boundary_volume(p) / (Rat(fan.n) * volume(p));
}

Rat xi_invariant(const BottFan& fan, const DivisorClass& ample, int i0) {
    const int n = fan.n;
    check_support(fan, ample);
    if (i0 < 0 || i0 >= 2 * n) throw InvalidInput("ray index out of range");
    if (!is_ample(fan, ample)) throw NotAmple();

    Rat eps = seshadri_constant(fan, ample, i0);
    Rat mu = mu_invariant(fan, ample);

    // The chop family P_{L - xD}: only the i0 offset moves, with slope -1.
    RatVec slope(2 * n, Rat(0));
    slope[i0] = -1;
    ParametricPolytope fam = make_parametric(class_polytope(fan, ample), slope);

    std::vector<Rat> grid{Rat(0)};
    for (const Rat& t : combinatorics_breakpoints(fam, Rat(0), eps)) grid.push_back(t);
    grid.push_back(eps);

    std::vector<PiecewisePolynomial> fms = family_profile_multi(
        fam, grid, n - 1, 2 * n, [](const HPolytope& p) { return all_facet_measures(p); });

    // Integrand: sum_i [(-1 + mu a_i) + delta_{i,i0} (1 - mu x)] (n-1)! fm_i(x),
    // the multilinear expansion of ((L-xD)^{n-1} . (K_X + mu L + (1 - mu x) D)).
    PiecewisePolynomial total = PiecewisePolynomial::constant(Rat(0), eps, Rat(0));
    for (int i = 0; i < 2 * n; ++i) {
        Poly coeff{Rat(-1) + mu * ample.b[i]};
        if (i == i0) {
            coeff[0] += 1;
            coeff.push_back(-mu);
        }
        PiecewisePolynomial cpw({Rat(0), eps}, {coeff});
        total = total + fms[i] * cpw;
    }
    return Rat(n) * factorial(n - 1) * total.integral();
}

std::pair<StabilityReport, StabilityReport> stability_pair(const BottMatrix& a,
                                                           const DivisorClass& ample, int i0) {
    BottFan fan = fan_from_matrix(a);
    check_support(fan, ample);
    if (i0 < 0 || i0 >= 2 * fan.n) throw InvalidInput("ray index out of range");
    if (!is_ample(fan, ample)) throw NotAmple();

    FutakiVector fut = futaki_vector(class_polytope(fan, ample));

    auto make_report = [&](int ray) {
        StabilityReport r;
        r.ray = ray;
        r.epsilon = seshadri_constant(fan, ample, ray);
        r.mu = mu_invariant(fan, ample);
        r.xi = xi_invariant(fan, ample, ray);

        RatVec chopped = ample.b;
        chopped[ray] -= r.epsilon;
        std::vector<DivisorClass> power(fan.n, DivisorClass{chopped});
        r.assumption_holds = intersection_number(fan, power) == 0;

        r.futaki_vD = 0;
        for (int k = 0; k < fan.n; ++k) r.futaki_vD += Rat(fan.rays[ray][k]) * fut.values[k];
        return r;
    };

    StabilityReport first = make_report(i0);
    StabilityReport second = make_report(BottFan::partner(i0));

    bool consistent = true;
    if (first.assumption_holds && second.assumption_holds) {
        bool futaki_zero = first.futaki_vD == 0 && second.futaki_vD == 0;
        bool xi_ok = first.xi >= 0 && second.xi >= 0;
        consistent = (futaki_zero == xi_ok);
    }
    first.consistent = consistent;
    second.consistent = consistent;
    return {std::move(first), std::move(second)};
}

} // namespace bott
