#ifndef BOTT_SLOPE_STABILITY_HPP
#define BOTT_SLOPE_STABILITY_HPP

#include <utility>
#include <vector>

#include "bott/bott_tower.hpp"
#include "bott/rational.hpp"

namespace bott {

/// A divisor class sum_i b_i D_i given by its 2n support numbers in ray
/// order.  Nothing is assumed about positivity; ampleness and nefness are
/// predicates.
struct DivisorClass {
    RatVec b;
};

/// A wall of the fan: the common facet of the two maximal cones that differ
/// in pair `pair` only, with the shared rays `others` (one per remaining
/// pair).  The torus-invariant curve C of the wall meets a class
/// N = sum b_i D_i in
///   (N . C) = b_{2 pair} + b_{2 pair + 1} + sum_k beta_k b_{others_k},
/// from the wall relation u_pair + e_pair + sum_k beta_k v_{others_k} = 0.
struct Wall {
    int pair = 0;
    std::vector<int> others;
    RatVec beta;
};

std::vector<Wall> walls(const BottFan& fan);

/// (N . C) for the wall's curve.
Rat wall_degree(const Wall& w, const DivisorClass& n);
/// Coefficient of b_j in the wall degree, i.e. (D_j . C).
Rat wall_ray_coefficient(const Wall& w, int ray);

bool is_nef(const BottFan& fan, const DivisorClass& n);
bool is_ample(const BottFan& fan, const DivisorClass& n);

/// Seshadri constant of the prime divisor D_{i0} with respect to ample L:
/// the largest x with L - x D_{i0} nef, the minimum over walls with
/// (D_{i0} . C) > 0 of (L . C)/(D_{i0} . C).
Rat seshadri_constant(const BottFan& fan, const DivisorClass& ample, int i0);

/// Exact intersection number of n classes.  Nef classes go through the
/// polarization of the volume polynomial; at most one non-nef class is
/// allowed and is expanded linearly in the D_i basis against facet measures
/// of the nef part.
Rat intersection_number(const BottFan& fan, const std::vector<DivisorClass>& classes);

/// mu_L = (L^{n-1} . (-K_X)) / (L^n) = Vol(dP_L) / (n Vol(P_L)).
Rat mu_invariant(const BottFan& fan, const DivisorClass& ample);

/// xi_L(D_{i0}) = n * int_0^eps ((L - xD)^{n-1} . (K_X + mu L + (1 - mu x) D)) dx,
/// computed by exact piecewise-polynomial integration of facet measures of
/// the chopped polytope P_{L - xD}.
Rat xi_invariant(const BottFan& fan, const DivisorClass& ample, int i0);

struct StabilityReport {
    int ray = 0; // 0-based ray index of D
    Rat epsilon;
    Rat mu;
    Rat xi;
    bool assumption_holds = false; // ((L - eps D)^n) == 0
    Rat futaki_vD;                 // Futaki component of the functional <x, v_ray>
    bool consistent = false;
};

/// Reports for D_{i0} and its primitive-collection partner.  The consistent
/// flag is the cross-check of the slope-stability equivalence: when the
/// degeneration assumption holds on both sides of the pair, Futaki
/// vanishing on the pair must coincide with xi >= 0 on the pair; when the
/// assumption fails on either side the check is vacuous (true).
std::pair<StabilityReport, StabilityReport> stability_pair(const BottMatrix& a,
                                                           const DivisorClass& ample, int i0);

} // namespace bott

#endif // BOTT_SLOPE_STABILITY_HPP
