#ifndef BOTT_PARAMETRIC_HPP
#define BOTT_PARAMETRIC_HPP

#include <functional>
#include <vector>

#include "bott/piecewise.hpp"
#include "bott/polytope.hpp"
#include "bott/rational.hpp"

namespace bott {

/// One-parameter family of half-space intersections with fixed normals and
/// offsets affine in the parameter: half-space i of P(t) is
/// <x, normal_i> >= -(off0_i + slope_i * t).
struct ParametricPolytope {
    int dim = 0;
    std::vector<IntVec> normals;
    RatVec off0;
    RatVec slope;
};

ParametricPolytope make_parametric(const HPolytope& base, const RatVec& slope);

HPolytope polytope_at(const ParametricPolytope& fam, const Rat& t);

/// Sorted distinct parameter values strictly inside the window at which the
/// vertex combinatorics of P(t) can change: for every invertible n-subset of
/// constraints the basic solution moves along an affine path, and each
/// remaining constraint is affine along it, so a sign change is the root of
/// a degree-one function.  The result is a superset of the true change
/// points, which is harmless for piecewise interpolation.  With
/// unbounded_hi set, hi is ignored and all roots above lo are returned.
std::vector<Rat> combinatorics_breakpoints(const ParametricPolytope& fam, const Rat& lo,
                                           const Rat& hi, bool unbounded_hi = false);

/// Interpolates t -> q(P(t)) on each interval of the given grid (strictly
/// increasing, at least two entries).  q must restrict to a polynomial of
/// degree at most deg_bound on every grid interval; samples are taken
/// strictly inside each interval, so grid points themselves are never
/// evaluated.
PiecewisePolynomial family_profile(const ParametricPolytope& fam, const std::vector<Rat>& grid,
                                   int deg_bound, const std::function<Rat(const HPolytope&)>& q);

/// Vector-valued variant: q returns `count` values per sample and one
/// piecewise polynomial is produced per component.
std::vector<PiecewisePolynomial> family_profile_multi(
    const ParametricPolytope& fam, const std::vector<Rat>& grid, int deg_bound,
    std::size_t count, const std::function<RatVec(const HPolytope&)>& q);

} // namespace bott

#endif // BOTT_PARAMETRIC_HPP
