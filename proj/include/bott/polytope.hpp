#ifndef BOTT_POLYTOPE_HPP
#define BOTT_POLYTOPE_HPP

#include <vector>

#include "bott/linalg.hpp"
#include "bott/piecewise.hpp"
#include "bott/rational.hpp"

namespace bott {

/// One linear constraint <x, normal> + offset >= 0.  The normal is an
/// integer lattice vector, stored primitive (content 1); construction
/// divides out the content, rescaling the offset to keep the same set.
struct HalfSpace {
    IntVec normal;
    Rat offset;

    HalfSpace(IntVec n, Rat a);

    /// The affine form l(x) = <x, normal> + offset.
    Rat eval(const RatVec& x) const { return dot(normal, x) + offset; }

    bool operator==(const HalfSpace& other) const = default;
};

/// Intersection of finitely many half-spaces in a fixed ambient dimension.
/// Degenerate lists (duplicates, redundant constraints, infeasible systems)
/// are legal inputs; operations that need boundedness or full dimension
/// check and throw.  Instances are immutable and safe to share across
/// threads.
class HPolytope {
public:
    HPolytope(int dim, std::vector<HalfSpace> halfspaces);

    int dim() const { return dim_; }
    const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }
    std::size_t facet_candidate_count() const { return halfspaces_.size(); }

    /// Axis-aligned box with the given corner vectors (lo < hi entrywise).
    static HPolytope box(const RatVec& lo, const RatVec& hi);
    /// A canonical bounded empty polytope used to represent empty sections.
    static HPolytope empty_box(int dim);

    bool operator==(const HPolytope& other) const = default;

private:
    int dim_;
    std::vector<HalfSpace> halfspaces_;
};

/// A vertex together with the indices of all half-spaces tight at it.
struct Vertex {
    RatVec point;
    std::vector<int> tight;
};

/// Vertex description; vertices are exactly the extreme points, sorted
/// lexicographically by coordinates.
struct VPolytope {
    int dim = 0;
    std::vector<Vertex> vertices;
};

/// True when the recession cone is trivial.
bool is_bounded(const HPolytope& p);

/// All vertices with their tight sets.  Throws UnboundedPolytope when the
/// recession cone is nontrivial, EmptyPolytope when infeasible.
VPolytope vertex_enumerate(const HPolytope& p);

/// Lattice-normalized volume (Lebesgue measure).  Empty and lower-dimensional
/// inputs give 0; unbounded inputs throw.
Rat volume(const HPolytope& p);

/// First moment: the exact integral of the coordinate x_i over p (0-based i).
Rat moment_first(const HPolytope& p, int i);

/// Lattice-normalized (n-1)-measure of the facet supported by half-space i.
/// Half-spaces that support no facet (redundant, or repeats of an earlier
/// identical half-space) give 0.
Rat facet_measure(const HPolytope& p, int i);

/// Facet measures of every half-space in one pass (zeros for non-facets).
RatVec all_facet_measures(const HPolytope& p);

/// Sum of all facet measures.  Requires p bounded and full-dimensional.
Rat boundary_volume(const HPolytope& p);

/// Integral of the coordinate x_i over the whole boundary, facet by facet
/// with the lattice-normalized measure.
Rat boundary_moment_first(const HPolytope& p, int i);

/// Section {x in p : x_axis = u}, written in the remaining coordinates
/// (axis 0-based; the axis coordinate is dropped, others keep their order).
/// Empty sections come back as a canonical bounded empty polytope.
HPolytope slice_at(const HPolytope& p, int axis, const Rat& u);

/// Exact section-volume profile f(u) and side-boundary derivative g(u) of a
/// bounded full-dimensional polytope along a coordinate axis, on the axis
/// range [lo, hi] of p.  f(u) is the (n-1)-volume of the section at height
/// u; g is the u-derivative of the side-boundary area of the part of p
/// below height u (the two horizontal caps are not part of it).
struct AxisProfiles {
    PiecewisePolynomial f;
    PiecewisePolynomial g;
};
AxisProfiles axis_profiles(const HPolytope& p, int axis);

/// Image of p under x -> W x for a unimodular integer matrix W (rows).
HPolytope apply_unimodular(const HPolytope& p, const std::vector<IntVec>& w);

/// Image of p under translation by t.
HPolytope translated(const HPolytope& p, const RatVec& t);

} // namespace bott

#endif // BOTT_POLYTOPE_HPP
