#ifndef BOTT_FUTAKI_HPP
#define BOTT_FUTAKI_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bott/bott_tower.hpp"
#include "bott/piecewise.hpp"
#include "bott/polytope.hpp"
#include "bott/rational.hpp"

namespace bott {

/// F_i = Vol(P) * int_{dP} x_i dsigma - Vol(dP) * int_P x_i dv, one entry
/// per coordinate.  Invariant under lattice translation of P.
struct FutakiVector {
    RatVec values;

    bool is_zero() const {
        for (const Rat& v : values)
            if (v != 0) return false;
        return true;
    }
};

Rat futaki_component(const HPolytope& p, int i);
FutakiVector futaki_vector(const HPolytope& p);

/// Exact cumulative profile data of the pillar P_[0,s] over the last
/// coordinate: f(u) is the section volume, g the side-boundary density, and
///   a(x) = int_0^x f,   b(x) = int_0^x g + f(0) + f(x),
///   c(x) = int_0^x u f, d(x) = int_0^x u g + x f(x),
/// all on [0, s_max].  s_max is the largest height keeping the section
/// (n-1)-dimensional; when the section never collapses the representation is
/// capped just past the last combinatorial threshold and collapse_found is
/// false.
struct PillarProfile {
    Rat s_max;
    bool collapse_found = false;
    PiecewisePolynomial f, g, a, b, c, d;
};

/// Builds the profile for the pillar of A with the given first 2n-2 support
/// numbers (the bottom cap sits at height 0).  The base class must be a
/// valid Kähler class of the one-stage-down tower.
PillarProfile pillar_profile(const BottMatrix& a, const RatVec& base_offsets);

/// The pillar Futaki polynomial s -> a(s) d(s) - b(s) c(s).  With this
/// library's orientation it coincides with futaki_component(P_[0,s], n-1)
/// exactly (tested); only vanishing and sign are semantically meaningful.
PiecewisePolynomial futaki_pillar(const PillarProfile& prof);
PiecewisePolynomial futaki_pillar(const BottMatrix& a, const RatVec& base_offsets);

/// Rows m = 0..m_max of the derivatives a^(m)(0), b^(m)(0), c^(m)(0),
/// d^(m)(0), taken on the first piece.
struct DerivativeRow {
    Rat a, b, c, d;
};
std::vector<DerivativeRow> derivative_table(const PillarProfile& prof, unsigned m_max);

/// Third derivative of a*d - b*c at 0 via the Leibniz expansion versus the
/// closed form 2 f'(0) f(0); equal is true for every valid profile.
struct ThirdDerivativeCheck {
    Rat lhs, rhs;
    bool equal = false;
};
ThirdDerivativeCheck check_third_derivative(const PillarProfile& prof);

/// How two parallel sections of a polytope are related: by translation
/// (Congruent), by a homothety x -> r x + t with ratio r != 1 fixed by the
/// volume ratio, or not at all.
enum class CongruenceVerdict { Congruent, Homothetic, Incongruent };

struct CongruenceResult {
    CongruenceVerdict verdict = CongruenceVerdict::Incongruent;
    // The ratio any homothety between the slices is forced to have by their
    // volumes: 1 for Congruent, r for Homothetic, and still the forced value
    // for Incongruent slices unless no exact ratio exists at all (then 0).
    Rat ratio;
    RatVec translation;
    Rat vol1, vol2;
};

CongruenceResult slice_congruence(const HPolytope& p, int axis, const Rat& u1, const Rat& u2);

/// Certificate that P is a prism Q x [lo, hi] along the axis, with both
/// Futaki vectors and the quadratic scaling identity checked exactly.
struct ProductSplit {
    int axis = 0;
    HPolytope base;
    Rat lo, hi;
    Rat height;
    FutakiVector futaki_p, futaki_q;
    bool identity_verified = false; // F_P(x_i) = h^2 F_Q(x_i), F_P(x_axis) = 0
};

std::optional<ProductSplit> product_split(const HPolytope& p, int axis);

/// Deterministic seeded search for a valid Kähler class with a nonzero
/// Futaki component.  Exactly `budget` valid classes are examined (fewer
/// only if the raw candidate stream is exhausted); the witness, when one
/// exists in that range, is the first in enumeration order regardless of
/// parallelism.
struct ScanWitness {
    KahlerClass kahler;
    FutakiVector futaki;
};

struct ScanResult {
    std::optional<ScanWitness> witness;
    int classes_examined = 0;
};

ScanResult scan_nonvanishing(const BottMatrix& a, int budget, std::uint64_t seed,
                             bool parallel = false);

} // namespace bott

#endif // BOTT_FUTAKI_HPP
