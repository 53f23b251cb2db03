#ifndef BOTT_BOTT_TOWER_HPP
#define BOTT_BOTT_TOWER_HPP

#include <vector>

#include "bott/linalg.hpp"
#include "bott/polytope.hpp"
#include "bott/rational.hpp"

namespace bott {

/// Lower-unipotent integer matrix A = (a^i_j): ones on the diagonal, zeros
/// above it, arbitrary integers below.  Column i collects the twisting data
/// of stage i; the whole tower is determined by A.
class BottMatrix {
public:
    static BottMatrix identity(int n);
    /// Full n x n matrix, validated to be lower-unipotent.
    static BottMatrix from_full(std::vector<IntVec> rows);
    /// Compact form: row j (0-based, starting with the second row) lists the
    /// j below-diagonal entries of matrix row j+1.
    static BottMatrix from_below(int n, const std::vector<IntVec>& below);

    int n() const { return n_; }
    /// Entry a^col_row, 0-based.
    const Int& entry(int row, int col) const { return rows_[row][col]; }
    const std::vector<IntVec>& rows() const { return rows_; }

    /// Leading principal (n-1) x (n-1) submatrix, the matrix of the tower
    /// one stage down.
    BottMatrix truncated() const;

    bool operator==(const BottMatrix& other) const = default;

private:
    BottMatrix(int n, std::vector<IntVec> rows) : n_(n), rows_(std::move(rows)) {}
    int n_;
    std::vector<IntVec> rows_;
};

/// Complete smooth fan of the tower: 2n rays in the fixed order
/// u_1, e_1, u_2, e_2, ..., u_n, e_n with u_i = -(column i of A).  The
/// primitive collections are exactly the pairs {u_i, e_i}; the maximal
/// cones pick one ray from each pair.
struct BottFan {
    int n = 0;
    std::vector<IntVec> rays;

    /// Ray indices of pair i (0-based): {2i, 2i+1}.
    static std::pair<int, int> pair(int i) { return {2 * i, 2 * i + 1}; }
    /// Index of the ray paired with ray r.
    static int partner(int r) { return r ^ 1; }
};

BottFan fan_from_matrix(const BottMatrix& a);

/// Number of stages whose twisting data is nonzero (columns of A with a
/// nonzero below-diagonal entry).
int presentation_twist(const BottMatrix& a);

/// True exactly when A is the identity, i.e. the tower is (P^1)^n; this is
/// also equivalent to every ray pair summing to zero.
bool is_product_of_lines(const BottMatrix& a);

/// Support numbers, one per ray in fan order; the class is
/// sum_i k.a[i] * D_i with P = {x : <x, v_i> >= -a_i}.
struct KahlerClass {
    RatVec a;
};

HPolytope moment_polytope(const BottFan& fan, const KahlerClass& k);
HPolytope moment_polytope(const BottMatrix& a, const KahlerClass& k);

/// Delzant test: the polytope of k is bounded, full-dimensional, has all 2n
/// half-spaces supporting facets and exactly 2^n vertices, every vertex
/// simple with a unimodular set of tight normals.  Stages above 10 would
/// need 2^n vertex enumeration and are rejected with BudgetExceeded.
bool is_kahler_class(const BottMatrix& a, const KahlerClass& k);

/// All 2^n maximal cones as sorted ray-index sets, in the binary order that
/// flips pair n-1 fastest (bit i of the counter selects e_{i+1} over u_{i+1}).
std::vector<std::vector<int>> maximal_cones(const BottFan& fan);

} // namespace bott

#endif // BOTT_BOTT_TOWER_HPP
