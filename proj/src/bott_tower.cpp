#include "bott/bott_tower.hpp"

#include <utility>

#include "bott/errors.hpp"

namespace bott {

namespace {
constexpr int kMaxStages = 10;
}

BottMatrix BottMatrix::identity(int n) {
    if (n < 1) throw InvalidInput("tower needs at least one stage");
    std::vector<IntVec> rows(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    return BottMatrix(n, std::move(rows));
}

BottMatrix BottMatrix::from_full(std::vector<IntVec> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1) throw InvalidInput("tower needs at least one stage");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw InvalidInput("matrix must be square");
        if (rows[i][i] != 1) throw InvalidInput("matrix diagonal must be all ones");
        for (int j = i + 1; j < n; ++j)
            if (rows[i][j] != 0) throw InvalidInput("matrix must be lower triangular");
    }
    return BottMatrix(n, std::move(rows));
}

BottMatrix BottMatrix::from_below(int n, const std::vector<IntVec>& below) {
    if (n < 1) throw InvalidInput("tower needs at least one stage");
    if (static_cast<int>(below.size()) != n - 1)
        throw InvalidInput("compact form needs n-1 rows");
    std::vector<IntVec> rows(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i) rows[i][i] = 1;
    for (int r = 1; r < n; ++r) {
        if (static_cast<int>(below[r - 1].size()) != r)
            throw InvalidInput("compact row has wrong length");
        for (int c = 0; c < r; ++c) rows[r][c] = below[r - 1][c];
    }
    return BottMatrix(n, std::move(rows));
}

BottMatrix BottMatrix::truncated() const {
    if (n_ < 2) throw InvalidInput("cannot truncate a one-stage tower");
    std::vector<IntVec> rows(n_ - 1, IntVec(n_ - 1));
    for (int i = 0; i < n_ - 1; ++i)
        for (int j = 0; j < n_ - 1; ++j) rows[i][j] = rows_[i][j];
    return BottMatrix(n_ - 1, std::move(rows));
}

BottFan fan_from_matrix(const BottMatrix& a) {
    const int n = a.n();
    BottFan fan;
    fan.n = n;
    fan.rays.reserve(2 * n);
    for (int i = 0; i < n; ++i) {
        IntVec u(n), e(n, Int(0));
        for (int j = 0; j < n; ++j) u[j] = -a.entry(j, i);
        e[i] = 1;
        fan.rays.push_back(std::move(u));
        fan.rays.push_back(std::move(e));
    }
    return fan;
}

int presentation_twist(const BottMatrix& a) {
    int twist = 0;
    for (int col = 0; col < a.n(); ++col) {
        for (int row = col + 1; row < a.n(); ++row) {
            if (a.entry(row, col) != 0) {
                ++twist;
                break;
            }
        }
    }
    return twist;
}

bool is_product_of_lines(const BottMatrix& a) { return presentation_twist(a) == 0; }

HPolytope moment_polytope(const BottFan& fan, const KahlerClass& k) {
    if (k.a.size() != fan.rays.size())
        throw InvalidInput("class needs one support number per ray");
    std::vector<HalfSpace> hs;
    hs.reserve(fan.rays.size());
    for (std::size_t i = 0; i < fan.rays.size(); ++i) hs.emplace_back(fan.rays[i], k.a[i]);
    return HPolytope(fan.n, std::move(hs));
}

HPolytope moment_polytope(const BottMatrix& a, const KahlerClass& k) {
    return moment_polytope(fan_from_matrix(a), k);
}

bool is_kahler_class(const BottMatrix& a, const KahlerClass& k) {
    const int n = a.n();
    if (n > kMaxStages)
        throw BudgetExceeded("Delzant test above stage 10 needs 2^n vertex enumeration");
    if (static_cast<int>(k.a.size()) != 2 * n)
        throw InvalidInput("class needs one support number per ray");

    HPolytope p = moment_polytope(a, k);
    VPolytope v;
    try {
        v = vertex_enumerate(p);
    } catch (const UnboundedPolytope&) {
        return false;
    } catch (const EmptyPolytope&) {
        return false;
    }

    Int expected = Int(1) << n;
    if (Int(static_cast<long>(v.vertices.size())) != expected) return false;

    std::vector<RatVec> pts;
    for (const Vertex& vx : v.vertices) pts.push_back(vx.point);
    if (affine_dim(pts) != n) return false;

    std::vector<bool> seen(2 * n, false);
    for (const Vertex& vx : v.vertices) {
        if (static_cast<int>(vx.tight.size()) != n) return false;
        RatMat m;
        for (int i : vx.tight) {
            seen[i] = true;
            m.push_back(to_rat(p.halfspaces()[i].normal));
        }
        Rat d = det(std::move(m));
        if (d != 1 && d != -1) return false;
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

std::vector<std::vector<int>> maximal_cones(const BottFan& fan) {
    const int n = fan.n;
    if (n > kMaxStages) throw BudgetExceeded("cone enumeration above stage 10");
    std::vector<std::vector<int>> cones;
    cones.reserve(std::size_t(1) << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<int> cone(n);
        for (int i = 0; i < n; ++i) cone[i] = 2 * i + ((mask >> i) & 1);
        cones.push_back(std::move(cone));
    }
    return cones;
}

} // namespace bott
