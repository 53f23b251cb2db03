#include "bott/piecewise.hpp"

#include <algorithm>
#include <utility>

#include "bott/errors.hpp"

namespace bott {

namespace {

std::vector<Rat> merged_grid(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rat> breakpoints, std::vector<Poly> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size())
        throw Error("piecewise polynomial needs k+1 breakpoints for k >= 1 pieces");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw Error("piecewise breakpoints must be strictly increasing");
    for (Poly& p : pieces_) poly_trim(p);
}

PiecewisePolynomial PiecewisePolynomial::constant(const Rat& lo, const Rat& hi, const Rat& value) {
    Poly p;
    if (value != 0) p.push_back(value);
    return PiecewisePolynomial({lo, hi}, {p});
}

std::size_t PiecewisePolynomial::piece_index(const Rat& x) const {
    if (x < domain_lo() || x > domain_hi())
        throw Error("piecewise evaluation outside domain");
    if (x == domain_hi()) return pieces_.size() - 1;
    // Last j with breaks_[j] <= x.
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return static_cast<std::size_t>(it - breaks_.begin()) - 1;
}

Rat PiecewisePolynomial::operator()(const Rat& x) const {
    return poly_eval(pieces_[piece_index(x)], x);
}

Rat PiecewisePolynomial::eval_left(const Rat& x) const {
    if (x <= domain_lo() || x > domain_hi())
        throw Error("left limit requested outside domain");
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
    std::size_t j = (it != breaks_.end() && *it == x)
                        ? static_cast<std::size_t>(it - breaks_.begin()) - 1
                        : piece_index(x);
    return poly_eval(pieces_[j], x);
}

Rat PiecewisePolynomial::derivative_value(const Rat& x, unsigned m) const {
    return poly_derivative_value(pieces_[piece_index(x)], m, x);
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
    std::vector<Poly> out;
    out.reserve(pieces_.size());
    for (const Poly& p : pieces_) out.push_back(poly_derivative(p));
    return PiecewisePolynomial(breaks_, std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::antiderivative() const {
    std::vector<Poly> out;
    out.reserve(pieces_.size());
    Rat acc = 0;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        Poly a = poly_antiderivative(pieces_[j]);
        Rat shift = acc - poly_eval(a, breaks_[j]);
        Poly piece = a;
        if (piece.empty()) piece.push_back(Rat(0));
        piece[0] += shift;
        poly_trim(piece);
        acc = poly_eval(piece, breaks_[j + 1]);
        out.push_back(std::move(piece));
    }
    return PiecewisePolynomial(breaks_, std::move(out));
}

Rat PiecewisePolynomial::integral() const {
    Rat s = 0;
    for (std::size_t j = 0; j < pieces_.size(); ++j)
        s += poly_integral(pieces_[j], breaks_[j], breaks_[j + 1]);
    return s;
}

Rat PiecewisePolynomial::integral(const Rat& a, const Rat& b) const {
    if (a > b) return -integral(b, a);
    if (a < domain_lo() || b > domain_hi())
        throw Error("integration bounds outside domain");
    if (a == b) return Rat(0);
    Rat s = 0;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        Rat lo = std::max(a, breaks_[j]);
        Rat hi = std::min(b, breaks_[j + 1]);
        if (lo < hi) s += poly_integral(pieces_[j], lo, hi);
    }
    return s;
}

PiecewisePolynomial PiecewisePolynomial::times_x() const {
    std::vector<Poly> out;
    out.reserve(pieces_.size());
    for (const Poly& p : pieces_) out.push_back(poly_mul_x(p));
    return PiecewisePolynomial(breaks_, std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::scaled(const Rat& c) const {
    std::vector<Poly> out;
    out.reserve(pieces_.size());
    for (const Poly& p : pieces_) out.push_back(poly_scale(p, c));
    return PiecewisePolynomial(breaks_, std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::plus_constant(const Rat& c) const {
    std::vector<Poly> out;
    out.reserve(pieces_.size());
    for (const Poly& p : pieces_) out.push_back(poly_add(p, Poly{c}));
    return PiecewisePolynomial(breaks_, std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::restricted(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi) || lo < domain_lo() || hi > domain_hi())
        throw Error("invalid restriction interval");
    std::vector<Rat> breaks{lo};
    std::vector<Poly> out;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
        Rat a = std::max(lo, breaks_[j]);
        Rat b = std::min(hi, breaks_[j + 1]);
        if (a < b) {
            out.push_back(pieces_[j]);
            breaks.push_back(b);
        }
    }
    return PiecewisePolynomial(std::move(breaks), std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::refined(const std::vector<Rat>& extra) const {
    std::vector<Rat> pts(extra);
    std::sort(pts.begin(), pts.end());
    std::vector<Rat> grid = merged_grid(breaks_, pts);
    if (grid.front() < domain_lo() || grid.back() > domain_hi())
        throw Error("refinement points outside domain");
    std::vector<Poly> out;
    out.reserve(grid.size() - 1);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j)
        out.push_back(pieces_[piece_index(grid[j])]);
    return PiecewisePolynomial(std::move(grid), std::move(out));
}

PiecewisePolynomial PiecewisePolynomial::simplified() const {
    std::vector<Rat> breaks{breaks_.front()};
    std::vector<Poly> out{pieces_.front()};
    for (std::size_t j = 1; j < pieces_.size(); ++j) {
        if (poly_equal(out.back(), pieces_[j])) {
            // extend the current piece
        } else {
            breaks.push_back(breaks_[j]);
            out.push_back(pieces_[j]);
        }
    }
    breaks.push_back(breaks_.back());
    return PiecewisePolynomial(std::move(breaks), std::move(out));
}

bool PiecewisePolynomial::is_zero() const {
    for (const Poly& p : pieces_)
        if (!poly_is_zero(p)) return false;
    return true;
}

PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
    if (a.domain_lo() != b.domain_lo() || a.domain_hi() != b.domain_hi())
        throw Error("piecewise operands must share a domain");
    std::vector<Rat> grid = merged_grid(a.breaks_, b.breaks_);
    std::vector<Poly> out;
    out.reserve(grid.size() - 1);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j)
        out.push_back(poly_add(a.pieces_[a.piece_index(grid[j])], b.pieces_[b.piece_index(grid[j])]));
    return PiecewisePolynomial(std::move(grid), std::move(out));
}

PiecewisePolynomial operator-(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
    return a + b.scaled(Rat(-1));
}

PiecewisePolynomial operator*(const PiecewisePolynomial& a, const PiecewisePolynomial& b) {
    if (a.domain_lo() != b.domain_lo() || a.domain_hi() != b.domain_hi())
        throw Error("piecewise operands must share a domain");
    std::vector<Rat> grid = merged_grid(a.breaks_, b.breaks_);
    std::vector<Poly> out;
    out.reserve(grid.size() - 1);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j)
        out.push_back(poly_mul(a.pieces_[a.piece_index(grid[j])], b.pieces_[b.piece_index(grid[j])]));
    return PiecewisePolynomial(std::move(grid), std::move(out));
}

bool PiecewisePolynomial::operator==(const PiecewisePolynomial& other) const {
    if (domain_lo() != other.domain_lo() || domain_hi() != other.domain_hi()) return false;
    return (*this - other).is_zero();
}

} // namespace bott
