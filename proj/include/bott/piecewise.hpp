#ifndef BOTT_PIECEWISE_HPP
#define BOTT_PIECEWISE_HPP

#include <cstddef>
#include <vector>

#include "bott/polynomial.hpp"
#include "bott/rational.hpp"

namespace bott {

/// Piecewise polynomial on a closed interval [t_0, t_k], given by strictly
/// increasing breakpoints t_0 < ... < t_k and one polynomial per piece
/// [t_j, t_{j+1}].  Evaluation is right-continuous at interior breakpoints;
/// the function need not be continuous unless produced by an operation that
/// guarantees it (antiderivative does, derivative need not).
class PiecewisePolynomial {
public:
    PiecewisePolynomial(std::vector<Rat> breakpoints, std::vector<Poly> pieces);

    static PiecewisePolynomial constant(const Rat& lo, const Rat& hi, const Rat& value);

    const std::vector<Rat>& breakpoints() const { return breaks_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }
    const Rat& domain_lo() const { return breaks_.front(); }
    const Rat& domain_hi() const { return breaks_.back(); }

    /// Value at x; uses the right piece at interior breakpoints and the last
    /// piece at t_k.  Throws Error outside the domain.
    Rat operator()(const Rat& x) const;
    /// One-sided limit from the left at x > t_0.
    Rat eval_left(const Rat& x) const;
    /// m-th derivative at x, taken on the same piece operator() would use.
    Rat derivative_value(const Rat& x, unsigned m = 1) const;

    PiecewisePolynomial derivative() const;
    /// The continuous antiderivative vanishing at t_0.
    PiecewisePolynomial antiderivative() const;
    Rat integral() const;
    Rat integral(const Rat& a, const Rat& b) const;

    PiecewisePolynomial times_x() const;
    PiecewisePolynomial scaled(const Rat& c) const;
    PiecewisePolynomial plus_constant(const Rat& c) const;
    /// Restriction to [lo, hi], which must lie inside the domain.
    PiecewisePolynomial restricted(const Rat& lo, const Rat& hi) const;
    /// Refines the grid to include the given points (which must lie inside
    /// the domain); the function is unchanged.
    PiecewisePolynomial refined(const std::vector<Rat>& extra) const;
    /// Drops interior breakpoints whose two sides carry the same polynomial.
    PiecewisePolynomial simplified() const;

    bool is_zero() const;

    /// Operands must share a domain; grids are merged automatically.
    friend PiecewisePolynomial operator+(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
    friend PiecewisePolynomial operator-(const PiecewisePolynomial& a, const PiecewisePolynomial& b);
    friend PiecewisePolynomial operator*(const PiecewisePolynomial& a, const PiecewisePolynomial& b);

    /// Equality as functions on a common domain.
    bool operator==(const PiecewisePolynomial& other) const;

private:
    std::size_t piece_index(const Rat& x) const;

    std::vector<Rat> breaks_;
    std::vector<Poly> pieces_;
};

} // namespace bott

#endif // BOTT_PIECEWISE_HPP
