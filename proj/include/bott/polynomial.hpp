#ifndef BOTT_POLYNOMIAL_HPP
#define BOTT_POLYNOMIAL_HPP

#include <vector>

#include "bott/linalg.hpp"
#include "bott/rational.hpp"

namespace bott {

/// Dense univariate polynomial with rational coefficients in ascending
/// order; the empty vector is the zero polynomial.  Trailing zero
/// coefficients carry no meaning and are stripped by poly_trim.
using Poly = std::vector<Rat>;

void poly_trim(Poly& p);
int poly_degree(const Poly& p); // -1 for the zero polynomial
bool poly_is_zero(const Poly& p);
bool poly_equal(const Poly& a, const Poly& b);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& c);
Poly poly_mul_x(const Poly& a);

Rat poly_eval(const Poly& p, const Rat& x);
Poly poly_derivative(const Poly& p);
/// Antiderivative with zero constant term.
Poly poly_antiderivative(const Poly& p);
/// Value of the m-th derivative at x.
Rat poly_derivative_value(const Poly& p, unsigned m, const Rat& x);
/// Exact value of the definite integral over [a, b].
Rat poly_integral(const Poly& p, const Rat& a, const Rat& b);

/// Unique interpolating polynomial of degree < xs.size() through the given
/// nodes (which must be pairwise distinct).
Poly poly_interpolate(const RatVec& xs, const RatVec& ys);

} // namespace bott

#endif // BOTT_POLYNOMIAL_HPP
