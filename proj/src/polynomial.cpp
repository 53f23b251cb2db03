#include "bott/polynomial.hpp"

#include <cassert>
#include <cstddef>

#include "bott/errors.hpp"

namespace bott {

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

bool poly_is_zero(const Poly& p) { return poly_degree(p) == -1; }

bool poly_equal(const Poly& a, const Poly& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rat ca = i < a.size() ? a[i] : Rat(0);
        Rat cb = i < b.size() ? b[i] : Rat(0);
        if (ca != cb) return false;
    }
    return true;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

Poly poly_scale(const Poly& a, const Rat& c) {
    Poly r(a);
    for (Rat& x : r) x *= c;
    poly_trim(r);
    return r;
}

Poly poly_mul_x(const Poly& a) {
    if (a.empty()) return {};
    Poly r(a.size() + 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i];
    return r;
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(static_cast<long>(i));
    poly_trim(r);
    return r;
}

Poly poly_antiderivative(const Poly& p) {
    if (p.empty()) return {};
    Poly r(p.size() + 1, Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i + 1] = p[i] / Rat(static_cast<long>(i + 1));
    poly_trim(r);
    return r;
}

Rat poly_derivative_value(const Poly& p, unsigned m, const Rat& x) {
    Poly d = p;
    for (unsigned i = 0; i < m; ++i) d = poly_derivative(d);
    return poly_eval(d, x);
}

Rat poly_integral(const Poly& p, const Rat& a, const Rat& b) {
    Poly f = poly_antiderivative(p);
    return poly_eval(f, b) - poly_eval(f, a);
}

Poly poly_interpolate(const RatVec& xs, const RatVec& ys) {
    assert(xs.size() == ys.size());
    const std::size_t n = xs.size();
    if (n == 0) return {};
    Poly result;
    for (std::size_t i = 0; i < n; ++i) {
        Poly basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) throw InvalidInput("interpolation nodes must be distinct");
            basis = poly_mul(basis, Poly{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        result = poly_add(result, poly_scale(basis, ys[i] / denom));
    }
    return result;
}

} // namespace bott
