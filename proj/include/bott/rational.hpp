#ifndef BOTT_RATIONAL_HPP
#define BOTT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

#include "bott/errors.hpp"

namespace bott {

namespace mp = boost::multiprecision;

/// Arbitrary-precision integer (GMP-backed, no expression templates).
using Int = mp::number<mp::gmp_int, mp::et_off>;

/// Arbitrary-precision rational, always kept in lowest terms with positive
/// denominator.  All arithmetic in the library is exact; doubles appear only
/// at presentation boundaries.
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

/// Parses "p", "-p", or "p/q" (q > 0, decimal digits only) and canonicalizes.
/// GMP accepts non-reduced fractions from strings without reducing them, so
/// the canonicalization step here is load-bearing.
inline Rat rat_from_string(const std::string& s) {
    auto bad = [&]() -> Rat { throw InvalidInput("bad rational literal: '" + s + "'"); };
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0) return bad();
    if (i < s.size()) {
        if (s[i] != '/') return bad();
        ++i;
        std::size_t qdigits = 0;
        bool all_zero = true;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
            if (s[i] != '0') all_zero = false;
            ++i; ++qdigits;
        }
        if (qdigits == 0 || all_zero || i != s.size()) return bad();
    }
    // GMP rejects an explicit leading plus sign
    Rat r(s[0] == '+' ? s.substr(1) : s);
    mpq_canonicalize(r.backend().data());
    return r;
}

/// Formats as "p" (q == 1) or "p/q"; inverse of rat_from_string on canonical
/// values.
inline std::string rat_to_string(const Rat& r) { return r.str(); }

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat(long long num, long long den = 1) {
    if (den == 0) throw InvalidInput("zero denominator");
    return Rat(num) / Rat(den);
}

/// Exact k-th root of a positive rational, if one exists.
inline std::optional<Rat> rat_nth_root(const Rat& r, unsigned k) {
    if (k == 0 || r <= 0) return std::nullopt;
    if (k == 1) return r;
    Int num = numerator(r), den = denominator(r);
    Int rnum, rden;
    // A fraction in lowest terms is a k-th power iff numerator and
    // denominator both are.
    int exact_num = mpz_root(rnum.backend().data(), num.backend().data(), k);
    if (exact_num == 0) return std::nullopt;
    int exact_den = mpz_root(rden.backend().data(), den.backend().data(), k);
    if (exact_den == 0) return std::nullopt;
    return Rat(rnum) / Rat(rden);
}

} // namespace bott

#endif // BOTT_RATIONAL_HPP
