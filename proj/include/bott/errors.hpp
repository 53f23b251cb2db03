#ifndef BOTT_ERRORS_HPP
#define BOTT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bott {

/// Base class for all domain errors raised by this library.  Callers that
/// only care about "the input was rejected" can catch this one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The recession cone of a half-space intersection contains a nonzero ray.
struct UnboundedPolytope final : Error {
    explicit UnboundedPolytope(const std::string& msg = "polytope is unbounded")
        : Error(msg) {}
};

/// The half-space intersection has no feasible point.
struct EmptyPolytope final : Error {
    explicit EmptyPolytope(const std::string& msg = "polytope is empty")
        : Error(msg) {}
};

/// An operation that requires a full-dimensional polytope received one whose
/// affine hull is a proper subspace.
struct DegeneratePolytope final : Error {
    explicit DegeneratePolytope(const std::string& msg = "polytope is not full-dimensional")
        : Error(msg) {}
};

/// A slice operation produced a section of deficient dimension where a
/// full-dimensional one was required.
struct DegenerateSlice final : Error {
    explicit DegenerateSlice(const std::string& msg = "slice is not full-dimensional")
        : Error(msg) {}
};

/// A divisor class required to be ample is not.
struct NotAmple final : Error {
    explicit NotAmple(const std::string& msg = "divisor class is not ample")
        : Error(msg) {}
};

/// An intersection-number query mixed more than one non-nef factor.
struct NotNef final : Error {
    explicit NotNef(const std::string& msg = "more than one non-nef factor")
        : Error(msg) {}
};

/// The request exceeds a hard size limit of the implementation.
struct BudgetExceeded final : Error {
    explicit BudgetExceeded(const std::string& msg = "request exceeds implementation budget")
        : Error(msg) {}
};

/// Malformed user input (bad rational literal, wrong vector length, ...).
struct InvalidInput final : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

} // namespace bott

#endif // BOTT_ERRORS_HPP
