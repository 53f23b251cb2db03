#ifndef BOTT_IO_HPP
#define BOTT_IO_HPP

#include <string>

#include <json.hpp>

#include "bott/bott_tower.hpp"
#include "bott/piecewise.hpp"
#include "bott/polytope.hpp"
#include "bott/rational.hpp"

namespace bott {

/// All documents use insertion-ordered JSON so output is byte-stable.
/// Rationals are always strings "p/q" (or "p"); nothing numeric ever passes
/// through floating point.
using json = nlohmann::ordered_json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json ratvec_to_json(const RatVec& v);
RatVec ratvec_from_json(const json& j);

json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const json& j);

json polytope_to_json(const HPolytope& p);
HPolytope polytope_from_json(const json& j);

json piecewise_to_json(const PiecewisePolynomial& p);
PiecewisePolynomial piecewise_from_json(const json& j);

json matrix_to_json(const BottMatrix& a);
/// Accepts the full row form [[1,0],[2,1]] or the compact form
/// {"n": 3, "below": [[1],[2,0]]}.
BottMatrix matrix_from_json(const json& j);

/// --matrix argument: inline JSON (starts with '[' or '{') or a file path.
BottMatrix parse_matrix_arg(const std::string& arg);
/// --kahler argument: JSON array or comma-separated rationals "2,0,0,1".
RatVec parse_rational_list(const std::string& arg);

} // namespace bott

#endif // BOTT_IO_HPP
