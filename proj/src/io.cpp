#include "bott/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "bott/errors.hpp"

namespace bott {
namespace {

long long int_to_ll(const Int& v) {
    static const Int kMax = Int(std::numeric_limits<long long>::max());
    if (v > kMax || v < -kMax)
        throw InvalidInput("integer entry out of range for serialization");
    return v.convert_to<long long>();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        Rat r = rat_from_string(j.get<std::string>());
        if (denominator(r) != 1) throw InvalidInput("expected an integer, got " + j.get<std::string>());
        return numerator(r);
    }
    throw InvalidInput("expected an integer entry");
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed " + what + ": " + e.what());
    }
}

} // namespace

json rat_to_json(const Rat& r) { return json(rat_to_string(r)); }

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw InvalidInput("expected a rational as \"p/q\" string or integer");
}

json ratvec_to_json(const RatVec& v) {
    json out = json::array();
    for (const Rat& r : v) out.push_back(rat_to_json(r));
    return out;
}

RatVec ratvec_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("expected an array of rationals");
    RatVec out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(rat_from_json(e));
    return out;
}

json intvec_to_json(const IntVec& v) {
    json out = json::array();
    for (const Int& e : v) out.push_back(int_to_ll(e));
    return out;
}

IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("expected an array of integers");
    IntVec out;
    out.reserve(j.size());
    for (const json& e : j) out.push_back(int_from_json(e));
    return out;
}

json polytope_to_json(const HPolytope& p) {
    json hs = json::array();
    for (const HalfSpace& h : p.halfspaces()) {
        json one;
        one["normal"] = intvec_to_json(h.normal);
        one["offset"] = rat_to_json(h.offset);
        hs.push_back(std::move(one));
    }
    json out;
    out["dim"] = p.dim();
    out["halfspaces"] = std::move(hs);
    return out;
}

HPolytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("halfspaces"))
        throw InvalidInput("polytope document needs \"dim\" and \"halfspaces\"");
    int dim = j.at("dim").get<int>();
    std::vector<HalfSpace> hs;
    for (const json& e : j.at("halfspaces"))
        hs.emplace_back(intvec_from_json(e.at("normal")), rat_from_json(e.at("offset")));
    return HPolytope(dim, std::move(hs));
}

json piecewise_to_json(const PiecewisePolynomial& p) {
    json breaks = json::array();
    for (const Rat& b : p.breakpoints()) breaks.push_back(rat_to_json(b));
    json pieces = json::array();
    for (const Poly& piece : p.pieces()) {
        json coeffs = json::array();
        for (const Rat& c : piece) coeffs.push_back(rat_to_json(c));
        pieces.push_back(std::move(coeffs));
    }
    json out;
    out["breakpoints"] = std::move(breaks);
    out["pieces"] = std::move(pieces);
    return out;
}

PiecewisePolynomial piecewise_from_json(const json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("pieces"))
        throw InvalidInput("piecewise document needs \"breakpoints\" and \"pieces\"");
    std::vector<Rat> breaks;
    for (const json& e : j.at("breakpoints")) breaks.push_back(rat_from_json(e));
    std::vector<Poly> pieces;
    for (const json& e : j.at("pieces")) {
        Poly piece;
        for (const json& c : e) piece.push_back(rat_from_json(c));
        pieces.push_back(std::move(piece));
    }
    return PiecewisePolynomial(std::move(breaks), std::move(pieces));
}

json matrix_to_json(const BottMatrix& a) {
    json out = json::array();
    for (const IntVec& row : a.rows()) out.push_back(intvec_to_json(row));
    return out;
}

BottMatrix matrix_from_json(const json& j) {
    if (j.is_array()) {
        std::vector<IntVec> rows;
        for (const json& e : j) rows.push_back(intvec_from_json(e));
        return BottMatrix::from_full(std::move(rows));
    }
    if (j.is_object()) {
        if (!j.contains("n") || !j.contains("below"))
            throw InvalidInput("compact matrix form needs \"n\" and \"below\"");
        int n = j.at("n").get<int>();
        std::vector<IntVec> below;
        for (const json& e : j.at("below")) below.push_back(intvec_from_json(e));
        return BottMatrix::from_below(n, below);
    }
    throw InvalidInput("matrix must be an array of rows or a {\"n\", \"below\"} object");
}

BottMatrix parse_matrix_arg(const std::string& arg) {
    std::size_t start = arg.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw InvalidInput("empty --matrix argument");
    if (arg[start] == '[' || arg[start] == '{')
        return matrix_from_json(parse_json_text(arg, "matrix"));
    std::ifstream in(arg);
    if (!in) throw InvalidInput("cannot open matrix file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(parse_json_text(buf.str(), "matrix file " + arg));
}

RatVec parse_rational_list(const std::string& arg) {
    std::size_t start = arg.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw InvalidInput("empty rational list");
    if (arg[start] == '[') return ratvec_from_json(parse_json_text(arg, "rational list"));
    RatVec out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw InvalidInput("empty entry in rational list");
        out.push_back(rat_from_string(item.substr(a, b - a + 1)));
    }
    if (out.empty()) throw InvalidInput("empty rational list");
    return out;
}

} // namespace bott
