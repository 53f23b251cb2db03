// Batch front end: one command per invocation, one JSON document on stdout.
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bott/bott_tower.hpp"
#include "bott/errors.hpp"
#include "bott/futaki.hpp"
#include "bott/io.hpp"
#include "bott/polytope.hpp"
#include "bott/selftest.hpp"
#include "bott/slope_stability.hpp"

namespace {

using namespace bott;

struct Options {
    std::string matrix;
    std::string kahler;
    int axis = 0; // 1-based; 0 means not given
    int ray = 0;  // 1-based
    int budget = 100;
    std::uint64_t seed = 0;
    bool parallel = false;
};

RatVec parse_class(const Options& opt, std::size_t expected, const char* what) {
    RatVec v = parse_rational_list(opt.kahler);
    if (v.size() != expected)
        throw InvalidInput(std::string(what) + " needs " + std::to_string(expected) +
                           " entries, got " + std::to_string(v.size()));
    return v;
}

json run_fan(const BottMatrix& a) {
    BottFan fan = fan_from_matrix(a);
    json rays = json::array();
    for (const IntVec& r : fan.rays) rays.push_back(intvec_to_json(r));
    json pairs = json::array();
    for (int i = 0; i < fan.n; ++i) {
        auto [u, e] = BottFan::pair(i);
        pairs.push_back(json::array({u + 1, e + 1}));
    }
    json doc;
    doc["command"] = "fan";
    doc["n"] = fan.n;
    doc["matrix"] = matrix_to_json(a);
    doc["rays"] = std::move(rays);
    doc["pairs"] = std::move(pairs);
    doc["twist"] = presentation_twist(a);
    doc["product_of_lines"] = is_product_of_lines(a);
    return doc;
}

json run_polytope(const BottMatrix& a, const Options& opt) {
    KahlerClass k{parse_class(opt, 2 * static_cast<std::size_t>(a.n()), "--kahler")};
    HPolytope p = moment_polytope(a, k);
    json doc;
    doc["command"] = "polytope";
    doc["n"] = a.n();
    doc["kahler"] = ratvec_to_json(k.a);
    doc["is_kahler_class"] = is_kahler_class(a, k);
    doc["halfspaces"] = polytope_to_json(p)["halfspaces"];
    bool bounded = is_bounded(p);
    doc["bounded"] = bounded;
    if (!bounded) return doc;
    json verts = json::array();
    bool empty = false;
    try {
        for (const Vertex& v : vertex_enumerate(p).vertices) verts.push_back(ratvec_to_json(v.point));
    } catch (const EmptyPolytope&) {
        empty = true;
    }
    doc["empty"] = empty;
    doc["vertices"] = std::move(verts);
    Rat vol = volume(p);
    doc["volume"] = rat_to_json(vol);
    if (empty) return doc;
    bool full = vol > 0;
    doc["full_dimensional"] = full;
    if (!full) return doc;
    doc["boundary_volume"] = rat_to_json(boundary_volume(p));
    json fms = json::array();
    for (const Rat& m : all_facet_measures(p)) fms.push_back(rat_to_json(m));
    doc["facet_measures"] = std::move(fms);
    if (opt.axis != 0) {
        if (opt.axis < 1 || opt.axis > a.n())
            throw InvalidInput("--axis must be between 1 and n");
        AxisProfiles prof = axis_profiles(p, opt.axis - 1);
        json profiles;
        profiles["axis"] = opt.axis;
        profiles["f"] = piecewise_to_json(prof.f);
        profiles["g"] = piecewise_to_json(prof.g);
        doc["profiles"] = std::move(profiles);
    }
    return doc;
}

json run_futaki(const BottMatrix& a, const Options& opt) {
    KahlerClass k{parse_class(opt, 2 * static_cast<std::size_t>(a.n()), "--kahler")};
    if (!is_kahler_class(a, k)) throw InvalidInput("not a Kähler class");
    FutakiVector f = futaki_vector(moment_polytope(a, k));
    json doc;
    doc["command"] = "futaki";
    doc["n"] = a.n();
    doc["kahler"] = ratvec_to_json(k.a);
    doc["futaki"] = ratvec_to_json(f.values);
    return doc;
}

json run_pillar(const BottMatrix& a, const Options& opt) {
    RatVec base = parse_class(opt, 2 * static_cast<std::size_t>(a.n()) - 2, "--kahler (base)");
    PillarProfile prof = pillar_profile(a, base);
    json doc;
    doc["command"] = "pillar";
    doc["n"] = a.n();
    doc["base"] = ratvec_to_json(base);
    doc["s_max"] = rat_to_json(prof.s_max);
    doc["collapse_found"] = prof.collapse_found;
    doc["f"] = piecewise_to_json(prof.f);
    doc["g"] = piecewise_to_json(prof.g);
    doc["futaki_pillar"] = piecewise_to_json(futaki_pillar(prof));
    return doc;
}

json run_scan(const BottMatrix& a, const Options& opt) {
    if (opt.budget < 1) throw InvalidInput("--budget must be at least 1");
    ScanResult res = scan_nonvanishing(a, opt.budget, opt.seed, opt.parallel);
    json doc;
    doc["command"] = "scan";
    doc["n"] = a.n();
    doc["budget"] = opt.budget;
    doc["seed"] = opt.seed;
    doc["classes_examined"] = res.classes_examined;
    if (res.witness) {
        json w;
        w["kahler"] = ratvec_to_json(res.witness->kahler.a);
        w["futaki"] = ratvec_to_json(res.witness->futaki.values);
        doc["witness"] = std::move(w);
    } else {
        doc["witness"] = nullptr;
    }
    return doc;
}

json report_to_json(const StabilityReport& r) {
    json doc;
    doc["ray"] = r.ray + 1;
    doc["epsilon"] = rat_to_json(r.epsilon);
    doc["mu"] = rat_to_json(r.mu);
    doc["xi"] = rat_to_json(r.xi);
    doc["assumption_holds"] = r.assumption_holds;
    doc["futaki_vD"] = rat_to_json(r.futaki_vD);
    doc["consistent"] = r.consistent;
    return doc;
}

json run_stability(const BottMatrix& a, const Options& opt) {
    DivisorClass ell{parse_class(opt, 2 * static_cast<std::size_t>(a.n()), "--kahler")};
    if (opt.ray < 1 || opt.ray > 2 * a.n())
        throw InvalidInput("--ray must be between 1 and 2n");
    auto [first, second] = stability_pair(a, ell, opt.ray - 1);
    json doc;
    doc["command"] = "stability";
    doc["n"] = a.n();
    doc["kahler"] = ratvec_to_json(ell.b);
    doc["ray"] = opt.ray;
    doc["reports"] = json::array({report_to_json(first), report_to_json(second)});
    return doc;
}

json run_selftest_doc(bool& all_passed) {
    SelfTestResult res = run_selftest();
    all_passed = res.all_passed;
    json suites = json::array();
    for (const SelfTestSuite& s : res.suites) {
        json one;
        one["name"] = s.name;
        one["passed"] = s.passed;
        suites.push_back(std::move(one));
    }
    json doc;
    doc["command"] = "selftest";
    doc["suites"] = std::move(suites);
    doc["all_passed"] = res.all_passed;
    return doc;
}

int classify(const Error& e) {
    if (dynamic_cast<const InvalidInput*>(&e) != nullptr ||
        dynamic_cast<const NotAmple*>(&e) != nullptr ||
        dynamic_cast<const NotNef*>(&e) != nullptr ||
        dynamic_cast<const UnboundedPolytope*>(&e) != nullptr ||
        dynamic_cast<const EmptyPolytope*>(&e) != nullptr ||
        dynamic_cast<const DegeneratePolytope*>(&e) != nullptr ||
        dynamic_cast<const DegenerateSlice*>(&e) != nullptr ||
        dynamic_cast<const BudgetExceeded*>(&e) != nullptr)
        return 2;
    return 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of Bott manifolds: fans, moment polytopes, "
                 "Futaki vectors, pillar profiles, and slope stability"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* fan = app.add_subcommand("fan", "Rays, pairs and twist of a stage matrix");
    CLI::App* polytope = app.add_subcommand("polytope", "Moment polytope geometry of a class");
    CLI::App* futaki = app.add_subcommand("futaki", "Futaki vector of a Kähler class");
    CLI::App* pillar = app.add_subcommand("pillar", "Pillar profile and Futaki polynomial F(s)");
    CLI::App* scan = app.add_subcommand("scan", "Seeded search for a nonvanishing witness class");
    CLI::App* stability = app.add_subcommand("stability", "Slope stability report for a divisor pair");
    CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in invariant suites");

    for (CLI::App* sub : {fan, polytope, futaki, pillar, scan, stability})
        sub->add_option("--matrix", opt.matrix, "Stage matrix: inline JSON or a file path")->required();
    for (CLI::App* sub : {polytope, futaki, stability})
        sub->add_option("--kahler", opt.kahler, "2n support numbers, comma list or JSON array")->required();
    pillar->add_option("--kahler", opt.kahler, "2n-2 base support numbers")->required();
    polytope->add_option("--axis", opt.axis, "Axis (1..n) to report section profiles for");
    stability->add_option("--ray", opt.ray, "Ray index i0 (1..2n) of the divisor")->required();
    scan->add_option("--budget", opt.budget, "Number of valid classes to examine")->capture_default_str();
    scan->add_option("--seed", opt.seed, "Seed of the deterministic class stream")->capture_default_str();
    scan->add_option("--parallel", opt.parallel, "Evaluate candidates on multiple threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        json doc;
        int code = 0;
        if (selftest->parsed()) {
            bool all_passed = false;
            doc = run_selftest_doc(all_passed);
            if (!all_passed) code = 3;
        } else {
            BottMatrix a = parse_matrix_arg(opt.matrix);
            if (fan->parsed()) doc = run_fan(a);
            else if (polytope->parsed()) doc = run_polytope(a, opt);
            else if (futaki->parsed()) doc = run_futaki(a, opt);
            else if (pillar->parsed()) doc = run_pillar(a, opt);
            else if (scan->parsed()) doc = run_scan(a, opt);
            else doc = run_stability(a, opt);
        }
        std::cout << doc.dump(2) << "\n";
        return code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
