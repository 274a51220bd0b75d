#include "divr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "divr/circum.hpp"
#include "divr/diversity.hpp"
#include "divr/embed3.hpp"
#include "divr/embed4.hpp"
#include "divr/json_io.hpp"

namespace divr::cli {
namespace {

constexpr double kDefaultTolerance = 1e-6;  // LP round-trip comparison tolerance
constexpr std::uint64_t kDefaultSeed = 1;

void emit(std::ostream& out, json doc, double tolerance, std::uint64_t seed) {
    doc["config"] = json{{"tolerance", tolerance}, {"seed", seed}};
    out << canonical_dump(doc) << "\n";
}

json interval_json(const embed3::Interval& iv) { return json::array({iv.lo, iv.hi}); }

json decision_json(const embed3::EmbeddingDecision& dec) {
    json j{{"banach", dec.banach},
           {"minkowski", dec.minkowski},
           {"pairwise_feasible", dec.pairwise_ok},
           {"minkowski_interval", interval_json(dec.minkowski_interval)},
           {"failed_inequalities", dec.failed_inequalities}};
    if (dec.pairwise_ok) j["banach_interval"] = interval_json(dec.banach_interval);
    json perm = json::array();
    for (std::size_t p : dec.canonical.permutation) perm.push_back(p + 1);
    j["canonical"] = json{{"d12", dec.canonical.d12},
                          {"d13", dec.canonical.d13},
                          {"d23", dec.canonical.d23},
                          {"d123", dec.canonical.d123},
                          {"permutation", perm}};
    return j;
}

json axiom_report_json(const AxiomReport& report) {
    json violations = json::array();
    for (const AxiomViolation& v : report.violations)
        violations.push_back(
            json{{"axiom", v.axiom}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    return json{{"ok", report.ok}, {"violations", violations}};
}

json system_json(const embed4::FaceSystemSolution& s) {
    return json{{"x0", s.x0},         {"y0", s.y0},
                {"z0", s.z0},         {"lambda", s.lambda},
                {"a", s.a},           {"b", s.b},
                {"c", s.c},           {"d", s.d},
                {"e", s.e},           {"f", s.f},
                {"g", s.g},           {"h", s.h},
                {"coefficients_valid", s.coefficients_valid},
                {"residual", s.residual}};
}

json radii_json(const embed4::FourPointRadii& r) {
    return json{{"r12", r.r12}, {"r13", r.r13}, {"r14", r.r14},
                {"r23", r.r23}, {"r24", r.r24}, {"r34", r.r34}};
}

json trial_json(const embed4::ConjectureTrial& t) {
    json j{{"radii", radii_json(t.radii)},
           {"measured_r1234", t.measured_r1234},
           {"lower", t.lower},
           {"triple_radii", json::array({t.triple_radii[0], t.triple_radii[1],
                                         t.triple_radii[2], t.triple_radii[3]})},
           {"system", system_json(t.system)},
           {"verdict", embed4::to_string(t.verdict)}};
    if (t.system.coefficients_valid) {
        j["upper"] = t.upper;
        j["formula_matches_system"] = t.formula_matches_system;
    }
    if (t.upper_formula_defined) j["upper_formula"] = t.upper_formula;
    return j;
}

// Measures the reference-triangle radii of a witness body against targets.
json roundtrip_rows(const SymmetricPolytope& body, double d12, double d13, double d23,
                    double d123, double tolerance, bool& pass) {
    const auto tri = embed3::reference_triangle();
    const struct {
        const char* name;
        std::vector<Vec> pts;
        double target;
    } rows[] = {
        {"d12", {tri[0], tri[1]}, d12},
        {"d13", {tri[0], tri[2]}, d13},
        {"d23", {tri[1], tri[2]}, d23},
        {"d123", {tri[0], tri[1], tri[2]}, d123},
    };
    pass = true;
    json out = json::array();
    for (const auto& row : rows) {
        const double measured = circumradius(row.pts, body).radius;
        const double error = std::abs(measured - row.target);
        if (error > tolerance) pass = false;
        out.push_back(json{{"name", row.name},
                           {"target", row.target},
                           {"measured", measured},
                           {"error", error}});
    }
    return out;
}

struct Options {
    double tolerance = kDefaultTolerance;
    std::uint64_t seed = kDefaultSeed;
    std::string out_path;
    bool json_output = true;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"diversities, circumradii and Banach embeddings"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tolerance", opt.tolerance, "comparison tolerance for LP round-trips")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for sampling subcommands");
    app.add_flag("--json", opt.json_output, "JSON output (default on)");

    // circumradius
    std::string points_path, body_path;
    bool want_certificate = false;
    CLI::App* circ = app.add_subcommand("circumradius", "circumradius of a point set in a body");
    circ->add_option("--points", points_path, "point-set JSON file")->required();
    circ->add_option("--body", body_path, "symmetric-polytope JSON file")->required();
    circ->add_flag("--certificate", want_certificate, "attach an optimality certificate");

    // check-diversity
    std::string table_path;
    CLI::App* chk = app.add_subcommand("check-diversity", "check the diversity axioms");
    chk->add_option("table", table_path, "diversity-table JSON file")->required();

    // embed3
    CLI::App* e3 = app.add_subcommand("embed3", "3-point embeddability");
    e3->require_subcommand(1);
    double d12 = 0, d13 = 0, d23 = 0, d123 = 0, target = 0;
    CLI::App* decide = e3->add_subcommand("decide", "decide embeddability");
    decide->add_option("--d12", d12)->required();
    decide->add_option("--d13", d13)->required();
    decide->add_option("--d23", d23)->required();
    decide->add_option("--d123", d123)->required();
    CLI::App* witness = e3->add_subcommand("witness", "construct a witness body");
    witness->add_option("--d12", d12)->required();
    witness->add_option("--d13", d13)->required();
    witness->add_option("--d23", d23)->required();
    witness->add_option("--target", target, "target triple value")->required();
    witness->add_option("--out", opt.out_path, "output polytope JSON path")->required();
    std::string witness_path;
    CLI::App* verify = e3->add_subcommand("verify", "LP round-trip report for a witness body");
    verify->add_option("body", witness_path, "polytope JSON file")->required();
    verify->add_option("--d12", d12)->required();
    verify->add_option("--d13", d13)->required();
    verify->add_option("--d23", d23)->required();
    verify->add_option("--d123", d123)->required();

    // embed4
    CLI::App* e4 = app.add_subcommand("embed4", "4-point machinery");
    e4->require_subcommand(1);
    embed4::FourPointRadii radii;
    CLI::App* bound = e4->add_subcommand("bound", "face system and closed-form bounds");
    bound->add_option("--r12", radii.r12)->required();
    bound->add_option("--r13", radii.r13)->required();
    bound->add_option("--r14", radii.r14)->required();
    bound->add_option("--r23", radii.r23)->required();
    bound->add_option("--r24", radii.r24)->required();
    bound->add_option("--r34", radii.r34)->required();
    int sample_count = 100;
    CLI::App* sample = e4->add_subcommand("sample", "randomized conjecture harness");
    sample->add_option("--count", sample_count, "number of trials")->check(CLI::PositiveNumber);
    sample->add_option("--out", opt.out_path, "JSON-lines dump of every trial");

    // probe-dim3
    int probe_trials = 100;
    CLI::App* probe = app.add_subcommand("probe-dim3",
                                         "randomized 3-dimensional probe of the 2-d bounds");
    probe->add_option("--trials", probe_trials, "number of trials")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n\n" << app.help();
        return 1;
    }

    try {
        if (circ->parsed()) {
            const PointSet ps = pointset_from_json(load_json_file(points_path));
            const SymmetricPolytope body = polytope_from_json(load_json_file(body_path));
            const CircumResult result = circumradius(ps.points, body);
            json doc = circum_to_json(result);
            if (want_certificate) {
                const OptimalityCertificate cert = certificate(ps.points, body, result);
                doc["certificate"] = certificate_to_json(cert);
                doc["certificate_verified"] =
                    verify_certificate(cert, ps.points, body, result.radius);
            }
            emit(out, std::move(doc), opt.tolerance, opt.seed);
            return 0;
        }
        if (chk->parsed()) {
            const DiversityTable table = diversity_from_json(load_json_file(table_path));
            const AxiomReport report = check_axioms(table);
            emit(out, axiom_report_json(report), opt.tolerance, opt.seed);
            return report.ok ? 0 : 2;
        }
        if (decide->parsed()) {
            const auto dec = embed3::decide_banach(d12, d13, d23, d123);
            emit(out, decision_json(dec), opt.tolerance, opt.seed);
            return dec.banach ? 0 : 2;
        }
        if (witness->parsed()) {
            const auto canon = embed3::canonical_from_values(d12, d13, d23, target);
            const SymmetricPolytope body = embed3::witness_for_target(canon, target);
            bool pass = false;
            // Measured values are reported in canonical order, matching the
            // construction; the decision itself is relabeling-invariant.
            const json rows = roundtrip_rows(body, canon.d12, canon.d13, canon.d23, target,
                                             opt.tolerance, pass);
            write_text_file(opt.out_path, canonical_dump(polytope_to_json(body)) + "\n");
            json doc{{"target", target},
                     {"body", polytope_to_json(body)},
                     {"out", opt.out_path},
                     {"roundtrip", rows},
                     {"pass", pass}};
            emit(out, std::move(doc), opt.tolerance, opt.seed);
            return pass ? 0 : 2;
        }
        if (verify->parsed()) {
            const SymmetricPolytope body = polytope_from_json(load_json_file(witness_path));
            bool pass = false;
            const json rows = roundtrip_rows(body, d12, d13, d23, d123, opt.tolerance, pass);
            emit(out, json{{"pass", pass}, {"rows", rows}}, opt.tolerance, opt.seed);
            return pass ? 0 : 2;
        }
        if (bound->parsed()) {
            json doc{{"radii", radii_json(radii)}};
            const auto sys = embed4::solve_face_system(radii);
            doc["system"] = system_json(sys);
            if (sys.coefficients_valid) doc["bound_system"] = 1.0 / sys.lambda;
            try {
                doc["bound_formula"] = embed4::r1234_bound(radii);
            } catch (const ZeroDenominator& e) {
                doc["bound_formula_error"] = e.what();
            }
            try {
                doc["coefficient_a_formula"] = embed4::coefficient_a(radii);
            } catch (const ZeroDenominator& e) {
                doc["coefficient_a_formula_error"] = e.what();
            }
            doc["coefficient_a_system"] = sys.a;
            if (embed4::pairwise_feasible(radii)) {
                json tb = json::array();
                for (const auto& t : embed4::triple_bounds(radii)) {
                    tb.push_back(json{{"triple", json::array({t.triple[0] + 1, t.triple[1] + 1,
                                                              t.triple[2] + 1})},
                                      {"lo", t.lo},
                                      {"hi", t.hi}});
                }
                doc["triple_bounds"] = tb;
            }
            emit(out, std::move(doc), opt.tolerance, opt.seed);
            return 0;
        }
        if (sample->parsed()) {
            const auto summary = embed4::conjecture_sample(sample_count, opt.seed);
            if (!opt.out_path.empty()) {
                std::string lines;
                for (const auto& trial : summary.trials)
                    lines += canonical_dump(trial_json(trial), false) + "\n";
                write_text_file(opt.out_path, lines);
            }
            json non_consistent = json::array();
            for (const auto& trial : summary.trials)
                if (trial.verdict != embed4::TrialVerdict::Consistent)
                    non_consistent.push_back(trial_json(trial));
            json doc{{"count", summary.count},
                     {"verdicts",
                      json{{"consistent", summary.n_consistent},
                           {"bound_violated", summary.n_bound_violated},
                           {"system_infeasible", summary.n_system_infeasible}}},
                     {"formula_mismatches", summary.n_formula_mismatch},
                     {"spread",
                      json{{"measured_minus_lower",
                            json::array({summary.min_measured_minus_lower,
                                         summary.max_measured_minus_lower})},
                           {"upper_minus_measured",
                            json::array({summary.min_upper_minus_measured,
                                         summary.max_upper_minus_measured})}}},
                     {"non_consistent", non_consistent}};
            emit(out, std::move(doc), opt.tolerance, opt.seed);
            return 0;
        }
        if (probe->parsed()) {
            const auto report = embed3::higher_dim_probe(probe_trials, opt.seed);
            json violations = json::array();
            for (const auto& v : report.violations)
                violations.push_back(json{{"trial", v.trial}, {"detail", v.detail}});
            emit(out, json{{"trials", report.trials}, {"violations", violations}},
                 opt.tolerance, opt.seed);
            return report.violations.empty() ? 0 : 2;
        }
    } catch (const Error& e) {
        json doc{{"error", json{{"code", e.code()}, {"message", e.what()}}}};
        out << canonical_dump(doc) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json doc{{"error", json{{"code", "Internal"}, {"message", e.what()}}}};
        out << canonical_dump(doc) << "\n";
        return 1;
    }
    err << app.help();
    return 1;
}

} // namespace divr::cli
