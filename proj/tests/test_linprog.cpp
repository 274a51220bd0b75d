#include <doctest.h>

#include <cmath>

#include "divr/circum.hpp"
#include "divr/embed3.hpp"
#include "divr/linprog.hpp"
#include "divr/rng.hpp"

using namespace divr;

namespace {

LpSolution solve_expect_optimal(const LinearProgram& lp) {
    const LpSolution sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    return sol;
}

} // namespace

TEST_CASE("min x subject to x >= 0 is 0") {
    LinearProgram lp;
    lp.add_variable(1.0, true);
    const LpSolution sol = solve_expect_optimal(lp);
    CHECK(sol.objective == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(sol.primal[0] == doctest::Approx(0.0));
}

TEST_CASE("min lambda subject to lambda >= 3, encoded with a slack") {
    LinearProgram lp;
    const auto lam = lp.add_variable(1.0, true);
    const auto slack = lp.add_variable(0.0, true);
    lp.add_eq({{lam, 1.0}, {slack, -1.0}}, 3.0);
    const LpSolution sol = solve_expect_optimal(lp);
    CHECK(sol.primal[lam] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sol.objective == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("infeasible program reported as such") {
    LinearProgram lp;
    const auto x = lp.add_variable(1.0, true);
    const auto y = lp.add_variable(0.0, true);
    lp.add_eq({{x, 1.0}, {y, 1.0}}, -1.0);  // x + y = -1 with x, y >= 0
    CHECK(solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded program reported as such") {
    LinearProgram lp;
    const auto x = lp.add_variable(-1.0, true);  // min -x, x free below? no: x >= 0, unbounded above
    (void)x;
    CHECK(solve(lp).status == LpStatus::Unbounded);
}

TEST_CASE("free variables work: min |x| style split via equality") {
    // min y subject to y - x = 0, x free, y >= 0: optimum 0 at x = 0.
    LinearProgram lp;
    const auto x = lp.add_variable(0.0, false);
    const auto y = lp.add_variable(1.0, true);
    lp.add_eq({{y, 1.0}, {x, -1.0}}, 0.0);
    const LpSolution sol = solve_expect_optimal(lp);
    CHECK(sol.objective == doctest::Approx(0.0));
}

TEST_CASE("circumradius LP of the reference triangle in the regular hexagon") {
    // Oracle: the closed-form attainable bound at (1,1,1) is 4*1/(2+2+2-3) = 4/3,
    // the circumradius of the placed triangle in its minimal hexagon.
    const auto canon = embed3::canonical_from_values(1.0, 1.0, 1.0, 1.0);
    const auto witness = embed3::hexagon_witness(canon);
    const auto tri = embed3::reference_triangle();
    const CircumResult r = circumradius({tri[0], tri[1], tri[2]}, witness.body);
    CHECK(r.radius == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("duality: primal objective equals dual objective on a random suite") {
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t nv = static_cast<std::size_t>(rng.uniform_int(2, 8));
        const std::size_t m = static_cast<std::size_t>(rng.uniform_int(1, 4));
        LinearProgram lp;
        for (std::size_t j = 0; j < nv; ++j)
            lp.add_variable(rng.uniform(-1.0, 1.0), rng.uniform01() < 0.8);
        // Build rows around a known nonnegative feasible point so phase 1 succeeds.
        std::vector<double> x0(nv);
        for (double& v : x0) v = rng.uniform(0.0, 1.0);
        for (std::size_t i = 0; i < m; ++i) {
            std::vector<std::pair<std::size_t, double>> terms;
            double rhs = 0.0;
            for (std::size_t j = 0; j < nv; ++j) {
                const double c = rng.uniform(-1.0, 1.0);
                terms.emplace_back(j, c);
                rhs += c * x0[j];
            }
            lp.add_eq(terms, rhs);
        }
        const LpSolution sol = solve(lp);
        if (sol.status != LpStatus::Optimal) continue;  // unbounded draws are fine
        double dual_obj = 0.0;
        for (std::size_t i = 0; i < m; ++i) dual_obj += sol.duals[i] * lp.eq_rhs[i];
        CHECK(std::abs(sol.objective - dual_obj) <= 1e-7 * (1.0 + std::abs(sol.objective)));
    }
}

TEST_CASE("determinism: identical input gives bit-identical output") {
    LinearProgram lp;
    for (int j = 0; j < 6; ++j) lp.add_variable(j % 2 ? 1.0 : -0.5, true);
    lp.add_eq({{0, 1.0}, {1, 2.0}, {2, -1.0}}, 1.5);
    lp.add_eq({{3, 1.0}, {4, 1.0}, {5, 1.0}}, 2.0);
    lp.add_eq({{0, 0.5}, {5, -0.25}}, 0.25);
    const LpSolution a = solve(lp);
    const LpSolution b = solve(lp);
    REQUIRE(a.status == b.status);
    CHECK(a.objective == b.objective);
    for (std::size_t j = 0; j < a.primal.size(); ++j) CHECK(a.primal[j] == b.primal[j]);
    for (std::size_t i = 0; i < a.duals.size(); ++i) CHECK(a.duals[i] == b.duals[i]);
}

TEST_CASE("degenerate ties do not cycle") {
    // Klee-Minty-ish small instance with heavy degeneracy: several identical rows.
    LinearProgram lp;
    const auto x = lp.add_variable(-1.0, true);
    const auto y = lp.add_variable(-1.0, true);
    const auto s1 = lp.add_variable(0.0, true);
    const auto s2 = lp.add_variable(0.0, true);
    const auto s3 = lp.add_variable(0.0, true);
    lp.add_eq({{x, 1.0}, {s1, 1.0}}, 1.0);
    lp.add_eq({{y, 1.0}, {s2, 1.0}}, 1.0);
    lp.add_eq({{x, 1.0}, {y, 1.0}, {s3, 1.0}}, 2.0);  // redundant at the optimum
    const LpSolution sol = solve_expect_optimal(lp);
    CHECK(sol.objective == doctest::Approx(-2.0).epsilon(1e-9));
}
