#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "divr/geom.hpp"
#include "divr/vec.hpp"

namespace divr::embed4 {

/// Pairwise radii over the four simplex points, indexed by 0-based point
/// pairs (i, j), i < j.
struct FourPointRadii {
    double r12 = 1.0, r13 = 1.0, r14 = 1.0, r23 = 1.0, r24 = 1.0, r34 = 1.0;

    double get(std::size_t i, std::size_t j) const;
    std::array<double, 6> as_array() const { return {r12, r13, r14, r23, r24, r34}; }
};

/// The fixed placement simplex (1,0,0), (0,0,0), (0,1,0), (0,0,1).
std::array<Vec, 4> simplex_points();

/// Body conv(+-P_ij) with P_ij = (p_i - p_j) / (2 R_ij); always
/// full-dimensional for finite positive radii.
SymmetricPolytope generators_from_radii(const FourPointRadii& r);

/// All 12 triangle-type inequalities R_ij <= R_ik + R_kj with decision slack.
bool pairwise_feasible(const FourPointRadii& r);

struct TripleBound {
    std::array<std::size_t, 3> triple;  // 0-based point indices
    double lo = 0.0;
    double hi = 0.0;
};

/// Per-triple attainable interval, reusing the 3-point closed form on each of
/// the four point triples.
std::array<TripleBound, 4> triple_bounds(const FourPointRadii& r);

/// Solution of the 12-variable, 12-equation face-contact system: the placed
/// simplex vertex (x0,y0,z0) and offsets lambda(1,0,-1), lambda(0,1,-1),
/// lambda(0,0,-1) lie on four prescribed facets of conv(+-P_ij), written as
/// convex combinations with coefficients a..h. When the coefficients are
/// valid convex weights, 1/lambda equals the LP-measured circumradius of the
/// simplex.
struct FaceSystemSolution {
    double x0 = 0.0, y0 = 0.0, z0 = 0.0;
    double lambda = 0.0;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0, g = 0.0, h = 0.0;
    bool coefficients_valid = false;  // all of a..h and the 1-x-y residuals in [0,1], lambda > 0
    double residual = 0.0;            // max row residual of the re-substituted system, relative
};

/// Assembles the system exactly as displayed (each vector equation
/// contributing three scalar rows) and solves by dense Gaussian elimination
/// with partial pivoting. Throws SingularSystem on a vanishing pivot.
FaceSystemSolution solve_face_system(const FourPointRadii& r);

/// The published closed-form expression for coefficient `a`, transcribed
/// verbatim. solve_face_system is the oracle for it; the two disagree
/// systematically (see README notes on formulas), which the test suite
/// documents rather than hides. Throws ZeroDenominator.
double coefficient_a(const FourPointRadii& r);

/// The published closed-form upper bound for the simplex circumradius,
/// transcribed verbatim (one missing R34 factor restored to make the printed
/// expression homogeneous). Its denominator vanishes at all-equal radii;
/// throws ZeroDenominator there. The face-system 1/lambda is the
/// oracle-adjudicated bound used for verdicts.
double r1234_bound(const FourPointRadii& r);

enum class TrialVerdict { Consistent, BoundViolated, SystemInfeasible };

const char* to_string(TrialVerdict v);

struct ConjectureTrial {
    FourPointRadii radii;
    double measured_r1234 = 0.0;        // LP circumradius of the simplex in conv(+-P_ij)
    double lower = 0.0;                 // max of the LP-measured triple radii
    std::array<double, 4> triple_radii{};
    FaceSystemSolution system;
    double upper = 0.0;                 // adjudicated bound 1/lambda (valid-coefficient trials)
    bool upper_formula_defined = false; // printed closed form evaluated (when denominator != 0)
    double upper_formula = 0.0;
    bool formula_matches_system = false;
    TrialVerdict verdict = TrialVerdict::SystemInfeasible;
};

/// Full pipeline on one radii tuple. Verdicts: SystemInfeasible when the
/// face-contact coefficients leave [0,1] (the derivation's contact pattern
/// does not apply); otherwise Consistent iff
/// lower - 1e-7 <= measured <= upper + 1e-7; BoundViolated otherwise, after a
/// re-verification pass on a rescaled copy of the instance.
ConjectureTrial conjecture_trial(const FourPointRadii& r);

struct ConjectureSummary {
    int count = 0;
    std::uint64_t seed = 0;
    int n_consistent = 0;
    int n_bound_violated = 0;
    int n_system_infeasible = 0;
    int n_formula_mismatch = 0;  // trials where the printed bound disagrees with 1/lambda
    double min_measured_minus_lower = 0.0;
    double max_measured_minus_lower = 0.0;
    double min_upper_minus_measured = 0.0;  // over trials with a valid upper
    double max_upper_minus_measured = 0.0;
    std::vector<ConjectureTrial> trials;    // all trials, in order
};

/// Reproducible sampling harness: trial 0 is always the all-equal-radii
/// anchor; the rest draw each radius log-uniformly from [0.5, 2], rejection-
/// filtered by pairwise_feasible. Never asserts the conjecture; reports.
ConjectureSummary conjecture_sample(int n, std::uint64_t seed);

} // namespace divr::embed4
