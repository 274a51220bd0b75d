#include "divr/embed4.hpp"

#include <algorithm>
#include <cmath>

#include "divr/circum.hpp"
#include "divr/embed3.hpp"
#include "divr/rng.hpp"

namespace divr::embed4 {
namespace {

constexpr double kVerdictSlack = 1e-7;
constexpr double kCoefficientSlack = 1e-9;

double decision_slack(const FourPointRadii& r) {
    double m = 0.0;
    for (double v : r.as_array()) m = std::max(m, v);
    return 1e-9 * (1.0 + m);
}

// Dense 12x12 Gaussian elimination with partial pivoting.
std::array<double, 12> solve12(std::array<std::array<double, 12>, 12> m,
                               std::array<double, 12> rhs) {
    double scale = 0.0;
    for (const auto& row : m)
        for (double v : row) scale = std::max(scale, std::abs(v));
    for (std::size_t col = 0; col < 12; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < 12; ++i)
            if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
        if (std::abs(m[piv][col]) < 1e-12 * scale)
            throw SingularSystem("face system pivot below 1e-12 * scale in column " +
                                 std::to_string(col));
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t i = col + 1; i < 12; ++i) {
            const double f = m[i][col] / m[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < 12; ++j) m[i][j] -= f * m[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    std::array<double, 12> x{};
    for (std::size_t i = 12; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < 12; ++j) s -= m[i][j] * x[j];
        x[i] = s / m[i][i];
    }
    return x;
}

} // namespace

double FourPointRadii::get(std::size_t i, std::size_t j) const {
    const std::size_t lo = std::min(i, j), hi = std::max(i, j);
    if (lo == 0 && hi == 1) return r12;
    if (lo == 0 && hi == 2) return r13;
    if (lo == 0 && hi == 3) return r14;
    if (lo == 1 && hi == 2) return r23;
    if (lo == 1 && hi == 3) return r24;
    if (lo == 2 && hi == 3) return r34;
    throw PreconditionViolated("pair indices out of range");
}

std::array<Vec, 4> simplex_points() {
    return {Vec{1.0, 0.0, 0.0}, Vec{0.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0}, Vec{0.0, 0.0, 1.0}};
}

SymmetricPolytope generators_from_radii(const FourPointRadii& r) {
    for (double v : r.as_array())
        if (!(v > 0.0) || !std::isfinite(v))
            throw PreconditionViolated("radii must be positive and finite");
    const std::array<Vec, 4> p = simplex_points();
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            gens.push_back((1.0 / (2.0 * r.get(i, j))) * (p[i] - p[j]));
    return SymmetricPolytope(3, std::move(gens));
}

bool pairwise_feasible(const FourPointRadii& r) {
    const double eps = decision_slack(r);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                if (k == i || k == j) continue;
                if (r.get(i, j) > r.get(i, k) + r.get(k, j) + eps) return false;
            }
    return true;
}

std::array<TripleBound, 4> triple_bounds(const FourPointRadii& r) {
    if (!pairwise_feasible(r))
        throw PreconditionViolated("radii violate the pairwise inequalities");
    std::array<TripleBound, 4> out;
    const std::array<std::array<std::size_t, 3>, 4> triples{
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    for (std::size_t t = 0; t < 4; ++t) {
        const auto [i, j, k] = triples[t];
        const double rij = r.get(i, j), rik = r.get(i, k), rjk = r.get(j, k);
        // Canonical order for the 3-point formula (hi is symmetric anyway).
        const double d12 = std::max(rij, rik);
        const double d13 = std::min(rij, rik);
        const auto range = embed3::banach_range(
            embed3::ThreePointDiversity{d12, d13, rjk, std::max({rij, rik, rjk})});
        out[t] = TripleBound{{i, j, k}, range.lo, range.hi};
    }
    return out;
}

FaceSystemSolution solve_face_system(const FourPointRadii& r) {
    for (double v : r.as_array())
        if (!(v > 0.0) || !std::isfinite(v))
            throw PreconditionViolated("radii must be positive and finite");

    // Unknown order: x0, y0, z0, lambda, a, b, c, d, e, f, g, h.
    enum { X0, Y0, Z0, L, A, B, C, D, E, F, G, H };
    const double i12 = 1.0 / (2.0 * r.r12), i13 = 1.0 / (2.0 * r.r13),
                 i14 = 1.0 / (2.0 * r.r14), i23 = 1.0 / (2.0 * r.r23),
                 i24 = 1.0 / (2.0 * r.r24), i34 = 1.0 / (2.0 * r.r34);

    std::array<std::array<double, 12>, 12> m{};
    std::array<double, 12> rhs{};
    auto row = [&](std::size_t idx, std::initializer_list<std::pair<int, double>> terms,
                   double b) {
        for (const auto& [var, coef] : terms) m[idx][static_cast<std::size_t>(var)] = coef;
        rhs[idx] = b;
    };

    // (x0,y0,z0) = (1-a-b) i14 (-1,0,1) + a i24 (0,0,1) + b i34 (0,-1,1)
    row(0, {{X0, 1.0}, {A, -i14}, {B, -i14}}, -i14);
    row(1, {{Y0, 1.0}, {B, i34}}, 0.0);
    row(2, {{Z0, 1.0}, {A, i14 - i24}, {B, i14 - i34}}, i14);
    // (x0,y0,z0) + lambda (1,0,-1) = (1-c-d) i12 (1,0,0) + c i13 (1,-1,0) + d i14 (1,0,-1)
    row(3, {{X0, 1.0}, {L, 1.0}, {C, i12 - i13}, {D, i12 - i14}}, i12);
    row(4, {{Y0, 1.0}, {C, i13}}, 0.0);
    row(5, {{Z0, 1.0}, {L, -1.0}, {D, i14}}, 0.0);
    // (x0,y0,z0) + lambda (0,1,-1) = (1-e-f) i13 (-1,1,0) + e i23 (0,1,0) + f i34 (0,1,-1)
    row(6, {{X0, 1.0}, {E, -i13}, {F, -i13}}, -i13);
    row(7, {{Y0, 1.0}, {L, 1.0}, {E, i13 - i23}, {F, i13 - i34}}, i13);
    row(8, {{Z0, 1.0}, {L, -1.0}, {F, i34}}, 0.0);
    // (x0,y0,z0) + lambda (0,0,-1) = (1-g-h) i12 (-1,0,0) + g i23 (0,-1,0) + h i24 (0,0,-1)
    row(9, {{X0, 1.0}, {G, -i12}, {H, -i12}}, -i12);
    row(10, {{Y0, 1.0}, {G, i23}}, 0.0);
    row(11, {{Z0, 1.0}, {L, -1.0}, {H, i24}}, 0.0);

    const auto mm = m;
    const auto rr = rhs;
    const std::array<double, 12> x = solve12(m, rhs);

    FaceSystemSolution sol;
    sol.x0 = x[X0];
    sol.y0 = x[Y0];
    sol.z0 = x[Z0];
    sol.lambda = x[L];
    sol.a = x[A];
    sol.b = x[B];
    sol.c = x[C];
    sol.d = x[D];
    sol.e = x[E];
    sol.f = x[F];
    sol.g = x[G];
    sol.h = x[H];

    double worst = 0.0;
    for (std::size_t i = 0; i < 12; ++i) {
        double resid = -rr[i];
        double rowscale = std::abs(rr[i]);
        for (std::size_t j = 0; j < 12; ++j) {
            resid += mm[i][j] * x[j];
            rowscale += std::abs(mm[i][j] * x[j]);
        }
        worst = std::max(worst, std::abs(resid) / std::max(1.0, rowscale));
    }
    sol.residual = worst;

    auto in_unit = [](double v) {
        return v >= -kCoefficientSlack && v <= 1.0 + kCoefficientSlack;
    };
    sol.coefficients_valid =
        sol.lambda > 0.0 && in_unit(sol.a) && in_unit(sol.b) && in_unit(sol.c) &&
        in_unit(sol.d) && in_unit(sol.e) && in_unit(sol.f) && in_unit(sol.g) &&
        in_unit(sol.h) && in_unit(1.0 - sol.a - sol.b) && in_unit(1.0 - sol.c - sol.d) &&
        in_unit(1.0 - sol.e - sol.f) && in_unit(1.0 - sol.g - sol.h);
    return sol;
}

// The two published closed forms below are transcribed term by term, grouped
// exactly as printed. solve_face_system is their oracle; see the README notes
// on formulas for the observed disagreement.

double coefficient_a(const FourPointRadii& rr) {
    const double R12 = rr.r12, R13 = rr.r13, R14 = rr.r14, R23 = rr.r23, R24 = rr.r24,
                 R34 = rr.r34;
    const double num =
        R12 * R14 * R24 * R34 * R34
        - (R12 * R13 * R13 + (R12 + R13) * R14 * R14 - (2.0 * R12 * R13 + R13 * R13) * R14)
              * R23 * R24
        + (R13 * R13 * R14 - R13 * R14 * R14) * R24 * R24
        - (R13 * R14 * R24 * R24
           - (R12 * R12 * R13 + R12 * R13 * R13 - R13 * R14 * R14 + R14 * R14 * R23
              - (R12 * R12 + 3.0 * R12 * R13 + R13 * R13) * R14)
                 * R24)
              * R34;
    const double den =
        R13 * R13 * R14 * R24 * R24
        + R12 * R12 * R14 * R34 * R34
        + (R12 * R13 * R14 - (R12 + R13) * R14 * R14) * R23 * R23
        - (R12 * R13 * R13 + R13 * R14 * R14 - (R12 * R13 + R13 * R13) * R14) * R23 * R24
        - (2.0 * R12 * R13 * R14 * R24
           - (R12 * R12 * R13 + R12 * R14 * R14 - (R12 * R12 + R12 * R13) * R14) * R23)
              * R34;
    double scale = 0.0;
    for (double v : rr.as_array()) scale = std::max(scale, std::abs(v));
    const double s5 = scale * scale * scale * scale * scale;
    if (std::abs(den) <= 1e-14 * std::max(1.0, s5))
        throw ZeroDenominator("coefficient-a denominator vanishes");
    return num / den;
}

double r1234_bound(const FourPointRadii& rr) {
    const double R12 = rr.r12, R13 = rr.r13, R14 = rr.r14, R23 = rr.r23, R24 = rr.r24,
                 R34 = rr.r34;
    // Numerator: 2x the coefficient-a denominator (the printed last term is
    // missing its R34 factor; restored, since the expression is otherwise
    // inhomogeneous).
    const double num =
        2.0 * (R13 * R13 * R14 * R24 * R24
               + R12 * R12 * R14 * R34 * R34
               + (R12 * R13 * R14 - (R12 + R13) * R14 * R14) * R23 * R23
               - (R12 * R13 * R13 + R13 * R14 * R14 - (R12 * R13 + R13 * R13) * R14) * R23 * R24
               - (2.0 * R12 * R13 * R14 * R24
                  - (R12 * R12 * R13 + R12 * R14 * R14 - (R12 * R12 + R12 * R13) * R14) * R23)
                     * R34);
    const double den =
        2.0 * R13 * R14 * R24 * R24
        + (R12 * R13 - (R12 + R13) * R14 - R14 * R14) * R23 * R23
        + (R12 * R12 * R13 - R12 * R13 * R13 - (R12 + R13) * R14 * R14
           - (R12 * R12 - 2.0 * R12 * R13 - R13 * R13) * R14)
              * R23
        - (R12 * R12 * R13 + R12 * R13 * R13 - (R12 - R13) * R14 * R14
           - (R12 * R12 + R13 * R13) * R14
           + (R12 * R13 - (R12 + R13) * R14 + R14 * R14) * R23)
              * R24
        + (R12 * R12 * R13 + R12 * R13 * R13 + (R12 - R13) * R14 * R14
           - 2.0 * R12 * R14 * R24 + (R12 * R12 - 2.0 * R12 * R13 - R13 * R13) * R14
           - (R12 * R13 - (R12 + R13) * R14 - R14 * R14) * R23)
              * R34;
    double scale = 0.0;
    for (double v : rr.as_array()) scale = std::max(scale, std::abs(v));
    const double s4 = scale * scale * scale * scale;
    if (std::abs(den) <= 1e-12 * std::max(1.0, s4))
        throw ZeroDenominator("published bound denominator vanishes (it is identically zero "
                              "at all-equal radii)");
    return num / den;
}

const char* to_string(TrialVerdict v) {
    switch (v) {
        case TrialVerdict::Consistent: return "Consistent";
        case TrialVerdict::BoundViolated: return "BoundViolated";
        case TrialVerdict::SystemInfeasible: return "SystemInfeasible";
    }
    return "?";
}

ConjectureTrial conjecture_trial(const FourPointRadii& r) {
    if (!pairwise_feasible(r))
        throw PreconditionViolated("radii violate the pairwise inequalities");

    ConjectureTrial trial;
    trial.radii = r;

    const SymmetricPolytope body = generators_from_radii(r);
    const std::array<Vec, 4> p = simplex_points();
    const std::vector<Vec> pts{p[0], p[1], p[2], p[3]};
    trial.measured_r1234 = circumradius(pts, body).radius;

    const std::array<std::array<std::size_t, 3>, 4> triples{
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
    trial.lower = 0.0;
    for (std::size_t t = 0; t < 4; ++t) {
        const auto [i, j, k] = triples[t];
        trial.triple_radii[t] = circumradius({p[i], p[j], p[k]}, body).radius;
        trial.lower = std::max(trial.lower, trial.triple_radii[t]);
    }

    trial.system = solve_face_system(r);
    try {
        trial.upper_formula = r1234_bound(r);
        trial.upper_formula_defined = true;
    } catch (const ZeroDenominator&) {
        trial.upper_formula_defined = false;
    }

    if (!trial.system.coefficients_valid) {
        trial.verdict = TrialVerdict::SystemInfeasible;
        return trial;
    }

    trial.upper = 1.0 / trial.system.lambda;
    trial.formula_matches_system =
        trial.upper_formula_defined &&
        std::abs(trial.upper_formula - trial.upper) <= 1e-8 * std::max(1.0, trial.upper);

    auto consistent = [&](double measured, double lower, double upper) {
        return lower - kVerdictSlack <= measured && measured <= upper + kVerdictSlack;
    };
    if (consistent(trial.measured_r1234, trial.lower, trial.upper)) {
        trial.verdict = TrialVerdict::Consistent;
        return trial;
    }

    // Re-verify a suspected violation on a rescaled copy (exact homogeneity
    // makes this an independent arithmetic path through the LP).
    FourPointRadii scaled = r;
    const double factor = 2.0;
    scaled.r12 *= factor;
    scaled.r13 *= factor;
    scaled.r14 *= factor;
    scaled.r23 *= factor;
    scaled.r24 *= factor;
    scaled.r34 *= factor;
    const SymmetricPolytope body2 = generators_from_radii(scaled);
    const double measured2 = circumradius(pts, body2).radius / factor;
    const FaceSystemSolution sys2 = solve_face_system(scaled);
    // lambda(tR) = lambda(R)/t, so 1/(lambda2 * factor) re-expresses the bound
    // at the original scale.
    const double upper2 =
        sys2.coefficients_valid ? 1.0 / (sys2.lambda * factor) : trial.upper;
    trial.verdict = consistent(measured2, trial.lower, upper2) ? TrialVerdict::Consistent
                                                               : TrialVerdict::BoundViolated;
    return trial;
}

ConjectureSummary conjecture_sample(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionViolated("conjecture_sample: n >= 1 required");
    ConjectureSummary summary;
    summary.count = n;
    summary.seed = seed;

    bool first_upper = true;
    bool first_lower = true;
    for (int t = 0; t < n; ++t) {
        FourPointRadii r;  // trial 0: the all-equal anchor
        if (t > 0) {
            Rng rng(Rng::derive_seed(seed, static_cast<std::uint64_t>(t)));
            for (;;) {
                r.r12 = rng.log_uniform(0.5, 2.0);
                r.r13 = rng.log_uniform(0.5, 2.0);
                r.r14 = rng.log_uniform(0.5, 2.0);
                r.r23 = rng.log_uniform(0.5, 2.0);
                r.r24 = rng.log_uniform(0.5, 2.0);
                r.r34 = rng.log_uniform(0.5, 2.0);
                if (pairwise_feasible(r)) break;
            }
        }
        ConjectureTrial trial = conjecture_trial(r);
        switch (trial.verdict) {
            case TrialVerdict::Consistent: ++summary.n_consistent; break;
            case TrialVerdict::BoundViolated: ++summary.n_bound_violated; break;
            case TrialVerdict::SystemInfeasible: ++summary.n_system_infeasible; break;
        }
        if (trial.upper_formula_defined && trial.system.coefficients_valid &&
            !trial.formula_matches_system)
            ++summary.n_formula_mismatch;

        const double ml = trial.measured_r1234 - trial.lower;
        if (first_lower) {
            summary.min_measured_minus_lower = summary.max_measured_minus_lower = ml;
            first_lower = false;
        } else {
            summary.min_measured_minus_lower = std::min(summary.min_measured_minus_lower, ml);
            summary.max_measured_minus_lower = std::max(summary.max_measured_minus_lower, ml);
        }
        if (trial.system.coefficients_valid) {
            const double um = trial.upper - trial.measured_r1234;
            if (first_upper) {
                summary.min_upper_minus_measured = summary.max_upper_minus_measured = um;
                first_upper = false;
            } else {
                summary.min_upper_minus_measured = std::min(summary.min_upper_minus_measured, um);
                summary.max_upper_minus_measured = std::max(summary.max_upper_minus_measured, um);
            }
        }
        summary.trials.push_back(std::move(trial));
    }
    return summary;
}

} // namespace divr::embed4
