#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "divr/errors.hpp"

namespace divr {

/// Dense linear program
///
///     minimize  objective . x
///     s.t.      eq_coeffs x = eq_rhs
///               x_j >= 0 for every j with nonneg[j] != 0 (others free)
///
/// This is the single numerical engine behind gauge evaluation, circumradii
/// and containment certificates; everything it is asked to solve is small
/// (tens of variables) and unit-scale.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<double> objective;
    std::vector<std::vector<double>> eq_coeffs;
    std::vector<double> eq_rhs;
    std::vector<std::uint8_t> nonneg;

    /// Appends a variable, returns its index.
    std::size_t add_variable(double cost, bool nonnegative) {
        objective.push_back(cost);
        nonneg.push_back(nonnegative ? 1 : 0);
        return num_vars++;
    }

    /// Appends an equality row given sparse terms.
    void add_eq(const std::vector<std::pair<std::size_t, double>>& terms, double rhs) {
        std::vector<double> row(num_vars, 0.0);
        for (const auto& [j, v] : terms) row[j] += v;
        eq_coeffs.push_back(std::move(row));
        eq_rhs.push_back(rhs);
    }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> primal;
    std::vector<double> duals;   // one multiplier per equality row
    double objective = 0.0;
};

/// Two-phase dense tableau simplex. Dantzig pricing for the first 100 pivots,
/// Bland's rule afterwards; throws NumericalFailure if the pivot cap (10000)
/// is hit. Optimal results are re-verified: primal feasibility residual must
/// be <= 1e-8 and complementary slackness residual <= 1e-7.
LpSolution solve(const LinearProgram& lp);

} // namespace divr
