#include "divr/linprog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace divr {
namespace {

constexpr double kPivotEps = 1e-9;       // entries smaller than this never pivot
constexpr double kReducedCostEps = 1e-9; // optimality threshold on reduced costs
constexpr double kPhaseOneTol = 1e-8;    // residual artificial objective => infeasible
constexpr double kFeasTol = 1e-8;
constexpr double kComplSlackTol = 1e-7;
constexpr int kDantzigPivots = 100;      // Bland's rule engages after this many
constexpr int kMaxPivots = 10000;

// Standard-form working problem: all variables nonnegative, artificial basis.
struct Tableau {
    std::size_t m = 0;  // rows
    std::size_t n = 0;  // structural columns (free variables already split)
    // rows[i]: n structural | m artificial | rhs  (width n + m + 1)
    std::vector<std::vector<double>> rows;
    std::vector<double> cost;  // reduced-cost row, same width; last cell = -objective
    std::vector<std::size_t> basis;

    std::size_t width() const { return n + m + 1; }

    void pivot(std::size_t r, std::size_t s) {
        std::vector<double>& pr = rows[r];
        const double inv = 1.0 / pr[s];
        for (double& v : pr) v *= inv;
        pr[s] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            const double f = rows[i][s];
            if (f == 0.0) continue;
            std::vector<double>& ri = rows[i];
            for (std::size_t j = 0; j < width(); ++j) ri[j] -= f * pr[j];
            ri[s] = 0.0;
        }
        const double f = cost[s];
        if (f != 0.0) {
            for (std::size_t j = 0; j < width(); ++j) cost[j] -= f * pr[j];
            cost[s] = 0.0;
        }
        basis[r] = s;
    }

    // Entering column with negative reduced cost among allowed columns, or
    // npos when optimal. Dantzig: most negative (ties to smallest index);
    // Bland: smallest index.
    std::size_t pick_entering(bool bland, std::size_t num_cols) const {
        std::size_t best = npos();
        double best_val = -kReducedCostEps;
        for (std::size_t j = 0; j < num_cols; ++j) {
            const double cj = cost[j];
            if (cj < -kReducedCostEps) {
                if (bland) return j;
                if (cj < best_val) {
                    best_val = cj;
                    best = j;
                }
            }
        }
        return best;
    }

    // Leaving row by minimum ratio; ties broken by smallest basis index
    // (paired with Bland's entering rule this guarantees termination).
    std::size_t pick_leaving(std::size_t s) const {
        std::size_t best = npos();
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            const double a = rows[i][s];
            if (a <= kPivotEps) continue;
            const double ratio = rows[i].back() / a;
            if (best == npos() || ratio < best_ratio - 1e-12 ||
                (std::abs(ratio - best_ratio) <= 1e-12 && basis[i] < basis[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    static std::size_t npos() { return static_cast<std::size_t>(-1); }
};

// Runs simplex iterations on the current cost row. `num_cols` restricts the
// entering choice (phase 2 excludes artificial columns). Returns false when an
// unbounded ray is detected.
bool run_simplex(Tableau& t, std::size_t num_cols, int& pivots) {
    for (;;) {
        const bool bland = pivots >= kDantzigPivots;
        const std::size_t s = t.pick_entering(bland, num_cols);
        if (s == Tableau::npos()) return true;
        const std::size_t r = t.pick_leaving(s);
        if (r == Tableau::npos()) return false;
        t.pivot(r, s);
        if (++pivots > kMaxPivots)
            throw NumericalFailure("simplex stalled: pivot cap of " +
                                   std::to_string(kMaxPivots) + " exceeded");
    }
}

// Solves M x = rhs in place by partial-pivot LU; returns false on a pivot
// smaller than tol (caller falls back to tableau-derived values).
bool dense_solve(std::vector<std::vector<double>>& m, std::vector<double>& rhs, double tol) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
        if (std::abs(m[piv][col]) < tol) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t i = col + 1; i < n; ++i) {
            const double f = m[i][col] / m[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    for (std::size_t i = n; i-- > 0;) {
        double s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= m[i][j] * rhs[j];
        rhs[i] = s / m[i][i];
    }
    return true;
}

} // namespace

LpSolution solve(const LinearProgram& lp) {
    const std::size_t nv = lp.num_vars;
    const std::size_t m = lp.eq_coeffs.size();
    if (lp.objective.size() != nv || lp.nonneg.size() != nv || lp.eq_rhs.size() != m)
        throw DimensionMismatch("linear program arrays are inconsistently sized");
    for (const auto& row : lp.eq_coeffs)
        if (row.size() != nv) throw DimensionMismatch("equality row length != num_vars");

    // Split free variables x = x+ - x-.
    std::vector<std::size_t> pos_col(nv), neg_col(nv, Tableau::npos());
    std::size_t n = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        pos_col[j] = n++;
        if (!lp.nonneg[j]) neg_col[j] = n++;
    }

    Tableau t;
    t.m = m;
    t.n = n;
    t.rows.assign(m, std::vector<double>(t.width(), 0.0));
    t.basis.resize(m);
    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = lp.eq_rhs[i] < 0.0 ? -1.0 : 1.0;
        row_sign[i] = lp.eq_rhs[i] < 0.0 ? -1 : 1;
        for (std::size_t j = 0; j < nv; ++j) {
            const double v = sign * lp.eq_coeffs[i][j];
            t.rows[i][pos_col[j]] = v;
            if (neg_col[j] != Tableau::npos()) t.rows[i][neg_col[j]] = -v;
        }
        t.rows[i][n + i] = 1.0;
        t.rows[i].back() = sign * lp.eq_rhs[i];
        t.basis[i] = n + i;
    }
    // Pristine copies for the end-of-solve refactorization.
    std::vector<std::vector<double>> a0(m);
    std::vector<double> b0(m);
    for (std::size_t i = 0; i < m; ++i) {
        a0[i].assign(t.rows[i].begin(), t.rows[i].begin() + static_cast<std::ptrdiff_t>(n));
        b0[i] = t.rows[i].back();
    }

    // Phase 1: minimize the sum of artificials. Reduced costs under the
    // artificial basis are the negated column sums.
    t.cost.assign(t.width(), 0.0);
    for (std::size_t j = 0; j < t.width(); ++j) {
        if (j >= n && j < n + m) continue;
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += t.rows[i][j];
        t.cost[j] = -s;
    }

    int pivots = 0;
    run_simplex(t, n, pivots);  // phase 1 is always bounded below by 0
    const double phase1 = -t.cost.back();
    if (phase1 > kPhaseOneTol) return LpSolution{LpStatus::Infeasible, {}, {}, 0.0};

    // Drive leftover artificials out of the basis where a structural pivot
    // exists; a row with none is redundant and keeps its artificial at zero.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        std::size_t s = Tableau::npos();
        double best = kPivotEps;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(t.rows[i][j]) > best) {
                best = std::abs(t.rows[i][j]);
                s = j;
            }
        }
        if (s != Tableau::npos()) t.pivot(i, s);
    }

    // Phase 2 cost row from the original objective (artificials cost 0).
    std::vector<double> c(t.width(), 0.0);
    for (std::size_t j = 0; j < nv; ++j) {
        c[pos_col[j]] = lp.objective[j];
        if (neg_col[j] != Tableau::npos()) c[neg_col[j]] = -lp.objective[j];
    }
    t.cost = c;
    for (std::size_t i = 0; i < m; ++i) {
        const double cb = c[t.basis[i]];
        if (cb == 0.0) continue;
        for (std::size_t j = 0; j < t.width(); ++j) t.cost[j] -= cb * t.rows[i][j];
    }

    if (!run_simplex(t, n, pivots)) return LpSolution{LpStatus::Unbounded, {}, {}, 0.0};

    // Refactorize against the pristine data to discard pivot drift: solve
    // B x_B = b and B^T y = c_B with the final basis. Artificial basics (only
    // on redundant rows) contribute unit columns.
    std::vector<double> xs(n, 0.0);
    std::vector<double> y(m, 0.0);
    {
        std::vector<std::vector<double>> bmat(m, std::vector<double>(m, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t col = t.basis[i];
            for (std::size_t r = 0; r < m; ++r)
                bmat[r][i] = col < n ? a0[r][col] : (r == col - n ? 1.0 : 0.0);
        }
        std::vector<double> xb = b0;
        auto bt = bmat;
        bool ok = dense_solve(bt, xb, 1e-12);
        std::vector<double> cb(m, 0.0);
        for (std::size_t i = 0; i < m; ++i) cb[i] = c[t.basis[i]];
        std::vector<std::vector<double>> btrans(m, std::vector<double>(m, 0.0));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) btrans[i][j] = bmat[j][i];
        ok = ok && dense_solve(btrans, cb, 1e-12);
        if (ok) {
            for (std::size_t i = 0; i < m; ++i)
                if (t.basis[i] < n) xs[t.basis[i]] = xb[i];
            y = cb;
        } else {
            // Near-singular basis: keep the tableau-derived values.
            for (std::size_t i = 0; i < m; ++i)
                if (t.basis[i] < n) xs[t.basis[i]] = t.rows[i].back();
            for (std::size_t i = 0; i < m; ++i) y[i] = -t.cost[n + i];
        }
    }

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.primal.resize(nv);
    for (std::size_t j = 0; j < nv; ++j) {
        double v = xs[pos_col[j]];
        if (neg_col[j] != Tableau::npos()) v -= xs[neg_col[j]];
        sol.primal[j] = v;
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < nv; ++j) obj += lp.objective[j] * sol.primal[j];
    sol.objective = obj;

    sol.duals.resize(m);
    for (std::size_t i = 0; i < m; ++i) sol.duals[i] = y[i] * row_sign[i];

    // Invariant checks promised to callers.
    double feas = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double r = -lp.eq_rhs[i];
        for (std::size_t j = 0; j < nv; ++j) r += lp.eq_coeffs[i][j] * sol.primal[j];
        feas = std::max(feas, std::abs(r));
    }
    double compl_slack = 0.0;
    for (std::size_t j = 0; j < nv; ++j) {
        double rc = lp.objective[j];
        for (std::size_t i = 0; i < m; ++i) rc -= sol.duals[i] * lp.eq_coeffs[i][j];
        if (lp.nonneg[j]) {
            compl_slack = std::max(compl_slack, std::abs(rc * sol.primal[j]));
            if (sol.primal[j] < -kFeasTol) feas = std::max(feas, -sol.primal[j]);
        } else {
            compl_slack = std::max(compl_slack, std::abs(rc));
        }
    }
    if (feas > kFeasTol || compl_slack > kComplSlackTol) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "simplex result failed verification: feasibility residual %.3e, "
                      "complementary slackness residual %.3e",
                      feas, compl_slack);
        throw NumericalFailure(buf);
    }
    return sol;
}

} // namespace divr
