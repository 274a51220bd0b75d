#include "divr/geom.hpp"

#include <algorithm>
#include <cmath>

#include "divr/linprog.hpp"

namespace divr {
namespace {

// Base geometric comparison tolerance: 1e-9 absolute on unit-scale data,
// scaled by input magnitude.
double scale_of(const std::vector<Vec>& points) {
    double s = 0.0;
    for (const Vec& p : points) s = std::max(s, norm_inf(p));
    return s;
}

bool lex_less(const Vec& a, const Vec& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
}

} // namespace

Polygon2 hull2d(const std::vector<Vec>& points) {
    if (points.size() < 3) throw DegenerateInput("hull2d needs at least 3 points");
    for (const Vec& p : points) {
        require_dim(p, 2, "hull2d");
        if (!p.finite()) throw DegenerateInput("hull2d: non-finite coordinate");
    }

    const double scale = scale_of(points);
    const double tol = 1e-9 * (1.0 + scale);
    const double cross_tol = 1e-9 * (1.0 + scale) * (1.0 + scale);

    std::vector<Vec> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [&](const Vec& a, const Vec& b) {
                              return std::abs(a[0] - b[0]) <= tol && std::abs(a[1] - b[1]) <= tol;
                          }),
              pts.end());
    if (pts.size() < 3) throw DegenerateInput("hull2d: fewer than 3 distinct points");

    std::vector<Vec> hull;
    hull.reserve(2 * pts.size());
    for (const Vec& p : pts) {
        while (hull.size() >= 2 &&
               cross2(hull[hull.size() - 2], hull[hull.size() - 1], p) <= cross_tol)
            hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (hull.size() >= lower &&
               cross2(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= cross_tol)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    if (hull.size() < 3) throw DegenerateInput("hull2d: all points collinear");
    return Polygon2{std::move(hull)};
}

bool polygon_contains(const Polygon2& poly, const Vec& p, double tol) {
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cross2(poly.vertices[i], poly.vertices[(i + 1) % n], p) < -tol) return false;
    }
    return true;
}

Polygon2 minkowski_interpolate(const Polygon2& a, const Polygon2& b, double s) {
    if (s < 0.0 || s > 1.0)
        throw PreconditionViolated("minkowski_interpolate: s must lie in [0,1]");
    std::vector<Vec> sums;
    sums.reserve(a.vertices.size() * b.vertices.size());
    for (const Vec& va : a.vertices)
        for (const Vec& vb : b.vertices) sums.push_back((1.0 - s) * va + s * vb);
    return hull2d(sums);
}

SymmetricPolytope::SymmetricPolytope(std::size_t dim, std::vector<Vec> generators)
    : dim_(dim) {
    if (dim == 0) throw DegenerateBody("polytope dimension must be positive");
    if (generators.empty()) throw DegenerateBody("polytope needs at least one generator");
    double scale = 0.0;
    for (const Vec& g : generators) {
        require_dim(g, dim, "SymmetricPolytope generator");
        if (!g.finite()) throw DegenerateBody("generator has non-finite coordinate");
        scale = std::max(scale, norm_inf(g));
    }
    const double tol = 1e-9 * (1.0 + scale);

    for (const Vec& g : generators) {
        if (norm_inf(g) <= tol) throw DegenerateBody("zero generator");
        bool duplicate = false;
        for (const Vec& kept : generators_) {
            if (norm_inf(g - kept) <= tol || norm_inf(g + kept) <= tol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) generators_.push_back(g);
    }

    // Rank check: generators must span R^dim.
    std::vector<std::vector<double>> m;
    for (const Vec& g : generators_) m.push_back(g.c);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < m.size(); ++col) {
        std::size_t piv = rank;
        for (std::size_t i = rank + 1; i < m.size(); ++i)
            if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
        if (std::abs(m[piv][col]) <= tol) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank) continue;
            const double f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < dim; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    if (rank < dim)
        throw DegenerateBody("generators span only dimension " + std::to_string(rank) +
                             " of " + std::to_string(dim));
}

std::vector<Vec> SymmetricPolytope::vertices() const {
    std::vector<Vec> v = generators_;
    for (const Vec& g : generators_) v.push_back(-g);
    return v;
}

double gauge(const SymmetricPolytope& c, const Vec& x) {
    require_dim(x, c.dim(), "gauge");
    if (norm_inf(x) == 0.0) return 0.0;

    // min sum(u_k + v_k)  s.t.  sum (u_k - v_k) g_k = x,  u, v >= 0.
    // x in lambda*conv(+-g) iff x = sum s_k g_k with sum |s_k| <= lambda.
    const std::size_t m = c.generators().size();
    LinearProgram lp;
    for (std::size_t k = 0; k < 2 * m; ++k) lp.add_variable(1.0, true);
    for (std::size_t d = 0; d < c.dim(); ++d) {
        std::vector<std::pair<std::size_t, double>> terms;
        for (std::size_t k = 0; k < m; ++k) {
            terms.emplace_back(k, c.generators()[k][d]);
            terms.emplace_back(m + k, -c.generators()[k][d]);
        }
        lp.add_eq(terms, x[d]);
    }
    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw NumericalFailure("gauge LP did not reach optimality");
    return sol.objective;
}

} // namespace divr
