#include "divr/circum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "divr/linprog.hpp"

namespace divr {
namespace {

constexpr double kContactTol = 1e-7;      // contact when gauge >= radius*(1 - kContactTol)
constexpr double kCertResidualTol = 1e-7; // certificate acceptance residuals

// Gaussian elimination kernel vector of an r x k matrix (r < k), i.e. some
// nonzero mu with M mu = 0. Used by the Caratheodory reduction.
std::vector<double> kernel_vector(std::vector<std::vector<double>> m, std::size_t cols) {
    const std::size_t rows = m.size();
    std::vector<std::size_t> pivot_col(rows, static_cast<std::size_t>(-1));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        for (std::size_t i = rank + 1; i < rows; ++i)
            if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
        if (std::abs(m[piv][col]) <= 1e-12) continue;
        std::swap(m[piv], m[rank]);
        const double inv = 1.0 / m[rank][col];
        for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const double f = m[i][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    // Pick the first non-pivot column as the free variable.
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
    std::vector<double> mu(cols, 0.0);
    for (std::size_t col = 0; col < cols; ++col) {
        if (is_pivot[col]) continue;
        mu[col] = 1.0;
        for (std::size_t i = 0; i < rank; ++i) mu[pivot_col[i]] = -m[i][col];
        return mu;
    }
    return mu;  // all-zero: no kernel found (caller treats as irreducible)
}

} // namespace

CircumResult circumradius(const std::vector<Vec>& points, const SymmetricPolytope& body) {
    if (points.empty()) throw PreconditionViolated("circumradius: empty point set");
    for (const Vec& p : points) {
        require_dim(p, body.dim(), "circumradius point");
        if (!p.finite()) throw PreconditionViolated("circumradius: non-finite point");
    }

    const std::size_t dim = body.dim();
    const std::size_t m = body.generators().size();
    const std::size_t npts = points.size();

    // Variables: t (free, dim), lambda (>= 0), then per point j weights
    // u_jk, v_jk >= 0 and a slack >= 0 tying sum(u+v) + slack = lambda.
    LinearProgram lp;
    std::vector<std::size_t> t_var(dim);
    for (std::size_t d = 0; d < dim; ++d) t_var[d] = lp.add_variable(0.0, false);
    const std::size_t lambda_var = lp.add_variable(1.0, true);
    std::vector<std::size_t> u0(npts);
    for (std::size_t j = 0; j < npts; ++j) {
        u0[j] = lp.num_vars;
        for (std::size_t k = 0; k < 2 * m + 1; ++k) lp.add_variable(0.0, true);
    }
    for (std::size_t j = 0; j < npts; ++j) {
        // sum_k (u_jk - v_jk) g_k - t = p_j
        for (std::size_t d = 0; d < dim; ++d) {
            std::vector<std::pair<std::size_t, double>> terms;
            terms.emplace_back(t_var[d], -1.0);
            for (std::size_t k = 0; k < m; ++k) {
                terms.emplace_back(u0[j] + k, body.generators()[k][d]);
                terms.emplace_back(u0[j] + m + k, -body.generators()[k][d]);
            }
            lp.add_eq(terms, points[j][d]);
        }
        // sum_k (u_jk + v_jk) + slack_j - lambda = 0
        std::vector<std::pair<std::size_t, double>> terms;
        for (std::size_t k = 0; k < 2 * m + 1; ++k) terms.emplace_back(u0[j] + k, 1.0);
        terms.emplace_back(lambda_var, -1.0);
        lp.add_eq(terms, 0.0);
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw NumericalFailure("circumradius LP did not reach optimality");

    CircumResult result;
    result.radius = std::max(0.0, sol.primal[lambda_var]);
    result.center = Vec(dim);
    for (std::size_t d = 0; d < dim; ++d) result.center[d] = sol.primal[t_var[d]];
    for (std::size_t j = 0; j < npts; ++j) {
        const double g = gauge(body, result.center + points[j]);
        if (g >= result.radius * (1.0 - kContactTol))
            result.contacts.push_back(Contact{j, g});
    }
    return result;
}

OptimalityCertificate certificate(const std::vector<Vec>& points, const SymmetricPolytope& body,
                                  const CircumResult& result) {
    const std::size_t dim = body.dim();
    if (result.radius <= 1e-12)
        throw CertificateNotFound("radius is zero; no boundary contacts exist");
    if (result.contacts.empty())
        throw CertificateNotFound("result carries no contacts");

    // Contacts are detected with a relative slack, so they may sit slightly
    // inside the body where exact normal cones would be trivial; project each
    // radially onto the boundary of radius*C first.
    std::vector<Vec> touch;
    for (const Contact& ct : result.contacts) {
        Vec q = result.center + points[ct.index];
        const double g = gauge(body, q);
        if (g <= 1e-12) throw CertificateNotFound("contact point at the origin");
        touch.push_back((result.radius / g) * q);
    }
    const std::size_t nc = touch.size();
    const std::vector<Vec> verts = body.vertices();

    // Joint feasibility LP in z_i (one unnormalized normal per contact):
    //   <z_i, y - q_i> <= 0 for every vertex y of radius*C,
    //   sum_i z_i = 0,  sum_i <z_i, q_i> = 1.
    // Normal cones are invariant under nonnegative scaling, so the weights of
    // the convex certificate can be folded into the z_i themselves.
    LinearProgram lp;
    std::vector<std::size_t> z0(nc);
    for (std::size_t i = 0; i < nc; ++i) {
        z0[i] = lp.num_vars;
        for (std::size_t d = 0; d < dim; ++d) lp.add_variable(0.0, false);
    }
    for (std::size_t i = 0; i < nc; ++i) {
        for (const Vec& v : verts) {
            const Vec edge = result.radius * v - touch[i];
            std::vector<std::pair<std::size_t, double>> terms;
            for (std::size_t d = 0; d < dim; ++d) terms.emplace_back(z0[i] + d, edge[d]);
            terms.emplace_back(lp.add_variable(0.0, true), 1.0);  // slack
            lp.add_eq(terms, 0.0);
        }
    }
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<std::pair<std::size_t, double>> terms;
        for (std::size_t i = 0; i < nc; ++i) terms.emplace_back(z0[i] + d, 1.0);
        lp.add_eq(terms, 0.0);
    }
    {
        std::vector<std::pair<std::size_t, double>> terms;
        for (std::size_t i = 0; i < nc; ++i)
            for (std::size_t d = 0; d < dim; ++d) terms.emplace_back(z0[i] + d, touch[i][d]);
        lp.add_eq(terms, 1.0);
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw CertificateNotFound("normal-cone feasibility LP is infeasible at solver tolerance");

    // Split each z_i into weight w_i = <z_i, q_i> and normal u_i = z_i / w_i.
    std::vector<Vec> normals;
    std::vector<double> weights;
    std::vector<Vec> support;
    double wsum = 0.0;
    for (std::size_t i = 0; i < nc; ++i) {
        Vec z(dim);
        for (std::size_t d = 0; d < dim; ++d) z[d] = sol.primal[z0[i] + d];
        const double w = dot(z, touch[i]);
        if (w <= 1e-10) continue;  // inactive contact
        support.push_back(touch[i]);
        normals.push_back((1.0 / w) * z);
        weights.push_back(w);
        wsum += w;
    }
    if (weights.empty()) throw CertificateNotFound("all certificate weights vanished");
    for (double& w : weights) w /= wsum;

    // Caratheodory: reduce to at most dim+1 support points while preserving
    // sum w_i u_i = 0 and sum w_i = 1.
    while (weights.size() > dim + 1) {
        const std::size_t k = weights.size();
        std::vector<std::vector<double>> m(dim + 1, std::vector<double>(k, 0.0));
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t d = 0; d < dim; ++d) m[d][i] = normals[i][d];
            m[dim][i] = 1.0;
        }
        const std::vector<double> mu = kernel_vector(std::move(m), k);
        double theta = -1.0;
        std::size_t drop = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (mu[i] > 1e-12) {
                const double t = weights[i] / mu[i];
                if (drop == k || t < theta) {
                    theta = t;
                    drop = i;
                }
            }
        }
        if (drop == k) break;  // kernel had no positive direction; keep as is
        for (std::size_t i = 0; i < k; ++i) weights[i] -= theta * mu[i];
        weights.erase(weights.begin() + static_cast<std::ptrdiff_t>(drop));
        normals.erase(normals.begin() + static_cast<std::ptrdiff_t>(drop));
        support.erase(support.begin() + static_cast<std::ptrdiff_t>(drop));
        double s = 0.0;
        for (double w : weights) s += std::max(0.0, w);
        for (double& w : weights) w = std::max(0.0, w) / s;
    }

    OptimalityCertificate cert{std::move(support), std::move(normals), std::move(weights)};
    if (!verify_certificate(cert, points, body, result.radius))
        throw CertificateNotFound("extracted certificate failed verification");
    return cert;
}

bool verify_certificate(const OptimalityCertificate& cert, const std::vector<Vec>& points,
                        const SymmetricPolytope& body, double radius) {
    (void)points;  // the certificate is self-contained relative to (body, radius)
    const std::size_t n = cert.touching_points.size();
    if (n == 0 || cert.normals.size() != n || cert.weights.size() != n) return false;
    if (n > body.dim() + 1) return false;

    double wsum = 0.0;
    for (double w : cert.weights) {
        if (w < -1e-12) return false;
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > kCertResidualTol) return false;

    Vec combo(body.dim());
    for (std::size_t i = 0; i < n; ++i) combo = combo + cert.weights[i] * cert.normals[i];
    if (norm_inf(combo) > kCertResidualTol) return false;

    const std::vector<Vec> verts = body.vertices();
    for (std::size_t i = 0; i < n; ++i) {
        for (const Vec& v : verts) {
            if (dot(cert.normals[i], radius * v - cert.touching_points[i]) > kCertResidualTol)
                return false;
        }
        if (std::abs(gauge(body, cert.touching_points[i]) - radius) >
            kCertResidualTol * std::max(1.0, radius))
            return false;
    }
    return true;
}

} // namespace divr
