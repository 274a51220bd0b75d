#pragma once

#include <cstddef>
#include <vector>

#include "divr/geom.hpp"
#include "divr/vec.hpp"

namespace divr {

struct Contact {
    std::size_t index;  // into the input point list
    double gauge;       // = radius within the contact tolerance
};

/// Result of an optimal-containment solve: the smallest radius and a
/// translation t with t + X inside radius * C.
struct CircumResult {
    double radius = 0.0;
    Vec center;
    std::vector<Contact> contacts;
};

/// Circumradius R(X, C): minimizes lambda such that every t + p_j is a convex
/// combination of the signed generators with total weight lambda
/// (V-representation containment; linear in (t, lambda, weights)).
CircumResult circumradius(const std::vector<Vec>& points, const SymmetricPolytope& body);

/// Contact points on the boundary of radius*C together with outer normals
/// whose convex hull contains the origin; at most dim+1 support points.
struct OptimalityCertificate {
    std::vector<Vec> touching_points;
    std::vector<Vec> normals;
    std::vector<double> weights;
};

/// Extracts an optimality certificate from a circumradius result. Outer
/// normals come from a joint normal-cone feasibility LP over the contacts,
/// followed by a Caratheodory reduction to at most dim+1 points. Throws
/// CertificateNotFound when residuals exceed tolerance (a solver accuracy
/// problem, not a math failure).
OptimalityCertificate certificate(const std::vector<Vec>& points, const SymmetricPolytope& body,
                                  const CircumResult& result);

/// True iff the certificate invariants hold: weights form a convex
/// combination, sum_i w_i u_i = 0 within 1e-7, each u_i is an outer normal at
/// its touching point against every vertex of radius*C, each touching point
/// lies on the boundary of radius*C, and there are at most dim+1 points.
bool verify_certificate(const OptimalityCertificate& cert, const std::vector<Vec>& points,
                        const SymmetricPolytope& body, double radius);

} // namespace divr
