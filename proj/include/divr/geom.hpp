#pragma once

#include <cstddef>
#include <vector>

#include "divr/vec.hpp"

namespace divr {

/// Convex polygon, vertices in counterclockwise order, strictly convex
/// position (no repeated first vertex, no collinear triples).
struct Polygon2 {
    std::vector<Vec> vertices;
};

/// Monotone-chain convex hull. Collinear points on hull edges are dropped.
/// Throws DegenerateInput for fewer than 3 distinct points or an all-collinear
/// input.
Polygon2 hull2d(const std::vector<Vec>& points);

/// Cross-product membership test against a ccw convex polygon.
bool polygon_contains(const Polygon2& poly, const Vec& p, double tol);

/// Minkowski combination (1-s)A (+) sB as the hull of pairwise combinations;
/// equals A at s=0 and B at s=1.
Polygon2 minkowski_interpolate(const Polygon2& a, const Polygon2& b, double s);

/// Centrally symmetric convex polytope conv(+-g_1, ..., +-g_m), stored as one
/// representative per +- pair so that central symmetry is structural.
/// Construction deduplicates generators up to sign and rejects bodies whose
/// generators do not span the ambient dimension.
class SymmetricPolytope {
public:
    SymmetricPolytope(std::size_t dim, std::vector<Vec> generators);

    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& generators() const { return generators_; }

    /// All vertices, signs expanded: g_1, ..., g_m, -g_1, ..., -g_m.
    std::vector<Vec> vertices() const;

private:
    std::size_t dim_;
    std::vector<Vec> generators_;
};

/// Minkowski functional of x with respect to C: the smallest lambda >= 0 with
/// x in lambda*C, computed as an LP over convex-combination weights of the
/// signed generators. gauge(0) = 0, gauge(-x) = gauge(x), gauge(t x) = |t| gauge(x).
double gauge(const SymmetricPolytope& c, const Vec& x);

} // namespace divr
