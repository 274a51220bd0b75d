#include "divr/embed3.hpp"

#include <algorithm>
#include <cmath>

#include "divr/circum.hpp"
#include "divr/rng.hpp"

namespace divr::embed3 {
namespace {

const double kSqrt3 = std::sqrt(3.0);

double decision_slack(const ThreePointDiversity& r) {
    const double m = std::max(std::max(r.d12, r.d13), std::max(r.d23, r.d123));
    return 1e-9 * (1.0 + m);
}

// Q = 2 d12 d13 + 2 d12 d23 + 2 d13 d23 - d12^2 - d13^2 - d23^2
double quadratic_form(double x, double y, double z) {
    return 2.0 * x * y + 2.0 * x * z + 2.0 * y * z - x * x - y * y - z * z;
}

} // namespace

std::array<Vec, 3> reference_triangle() {
    return {Vec{-kSqrt3 / 2.0, -0.5}, Vec{kSqrt3 / 2.0, -0.5}, Vec{0.0, 1.0}};
}

ThreePointDiversity canonical_from_values(double d12, double d13, double d23, double d123) {
    const double vals[3] = {d12, d13, d23};
    for (double v : vals)
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidDiversity("pair values must be positive and finite");
    if (!(d123 > 0.0) || !std::isfinite(d123))
        throw InvalidDiversity("triple value must be positive and finite");

    auto pair_value = [&](std::size_t i, std::size_t j) {
        const std::size_t lo = std::min(i, j), hi = std::max(i, j);
        if (lo == 0 && hi == 1) return d12;
        if (lo == 0 && hi == 2) return d13;
        return d23;
    };

    // Lexicographically smallest permutation with new d13 <= new d12.
    std::array<std::size_t, 3> perm{0, 1, 2};
    std::array<std::size_t, 3> best{0, 1, 2};
    bool found = false;
    std::array<std::size_t, 3> p{0, 1, 2};
    std::sort(p.begin(), p.end());
    do {
        if (pair_value(p[0], p[2]) <= pair_value(p[0], p[1])) {
            if (!found) {
                best = p;
                found = true;
            }
        }
    } while (std::next_permutation(p.begin(), p.end()));
    perm = best;

    ThreePointDiversity r;
    r.permutation = perm;
    r.d12 = pair_value(perm[0], perm[1]);
    r.d13 = pair_value(perm[0], perm[2]);
    r.d23 = pair_value(perm[1], perm[2]);
    r.d123 = d123;
    return r;
}

ThreePointDiversity canonicalize(const DiversityTable& t) {
    if (t.ground_size() != 3)
        throw NotThreePoints("ground has " + std::to_string(t.ground_size()) + " labels");
    const AxiomReport axioms = check_axioms(t);
    if (!axioms.ok)
        throw InvalidDiversity("table violates the diversity axioms (" +
                               axioms.violations.front().axiom + " on " +
                               axioms.violations.front().witness.front() + ")");
    return canonical_from_values(t.value(0b011), t.value(0b101), t.value(0b110),
                                 t.value(0b111));
}

bool pairwise_feasible(const ThreePointDiversity& r) {
    const double eps = decision_slack(r);
    return r.d12 - r.d13 <= r.d23 + eps && r.d23 <= r.d12 + r.d13 + eps;
}

Interval minkowski_range(const ThreePointDiversity& r) {
    const double lo = std::max(r.d12, std::max(r.d13, r.d23));
    const double hi =
        std::min(r.d12 + r.d13, std::min(r.d12 + r.d23, r.d13 + r.d23));
    return Interval{lo, hi};
}

Interval banach_range(const ThreePointDiversity& r) {
    const double q = quadratic_form(r.d12, r.d13, r.d23);
    if (q <= 0.0)
        throw DegenerateQuadratic("quadratic form nonpositive (q = " + std::to_string(q) +
                                  "); input is outside the valid domain");
    const double lo = std::max(r.d12, std::max(r.d13, r.d23));
    const double hi = 4.0 * r.d12 * r.d13 * r.d23 / q;
    return Interval{lo, hi};
}

namespace {

EmbeddingDecision decide_canonical(const ThreePointDiversity& r) {
    EmbeddingDecision dec;
    dec.canonical = r;
    const double eps = decision_slack(r);

    dec.pairwise_ok = true;
    if (r.d12 - r.d13 > r.d23 + eps) {
        dec.pairwise_ok = false;
        dec.failed_inequalities.push_back("pair_lower");
    }
    if (r.d23 > r.d12 + r.d13 + eps) {
        dec.pairwise_ok = false;
        dec.failed_inequalities.push_back("pair_upper");
    }

    dec.minkowski_interval = minkowski_range(r);
    bool mink = dec.pairwise_ok;
    if (r.d123 + eps < dec.minkowski_interval.lo) {
        mink = false;
        dec.failed_inequalities.push_back("triple_lower");
    }
    if (r.d123 > dec.minkowski_interval.hi + eps) {
        mink = false;
        dec.failed_inequalities.push_back("triple_upper_minkowski");
    }
    dec.minkowski = mink;

    bool banach = mink;
    if (dec.pairwise_ok) {
        const double q = quadratic_form(r.d12, r.d13, r.d23);
        if (q > 0.0) {
            dec.banach_interval = banach_range(r);
            if (r.d123 > dec.banach_interval.hi + eps) {
                banach = false;
                dec.failed_inequalities.push_back("triple_upper_banach");
            }
        } else {
            // Unreachable for positive values inside the pairwise interval
            // (the quadratic form is strictly positive there); in the
            // multiplied form q * d123 <= 4 d12 d13 d23 the inequality holds
            // trivially when q <= 0.
            dec.banach_interval = Interval{dec.minkowski_interval.lo, dec.minkowski_interval.lo};
        }
    } else {
        banach = false;
    }
    dec.banach = banach;
    return dec;
}

} // namespace

EmbeddingDecision decide_banach(double d12, double d13, double d23, double d123) {
    return decide_canonical(canonical_from_values(d12, d13, d23, d123));
}

EmbeddingDecision decide_banach(const DiversityTable& t) {
    return decide_canonical(canonicalize(t));
}

std::array<Vec, 6> boundary_points(const ThreePointDiversity& r) {
    const Vec q1{kSqrt3 / (2.0 * r.d12), 0.0};
    const Vec q2{kSqrt3 / (4.0 * r.d13), kSqrt3 * kSqrt3 / (4.0 * r.d13)};
    const Vec q3{kSqrt3 / (4.0 * r.d23), -kSqrt3 * kSqrt3 / (4.0 * r.d23)};
    return {q1, q2, q3, -q1, -q2, -q3};
}

HexagonWitness hexagon_witness(const ThreePointDiversity& r) {
    if (!pairwise_feasible(r))
        throw InvalidDiversity("pair values violate the admissible interval");
    const std::array<Vec, 6> pts = boundary_points(r);
    // Vertex cycle at angles 0, 60, 120, 180, 240, 300 degrees.
    const Vec v0 = pts[0];   // q1
    const Vec v1 = pts[1];   // q2
    const Vec v2 = -pts[2];  // -q3
    const double scale = std::max(norm_inf(v0), std::max(norm_inf(v1), norm_inf(v2)));
    const double tol = 1e-9 * (1.0 + scale) * (1.0 + scale);
    const bool degenerate = std::abs(cross2(v0, v1, v2)) <= tol ||
                            std::abs(cross2(-v2, v0, v1)) <= tol ||
                            std::abs(cross2(v1, v2, -v0)) <= tol;
    return HexagonWitness{SymmetricPolytope(2, {pts[0], pts[1], pts[2]}), degenerate};
}

PlacementSolution optimal_placement(const ThreePointDiversity& r) {
    if (!pairwise_feasible(r))
        throw InvalidDiversity("pair values violate the admissible interval");
    PlacementSolution s;
    const double a = s.a = kSqrt3 / (2.0 * r.d12);
    const double b = s.b = kSqrt3 / (2.0 * r.d13);
    const double c = s.c = kSqrt3 / (2.0 * r.d23);
    s.offset = (2.0 * a * b * c * (a + b) - a * a * b * b - c * c * (a - b) * (a - b)) /
               (4.0 * a * b * c);
    // The contact system is written along directions (+-1, -sqrt3); the
    // reference triangle's vertex offsets are (sqrt3/2)(+-1, -sqrt3), so the
    // placed copy of the triangle is scaled by 2*offset/sqrt3.
    s.lambda = 2.0 * s.offset / kSqrt3;
    s.x0 = ((a - b) * c * c + b * b * (c - a)) / (4.0 * b * c);
    s.y0 = ((2.0 * kSqrt3 * a * b + kSqrt3 * b * b) * c - kSqrt3 * a * b * b -
            (kSqrt3 * a - kSqrt3 * b) * c * c) /
           (4.0 * b * c);
    s.t1 = (a * b - (a - b) * c) / (2.0 * b * c);
    s.t2 = (a * b + (a - b) * c) / (2.0 * a * c);
    s.t3 = (a * b + (a - b) * c) / (2.0 * a * b);
    return s;
}

bool check_t_lambda(double a, double b, double c) {
    if (!(a > 0.0) || !(a <= b) || !(c > 0.0))
        throw PreconditionViolated("need 0 < a <= b and c > 0");
    const double inv_lo = 1.0 / a - 1.0 / b;
    const double inv_hi = 1.0 / a + 1.0 / b;
    const double guard = 1e-12 * (1.0 + inv_hi);
    if (1.0 / c < inv_lo - guard || 1.0 / c > inv_hi + guard)
        throw PreconditionViolated("1/c outside [1/a - 1/b, 1/a + 1/b]");

    const double t1 = (a * b - (a - b) * c) / (2.0 * b * c);
    const double t2 = (a * b + (a - b) * c) / (2.0 * a * c);
    const double t3 = (a * b + (a - b) * c) / (2.0 * a * b);
    const double lam = (2.0 * a * b * c * (a + b) - a * a * b * b - c * c * (a - b) * (a - b)) /
                       (4.0 * a * b * c);
    const double slack = 1e-12;
    const double lam_slack = 1e-12 * (1.0 + a + b + c);
    for (double t : {t1, t2, t3})
        if (t < -slack || t > 1.0 + slack) return false;
    return lam >= -lam_slack;
}

double psd_identity_residual(double x, double y, double z) {
    const double lhs = 2.0 * x * y + 2.0 * x * z + 2.0 * y * z - x * x - y * y - z * z;
    const double rhs = (z - x + y) * (x + y - z) + 4.0 * y * (x - y) + 2.0 * y * (z - x + y);
    return lhs - rhs;
}

namespace {

struct Slab {
    Vec normal;  // lines <normal, x> = +-level, level > 0
    double level = 0.0;
};

Slab slab_through_edge(const Vec& u, const Vec& v) {
    const Vec d = v - u;
    Vec n{-d[1], d[0]};
    double h = dot(n, u);
    if (h < 0.0) {
        n = -n;
        h = -h;
    }
    return Slab{n, h};
}

Polygon2 parallelogram(const Slab& s1, const Slab& s2) {
    std::vector<Vec> corners;
    const double det = s1.normal[0] * s2.normal[1] - s1.normal[1] * s2.normal[0];
    if (std::abs(det) < 1e-14)
        throw DegenerateBody("parallel slab normals");
    for (double sign1 : {1.0, -1.0}) {
        for (double sign2 : {1.0, -1.0}) {
            const double b1 = sign1 * s1.level, b2 = sign2 * s2.level;
            corners.push_back(Vec{(b1 * s2.normal[1] - s1.normal[1] * b2) / det,
                                  (s1.normal[0] * b2 - b1 * s2.normal[0]) / det});
        }
    }
    return hull2d(corners);
}

SymmetricPolytope polytope_from_symmetric_polygon(const Polygon2& poly) {
    double scale = 0.0;
    for (const Vec& v : poly.vertices) scale = std::max(scale, norm_inf(v));
    const double tol = 1e-12 * (1.0 + scale);
    std::vector<Vec> gens;
    for (const Vec& v : poly.vertices)
        if (v[1] > tol || (std::abs(v[1]) <= tol && v[0] > 0.0)) gens.push_back(v);
    return SymmetricPolytope(2, std::move(gens));
}

double triple_radius(const SymmetricPolytope& body) {
    const std::array<Vec, 3> tri = reference_triangle();
    return circumradius({tri[0], tri[1], tri[2]}, body).radius;
}

} // namespace

SymmetricPolytope witness_for_target(const ThreePointDiversity& r, double target_d123) {
    ThreePointDiversity probe = r;
    probe.d123 = target_d123;
    const EmbeddingDecision dec = decide_canonical(probe);
    if (!dec.banach)
        throw TargetOutOfRange("target " + std::to_string(target_d123) +
                               " is outside the attainable interval");

    const HexagonWitness hexagon = hexagon_witness(r);
    const Interval range = banach_range(r);
    const double eps = decision_slack(probe);
    if (std::abs(target_d123 - range.hi) <= eps) return hexagon.body;

    const std::array<Vec, 6> q = boundary_points(r);
    const Vec v0 = q[0], v1 = q[1], v2 = -q[2], v5 = q[2];
    const Slab slabs[3] = {slab_through_edge(v0, v1), slab_through_edge(v1, v2),
                           slab_through_edge(v5, v0)};

    // All three slab pairs circumscribe the hexagon with every boundary point
    // on some slab line; pick the parallelogram with the smallest measured
    // triple radius (it equals max d_ij for each of them, up to LP accuracy).
    const Polygon2 hex_poly = hull2d(hexagon.body.vertices());
    Polygon2 best_pgram;
    double best_val = 0.0;
    bool have = false;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            const Polygon2 p = parallelogram(slabs[i], slabs[j]);
            const double val = triple_radius(polytope_from_symmetric_polygon(p));
            if (!have || val < best_val) {
                best_pgram = p;
                best_val = val;
                have = true;
            }
        }
    }

    if (target_d123 < best_val - 1e-7)
        throw TargetOutOfRange("target below the parallelogram endpoint value " +
                               std::to_string(best_val));

    // R(S, C(s)) decreases continuously from range.hi at s=0 to best_val at
    // s=1; bisect on s.
    double s_lo = 0.0, s_hi = 1.0;  // invariant: value(s_lo) >= target >= value(s_hi) - tol
    SymmetricPolytope best_body = hexagon.body;
    double best_gap = std::abs(range.hi - target_d123);
    for (int iter = 0; iter < 200; ++iter) {
        const double s = 0.5 * (s_lo + s_hi);
        const SymmetricPolytope body =
            polytope_from_symmetric_polygon(minkowski_interpolate(hex_poly, best_pgram, s));
        const double val = triple_radius(body);
        if (std::abs(val - target_d123) < best_gap) {
            best_gap = std::abs(val - target_d123);
            best_body = body;
        }
        if (best_gap <= 1e-8) return best_body;
        if (val >= target_d123)
            s_lo = s;
        else
            s_hi = s;
    }
    if (best_gap > 1e-6)
        throw BisectionStalled("gap " + std::to_string(best_gap) + " after 200 iterations");
    return best_body;
}

ProbeReport higher_dim_probe(int trials, std::uint64_t seed) {
    if (trials < 1) throw PreconditionViolated("higher_dim_probe: trials >= 1 required");
    ProbeReport report;
    report.trials = trials;
    constexpr double kSlack = 1e-7;

    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(Rng::derive_seed(seed, static_cast<std::uint64_t>(trial)));

        // Random symmetric polytope in R^3 with 8..16 generators.
        const int m = rng.uniform_int(8, 16);
        std::vector<Vec> gens;
        for (int k = 0; k < m; ++k) gens.push_back(rng.uniform(0.5, 1.5) * rng.unit_vector(3));
        SymmetricPolytope body(3, std::move(gens));

        // Nondegenerate triangle in the unit cube.
        std::vector<Vec> tri;
        for (;;) {
            tri.clear();
            for (int i = 0; i < 3; ++i) {
                Vec p(3);
                for (int d = 0; d < 3; ++d) p[d] = rng.uniform(-1.0, 1.0);
                tri.push_back(p);
            }
            const Vec e1 = tri[1] - tri[0], e2 = tri[2] - tri[0];
            const Vec cr{e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                         e1[0] * e2[1] - e1[1] * e2[0]};
            if (norm(cr) > 0.1) break;
        }

        const double r01 = circumradius({tri[0], tri[1]}, body).radius;
        const double r02 = circumradius({tri[0], tri[2]}, body).radius;
        const double r12 = circumradius({tri[1], tri[2]}, body).radius;
        const double r123 = circumradius(tri, body).radius;

        ThreePointDiversity canon = canonical_from_values(r01, r02, r12, r123);
        auto flag = [&](const std::string& what) {
            report.violations.push_back(ProbeViolation{
                trial, what + " at pair radii (" + std::to_string(r01) + ", " +
                           std::to_string(r02) + ", " + std::to_string(r12) +
                           "), triple radius " + std::to_string(r123)});
        };
        if (canon.d12 - canon.d13 > canon.d23 + kSlack) flag("pair lower bound violated");
        if (canon.d23 > canon.d12 + canon.d13 + kSlack) flag("pair upper bound violated");
        const double lo = std::max(canon.d12, std::max(canon.d13, canon.d23));
        if (lo > r123 + kSlack) flag("triple lower bound violated");
        const double q = quadratic_form(canon.d12, canon.d13, canon.d23);
        if (q * r123 > 4.0 * canon.d12 * canon.d13 * canon.d23 + kSlack * std::max(1.0, q))
            flag("triple upper bound violated");
    }
    return report;
}

} // namespace divr::embed3
