#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "divr/diversity.hpp"
#include "divr/geom.hpp"
#include "divr/vec.hpp"

namespace divr::embed3 {

/// Canonicalized 3-point diversity: relabeled so that d13 <= d12.
/// `permutation[k]` is the original ground index placed at position k.
struct ThreePointDiversity {
    double d12 = 0.0;
    double d13 = 0.0;
    double d23 = 0.0;
    double d123 = 0.0;
    std::array<std::size_t, 3> permutation{0, 1, 2};
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

struct EmbeddingDecision {
    bool minkowski = false;
    bool banach = false;
    bool pairwise_ok = false;
    Interval minkowski_interval;
    Interval banach_interval;  // meaningful only when pairwise_ok
    std::vector<std::string> failed_inequalities;
    ThreePointDiversity canonical;
};

/// The fixed equilateral placement triangle:
/// (-sqrt3/2, -1/2), (sqrt3/2, -1/2), (0, 1).
std::array<Vec, 3> reference_triangle();

/// Canonicalizes raw positive values (d13 <= d12 after relabeling;
/// lexicographically smallest admissible permutation).
ThreePointDiversity canonical_from_values(double d12, double d13, double d23, double d123);

/// Table entry point: requires a 3-label ground passing check_axioms.
ThreePointDiversity canonicalize(const DiversityTable& t);

/// Both inequalities d12 - d13 <= d23 <= d12 + d13 within decision slack.
bool pairwise_feasible(const ThreePointDiversity& r);

/// [max pair value, min over pair sums].
Interval minkowski_range(const ThreePointDiversity& r);

/// Attainable triple-value interval for centrally symmetric bodies:
/// lo = max pair value, hi = 4 d12 d13 d23 / Q with
/// Q = 2 d12 d13 + 2 d12 d23 + 2 d13 d23 - d12^2 - d13^2 - d23^2.
/// hi equals the circumradius of the reference triangle in the hexagon
/// witness (LP-verified identity; this is the tight constant, see README
/// notes on formulas). Throws DegenerateQuadratic when Q <= 0, which cannot
/// occur on the valid domain.
Interval banach_range(const ThreePointDiversity& r);

/// Applies the full inequality system after canonicalization; banach implies
/// minkowski and the decision is invariant under relabeling and scaling.
EmbeddingDecision decide_banach(double d12, double d13, double d23, double d123);
EmbeddingDecision decide_banach(const DiversityTable& t);

/// The six boundary points +-(sqrt3/(2 d12))(1,0), +-(sqrt3/(4 d13))(1,sqrt3),
/// +-(sqrt3/(4 d23))(1,-sqrt3); each has gauge 1 in any witness body.
std::array<Vec, 6> boundary_points(const ThreePointDiversity& r);

struct HexagonWitness {
    SymmetricPolytope body;
    /// Set when d23 sits at an endpoint of the pairwise interval and the
    /// hexagon collapses to a quadrilateral; the body remains valid.
    bool degenerate = false;
};

/// conv of the six boundary points: the minimal witness body. Realizes the
/// pairwise values exactly and the triple value banach_range(r).hi.
HexagonWitness hexagon_witness(const ThreePointDiversity& r);

/// Closed-form solution of the three edge-contact equations in the hexagon.
/// `offset` is the raw displacement coefficient along (+-1, -sqrt3) solved by
/// the linear system; `lambda` = 2*offset/sqrt3 is the scale factor of the
/// placed reference triangle, so 1/lambda equals the achieved triple radius
/// (= banach_range hi).
struct PlacementSolution {
    double lambda = 0.0;
    double offset = 0.0;
    double x0 = 0.0;
    double y0 = 0.0;
    double t1 = 0.0, t2 = 0.0, t3 = 0.0;
    double a = 0.0, b = 0.0, c = 0.0;  // a = sqrt3/(2 d12), b = sqrt3/(2 d13), c = sqrt3/(2 d23)
};

PlacementSolution optimal_placement(const ThreePointDiversity& r);

/// Range checks of the placement quantities: given 0 < a <= b and
/// 1/a - 1/b <= 1/c <= 1/a + 1/b, all of t1, t2, t3 lie in [0,1] and the
/// contact-system offset is nonnegative (1e-12 slack). Throws
/// PreconditionViolated when the hypotheses fail.
bool check_t_lambda(double a, double b, double c);

/// LHS - RHS of the polynomial identity
/// 2xy+2xz+2yz-x^2-y^2-z^2 = (z-x+y)(x+y-z) + 4y(x-y) + 2y(z-x+y);
/// identically zero for all reals.
double psd_identity_residual(double x, double y, double z);

/// Witness body realizing the pairwise values and an arbitrary target triple
/// value inside the attainable interval. Interpolates (1-s) C0 (+) s P
/// between the hexagon C0 and a circumscribed parallelogram P (all six
/// boundary points stay on the boundary; the family is nested in s), then
/// bisects s against the LP-measured triple radius.
SymmetricPolytope witness_for_target(const ThreePointDiversity& r, double target_d123);

struct ProbeViolation {
    int trial = 0;
    std::string detail;
};

struct ProbeReport {
    int trials = 0;
    std::vector<ProbeViolation> violations;
};

/// Randomized check that 3-dimensional bodies obey the 2-dimensional
/// inequalities: samples symmetric polytopes in R^3 (8-16 generators) and
/// nondegenerate triangles, measures all radii by LP, and asserts the
/// pairwise and triple bounds at 1e-7 slack. Any violation reported verbatim
/// would indicate an implementation bug.
ProbeReport higher_dim_probe(int trials, std::uint64_t seed);

} // namespace divr::embed3
