#include <doctest.h>

#include <cmath>

#include "divr/circum.hpp"
#include "divr/embed3.hpp"
#include "divr/rng.hpp"

using namespace divr;

namespace {

const double kSqrt3 = std::sqrt(3.0);

SymmetricPolytope unit_square() {
    return SymmetricPolytope(2, {Vec{1.0, 1.0}, Vec{1.0, -1.0}});
}

SymmetricPolytope regular_hexagon() {
    return SymmetricPolytope(2, {Vec{kSqrt3 / 2.0, 0.0}, Vec{kSqrt3 / 4.0, 0.75},
                                 Vec{-kSqrt3 / 4.0, 0.75}});
}

SymmetricPolytope regular_ngon(int n) {
    std::vector<Vec> gens;
    for (int k = 0; k < n / 2; ++k) {
        const double th = 2.0 * 3.14159265358979323846 * k / n;
        gens.push_back(Vec{std::cos(th), std::sin(th)});
    }
    return SymmetricPolytope(2, std::move(gens));
}

SymmetricPolytope random_body(Rng& rng, std::size_t dim, int min_gens, int max_gens) {
    std::vector<Vec> gens;
    const int m = rng.uniform_int(min_gens, max_gens);
    for (int k = 0; k < m; ++k) gens.push_back(rng.uniform(0.4, 1.5) * rng.unit_vector(dim));
    return SymmetricPolytope(dim, std::move(gens));
}

std::vector<Vec> random_points(Rng& rng, std::size_t dim, int count) {
    std::vector<Vec> pts;
    for (int i = 0; i < count; ++i) {
        Vec p(dim);
        for (std::size_t d = 0; d < dim; ++d) p[d] = rng.uniform(-1.0, 1.0);
        pts.push_back(p);
    }
    return pts;
}

} // namespace

TEST_CASE("single point has radius zero") {
    const CircumResult r = circumradius({Vec{0.7, -0.3}}, unit_square());
    CHECK(r.radius == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(norm_inf(r.center + Vec{0.7, -0.3}) <= 1e-9);
}

TEST_CASE("horizontal segment in the square slab") {
    const CircumResult r = circumradius({Vec{-1.0, 0.0}, Vec{1.0, 0.0}}, unit_square());
    CHECK(r.radius == doctest::Approx(1.0).epsilon(1e-10));
    REQUIRE(r.contacts.size() == 2);
}

TEST_CASE("reference triangle in the regular hexagon") {
    // Oracle: closed-form attainable value at (1,1,1) is 4/3; cross-checked
    // against the LP here.
    const auto tri = embed3::reference_triangle();
    const CircumResult r = circumradius({tri[0], tri[1], tri[2]}, regular_hexagon());
    CHECK(r.radius == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
    CHECK(r.contacts.size() >= 3);
}

TEST_CASE("reference triangle in a fine polygonal disk approximates radius 1") {
    const auto tri = embed3::reference_triangle();
    const CircumResult r = circumradius({tri[0], tri[1], tri[2]}, regular_ngon(64));
    CHECK(std::abs(r.radius - 1.0) <= 0.01);
}

TEST_CASE("dimension mismatch rejected") {
    CHECK_THROWS_AS(circumradius({Vec{1.0, 0.0, 0.0}}, unit_square()), DimensionMismatch);
}

TEST_CASE("circumradius invariances on random instances") {
    Rng rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = trial % 2 ? 3 : 2;
        const SymmetricPolytope c = random_body(rng, dim, static_cast<int>(dim) + 1, 7);
        const auto pts = random_points(rng, dim, rng.uniform_int(2, 5));
        const double r = circumradius(pts, c).radius;

        // Homogeneity in both entries.
        const double t = rng.uniform(0.3, 2.5);
        std::vector<Vec> scaled;
        for (const Vec& p : pts) scaled.push_back(t * p);
        CHECK(std::abs(circumradius(scaled, c).radius - t * r) <= 1e-9 * (1.0 + t * r));
        std::vector<Vec> gens2;
        for (const Vec& g : c.generators()) gens2.push_back(t * g);
        const SymmetricPolytope ct(dim, gens2);
        CHECK(std::abs(circumradius(pts, ct).radius - r / t) <= 1e-9 * (1.0 + r / t));

        // Symmetry R(-X) = R(X).
        std::vector<Vec> neg;
        for (const Vec& p : pts) neg.push_back(-p);
        CHECK(std::abs(circumradius(neg, c).radius - r) <= 1e-9 * (1.0 + r));

        // Translation invariance.
        Vec shift(dim);
        for (std::size_t d = 0; d < dim; ++d) shift[d] = rng.uniform(-2, 2);
        std::vector<Vec> moved;
        for (const Vec& p : pts) moved.push_back(p + shift);
        CHECK(std::abs(circumradius(moved, c).radius - r) <= 1e-9 * (1.0 + r));

        // Monotonicity in X: dropping a point cannot increase the radius.
        if (pts.size() > 2) {
            std::vector<Vec> sub(pts.begin() + 1, pts.end());
            CHECK(circumradius(sub, c).radius <= r + 1e-9);
        }

        // Antitonicity in C: a dilated body gives a smaller radius.
        std::vector<Vec> gens_big;
        for (const Vec& g : c.generators()) gens_big.push_back(1.3 * g);
        CHECK(circumradius(pts, SymmetricPolytope(dim, gens_big)).radius <= r + 1e-9);
    }
}

TEST_CASE("certificate for the segment in the square") {
    const std::vector<Vec> pts{Vec{-1.0, 0.0}, Vec{1.0, 0.0}};
    const auto sq = unit_square();
    const CircumResult r = circumradius(pts, sq);
    const OptimalityCertificate cert = certificate(pts, sq, r);
    REQUIRE(cert.normals.size() == 2);
    CHECK(verify_certificate(cert, pts, sq, r.radius));
    // Opposite horizontal normals with weights (1/2, 1/2).
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(std::abs(cert.normals[i][1]) <= 1e-7);
        CHECK(cert.weights[i] == doctest::Approx(0.5).epsilon(1e-6));
    }
    CHECK(cert.normals[0][0] * cert.normals[1][0] < 0.0);
}

TEST_CASE("certificate for the triangle in the hexagon has three equal weights") {
    const auto tri = embed3::reference_triangle();
    const std::vector<Vec> pts{tri[0], tri[1], tri[2]};
    const auto hex = regular_hexagon();
    const CircumResult r = circumradius(pts, hex);
    const OptimalityCertificate cert = certificate(pts, hex, r);
    REQUIRE(cert.normals.size() == 3);
    CHECK(verify_certificate(cert, pts, hex, r.radius));
    for (double w : cert.weights) CHECK(w == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("tampered certificates fail verification") {
    const std::vector<Vec> pts{Vec{-1.0, 0.0}, Vec{1.0, 0.0}};
    const auto sq = unit_square();
    const CircumResult r = circumradius(pts, sq);
    const OptimalityCertificate good = certificate(pts, sq, r);
    REQUIRE(verify_certificate(good, pts, sq, r.radius));

    OptimalityCertificate negated = good;
    negated.weights[0] = -negated.weights[0];
    CHECK_FALSE(verify_certificate(negated, pts, sq, r.radius));

    OptimalityCertificate perturbed = good;
    perturbed.normals[0][1] += 1e-3;  // leaves the edge's normal cone
    CHECK_FALSE(verify_certificate(perturbed, pts, sq, r.radius));
}

TEST_CASE("certificate soundness on random optimal pairs") {
    Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = trial % 2 ? 3 : 2;
        const SymmetricPolytope c = random_body(rng, dim, static_cast<int>(dim) + 1, 8);
        const auto pts = random_points(rng, dim, rng.uniform_int(2, 4));
        const CircumResult r = circumradius(pts, c);
        const OptimalityCertificate cert = certificate(pts, c, r);
        CHECK(verify_certificate(cert, pts, c, r.radius));
        CHECK(cert.normals.size() <= dim + 1);
    }
}
