#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "divr/errors.hpp"

namespace divr {

/// Small dense coordinate vector. Dimension is 2 or 3 in every shipped
/// workflow, but nothing here assumes it.
struct Vec {
    std::vector<double> c;

    Vec() = default;
    explicit Vec(std::size_t dim) : c(dim, 0.0) {}
    Vec(std::initializer_list<double> v) : c(v) {}

    std::size_t dim() const { return c.size(); }
    double& operator[](std::size_t i) { return c[i]; }
    double operator[](std::size_t i) const { return c[i]; }

    double x() const { return c[0]; }
    double y() const { return c[1]; }

    bool finite() const {
        for (double v : c)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator-(const Vec& a) {
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
    return r;
}

inline Vec operator*(double s, const Vec& a) {
    Vec r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
}

inline Vec operator*(const Vec& a, double s) { return s * a; }

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm_inf(const Vec& a) {
    double s = 0.0;
    for (double v : a.c) s = std::max(s, std::abs(v));
    return s;
}

/// Signed area of the parallelogram (a-o, b-o); positive when o->a->b turns left.
inline double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline void require_dim(const Vec& v, std::size_t dim, const char* what) {
    if (v.dim() != dim)
        throw DimensionMismatch(std::string(what) + ": expected dimension " +
                                std::to_string(dim) + ", got " + std::to_string(v.dim()));
}

} // namespace divr
