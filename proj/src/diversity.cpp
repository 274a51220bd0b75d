#include "divr/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "divr/rng.hpp"

namespace divr {
namespace {

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

} // namespace

DiversityTable::DiversityTable(std::vector<std::string> ground, std::vector<double> values)
    : ground_(std::move(ground)), values_(std::move(values)) {
    if (ground_.empty()) throw InvalidDiversity("ground set is empty");
    if (ground_.size() > 16) throw InvalidDiversity("ground set larger than 16 labels");
    std::set<std::string> seen;
    for (const std::string& label : ground_) {
        if (label.empty()) throw InvalidDiversity("empty label");
        if (!seen.insert(label).second) throw InvalidDiversity("duplicate label: " + label);
    }
    const std::size_t expected = std::size_t{1} << ground_.size();
    if (values_.size() != expected)
        throw IncompleteTable("expected " + std::to_string(expected - 1) +
                              " subset values, got " + std::to_string(values_.size() - 1));
    for (std::size_t mask = 1; mask < expected; ++mask)
        if (!std::isfinite(values_[mask]))
            throw InvalidDiversity("non-finite value for subset " + key(static_cast<std::uint32_t>(mask)));
}

std::string DiversityTable::key(std::uint32_t mask) const {
    std::string out;
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (mask & (1u << i)) {
            if (!out.empty()) out += ',';
            out += ground_[i];
        }
    }
    return out;
}

std::vector<std::string> DiversityTable::labels_of(std::uint32_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ground_.size(); ++i)
        if (mask & (1u << i)) out.push_back(ground_[i]);
    return out;
}

AxiomReport check_axioms(const DiversityTable& t, int sample_trials, std::uint64_t seed) {
    AxiomReport report;
    const std::size_t n = t.ground_size();
    const std::uint32_t full = t.full_mask();
    double scale = 0.0;
    for (std::uint32_t m = 1; m <= full; ++m) scale = std::max(scale, std::abs(t.value(m)));
    const double tol = 1e-9 * (1.0 + scale);

    auto violate = [&](const char* axiom, std::initializer_list<std::uint32_t> sets, double lhs,
                       double rhs) {
        AxiomViolation v;
        v.axiom = axiom;
        for (std::uint32_t m : sets) v.witness.push_back(t.key(m));
        v.lhs = lhs;
        v.rhs = rhs;
        report.violations.push_back(std::move(v));
    };

    // D1: zero exactly on singletons, strictly positive beyond.
    for (std::uint32_t m = 1; m <= full; ++m) {
        const double v = t.value(m);
        if (v < 0.0 || (popcount(m) == 1 && std::abs(v) > tol)) {
            violate("D1", {m}, v, 0.0);
        } else if (popcount(m) >= 2 && v <= tol) {
            violate("D1", {m}, v, 0.0);
        }
    }

    auto check_d2 = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        const double lhs = t.value(a | c);
        const double rhs = t.value(a | b) + t.value(b | c);
        if (lhs > rhs + tol) violate("D2", {a, b, c}, lhs, rhs);
    };
    auto check_mono = [&](std::uint32_t a, std::uint32_t b) {
        if (t.value(a) > t.value(b) + tol) violate("MONO", {a, b}, t.value(a), t.value(b));
    };

    if (n <= 6) {
        for (std::uint32_t a = 0; a <= full; ++a)
            for (std::uint32_t b = 1; b <= full; ++b)
                for (std::uint32_t c = 0; c <= full; ++c) check_d2(a, b, c);
        for (std::uint32_t a = 1; a <= full; ++a) {
            // supersets of a: b = a | extra over the complement bits
            const std::uint32_t comp = full & ~a;
            for (std::uint32_t extra = comp;; extra = (extra - 1) & comp) {
                if (extra) check_mono(a, a | extra);
                if (extra == 0) break;
            }
        }
    } else {
        Rng rng(seed);
        for (int i = 0; i < sample_trials; ++i) {
            const auto a = static_cast<std::uint32_t>(rng.next_u64()) & full;
            std::uint32_t b = 0;
            while (b == 0) b = static_cast<std::uint32_t>(rng.next_u64()) & full;
            const auto c = static_cast<std::uint32_t>(rng.next_u64()) & full;
            check_d2(a, b, c);
            if (a) check_mono(a, a | c);
        }
    }

    report.ok = report.violations.empty();
    return report;
}

MetricTable::MetricTable(std::vector<std::string> labels, std::vector<std::vector<double>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
    const std::size_t n = labels_.size();
    if (dist_.size() != n) throw NotAMetric("distance matrix size != label count");
    for (const auto& row : dist_)
        if (row.size() != n) throw NotAMetric("distance matrix is not square");
    double scale = 0.0;
    for (const auto& row : dist_)
        for (double v : row) scale = std::max(scale, std::abs(v));
    const double tol = 1e-9 * (1.0 + scale);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(dist_[i][i]) > tol)
            throw NotAMetric("d(" + labels_[i] + "," + labels_[i] + ") != 0");
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(dist_[i][j])) throw NotAMetric("non-finite distance");
            if (std::abs(dist_[i][j] - dist_[j][i]) > tol)
                throw NotAMetric("asymmetric: d(" + labels_[i] + "," + labels_[j] + ")");
            if (i != j && dist_[i][j] <= tol)
                throw NotAMetric("zero distance between distinct points " + labels_[i] + "," +
                                 labels_[j]);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (dist_[i][k] > dist_[i][j] + dist_[j][k] + tol)
                    throw NotAMetric("triangle inequality fails on (" + labels_[i] + "," +
                                     labels_[j] + "," + labels_[k] + ")");
}

namespace {

template <typename F>
DiversityTable table_from(const std::vector<std::string>& labels, std::size_t n, F&& value_of) {
    std::vector<double> values(std::size_t{1} << n, 0.0);
    for (std::uint32_t mask = 1; mask < values.size(); ++mask) values[mask] = value_of(mask);
    return DiversityTable(labels, std::move(values));
}

} // namespace

DiversityTable diameter_diversity(const MetricTable& d) {
    const std::size_t n = d.size();
    return table_from(d.labels(), n, [&](std::uint32_t mask) {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if ((mask & (1u << i)) && (mask & (1u << j))) best = std::max(best, d.d(i, j));
        return best;
    });
}

DiversityTable sum_diversity(const MetricTable& d) {
    const std::size_t n = d.size();
    return table_from(d.labels(), n, [&](std::uint32_t mask) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if ((mask & (1u << i)) && (mask & (1u << j))) s += d.d(i, j);
        return s;
    });
}

DiversityTable induced_diversity(const std::vector<Vec>& points, const SymmetricPolytope& c,
                                 std::vector<std::string> labels) {
    const std::size_t n = points.size();
    if (n == 0) throw PreconditionViolated("induced_diversity: no points");
    if (n > 6) throw PreconditionViolated("induced_diversity: more than 6 points");
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i + 1));
    return table_from(labels, n, [&](std::uint32_t mask) {
        std::vector<Vec> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) subset.push_back(points[i]);
        return circumradius(subset, c).radius;
    });
}

MetricTable induced_metric(const DiversityTable& t) {
    const std::size_t n = t.ground_size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            dist[i][j] = dist[j][i] = t.value((1u << i) | (1u << j));
    return MetricTable(t.ground(), std::move(dist));
}

std::pair<Vec, Vec> mixing_witness(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                   const SymmetricPolytope& c) {
    const CircumResult ra = circumradius(a, c);
    const CircumResult rb = circumradius(b, c);
    // center is the translation t with t + X inside radius*C, so both shifted
    // sets sit concentrically inside max(radius_a, radius_b)*C.
    return {ra.center, rb.center};
}

SublinearReport check_sublinear_samples(const SymmetricPolytope& c, int trials,
                                        std::uint64_t seed) {
    if (trials < 1) throw PreconditionViolated("check_sublinear_samples: trials >= 1 required");
    SublinearReport report;
    report.trials = trials;
    Rng rng(seed);
    const std::size_t dim = c.dim();

    auto random_set = [&](std::size_t count) {
        std::vector<Vec> pts;
        for (std::size_t i = 0; i < count; ++i) {
            Vec p(dim);
            for (std::size_t d = 0; d < dim; ++d) p[d] = rng.uniform(-1.0, 1.0);
            pts.push_back(p);
        }
        return pts;
    };
    auto describe = [&](const std::vector<Vec>& pts) {
        std::string s = "{";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) s += "; ";
            for (std::size_t d = 0; d < dim; ++d) {
                if (d) s += ",";
                s += std::to_string(pts[i][d]);
            }
        }
        return s + "}";
    };

    for (int i = 0; i < trials; ++i) {
        const auto a = random_set(static_cast<std::size_t>(rng.uniform_int(1, 4)));
        const auto b = random_set(static_cast<std::size_t>(rng.uniform_int(1, 4)));
        // L1 on the Minkowski sum of the finite sets.
        std::vector<Vec> sum;
        for (const Vec& pa : a)
            for (const Vec& pb : b) sum.push_back(pa + pb);
        const double r_sum = circumradius(sum, c).radius;
        const double r_a = circumradius(a, c).radius;
        const double r_b = circumradius(b, c).radius;
        if (r_sum > r_a + r_b + 1e-8) {
            report.violations.push_back(
                SublinearViolation{"L1", "A=" + describe(a) + " B=" + describe(b), r_sum, r_a + r_b});
        }
        // L2 including negative scalars (seminorm symmetry) and zero.
        double lambda = rng.uniform(-2.0, 2.0);
        if (i % 7 == 0) lambda = -1.0;
        if (i % 11 == 0) lambda = 0.0;
        std::vector<Vec> scaled;
        for (const Vec& p : a) scaled.push_back(lambda * p);
        const double r_scaled = circumradius(scaled, c).radius;
        if (std::abs(r_scaled - std::abs(lambda) * r_a) > 1e-8) {
            report.violations.push_back(SublinearViolation{
                "L2", "lambda=" + std::to_string(lambda) + " A=" + describe(a), r_scaled,
                std::abs(lambda) * r_a});
        }
    }
    report.ok = report.violations.empty();
    return report;
}

} // namespace divr
