#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "divr/circum.hpp"
#include "divr/geom.hpp"
#include "divr/vec.hpp"

namespace divr {

/// Diversity over a finite labeled ground set: a nonnegative value for every
/// nonempty subset. Subsets are addressed by bitmask over the ground order;
/// the empty set is not stored (value 0 by convention).
class DiversityTable {
public:
    /// `values` indexed by mask, size 1 << n; values[0] is ignored.
    DiversityTable(std::vector<std::string> ground, std::vector<double> values);

    std::size_t ground_size() const { return ground_.size(); }
    const std::vector<std::string>& ground() const { return ground_; }
    std::uint32_t full_mask() const {
        return static_cast<std::uint32_t>((1u << ground_.size()) - 1);
    }

    double value(std::uint32_t mask) const { return mask == 0 ? 0.0 : values_[mask]; }

    /// Canonical comma-joined key in ground order, e.g. "x1,x3".
    std::string key(std::uint32_t mask) const;
    std::vector<std::string> labels_of(std::uint32_t mask) const;

private:
    std::vector<std::string> ground_;
    std::vector<double> values_;
};

struct AxiomViolation {
    std::string axiom;  // D1, D2 or MONO
    std::vector<std::string> witness;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct AxiomReport {
    bool ok = true;
    std::vector<AxiomViolation> violations;
};

/// Checks D1 exhaustively and D2 over all triples (A,B,C) with B nonempty;
/// monotonicity violations are reported separately under MONO. Grounds larger
/// than 6 elements are checked by randomized triple sampling instead
/// (`sample_trials` draws, default 10000, fixed seed).
AxiomReport check_axioms(const DiversityTable& t, int sample_trials = 10000,
                         std::uint64_t seed = 1);

/// Symmetric metric on a labeled ground set. Construction validates the
/// metric axioms and throws NotAMetric with a witness otherwise.
class MetricTable {
public:
    MetricTable(std::vector<std::string> labels, std::vector<std::vector<double>> dist);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    double d(std::size_t i, std::size_t j) const { return dist_[i][j]; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> dist_;
};

/// delta_1(A) = max pairwise distance within A.
DiversityTable diameter_diversity(const MetricTable& d);
/// delta_2(A) = sum of pairwise distances within A (unordered pairs).
DiversityTable sum_diversity(const MetricTable& d);

/// Minkowski diversity of a point configuration: value of each subset is its
/// circumradius with respect to C. At most 6 points (2^6 - 1 solves).
DiversityTable induced_diversity(const std::vector<Vec>& points, const SymmetricPolytope& c,
                                 std::vector<std::string> labels = {});

/// Restriction to pairs: d(a,b) = delta({a,b}).
MetricTable induced_metric(const DiversityTable& t);

/// Translations (a, b) with R((a+A) u (b+B), C) <= max(R(A,C), R(B,C)) + 1e-8:
/// both circumradius solves recenter their sets concentrically inside max*C.
std::pair<Vec, Vec> mixing_witness(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                   const SymmetricPolytope& c);

struct SublinearViolation {
    std::string property;  // L1 (subadditivity) or L2 (absolute homogeneity)
    std::string witness;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct SublinearReport {
    bool ok = true;
    int trials = 0;
    std::vector<SublinearViolation> violations;
};

/// Samples random finite sets A, B and scalars lambda, checking
/// R(A+B,C) <= R(A,C) + R(B,C) and R(lambda A, C) = |lambda| R(A,C)
/// within 1e-8.
SublinearReport check_sublinear_samples(const SymmetricPolytope& c, int trials,
                                        std::uint64_t seed);

} // namespace divr
