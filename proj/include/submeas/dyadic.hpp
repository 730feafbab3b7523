#pragma once

#include "submeas/numeric.hpp"
#include "submeas/report.hpp"
#include "submeas/submeasure.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace submeas {

/// A finite union of half-open dyadic intervals [p/2^k, q/2^k) inside
/// [0, 1): runs are sorted, pairwise disjoint and merged. Depth is capped
/// at 60 to keep denominators inside 64 bits.
class DyadicSet {
public:
    DyadicSet(unsigned depth, std::vector<std::pair<std::uint64_t, std::uint64_t>> runs);

    static DyadicSet empty(unsigned depth) { return DyadicSet(depth, {}); }

    unsigned depth() const { return depth_; }
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& runs() const { return runs_; }
    bool is_empty() const { return runs_.empty(); }

    Rat length_exact() const;
    double length() const { return to_double(length_exact()); }

    DyadicSet unite(const DyadicSet& other) const;
    DyadicSet intersect(const DyadicSet& other) const;
    DyadicSet symm_diff(const DyadicSet& other) const;
    bool subset_of(const DyadicSet& other) const;

    std::string to_string() const;

    friend bool operator==(const DyadicSet& a, const DyadicSet& b);

private:
    unsigned depth_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs_;
};

/// Per-component distortion of the total length: mu(A)_i = g_i(len(A)).
/// Evaluated in binary64 with declared tolerances.
struct IntervalRule {
    explicit IntervalRule(std::vector<Distortion> components_);
    std::vector<Distortion> components;

    std::size_t dimension() const { return components.size(); }
    double norm_of_length(double len) const;
    double norm_of(const DyadicSet& a) const { return norm_of_length(a.length()); }
};

/// A target with exactly computable length: a finite union of rational
/// half-open intervals inside [0, 1), or a Cantor construction stage.
class TargetSet {
public:
    static TargetSet interval(const Rat& a, const Rat& b);
    static TargetSet union_of(std::vector<std::pair<Rat, Rat>> intervals);
    static TargetSet cantor_stage(unsigned n);

    const std::vector<std::pair<Rat, Rat>>& intervals() const { return intervals_; }
    Rat length() const;
    std::string to_string() const;

    friend bool operator==(const TargetSet& a, const TargetSet& b)
    {
        return a.intervals_ == b.intervals_;
    }

private:
    explicit TargetSet(std::vector<std::pair<Rat, Rat>> intervals);
    std::vector<std::pair<Rat, Rat>> intervals_;
};

/// The largest dyadic set of the given depth contained in the target;
/// increasing in depth, with length deficit at most two grid cells per
/// target interval.
DyadicSet inner_refine(const TargetSet& target, unsigned depth);

/// The smallest dyadic set of the given depth containing the target.
DyadicSet outer_refine(const TargetSet& target, unsigned depth);

/// Inner-refinement norms must reach the analytic limit (the rule applied
/// to the exact target length) within tol by max_depth; the first such
/// depth is reported.
PropertyReport check_refinement_convergence(const IntervalRule& rule, const TargetSet& target,
                                            double tol, unsigned max_depth);

/// Along the bundled shrinking family A_n = [0, 2^-n) the norms must
/// decrease monotonically and fall below tol by n_max.
PropertyReport check_continuity_sequence(const IntervalRule& rule, unsigned n_max, double tol);

/// Along the bundled disjoint family A_n = [2^-(n+1), 2^-n) the norms must
/// fall below tol by n_max.
PropertyReport check_exhaustive_sequence(const IntervalRule& rule, unsigned n_max, double tol);

/// The increasing refinement family of the target must become Cauchy for
/// the symmetric-difference pseudometric at tolerance tol by n_max;
/// cross-checked against the exhaustivity verdict.
PropertyReport check_mu_cauchy(const IntervalRule& rule, const TargetSet& target, unsigned n_max,
                               double tol);

/// Norm continuity along the increasing refinement family: the norms must
/// approach the rule at the exact target length within tol by n_max.
PropertyReport check_monotone_limit(const IntervalRule& rule, const TargetSet& target,
                                    unsigned n_max, double tol);

} // namespace submeas
