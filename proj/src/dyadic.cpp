#include "submeas/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace submeas {

namespace {

constexpr unsigned kDepthCap = 60;

Int rat_ceil(const Rat& x)
{
    if (x < 0)
        throw std::invalid_argument("rat_ceil: negative argument");
    const Int n = numerator(x);
    const Int d = denominator(x);
    return (n + d - 1) / d;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>>
scale_runs(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& runs, unsigned shift)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(runs.size());
    for (const auto& [p, q] : runs)
        out.emplace_back(p << shift, q << shift);
    return out;
}

// Pointwise boolean combination of two run lists at a common depth.
std::vector<std::pair<std::uint64_t, std::uint64_t>>
combine(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& a,
        const std::vector<std::pair<std::uint64_t, std::uint64_t>>& b, bool (*op)(bool, bool))
{
    std::vector<std::uint64_t> cuts;
    for (const auto& [p, q] : a) {
        cuts.push_back(p);
        cuts.push_back(q);
    }
    for (const auto& [p, q] : b) {
        cuts.push_back(p);
        cuts.push_back(q);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto covers = [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& runs,
                     std::uint64_t x) {
        for (const auto& [p, q] : runs)
            if (p <= x && x < q)
                return true;
        return false;
    };

    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (op(covers(a, cuts[i]), covers(b, cuts[i])))
            out.emplace_back(cuts[i], cuts[i + 1]);
    }
    return out; // constructor merges adjacent runs
}

} // namespace

DyadicSet::DyadicSet(unsigned depth, std::vector<std::pair<std::uint64_t, std::uint64_t>> runs)
    : depth_(depth), runs_(std::move(runs))
{
    if (depth > kDepthCap)
        throw std::invalid_argument("depth cap");
    const std::uint64_t limit = std::uint64_t(1) << depth;
    std::sort(runs_.begin(), runs_.end());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> merged;
    for (const auto& [p, q] : runs_) {
        if (p >= q)
            throw std::invalid_argument("empty or reversed run");
        if (q > limit)
            throw std::invalid_argument("run outside [0, 1)");
        if (!merged.empty() && p < merged.back().second)
            throw std::invalid_argument("overlapping runs");
        if (!merged.empty() && p == merged.back().second)
            merged.back().second = q;
        else
            merged.emplace_back(p, q);
    }
    runs_ = std::move(merged);
}

Rat DyadicSet::length_exact() const
{
    Int total = 0;
    for (const auto& [p, q] : runs_)
        total += Int(q - p);
    return Rat(total, Int(1) << depth_);
}

DyadicSet DyadicSet::unite(const DyadicSet& other) const
{
    const unsigned d = std::max(depth_, other.depth_);
    return DyadicSet(d, combine(scale_runs(runs_, d - depth_),
                                scale_runs(other.runs_, d - other.depth_),
                                [](bool x, bool y) { return x || y; }));
}

DyadicSet DyadicSet::intersect(const DyadicSet& other) const
{
    const unsigned d = std::max(depth_, other.depth_);
    return DyadicSet(d, combine(scale_runs(runs_, d - depth_),
                                scale_runs(other.runs_, d - other.depth_),
                                [](bool x, bool y) { return x && y; }));
}

DyadicSet DyadicSet::symm_diff(const DyadicSet& other) const
{
    const unsigned d = std::max(depth_, other.depth_);
    return DyadicSet(d, combine(scale_runs(runs_, d - depth_),
                                scale_runs(other.runs_, d - other.depth_),
                                [](bool x, bool y) { return x != y; }));
}

bool DyadicSet::subset_of(const DyadicSet& other) const
{
    return intersect(other).length_exact() == length_exact();
}

std::string DyadicSet::to_string() const
{
    std::ostringstream out;
    const std::uint64_t den = std::uint64_t(1) << depth_;
    bool first = true;
    for (const auto& [p, q] : runs_) {
        if (!first)
            out << " u ";
        out << '[' << p << '/' << den << ", " << q << '/' << den << ')';
        first = false;
    }
    if (first)
        out << "empty";
    return out.str();
}

bool operator==(const DyadicSet& a, const DyadicSet& b)
{
    return a.symm_diff(b).is_empty();
}

IntervalRule::IntervalRule(std::vector<Distortion> components_)
    : components(std::move(components_))
{
    if (components.empty())
        throw std::invalid_argument("interval rule needs dimension >= 1");
}

double IntervalRule::norm_of_length(double len) const
{
    double sum = 0;
    for (const auto& g : components)
        sum += g.apply(len);
    return sum;
}

TargetSet::TargetSet(std::vector<std::pair<Rat, Rat>> intervals)
{
    std::sort(intervals.begin(), intervals.end());
    for (const auto& [a, b] : intervals) {
        if (a < 0 || b > 1 || a >= b)
            throw std::invalid_argument("target interval outside [0, 1) or empty");
        if (!intervals_.empty() && intervals_.back().second > a)
            throw std::invalid_argument("target intervals overlap");
        // merge touching intervals so the per-interval dyadic hulls never
        // drop a cell straddling the join point
        if (!intervals_.empty() && intervals_.back().second == a)
            intervals_.back().second = b;
        else
            intervals_.emplace_back(a, b);
    }
}

TargetSet TargetSet::interval(const Rat& a, const Rat& b)
{
    return TargetSet({{a, b}});
}

TargetSet TargetSet::union_of(std::vector<std::pair<Rat, Rat>> intervals)
{
    return TargetSet(std::move(intervals));
}

TargetSet TargetSet::cantor_stage(unsigned n)
{
    if (n > 20)
        throw std::invalid_argument("cantor stage too deep");
    std::vector<std::pair<Rat, Rat>> intervals = {{Rat(0), Rat(1)}};
    for (unsigned stage = 0; stage < n; ++stage) {
        std::vector<std::pair<Rat, Rat>> next;
        next.reserve(intervals.size() * 2);
        for (const auto& [a, b] : intervals) {
            next.emplace_back(a / 3, b / 3);
            next.emplace_back((a + 2) / 3, (b + 2) / 3);
        }
        intervals = std::move(next);
    }
    return TargetSet(std::move(intervals));
}

Rat TargetSet::length() const
{
    Rat total = 0;
    for (const auto& [a, b] : intervals_)
        total += b - a;
    return total;
}

std::string TargetSet::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& [a, b] : intervals_) {
        if (!first)
            out << " u ";
        out << '[' << submeas::to_string(a) << ", " << submeas::to_string(b) << ')';
        first = false;
    }
    if (first)
        out << "empty";
    return out.str();
}

DyadicSet inner_refine(const TargetSet& target, unsigned depth)
{
    if (depth > kDepthCap)
        throw std::invalid_argument("depth cap");
    const Int den = Int(1) << depth;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    for (const auto& [a, b] : target.intervals()) {
        const Int p = rat_ceil(a * Rat(den));
        const Int q = rat_floor(b * Rat(den));
        if (p < q)
            runs.emplace_back(p.convert_to<std::uint64_t>(), q.convert_to<std::uint64_t>());
    }
    return DyadicSet(depth, std::move(runs));
}

DyadicSet outer_refine(const TargetSet& target, unsigned depth)
{
    if (depth > kDepthCap)
        throw std::invalid_argument("depth cap");
    const Int den = Int(1) << depth;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    for (const auto& [a, b] : target.intervals()) {
        const Int p = rat_floor(a * Rat(den));
        const Int q = rat_ceil(b * Rat(den));
        if (p < q)
            runs.emplace_back(p.convert_to<std::uint64_t>(), q.convert_to<std::uint64_t>());
    }
    return DyadicSet(depth, std::move(runs));
}

PropertyReport check_refinement_convergence(const IntervalRule& rule, const TargetSet& target,
                                            double tol, unsigned max_depth)
{
    PropertyReport report;
    report.property = "refinement_convergence";
    const double limit = rule.norm_of_length(to_double(target.length()));
    report.numbers.emplace_back("analytic_limit", limit);

    double residual = 0;
    for (unsigned k = 1; k <= max_depth; ++k) {
        const double value = rule.norm_of(inner_refine(target, k));
        residual = std::abs(value - limit);
        if (residual <= tol) {
            report.numbers.emplace_back("first_depth", double(k));
            report.numbers.emplace_back("value", value);
            return report;
        }
    }
    Witness w;
    w.label = "no convergence within max_depth";
    w.values = {std::to_string(residual)};
    report.fail(std::move(w));
    report.numbers.emplace_back("residual", residual);
    return report;
}

PropertyReport check_continuity_sequence(const IntervalRule& rule, unsigned n_max, double tol)
{
    PropertyReport report;
    report.property = "continuity_sequence";
    report.notes.push_back("family A_n = [0, 2^-n) decreases to the empty set by construction");

    double prev = std::numeric_limits<double>::infinity();
    std::optional<unsigned> first;
    for (unsigned n = 1; n <= n_max; ++n) {
        const double value = rule.norm_of_length(std::ldexp(1.0, -int(n)));
        if (value > prev) {
            Witness w;
            w.label = "norms fail to decrease along the shrinking family at n=" +
                      std::to_string(n);
            w.values = {std::to_string(prev), std::to_string(value)};
            report.fail(std::move(w));
            return report;
        }
        prev = value;
        if (!first && value <= tol) {
            first = n;
            report.numbers.emplace_back("first_n", double(n));
            report.numbers.emplace_back("value", value);
        }
    }
    if (!first) {
        Witness w;
        w.label = "norms never reach tol";
        w.values = {std::to_string(prev)};
        report.fail(std::move(w));
    }
    return report;
}

PropertyReport check_exhaustive_sequence(const IntervalRule& rule, unsigned n_max, double tol)
{
    PropertyReport report;
    report.property = "exhaustive_sequence";
    report.notes.push_back("family A_n = [2^-(n+1), 2^-n) is pairwise disjoint by construction");

    for (unsigned n = 1; n <= n_max; ++n) {
        const double value = rule.norm_of_length(std::ldexp(1.0, -int(n) - 1));
        if (value <= tol) {
            report.numbers.emplace_back("first_n", double(n));
            report.numbers.emplace_back("value", value);
            return report;
        }
        if (n == n_max) {
            Witness w;
            w.label = "norms never reach tol";
            w.values = {std::to_string(value)};
            report.fail(std::move(w));
        }
    }
    return report;
}

PropertyReport check_mu_cauchy(const IntervalRule& rule, const TargetSet& target, unsigned n_max,
                               double tol)
{
    PropertyReport report;
    report.property = "mu_cauchy";

    std::vector<DyadicSet> family;
    family.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
        family.push_back(inner_refine(target, n));

    std::optional<unsigned> threshold;
    for (unsigned start = 1; start <= n_max && !threshold; ++start) {
        double worst = 0;
        for (unsigned n = start; n <= n_max; ++n)
            for (unsigned m = n; m <= n_max; ++m)
                worst = std::max(worst,
                                 rule.norm_of(family[n - 1].symm_diff(family[m - 1])));
        if (worst <= tol)
            threshold = start;
    }
    // Exhaustivity forces every monotone family to be Cauchy; a Cauchy
    // family without exhaustivity contradicts nothing.
    const bool exhaustive_ok =
        check_exhaustive_sequence(rule, n_max, tol).verdict == Verdict::holds;
    if (!threshold) {
        Witness w;
        w.label = exhaustive_ok ? "exhaustivity verdict without the Cauchy verdict"
                                : "no tail of the refinement family is Cauchy at tol";
        report.fail(std::move(w));
        return report;
    }
    report.numbers.emplace_back("threshold_n", double(*threshold));
    report.notes.push_back(exhaustive_ok
                               ? "consistent with the exhaustivity verdict at this tolerance"
                               : "exhaustivity not yet below tol within n_max; no "
                                 "contradiction with the equivalence");
    return report;
}

PropertyReport check_monotone_limit(const IntervalRule& rule, const TargetSet& target,
                                    unsigned n_max, double tol)
{
    PropertyReport report;
    report.property = "monotone_limit_norm";
    const double limit = rule.norm_of_length(to_double(target.length()));
    report.numbers.emplace_back("analytic_limit", limit);

    double prev = -1;
    for (unsigned n = 1; n <= n_max; ++n) {
        const double value = rule.norm_of(inner_refine(target, n));
        if (value + 1e-15 < prev) {
            Witness w;
            w.label = "norms fail to increase along the refinement family at n=" +
                      std::to_string(n);
            w.values = {std::to_string(prev), std::to_string(value)};
            report.fail(std::move(w));
            return report;
        }
        prev = value;
        if (std::abs(value - limit) <= tol) {
            report.numbers.emplace_back("first_n", double(n));
            report.numbers.emplace_back("value", value);
            return report;
        }
    }
    Witness w;
    w.label = "norm limit not reached within n_max";
    w.values = {std::to_string(prev), std::to_string(limit)};
    report.fail(std::move(w));
    return report;
}

} // namespace submeas
