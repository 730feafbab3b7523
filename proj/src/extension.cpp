#include "submeas/extension.hpp"

#include "submeas/fntopology.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace submeas {

namespace {

Submeasure table_over(const Ring& ring, const std::vector<std::pair<FiniteSet, LatticeValue>>& rows)
{
    TableRule rule;
    rule.entries = rows;
    return Submeasure(ring, std::move(rule));
}

} // namespace

ExtensionHypotheses check_extension_hypotheses(const Submeasure& mu)
{
    ExtensionHypotheses out;
    if (!is_order_bounded(mu.value_table(), mu.dimension()).bounded) {
        out.failed = "order bounded";
        return out;
    }
    if (check_exhaustive(mu).verdict != Verdict::holds) {
        out.failed = "exhaustive";
        return out;
    }
    const Classification cls = classify(mu);
    if (!(cls.monotone && cls.continuous && cls.sc && cls.usc)) {
        out.failed = "uniform";
        return out;
    }
    out.ok = true;
    return out;
}

LatticeValue mu_hat(const Submeasure& mu, const FiniteSet& a)
{
    if (!mu.domain().contains(a))
        throw std::invalid_argument("set outside R_sigma");
    std::vector<LatticeValue> below;
    for (const auto& b : mu.domain().sets())
        if (b.subset_of(a))
            below.push_back(mu.evaluate(b));
    return lattice_sup(below);
}

LatticeValue mu_star(const Submeasure& mu, const FiniteSet& a)
{
    if (a.universe_size() != mu.domain().universe_size())
        throw std::invalid_argument("mismatched universes");
    std::vector<LatticeValue> covers;
    for (const auto& b : mu.domain().sets())
        if (a.subset_of(b))
            covers.push_back(mu_hat(mu, b));
    if (covers.empty())
        throw std::invalid_argument("no covering set in R_sigma");
    return lattice_inf(covers);
}

SetClass r_zero(const Submeasure& mu)
{
    const ExtensionHypotheses hyp = check_extension_hypotheses(mu);
    if (!hyp.ok)
        throw std::domain_error("extension hypothesis failed: " + hyp.failed);
    const SetClass ambient = hereditary_class(mu.domain());
    return closure(mu.domain().base(), ambient,
                   [&](const FiniteSet& x) { return mu_star(mu, x); });
}

Submeasure inner_extension(const Submeasure& mu)
{
    const SetClass zero_class = r_zero(mu);
    std::vector<std::pair<FiniteSet, LatticeValue>> rows;
    for (const auto& a : zero_class) {
        std::vector<LatticeValue> below;
        for (const auto& b : mu.domain().sets())
            if (b.subset_of(a))
                below.push_back(mu.evaluate(b));
        rows.emplace_back(a, lattice_sup(below));
    }
    return table_over(Ring(zero_class), rows);
}

PropertyReport verify_inner_extension(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "inner_extension";

    const ExtensionHypotheses hyp = check_extension_hypotheses(mu);
    if (!hyp.ok) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("hypothesis not met: " + hyp.failed);
        return report;
    }

    const auto& sets = mu.domain().sets();

    // Restriction identity and the norm form of the supremum.
    for (const auto& a : sets) {
        const LatticeValue hat = mu_hat(mu, a);
        if (hat != mu.evaluate(a)) {
            Witness w;
            w.label = "inner extension differs from mu on the ring";
            w.sets = {a};
            w.values = {hat.to_string(), mu.evaluate(a).to_string()};
            report.fail(std::move(w));
            return report;
        }
        ExtRat max_norm(0);
        for (const auto& b : sets)
            if (b.subset_of(a))
                max_norm = ext_max(max_norm, mu.norm_of(b));
        if (norm(hat) != max_norm) {
            Witness w;
            w.label = "norm of the supremum differs from the supremum of norms";
            w.sets = {a};
            w.values = {to_string(norm(hat)), to_string(max_norm)};
            report.fail(std::move(w));
            return report;
        }
    }
    report.notes.push_back("restriction identity holds on all " + std::to_string(sets.size()) +
                           " ring members");

    std::vector<std::pair<FiniteSet, LatticeValue>> rows;
    for (const auto& a : sets)
        rows.emplace_back(a, mu_hat(mu, a));
    const Submeasure hat = table_over(mu.domain(), rows);

    if (check_monotone(hat).verdict != Verdict::holds) {
        report.fail({.label = "inner extension not monotone", .sets = {}, .values = {}});
        return report;
    }
    if (check_exhaustive(hat).verdict != Verdict::holds) {
        report.fail({.label = "inner extension not exhaustive", .sets = {}, .values = {}});
        return report;
    }
    report.notes.push_back("exhaustivity on R_sigma reduces to ||mu_hat(empty)|| = 0 on finite "
                           "models");
    report.notes.push_back("continuity along increasing sequences stabilizes on finite models; "
                           "the limit-flavored statement lives in the interval model");
    std::optional<std::pair<FiniteSet, FiniteSet>> w;
    if (!usc_holds_exact(hat, &w)) {
        Witness witness;
        witness.label = "inner extension loses uniform subadditive continuity";
        witness.sets = {w->first, w->second};
        report.fail(std::move(witness));
        return report;
    }
    if (check_continuity(hat).verdict != Verdict::holds) {
        report.fail({.label = "inner extension not continuous", .sets = {}, .values = {}});
        return report;
    }
    return report;
}

PropertyReport verify_closure_ring(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "closure_ring";

    const ExtensionHypotheses hyp = check_extension_hypotheses(mu);
    if (!hyp.ok) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("hypothesis not met: " + hyp.failed);
        return report;
    }

    const SetClass zero_class = r_zero(mu);
    const SetClass ambient = hereditary_class(mu.domain());
    auto star = [&](const FiniteSet& x) { return mu_star(mu, x); };

    // Membership characterization: distance-zero approximants in R_sigma
    // exist exactly for closure-ring members.
    for (const auto& a : ambient) {
        bool approximable = false;
        for (const auto& e : mu.domain().sets())
            if (norm(star(a.symm_diff(e))).is_zero()) {
                approximable = true;
                break;
            }
        if (approximable != zero_class.contains(a)) {
            Witness w;
            w.label = "membership characterization disagrees with the closure ring";
            w.sets = {a};
            report.fail(std::move(w));
            return report;
        }
    }

    // Cross-check against the topological closure; R_sigma collapses to the
    // ring on finite universes, so closing either class must agree.
    const SetClass closed = closure(mu.domain().base(), ambient, star);
    if (closed != zero_class) {
        report.fail({.label = "closure ring differs from the topological closure",
                     .sets = {},
                     .values = {}});
        return report;
    }
    report.notes.push_back("R_sigma collapses to the ring on finite universes");

    // Outer approximant with null excess for every member.
    for (const auto& a : zero_class) {
        bool found = false;
        for (const auto& c : mu.domain().sets())
            if (a.subset_of(c) && norm(star(c.difference(a))).is_zero()) {
                found = true;
                break;
            }
        if (!found) {
            Witness w;
            w.label = "no outer approximant with null excess";
            w.sets = {a};
            report.fail(std::move(w));
            return report;
        }
    }

    if (!norm(star(FiniteSet::empty(mu.domain().universe_size()))).is_zero()) {
        report.fail({.label = "outer extension nonzero at the empty set", .sets = {}, .values = {}});
        return report;
    }
    report.notes.push_back("continuity of the outer extension reduces to ||mu_star(empty)|| = 0 "
                           "on finite models");
    return report;
}

std::pair<FiniteSet, FiniteSet> null_completion_witnesses(const Submeasure& mu, const FiniteSet& a)
{
    const SetClass zero_class = r_zero(mu);
    if (!zero_class.contains(a))
        throw std::invalid_argument("set outside the closure ring");
    for (const auto& b : mu.domain().sets()) {
        if (!b.subset_of(a))
            continue;
        for (const auto& c : mu.domain().sets()) {
            if (!a.subset_of(c))
                continue;
            if (mu_star(mu, c.difference(b)).is_zero())
                return {b, c};
        }
    }
    throw std::domain_error("null-completion property violated for " + a.to_string());
}

PropertyReport verify_null_completeness(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "null_complete";

    const ExtensionHypotheses hyp = check_extension_hypotheses(mu);
    if (!hyp.ok) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("hypothesis not met: " + hyp.failed);
        return report;
    }

    const SetClass zero_class = r_zero(mu);
    for (const auto& a : zero_class) {
        if (!mu_star(mu, a).is_zero())
            continue;
        for (const auto& b : subsets_of(a)) {
            if (!zero_class.contains(b)) {
                Witness w;
                w.label = "subset of a null set escapes the closure ring";
                w.sets = {a, b};
                report.fail(std::move(w));
                return report;
            }
            if (!mu_star(mu, b).is_zero()) {
                Witness w;
                w.label = "subset of a null set has nonzero outer value";
                w.sets = {a, b};
                w.values = {mu_star(mu, b).to_string()};
                report.fail(std::move(w));
                return report;
            }
        }
    }
    return report;
}

PropertyReport verify_norm_uniqueness(const Submeasure& mu, const Submeasure& nu_alt)
{
    PropertyReport report;
    report.property = "norm_uniqueness";
    report.notes.push_back("tests a specific alternative extension, not the universally "
                           "quantified claim");

    const ExtensionHypotheses hyp = check_extension_hypotheses(mu);
    if (!hyp.ok) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("hypothesis not met: " + hyp.failed);
        return report;
    }
    const SetClass zero_class = r_zero(mu);
    if (nu_alt.domain().base() != zero_class) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("alternative extension does not live on the closure ring");
        return report;
    }
    for (const auto& a : mu.domain().sets())
        if (nu_alt.evaluate(a) != mu.evaluate(a)) {
            report.verdict = Verdict::vacuous;
            report.notes.push_back("alternative extension does not restrict to mu");
            return report;
        }
    const Classification cls = classify(nu_alt);
    if (!(cls.monotone && cls.continuous && cls.sc && cls.usc)) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("alternative extension is not uniform on the closure ring");
        return report;
    }

    for (const auto& a : zero_class) {
        const ExtRat lhs = norm(nu_alt.evaluate(a));
        const ExtRat rhs = norm(mu_star(mu, a));
        if (lhs != rhs) {
            Witness w;
            w.label = "norms disagree";
            w.sets = {a};
            w.values = {to_string(lhs), to_string(rhs)};
            report.fail(std::move(w));
            return report;
        }
    }
    return report;
}

ExtensionResult run_extension(const Submeasure& mu)
{
    const ExtensionHypotheses hyp = check_extension_hypotheses(mu);
    if (!hyp.ok)
        throw std::domain_error("extension hypothesis failed: " + hyp.failed);

    ExtensionResult out{hereditary_class(mu.domain()), {}, r_zero(mu), {}, {}};
    for (const auto& a : out.r_star)
        out.mu_star_table.emplace_back(a, mu_star(mu, a));

    if (!mu.domain().base().subclass_of(out.r_zero) || !out.r_zero.subclass_of(out.r_star))
        throw std::logic_error("extension pipeline violated R subset R0 subset R*");
    Ring(out.r_zero); // the closure ring must satisfy the ring invariants
    for (const auto& a : mu.domain().sets())
        if (mu_star(mu, a) != mu.evaluate(a))
            throw std::logic_error("outer extension does not restrict to mu on the ring");

    PropertyReport sandwich;
    sandwich.property = "null_completion_of_generated_sigma_ring";
    sandwich.notes.push_back("the generated sigma-ring collapses to the ring on finite "
                             "universes");
    for (const auto& a : out.r_zero) {
        try {
            out.completion_witnesses.emplace_back(a, null_completion_witnesses(mu, a));
        } catch (const std::domain_error& err) {
            Witness w;
            w.label = err.what();
            w.sets = {a};
            sandwich.fail(std::move(w));
            break;
        }
    }

    out.reports.push_back(verify_inner_extension(mu));
    out.reports.push_back(verify_closure_ring(mu));
    out.reports.push_back(verify_null_completeness(mu));
    out.reports.push_back(std::move(sandwich));
    out.reports.push_back(verify_norm_uniqueness(mu, inner_extension(mu)));
    return out;
}

} // namespace submeas
