#include "submeas/fntopology.hpp"

#include <algorithm>
#include <stdexcept>

namespace submeas {

SetClass u_epsilon(const Submeasure& mu, const Rat& eps)
{
    if (eps < 0)
        throw std::invalid_argument("eps must be nonnegative");
    std::vector<FiniteSet> sets;
    const auto& domain = mu.domain().sets();
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (mu.norm_at(i) <= ExtRat(eps))
            sets.push_back(domain[i]);
    return SetClass(mu.domain().universe_size(), std::move(sets));
}

NeighborhoodBase build_neighborhood_base(const Submeasure& mu, const std::vector<Rat>& grid)
{
    std::vector<Rat> sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    NeighborhoodBase base{mu, {}};
    for (const auto& eps : sorted)
        base.levels.emplace_back(eps, u_epsilon(mu, eps));
    return base;
}

namespace {

bool class_subset(const SetClass& a, const SetClass& b)
{
    return a.subclass_of(b);
}

// Candidate deltas for one eps: the attained positive norms up to eps, eps
// itself, and a value strictly below every positive norm (whose sublevel
// class is exactly the null sets). Scanning descending finds the largest
// candidate that works; if even the smallest fails, no positive delta can
// work because sublevel classes only grow with delta.
std::vector<Rat> delta_candidates(const Submeasure& mu, const Rat& eps)
{
    std::vector<Rat> candidates;
    candidates.push_back(eps);
    std::optional<Rat> least_positive;
    for (std::size_t i = 0; i < mu.domain().size(); ++i) {
        const ExtRat& n = mu.norm_at(i);
        if (n.is_infinite() || n.is_zero())
            continue;
        if (n.value() <= eps)
            candidates.push_back(n.value());
        if (!least_positive || n.value() < *least_positive)
            least_positive = n.value();
    }
    if (least_positive)
        candidates.push_back(*least_positive / 2);
    std::sort(candidates.begin(), candidates.end(), std::greater<Rat>());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    return candidates;
}

} // namespace

PropertyReport check_filterbase_axioms(const Submeasure& mu, const std::vector<Rat>& grid)
{
    PropertyReport report;
    report.property = "filterbase_axioms";

    const Classification cls = classify(mu);
    if (!cls.order_bounded || !(cls.monotone && cls.continuous && cls.sc && cls.usc)) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("requires an order bounded uniform instance");
        return report;
    }
    report.notes.push_back("continuity of the ring operations reduces to these base "
                           "conditions on finite models");

    for (const Rat& eps : grid) {
        const SetClass u_eps = u_epsilon(mu, eps);

        // (4) normality of U_eps inside the ring.
        for (const auto& a : u_eps)
            for (const auto& b : mu.domain().sets())
                if (b.subset_of(a) && !u_eps.contains(b)) {
                    Witness w;
                    w.label = "U_eps not normal at eps=" + to_string(eps);
                    w.sets = {a, b};
                    report.fail(std::move(w));
                    return report;
                }

        bool found = false;
        for (const Rat& delta : delta_candidates(mu, eps)) {
            const SetClass u_delta = u_epsilon(mu, delta);
            const bool ok_delta =
                class_subset(class_op(u_delta, u_delta, ClassOp::symm_diff), u_eps) &&
                class_subset(class_op(u_delta, u_delta, ClassOp::intersect), u_eps) &&
                class_subset(class_op(mu.domain().base(), u_delta, ClassOp::intersect), u_eps) &&
                class_subset(class_op(u_delta, u_delta, ClassOp::unite), u_eps);
            if (ok_delta) {
                report.moduli.emplace_back(eps, ExtRat(delta));
                found = true;
                break;
            }
        }
        if (!found) {
            Witness w;
            w.label = "no positive delta satisfies the combination conditions at eps=" +
                      to_string(eps);
            report.fail(std::move(w));
            return report;
        }
    }
    return report;
}

ExtRat rho(const Submeasure& mu, const FiniteSet& a, const FiniteSet& b)
{
    return norm(mu.evaluate(a.symm_diff(b)));
}

SetClass closure(const SetClass& subclass, const SetClass& ambient, const SetFunction& mu_ambient)
{
    if (!subclass.subclass_of(ambient))
        throw std::invalid_argument("subclass not contained in the ambient class");
    for (const auto& a : ambient)
        for (const auto& b : ambient)
            if (!ambient.contains(a.symm_diff(b)))
                throw std::invalid_argument("ambient class not closed under symmetric difference");

    std::vector<FiniteSet> members;
    for (const auto& a : ambient) {
        for (const auto& e : subclass) {
            if (norm(mu_ambient(a.symm_diff(e))).is_zero()) {
                members.push_back(a);
                break;
            }
        }
    }
    return SetClass(ambient.universe_size(), std::move(members));
}

PropertyReport check_subring_closure(const Ring& subring, const SetClass& ambient,
                                     const SetFunction& mu_ambient)
{
    PropertyReport report;
    report.property = "closure_is_subring";
    const SetClass closed = closure(subring.base(), ambient, mu_ambient);
    try {
        Ring as_ring(closed);
        report.notes.push_back("closure has " + std::to_string(closed.size()) + " members");
    } catch (const std::invalid_argument& err) {
        Witness w;
        w.label = std::string("closure violates ring invariants: ") + err.what();
        report.fail(std::move(w));
    }
    return report;
}

PropertyReport check_density(const Ring& r, const Ring& s, const Submeasure& mu_on_s)
{
    PropertyReport report;
    report.property = "dense";
    if (!r.base().subclass_of(s.base()))
        throw std::invalid_argument("r must be a subring of s");
    if (mu_on_s.domain() != s)
        throw std::invalid_argument("mu_on_s must live on s");

    const Classification cls = classify(mu_on_s);
    if (!cls.order_bounded || !(cls.monotone && cls.continuous && cls.sc && cls.usc)) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("requires an order bounded uniform instance on s");
        return report;
    }
    if (r == s)
        report.notes.push_back("finite-universe collapse: s equals the generated sigma-ring");

    const SetClass closed =
        closure(r.base(), s.base(), [&](const FiniteSet& x) { return mu_on_s.evaluate(x); });
    if (closed != s.base()) {
        for (const auto& a : s.base())
            if (!closed.contains(a)) {
                ExtRat best = ExtRat::infinity();
                for (const auto& e : r.base())
                    best = ext_min(best, mu_on_s.norm_of(a.symm_diff(e)));
                Witness w;
                w.label = "set not approximable from r";
                w.sets = {a};
                w.values = {to_string(best)};
                report.fail(std::move(w));
                return report;
            }
    }
    return report;
}

} // namespace submeas
