#include "submeas/choquet.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace submeas {

Density::Density(std::vector<Rat> values_) : values(std::move(values_))
{
    if (values.empty())
        throw std::invalid_argument("density needs at least one point");
    for (const auto& v : values)
        if (v < 0)
            throw std::invalid_argument("density must be nonnegative");
}

std::string Density::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out << ", ";
        out << submeas::to_string(values[i]);
    }
    out << ']';
    return out.str();
}

Density parse_density(const std::string& text)
{
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed.size() < 2 || trimmed.front() != '[' || trimmed.back() != ']')
        throw std::invalid_argument("malformed density literal '" + text + "'");
    std::vector<Rat> values;
    std::istringstream in(trimmed.substr(1, trimmed.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        values.push_back(parse_rat(item));
    }
    return Density(std::move(values));
}

PropertyReport check_density_measurable(const Density& f, const Ring& ring)
{
    PropertyReport report;
    report.property = "density_measurable";
    if (f.values.size() != ring.universe_size())
        throw std::invalid_argument("density size does not match the universe");

    // Every superlevel set over x in R; below the minimum the level set is
    // the whole universe, so measurability requires T in the ring.
    std::vector<Rat> thresholds = f.values;
    thresholds.push_back(Rat(-1)); // stands for any x < 0
    for (const auto& x : thresholds) {
        std::uint64_t mask = 0;
        for (unsigned t = 0; t < ring.universe_size(); ++t)
            if (f.values[t] > x)
                mask |= std::uint64_t(1) << t;
        const FiniteSet level(ring.universe_size(), mask);
        if (!ring.contains(level)) {
            Witness w;
            w.label = "superlevel set outside ring at level " + to_string(x < 0 ? Rat(0) : x);
            w.sets = {level};
            report.fail(std::move(w));
            return report;
        }
    }
    return report;
}

LatticeValue choquet_integral(const Submeasure& mu, const Density& f, const FiniteSet& a)
{
    if (f.values.size() != mu.domain().universe_size())
        throw std::invalid_argument("density size does not match the universe");
    if (!mu.domain().contains(a))
        throw std::invalid_argument("set outside ring");
    const FiniteSet empty = FiniteSet::empty(mu.domain().universe_size());
    if (!mu.evaluate(empty).is_zero())
        throw std::domain_error("choquet integral requires mu(empty) = 0");

    // Distinct positive values of f on A, ascending; strips run between
    // consecutive levels and {f > x} = {f >= x_j} on [x_{j-1}, x_j).
    std::vector<Rat> levels;
    for (unsigned t = 0; t < a.universe_size(); ++t)
        if (a.contains(t) && f.values[t] > 0)
            levels.push_back(f.values[t]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    LatticeValue result = LatticeValue::zero(mu.dimension());
    Rat prev = 0;
    for (const auto& x : levels) {
        std::uint64_t mask = 0;
        for (unsigned t = 0; t < a.universe_size(); ++t)
            if (a.contains(t) && f.values[t] >= x)
                mask |= std::uint64_t(1) << t;
        const FiniteSet level(a.universe_size(), mask);
        if (!mu.domain().contains(level))
            throw std::invalid_argument("non-measurable level set at level " + to_string(x) +
                                        ": " + level.to_string());
        result = add(result, scale(x - prev, mu.evaluate(level)));
        prev = x;
    }
    return result;
}

Submeasure derived_submeasure(const Submeasure& mu, const Density& f)
{
    ChoquetDerivedRule rule;
    rule.base = std::make_shared<Submeasure>(mu);
    rule.density = f.values;
    return Submeasure(mu.domain(), std::move(rule));
}

PropertyReport check_sup_lipschitz(const Submeasure& mu, const Density& f, const Density& g,
                                   const FiniteSet& a)
{
    PropertyReport report;
    report.property = "sup_lipschitz";

    if (check_monotone(mu).verdict != Verdict::holds ||
        !mu.evaluate(FiniteSet::empty(mu.domain().universe_size())).is_zero()) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("requires a monotone base with mu(empty) = 0");
        return report;
    }

    Rat tau = 0;
    for (unsigned t = 0; t < a.universe_size(); ++t) {
        if (!a.contains(t))
            continue;
        Rat d = f.at(t) - g.at(t);
        if (d < 0)
            d = -d;
        tau = std::max(tau, d);
    }

    const LatticeValue vf = choquet_integral(mu, f, a);
    const LatticeValue vg = choquet_integral(mu, g, a);
    const ExtRat lhs = norm_of_difference(vf, vg);
    const ExtRat mu_norm = mu.norm_of(a);
    const ExtRat rhs = mu_norm.is_infinite() && tau > 0 ? ExtRat::infinity()
                                                        : ExtRat(tau * (mu_norm.is_infinite()
                                                                            ? Rat(0)
                                                                            : mu_norm.value()));
    if (lhs > rhs + ExtRat(mu.slack())) {
        Witness w;
        w.label = "difference norm exceeds tau * ||mu(A)||";
        w.sets = {a};
        w.values = {to_string(lhs), to_string(tau), to_string(mu_norm)};
        report.fail(std::move(w));
        return report;
    }
    Witness w;
    w.label = "bound";
    w.sets = {a};
    w.values = {to_string(lhs), to_string(rhs)};
    report.witnesses.push_back(std::move(w));
    return report;
}

PropertyReport check_pgp_preservation(const Submeasure& mu, const Density& f)
{
    PropertyReport report;
    report.property = "pgp_preservation";

    if (!pgp_holds_exact(mu)) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("base lacks the pseudometric generating property");
        return report;
    }
    const Submeasure derived = derived_submeasure(mu, f);
    if (derived.norm_of(derived.largest_set()).is_infinite()) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("derived set function is not finite on the largest set");
        return report;
    }

    std::optional<std::pair<FiniteSet, FiniteSet>> w;
    if (!pgp_holds_exact(derived, &w)) {
        Witness witness;
        witness.label = "derived set function loses the property";
        witness.sets = {w->first, w->second};
        report.fail(std::move(witness));
        return report;
    }
    for (const Rat& eps : standard_eps_grid())
        report.moduli.emplace_back(eps, pgp_modulus(derived, eps));
    return report;
}

} // namespace submeas
