#include "submeas/runner.hpp"

#include "submeas/fntopology.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

namespace submeas {

namespace {

const FiniteInstance& require_finite(const InstanceSpec& spec, const std::string& command)
{
    if (spec.model != ModelKind::finite || !spec.finite)
        throw std::invalid_argument(command == "extend"
                                        ? "extension requires finite model"
                                        : "command '" + command + "' requires finite model");
    return *spec.finite;
}

std::vector<Rat> merged_grid(unsigned j_max, const std::vector<Rat>& extra_a,
                             const std::vector<Rat>& extra_b)
{
    std::vector<Rat> grid = standard_eps_grid(j_max);
    grid.insert(grid.end(), extra_a.begin(), extra_a.end());
    grid.insert(grid.end(), extra_b.begin(), extra_b.end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::erase_if(grid, [](const Rat& e) { return e <= 0; });
    return grid;
}

// Seeded sample of admissible disjoint families for the chained union
// bound: members are drawn from the ring subject to the disjointness and
// norm gates, so every sampled family satisfies the preconditions.
PropertyReport sample_chained_union_bound(const Submeasure& mu, std::uint64_t seed,
                                          unsigned families, unsigned k_max)
{
    PropertyReport report;
    report.property = "chained_union_bound_sample";
    if (!pgp_holds_exact(mu)) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("instance lacks the pseudometric generating property");
        return report;
    }
    const std::vector<Rat> deltas = delta_sequence(mu, k_max);
    std::mt19937_64 rng(seed);
    const auto& sets = mu.domain().sets();

    unsigned checked = 0;
    for (unsigned f = 0; f < families; ++f) {
        std::vector<FiniteSet> family;
        FiniteSet used = FiniteSet::empty(mu.domain().universe_size());
        const unsigned target_len = 2 + unsigned(rng() % (k_max - 1));
        for (unsigned k = 0; k < target_len; ++k) {
            std::vector<FiniteSet> candidates;
            for (const auto& s : sets)
                if (s.intersect(used).is_empty() && mu.norm_of(s) < ExtRat(deltas[k]))
                    candidates.push_back(s);
            if (candidates.empty())
                break;
            const FiniteSet pick = candidates[rng() % candidates.size()];
            family.push_back(pick);
            used = used.unite(pick);
        }
        if (family.size() < 2)
            continue;
        const PropertyReport one = verify_chained_union_bound(mu, deltas, family);
        if (one.verdict != Verdict::holds) {
            report.verdict = one.verdict;
            report.witnesses = one.witnesses;
            report.notes.push_back("failed at sampled family #" + std::to_string(f));
            return report;
        }
        ++checked;
    }
    report.notes.push_back(std::to_string(checked) + " sampled families checked against the "
                                                     "chained bound");
    std::string sequence = "delta sequence:";
    for (const auto& d : deltas)
        sequence += " " + to_string(d);
    report.notes.push_back(std::move(sequence));
    return report;
}

int exit_from(const std::vector<PropertyReport>& properties)
{
    for (const auto& p : properties)
        if (p.verdict == Verdict::fails)
            return 1;
    return 0;
}

// One classification property: the strengthening flags (subadditive,
// additive, uniform, pseudometric-generating) describe the class and never
// fail on their own; the verdict fails only when the instance misses the
// defining conditions altogether.
std::vector<PropertyReport> classification_properties(const Classification& cls)
{
    PropertyReport summary;
    summary.property = "classification";
    summary.notes.push_back("class: " + to_string(cls.cls));
    for (const auto& report : cls.reports)
        summary.notes.push_back(report.property + ": " + to_string(report.verdict));
    if (cls.cls == SubmeasureClass::not_d) {
        summary.verdict = Verdict::fails;
        for (const auto& report : cls.reports) {
            const bool defining = report.property == "monotone" ||
                                  report.property == "continuous_at_empty" ||
                                  report.property == "subadditively_continuous";
            if (defining && report.verdict == Verdict::fails)
                for (const auto& w : report.witnesses)
                    summary.witnesses.push_back(w);
        }
    }

    std::vector<PropertyReport> out;
    out.push_back(std::move(summary));
    for (const auto& report : cls.reports) {
        if (report.moduli.empty())
            continue;
        PropertyReport table;
        table.property = report.property + "_moduli";
        table.moduli = report.moduli;
        out.push_back(std::move(table));
    }
    return out;
}

} // namespace

int RunReport::exit_status() const
{
    return exit_from(properties);
}

RunReport run_check(const InstanceSpec& spec, const RunOptions& opts)
{
    RunReport out;
    out.command = "check";
    out.instance_echo = serialize_spec(spec);

    const Submeasure mu = build_submeasure(require_finite(spec, "check"));
    const std::vector<Rat> fb_grid = merged_grid(6, spec.eps_grid, opts.extra_eps);

    const Classification cls = classify(mu);
    out.classification = to_string(cls.cls);
    for (auto& r : classification_properties(cls))
        out.properties.push_back(std::move(r));

    // user-supplied epsilon values extend the moduli tables
    std::vector<Rat> extras = spec.eps_grid;
    extras.insert(extras.end(), opts.extra_eps.begin(), opts.extra_eps.end());
    std::sort(extras.begin(), extras.end());
    extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
    std::erase_if(extras, [](const Rat& e) { return e <= 0; });
    for (auto& p : out.properties) {
        if (p.property == "uniformly_subadditively_continuous_moduli")
            for (const Rat& eps : extras)
                p.moduli.emplace_back(eps, usc_modulus(mu, eps));
        else if (p.property == "pseudometric_generating_moduli")
            for (const Rat& eps : extras)
                p.moduli.emplace_back(eps, pgp_modulus(mu, eps));
        else
            continue;
        std::sort(p.moduli.begin(), p.moduli.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        p.moduli.erase(std::unique(p.moduli.begin(), p.moduli.end()), p.moduli.end());
    }

    std::vector<std::function<PropertyReport()>> suites;
    suites.push_back([&] { return check_sc_equivalence(mu); });
    suites.push_back([&] { return check_usc_equivalence(mu); });
    suites.push_back([&] { return check_sigma_subadditive(mu, 4); });
    suites.push_back([&] { return check_ac_condition(mu); });
    suites.push_back([&] { return check_exhaustive(mu); });
    suites.push_back([&] { return sample_chained_union_bound(mu, opts.seed, 100, 8); });
    suites.push_back([&] { return check_filterbase_axioms(mu, fb_grid); });
    suites.push_back([&] { return check_density(mu.domain(), r_sigma(mu.domain()), mu); });
    suites.push_back([&] {
        return check_subring_closure(mu.domain(), mu.domain().base(),
                                     [&](const FiniteSet& x) { return mu.evaluate(x); });
    });
    if (spec.finite->density) {
        suites.push_back(
            [&] { return check_density_measurable(Density(*spec.finite->density), mu.domain()); });
    }

    if (opts.workers > 1) {
        std::vector<std::future<PropertyReport>> futures;
        futures.reserve(suites.size());
        for (auto& suite : suites)
            futures.push_back(std::async(std::launch::async, suite));
        for (auto& f : futures)
            out.properties.push_back(f.get());
    } else {
        for (auto& suite : suites)
            out.properties.push_back(suite());
    }
    return out;
}

RunReport run_extend(const InstanceSpec& spec, const RunOptions& opts)
{
    (void)opts;
    RunReport out;
    out.command = "extend";
    out.instance_echo = serialize_spec(spec);

    const Submeasure mu = build_submeasure(require_finite(spec, "extend"));
    out.extension = run_extension(mu);
    out.properties = out.extension->reports;
    const Classification cls = classify(mu);
    out.classification = to_string(cls.cls);
    return out;
}

RunReport run_choquet(const InstanceSpec& spec, const std::string& set_expr,
                      const RunOptions& opts)
{
    (void)opts;
    RunReport out;
    out.command = "choquet";
    out.instance_echo = serialize_spec(spec);

    const Submeasure mu = build_submeasure(require_finite(spec, "choquet"));
    if (!spec.finite->density)
        throw std::invalid_argument("missing density");
    const Density f(*spec.finite->density);
    const FiniteSet a = parse_set(set_expr, spec.finite->universe);

    out.choquet_value = choquet_integral(mu, f, a).to_string();
    out.properties.push_back(check_density_measurable(f, mu.domain()));

    const Submeasure derived = derived_submeasure(mu, f);
    const Classification cls = classify(derived);
    out.classification = to_string(cls.cls);
    for (auto& r : classification_properties(cls)) {
        r.property = "derived_" + r.property;
        out.properties.push_back(std::move(r));
    }
    return out;
}

RunReport run_dyadic(const InstanceSpec& spec, const RunOptions& opts)
{
    RunReport out;
    out.command = "dyadic";
    out.instance_echo = serialize_spec(spec);
    if (spec.model != ModelKind::dyadic || !spec.dyadic)
        throw std::invalid_argument("command 'dyadic' requires dyadic model");

    const DyadicInstance& inst = *spec.dyadic;
    const IntervalRule rule = build_interval_rule(inst);
    const double tol = opts.tol.value_or(inst.tol);
    const unsigned max_depth = opts.max_depth.value_or(inst.max_depth);
    const unsigned n_max = inst.n_max;

    if (inst.target) {
        out.properties.push_back(
            check_refinement_convergence(rule, *inst.target, tol, max_depth));
        out.properties.push_back(check_mu_cauchy(rule, *inst.target, n_max, tol));
        out.properties.push_back(check_monotone_limit(rule, *inst.target, n_max, tol));
    }
    out.properties.push_back(check_continuity_sequence(rule, n_max, tol));
    out.properties.push_back(check_exhaustive_sequence(rule, n_max, tol));
    return out;
}

std::string to_text(const RunReport& report)
{
    std::ostringstream out;
    out << "command: " << report.command << '\n';
    if (!report.classification.empty())
        out << "classification: " << report.classification << '\n';
    if (report.choquet_value)
        out << "integral: " << *report.choquet_value << '\n';
    for (const auto& p : report.properties)
        out << p.to_text();
    if (report.extension) {
        out << "mu_star table:\n";
        for (const auto& [set, value] : report.extension->mu_star_table)
            out << "  " << set.to_string() << " -> " << value.to_string() << '\n';
        out << "R0: " << report.extension->r_zero.to_string() << '\n';
        out << "null-completion witnesses:\n";
        for (const auto& [a, bc] : report.extension->completion_witnesses)
            out << "  " << a.to_string() << ": B=" << bc.first.to_string()
                << " C=" << bc.second.to_string() << '\n';
    }
    out << "exit: " << report.exit_status() << '\n';
    return out.str();
}

std::string to_json_text(const RunReport& report)
{
    using nlohmann::json;
    json j;
    j["schema"] = "report_v1";
    j["command"] = report.command;
    j["instance"] = report.instance_echo;
    if (!report.classification.empty())
        j["classification"] = report.classification;
    if (report.choquet_value)
        j["integral"] = *report.choquet_value;

    json props = json::array();
    for (const auto& p : report.properties) {
        json pj;
        pj["property"] = p.property;
        pj["verdict"] = to_string(p.verdict);
        json witnesses = json::array();
        for (const auto& w : p.witnesses) {
            json wj;
            wj["label"] = w.label;
            wj["sets"] = json::array();
            for (const auto& s : w.sets)
                wj["sets"].push_back(s.to_string());
            wj["values"] = w.values;
            witnesses.push_back(wj);
        }
        pj["witnesses"] = witnesses;
        json moduli = json::array();
        for (const auto& [eps, delta] : p.moduli)
            moduli.push_back({{"eps", to_string(eps)}, {"delta", to_string(delta)}});
        pj["moduli"] = moduli;
        json numbers = json::object();
        for (const auto& [label, value] : p.numbers)
            numbers[label] = value;
        pj["numbers"] = numbers;
        pj["notes"] = p.notes;
        props.push_back(pj);
    }
    j["properties"] = props;

    if (report.extension) {
        json ext;
        json table = json::array();
        for (const auto& [set, value] : report.extension->mu_star_table)
            table.push_back({{"set", set.to_string()}, {"mu_star", value.to_string()}});
        ext["mu_star"] = table;
        ext["r_zero"] = report.extension->r_zero.to_string();
        json witnesses = json::array();
        for (const auto& [a, bc] : report.extension->completion_witnesses)
            witnesses.push_back({{"set", a.to_string()},
                                 {"inner", bc.first.to_string()},
                                 {"outer", bc.second.to_string()}});
        ext["null_completion_witnesses"] = witnesses;
        j["extension"] = ext;
    }
    j["exit_status"] = report.exit_status();
    return j.dump(2);
}

} // namespace submeas
