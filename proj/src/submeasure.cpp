#include "submeas/submeasure.hpp"

#include "submeas/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace submeas {

namespace {

const Rat kIrrationalSlack = Rat(1, numerator(pow10(30)));

Witness pair_witness(std::string label, const FiniteSet& a, const FiniteSet& b,
                     std::vector<std::string> values = {})
{
    Witness w;
    w.label = std::move(label);
    w.sets = {a, b};
    w.values = std::move(values);
    return w;
}

// a <= b + slack, componentwise with the top element dominating.
bool leq_with_slack(const LatticeValue& a, const LatticeValue& b, const Rat& slack)
{
    if (b.is_top())
        return true;
    if (a.is_top())
        return false;
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.components()[i] > b.components()[i] + slack)
            return false;
    return true;
}

// |a - b| <= slack over extended values.
bool ext_close(const ExtRat& a, const ExtRat& b, const Rat& slack)
{
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() && b.is_infinite();
    Rat d = a.value() - b.value();
    if (d < 0)
        d = -d;
    return d <= slack;
}

struct PgpSearch {
    ExtRat delta = ExtRat::infinity();
    std::optional<std::pair<FiniteSet, FiniteSet>> argmin;
};

PgpSearch pgp_modulus_search(const Submeasure& mu, const Rat& eps)
{
    PgpSearch out;
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i; j < sets.size(); ++j) {
            const ExtRat union_norm = mu.norm_of(sets[i].unite(sets[j]));
            if (union_norm < ExtRat(eps))
                continue;
            const ExtRat cap = ext_max(mu.norm_at(i), mu.norm_at(j));
            if (cap < out.delta) {
                out.delta = cap;
                out.argmin = {sets[i], sets[j]};
            }
        }
    return out;
}

} // namespace

Rat Distortion::apply(const Rat& x) const
{
    if (x < 0)
        throw std::invalid_argument("distortion argument must be nonnegative");
    switch (kind) {
    case DistortionKind::identity: return x;
    case DistortionKind::sqrt: return approx_sqrt(x);
    case DistortionKind::x_over_1px: return x / (1 + x);
    case DistortionKind::cap2x: return std::min(Rat(1), Rat(2 * x));
    case DistortionKind::power: return approx_pow(x, exponent);
    case DistortionKind::zero: return 0;
    }
    throw std::logic_error("unknown distortion");
}

double Distortion::apply(double x) const
{
    if (x < 0)
        throw std::invalid_argument("distortion argument must be nonnegative");
    switch (kind) {
    case DistortionKind::identity: return x;
    case DistortionKind::sqrt: return std::sqrt(x);
    case DistortionKind::x_over_1px: return x / (1 + x);
    case DistortionKind::cap2x: return std::min(1.0, 2 * x);
    case DistortionKind::power: return std::pow(x, to_double(exponent));
    case DistortionKind::zero: return 0;
    }
    throw std::logic_error("unknown distortion");
}

bool Distortion::is_exact() const
{
    switch (kind) {
    case DistortionKind::identity:
    case DistortionKind::x_over_1px:
    case DistortionKind::cap2x:
    case DistortionKind::zero:
        return true;
    case DistortionKind::sqrt:
        return false;
    case DistortionKind::power:
        return exponent == 1;
    }
    return false;
}

std::string Distortion::name() const
{
    switch (kind) {
    case DistortionKind::identity: return "identity";
    case DistortionKind::sqrt: return "sqrt";
    case DistortionKind::x_over_1px: return "x_over_1px";
    case DistortionKind::cap2x: return "cap2x";
    case DistortionKind::power: return "power " + to_string(exponent);
    case DistortionKind::zero: return "zero";
    }
    return "?";
}

Distortion parse_distortion(const std::string& text)
{
    std::istringstream in(text);
    std::string head;
    in >> head;
    Distortion d;
    if (head == "identity")
        d.kind = DistortionKind::identity;
    else if (head == "sqrt")
        d.kind = DistortionKind::sqrt;
    else if (head == "x_over_1px")
        d.kind = DistortionKind::x_over_1px;
    else if (head == "cap2x")
        d.kind = DistortionKind::cap2x;
    else if (head == "zero")
        d.kind = DistortionKind::zero;
    else if (head == "power") {
        d.kind = DistortionKind::power;
        std::string param;
        if (!(in >> param))
            throw std::invalid_argument("power distortion needs an exponent");
        d.exponent = parse_rat(param);
        if (d.exponent <= 0 || d.exponent > 1)
            throw std::invalid_argument("power exponent outside (0, 1]");
    } else
        throw std::invalid_argument("unknown distortion '" + text + "'");
    std::string tail;
    if (in >> tail)
        throw std::invalid_argument("trailing tokens in distortion '" + text + "'");
    return d;
}

Submeasure::Submeasure(Ring domain, AdditiveRule rule)
    : domain_(std::move(domain)), rule_(std::move(rule))
{
    const auto& r = std::get<AdditiveRule>(rule_);
    if (r.point_weights.size() != domain_.universe_size())
        throw std::invalid_argument("additive rule needs one weight per universe point");
    for (const auto& w : r.point_weights)
        if (w.is_top())
            throw std::invalid_argument("additive weights must be vectors");
    dimension_ = r.point_weights.front().dim();
    for (const auto& w : r.point_weights)
        if (w.dim() != dimension_)
            throw std::invalid_argument("dimension mismatch in weights");
    build_tables();
}

Submeasure::Submeasure(Ring domain, DistortedRule rule)
    : domain_(std::move(domain)), rule_(std::move(rule))
{
    const auto& r = std::get<DistortedRule>(rule_);
    if (r.base_weights.size() != domain_.universe_size())
        throw std::invalid_argument("distorted rule needs one base weight per universe point");
    for (const auto& w : r.base_weights)
        if (w < 0)
            throw std::invalid_argument("base weights must be nonnegative");
    if (r.direction.is_top())
        throw std::invalid_argument("direction must be a vector");
    dimension_ = r.direction.dim();
    if (!r.distortion.is_exact())
        slack_ = kIrrationalSlack;
    build_tables();
}

Submeasure::Submeasure(Ring domain, TableRule rule)
    : domain_(std::move(domain)), rule_(std::move(rule))
{
    const auto& r = std::get<TableRule>(rule_);
    for (const auto& [set, value] : r.entries) {
        if (!domain_.contains(set))
            throw std::invalid_argument("table entry outside ring: " + set.to_string());
        if (!value.is_top() && dimension_ == 0)
            dimension_ = value.dim();
    }
    if (dimension_ == 0)
        dimension_ = 1; // all-top table; dimension is immaterial
    for (const auto& [set, value] : r.entries)
        if (!value.is_top() && value.dim() != dimension_)
            throw std::invalid_argument("dimension mismatch in table");
    build_tables();
}

Submeasure::Submeasure(Ring domain, ChoquetDerivedRule rule)
    : domain_(std::move(domain)), rule_(std::move(rule))
{
    const auto& r = std::get<ChoquetDerivedRule>(rule_);
    if (!r.base)
        throw std::invalid_argument("derived rule needs a base submeasure");
    if (r.base->domain() != domain_)
        throw std::invalid_argument("derived rule must share the base ring");
    if (r.density.size() != domain_.universe_size())
        throw std::invalid_argument("density needs one value per universe point");
    for (const auto& v : r.density)
        if (v < 0)
            throw std::invalid_argument("density must be nonnegative");
    dimension_ = r.base->dimension();
    slack_ = r.base->slack();
    build_tables();
}

void Submeasure::build_tables()
{
    const auto& sets = domain_.sets();
    values_.reserve(sets.size());

    if (const auto* add = std::get_if<AdditiveRule>(&rule_)) {
        for (const auto& s : sets) {
            LatticeValue v = LatticeValue::zero(dimension_);
            for (unsigned t = 0; t < domain_.universe_size(); ++t)
                if (s.contains(t))
                    v = submeas::add(v, add->point_weights[t]);
            values_.push_back(std::move(v));
        }
    } else if (const auto* dis = std::get_if<DistortedRule>(&rule_)) {
        for (const auto& s : sets) {
            Rat w = 0;
            for (unsigned t = 0; t < domain_.universe_size(); ++t)
                if (s.contains(t))
                    w += dis->base_weights[t];
            values_.push_back(scale(dis->distortion.apply(w), dis->direction));
        }
    } else if (const auto* tab = std::get_if<TableRule>(&rule_)) {
        for (const auto& s : sets) {
            const LatticeValue* found = nullptr;
            for (const auto& [set, value] : tab->entries)
                if (set == s)
                    found = &value;
            if (!found)
                throw std::invalid_argument("table does not cover " + s.to_string());
            values_.push_back(*found);
        }
    } else {
        const auto& der = std::get<ChoquetDerivedRule>(rule_);
        const Density f(der.density);
        for (const auto& s : sets)
            values_.push_back(choquet_integral(*der.base, f, s));
    }

    norms_.reserve(values_.size());
    for (const auto& v : values_)
        norms_.push_back(norm(v));
}

const LatticeValue& Submeasure::evaluate(const FiniteSet& a) const
{
    const auto& sets = domain_.sets();
    const auto it = std::lower_bound(sets.begin(), sets.end(), a);
    if (it == sets.end() || *it != a)
        throw std::invalid_argument("set outside ring");
    return values_[std::size_t(it - sets.begin())];
}

std::string Submeasure::rule_name() const
{
    if (std::holds_alternative<AdditiveRule>(rule_))
        return "additive";
    if (const auto* d = std::get_if<DistortedRule>(&rule_))
        return "distorted " + d->distortion.name();
    if (std::holds_alternative<TableRule>(rule_))
        return "table";
    return "choquet_derived";
}

std::vector<Rat> standard_eps_grid(unsigned j_max)
{
    std::vector<Rat> grid;
    grid.reserve(j_max + 1);
    for (unsigned j = 0; j <= j_max; ++j)
        grid.push_back(pow2(-int(j)));
    return grid;
}

PropertyReport check_monotone(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "monotone";
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j) {
            if (i == j || !sets[i].subset_of(sets[j]))
                continue;
            if (!leq_with_slack(mu.value_table()[i], mu.value_table()[j], mu.slack())) {
                report.fail(pair_witness("mu(A) > mu(B) for A subset of B", sets[i], sets[j],
                                         {mu.value_table()[i].to_string(),
                                          mu.value_table()[j].to_string()}));
                return report;
            }
        }
    return report;
}

PropertyReport check_continuity(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "continuous_at_empty";
    report.notes.push_back("finite ring: decreasing-to-empty sequences are eventually empty; "
                           "check reduces to ||mu(empty)|| = 0");
    const FiniteSet empty = FiniteSet::empty(mu.domain().universe_size());
    if (!mu.norm_of(empty).is_zero()) {
        Witness w;
        w.label = "nonzero value at the empty set";
        w.sets = {empty};
        w.values = {mu.evaluate(empty).to_string()};
        report.fail(std::move(w));
    }
    return report;
}

ExtRat sc_modulus(const Submeasure& mu, const FiniteSet& a, const Rat& eps)
{
    if (eps <= 0)
        throw std::invalid_argument("eps must be positive");
    const ExtRat na = mu.norm_of(a);
    ExtRat delta = ExtRat::infinity();
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const ExtRat union_norm = mu.norm_of(a.unite(sets[i]));
        const ExtRat diff_norm = mu.norm_of(a.difference(sets[i]));
        const bool violates = union_norm > na + ExtRat(eps) || na > diff_norm + ExtRat(eps);
        if (violates)
            delta = ext_min(delta, mu.norm_at(i));
    }
    return delta;
}

ExtRat usc_modulus(const Submeasure& mu, const Rat& eps)
{
    ExtRat delta = ExtRat::infinity();
    for (const auto& a : mu.domain().sets())
        delta = ext_min(delta, sc_modulus(mu, a, eps));
    return delta;
}

bool sc_holds_exact(const Submeasure& mu, const FiniteSet& a, std::optional<FiniteSet>* witness)
{
    const ExtRat na = mu.norm_of(a);
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const bool eventual_violator = mu.norm_of(a.unite(sets[i])) > na ||
                                       na > mu.norm_of(a.difference(sets[i]));
        if (eventual_violator && mu.norm_at(i).is_zero()) {
            if (witness)
                *witness = sets[i];
            return false;
        }
    }
    return true;
}

bool usc_holds_exact(const Submeasure& mu,
                     std::optional<std::pair<FiniteSet, FiniteSet>>* witness)
{
    for (const auto& a : mu.domain().sets()) {
        std::optional<FiniteSet> b;
        if (!sc_holds_exact(mu, a, &b)) {
            if (witness)
                *witness = {a, *b};
            return false;
        }
    }
    return true;
}

bool pgp_holds_exact(const Submeasure& mu,
                     std::optional<std::pair<FiniteSet, FiniteSet>>* witness)
{
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i; j < sets.size(); ++j) {
            if (!mu.norm_at(i).is_zero() || !mu.norm_at(j).is_zero())
                continue;
            if (!mu.norm_of(sets[i].unite(sets[j])).is_zero()) {
                if (witness)
                    *witness = {sets[i], sets[j]};
                return false;
            }
        }
    return true;
}

PropertyReport check_sc_equivalence(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "sc_equivalence";

    // The equivalence argument runs through ||mu(A u X)|| >= ||mu(A d X)||,
    // so it needs a monotone instance; a non-monotone table can satisfy the
    // symmetric-difference form while failing the modulus form.
    if (check_monotone(mu).verdict != Verdict::holds) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("equivalence is only claimed for monotone instances");
        return report;
    }

    bool moduli_verdict = true;
    for (const auto& a : mu.domain().sets())
        moduli_verdict = moduli_verdict && sc_holds_exact(mu, a);

    // Symmetric-difference characterization: every C whose norm deviates
    // from ||mu(A)|| must sit at positive distance ||mu(A delta C)||.
    bool delta_verdict = true;
    std::optional<std::pair<FiniteSet, FiniteSet>> delta_witness;
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size() && delta_verdict; ++i)
        for (std::size_t j = 0; j < sets.size() && delta_verdict; ++j) {
            const bool deviates = mu.norm_at(i) != mu.norm_at(j);
            if (deviates && mu.norm_of(sets[i].symm_diff(sets[j])).is_zero()) {
                delta_verdict = false;
                delta_witness = {sets[i], sets[j]};
            }
        }

    report.notes.push_back(std::string("modulus formulation: ") +
                           (moduli_verdict ? "holds" : "fails"));
    report.notes.push_back(std::string("symmetric-difference formulation: ") +
                           (delta_verdict ? "holds" : "fails"));
    if (moduli_verdict != delta_verdict) {
        Witness w;
        w.label = "formulations disagree";
        if (delta_witness)
            w.sets = {delta_witness->first, delta_witness->second};
        report.fail(std::move(w));
    }
    return report;
}

PropertyReport check_usc_equivalence(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "usc_equivalence";

    if (check_monotone(mu).verdict != Verdict::holds) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("equivalence is only claimed for monotone instances");
        return report;
    }

    const bool moduli_verdict = usc_holds_exact(mu);

    bool delta_verdict = true;
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size() && delta_verdict; ++i)
        for (std::size_t j = 0; j < sets.size() && delta_verdict; ++j) {
            const bool deviates = mu.norm_at(i) != mu.norm_at(j);
            if (deviates && mu.norm_of(sets[i].symm_diff(sets[j])).is_zero())
                delta_verdict = false;
        }

    report.notes.push_back(std::string("modulus formulation: ") +
                           (moduli_verdict ? "holds" : "fails"));
    report.notes.push_back(std::string("symmetric-difference formulation: ") +
                           (delta_verdict ? "holds" : "fails"));
    if (moduli_verdict != delta_verdict)
        report.fail({.label = "formulations disagree", .sets = {}, .values = {}});
    return report;
}

ExtRat pgp_modulus(const Submeasure& mu, const Rat& eps)
{
    if (eps <= 0)
        throw std::invalid_argument("eps must be positive");
    return pgp_modulus_search(mu, eps).delta;
}

std::vector<Rat> delta_sequence(const Submeasure& mu, unsigned k_max)
{
    std::vector<Rat> deltas;
    deltas.reserve(k_max);
    for (unsigned k = 1; k <= k_max; ++k) {
        const Rat eps = k == 1 ? Rat(1, 2) : deltas.back();
        const PgpSearch search = pgp_modulus_search(mu, eps);
        if (search.delta.is_zero()) {
            const auto& [a, b] = *search.argmin;
            throw std::domain_error("pseudometric generating property fails at eps=" +
                                    to_string(eps) + "; witness pair " + a.to_string() + ", " +
                                    b.to_string());
        }
        ExtRat bound = ext_min(ExtRat(pow2(-int(k))), search.delta);
        if (k > 1)
            bound = ext_min(bound, ExtRat(deltas.back()));
        deltas.push_back(bound.value() / 2);
    }
    return deltas;
}

PropertyReport verify_chained_union_bound(const Submeasure& mu, const std::vector<Rat>& deltas,
                                          const std::vector<FiniteSet>& family)
{
    PropertyReport report;
    report.property = "chained_union_bound";

    auto vacuous = [&](const std::string& why) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("precondition failed: " + why);
        return report;
    };

    if (family.size() > deltas.size())
        return vacuous("family longer than the delta sequence");
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!mu.domain().contains(family[i]))
            return vacuous("family member outside ring: " + family[i].to_string());
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!family[i].intersect(family[j]).is_empty())
                return vacuous("family not pairwise disjoint: " + family[i].to_string() + ", " +
                               family[j].to_string());
        if (!(mu.norm_of(family[i]) < ExtRat(deltas[i])))
            return vacuous("||mu(A_" + std::to_string(i + 1) + ")|| not below delta_" +
                           std::to_string(i + 1));
    }

    for (std::size_t k = 1; k + 1 <= family.size(); ++k) {
        FiniteSet acc = FiniteSet::empty(mu.domain().universe_size());
        for (std::size_t i = k; i < family.size(); ++i) { // i is 0-based index of A_{i+1}
            acc = acc.unite(family[i]);
            if (!(mu.norm_of(acc) < ExtRat(deltas[k - 1]))) {
                Witness w;
                w.label = "union from k+1 to k+p reaches delta_k (k=" + std::to_string(k) +
                          ", p=" + std::to_string(i - k + 1) + ")";
                w.sets = {acc};
                w.values = {to_string(mu.norm_of(acc)), to_string(deltas[k - 1])};
                report.fail(std::move(w));
                return report;
            }
        }
    }
    return report;
}

PropertyReport check_exhaustive(const Submeasure& mu)
{
    PropertyReport report = check_continuity(mu);
    report.property = "exhaustive";
    report.notes.clear();
    report.notes.push_back("finite ring: infinite pairwise-disjoint sequences are eventually "
                           "empty; check reduces to ||mu(empty)|| = 0");
    return report;
}

PropertyReport check_subadditive(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "subadditive";
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i; j < sets.size(); ++j) {
            const ExtRat lhs = mu.norm_of(sets[i].unite(sets[j]));
            const ExtRat rhs = mu.norm_at(i) + mu.norm_at(j) + ExtRat(mu.slack());
            if (lhs > rhs) {
                report.fail(pair_witness("||mu(A u B)|| > ||mu(A)|| + ||mu(B)||", sets[i],
                                         sets[j],
                                         {to_string(lhs), to_string(mu.norm_at(i)),
                                          to_string(mu.norm_at(j))}));
                return report;
            }
        }
    return report;
}

PropertyReport check_additive(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "additive";
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i; j < sets.size(); ++j) {
            if (!sets[i].intersect(sets[j]).is_empty())
                continue;
            const ExtRat lhs = mu.norm_of(sets[i].unite(sets[j]));
            const ExtRat rhs = mu.norm_at(i) + mu.norm_at(j);
            if (!ext_close(lhs, rhs, mu.slack())) {
                report.fail(pair_witness("||mu(A u B)|| != ||mu(A)|| + ||mu(B)|| on a disjoint "
                                         "pair",
                                         sets[i], sets[j], {to_string(lhs), to_string(rhs)}));
                return report;
            }
        }
    return report;
}

std::string to_string(SubmeasureClass cls)
{
    switch (cls) {
    case SubmeasureClass::not_d: return "not-D";
    case SubmeasureClass::d: return "D";
    case SubmeasureClass::d_u: return "D_u";
    case SubmeasureClass::d_s: return "D_s";
    case SubmeasureClass::d_a: return "D_a";
    }
    return "?";
}

Classification classify(const Submeasure& mu)
{
    Classification out;

    PropertyReport monotone = check_monotone(mu);
    PropertyReport continuity = check_continuity(mu);
    PropertyReport subadd = check_subadditive(mu);
    PropertyReport additive = check_additive(mu);

    out.monotone = monotone.verdict == Verdict::holds;
    out.continuous = continuity.verdict == Verdict::holds;
    out.subadditive = subadd.verdict == Verdict::holds;
    out.additive = additive.verdict == Verdict::holds;
    out.order_bounded = is_order_bounded(mu.value_table(), mu.dimension()).bounded;

    PropertyReport sc;
    sc.property = "subadditively_continuous";
    out.sc = true;
    for (const auto& a : mu.domain().sets()) {
        std::optional<FiniteSet> b;
        if (!sc_holds_exact(mu, a, &b)) {
            out.sc = false;
            sc.fail(pair_witness("no positive delta works at A (violator B has norm 0)", a, *b));
            break;
        }
    }

    PropertyReport usc;
    usc.property = "uniformly_subadditively_continuous";
    {
        std::optional<std::pair<FiniteSet, FiniteSet>> w;
        out.usc = usc_holds_exact(mu, &w);
        if (!out.usc)
            usc.fail(pair_witness("no uniform positive delta works", w->first, w->second));
        for (const Rat& eps : standard_eps_grid())
            usc.moduli.emplace_back(eps, usc_modulus(mu, eps));
    }

    PropertyReport pgp;
    pgp.property = "pseudometric_generating";
    {
        std::optional<std::pair<FiniteSet, FiniteSet>> w;
        out.pgp = pgp_holds_exact(mu, &w);
        if (!out.pgp)
            pgp.fail(pair_witness("null pair with non-null union", w->first, w->second));
        for (const Rat& eps : standard_eps_grid())
            pgp.moduli.emplace_back(eps, pgp_modulus(mu, eps));
    }

    const bool is_d = out.monotone && out.continuous && out.sc;
    if (out.monotone && out.continuous && out.additive)
        out.cls = SubmeasureClass::d_a;
    else if (out.monotone && out.continuous && out.subadditive)
        out.cls = SubmeasureClass::d_s;
    else if (is_d && out.usc)
        out.cls = SubmeasureClass::d_u;
    else if (is_d)
        out.cls = SubmeasureClass::d;
    else
        out.cls = SubmeasureClass::not_d;

    out.reports.push_back(std::move(monotone));
    out.reports.push_back(std::move(continuity));
    out.reports.push_back(std::move(sc));
    out.reports.push_back(std::move(usc));
    out.reports.push_back(std::move(subadd));
    out.reports.push_back(std::move(additive));
    out.reports.push_back(std::move(pgp));
    return out;
}

PropertyReport check_sigma_subadditive(const Submeasure& mu, unsigned max_cover)
{
    PropertyReport report;
    report.property = "sigma_subadditive";

    const Classification cls = classify(mu);
    if (!(cls.cls == SubmeasureClass::d_s || cls.cls == SubmeasureClass::d_a)) {
        report.verdict = Verdict::vacuous;
        report.notes.push_back("instance is not subadditive; nothing to check");
        return report;
    }
    report.notes.push_back("finite ring realizes the countable statement with covers of size <= " +
                           std::to_string(max_cover));

    const auto& sets = mu.domain().sets();
    std::vector<std::size_t> pick;
    // Enumerates covers as strictly increasing index tuples.
    auto sweep = [&](auto&& self, std::size_t start, const FiniteSet& covered,
                     const ExtRat& norm_sum) -> bool {
        if (!pick.empty()) {
            for (std::size_t ai = 0; ai < sets.size(); ++ai) {
                if (!sets[ai].subset_of(covered))
                    continue;
                if (mu.norm_at(ai) > norm_sum + ExtRat(mu.slack())) {
                    Witness w;
                    w.label = "cover sum below ||mu(A)||";
                    w.sets.push_back(sets[ai]);
                    for (std::size_t k : pick)
                        w.sets.push_back(sets[k]);
                    w.values = {to_string(mu.norm_at(ai)), to_string(norm_sum)};
                    report.fail(std::move(w));
                    return false;
                }
            }
        }
        if (pick.size() == max_cover)
            return true;
        for (std::size_t i = start; i < sets.size(); ++i) {
            pick.push_back(i);
            const bool keep = self(self, i + 1, covered.unite(sets[i]),
                                   norm_sum + mu.norm_at(i));
            pick.pop_back();
            if (!keep)
                return false;
        }
        return true;
    };
    sweep(sweep, 0, FiniteSet::empty(mu.domain().universe_size()), ExtRat(0));
    return report;
}

PropertyReport check_ac_condition(const Submeasure& mu)
{
    PropertyReport report;
    report.property = "absolute_continuity_condition";
    const auto& sets = mu.domain().sets();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i; j < sets.size(); ++j) {
            if (!(mu.norm_at(i) + mu.norm_at(j)).is_zero())
                continue;
            if (!mu.norm_of(sets[i].unite(sets[j])).is_zero()) {
                report.fail(pair_witness("null norm sum but non-null union", sets[i], sets[j]));
                return report;
            }
        }
    report.notes.push_back("uniform instances must satisfy this condition; cross-checked by the "
                           "classification sweeps");
    return report;
}

} // namespace submeas
