#include "submeas/specfile.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace submeas {

namespace {

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& message)
{
    throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_whitespace(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string token;
    while (in >> token)
        out.push_back(token);
    return out;
}

// Splits a sequence of parenthesized or braced literals: "(1, 0) (0, 1)".
std::vector<std::string> split_groups(const std::string& s, char open, char close)
{
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != open)
            throw std::invalid_argument("expected '" + std::string(1, open) + "' in '" + s + "'");
        const auto end = s.find(close, i);
        if (end == std::string::npos)
            throw std::invalid_argument("unterminated group in '" + s + "'");
        out.push_back(s.substr(i, end - i + 1));
        i = end + 1;
    }
    return out;
}

RuleKind parse_rule_kind(const std::string& text, std::size_t line)
{
    if (text == "additive")
        return RuleKind::additive;
    if (text == "distorted")
        return RuleKind::distorted;
    if (text == "table")
        return RuleKind::table;
    if (text == "choquet_derived")
        return RuleKind::choquet_derived;
    parse_fail(line, "unknown rule '" + text + "'");
}

TargetSet parse_target(const std::string& text, std::size_t line)
{
    const auto tokens = split_whitespace(text);
    if (tokens.empty())
        parse_fail(line, "empty target");
    try {
        if (tokens[0] == "interval") {
            if (tokens.size() != 3)
                parse_fail(line, "target interval needs two endpoints");
            return TargetSet::interval(parse_rat(tokens[1]), parse_rat(tokens[2]));
        }
        if (tokens[0] == "cantor") {
            if (tokens.size() != 2)
                parse_fail(line, "target cantor needs a stage");
            return TargetSet::cantor_stage(unsigned(std::stoul(tokens[1])));
        }
        if (tokens[0] == "union") {
            const auto open = text.find('[');
            const auto close = text.rfind(']');
            if (open == std::string::npos || close == std::string::npos || close < open)
                parse_fail(line, "target union needs a bracketed list");
            std::vector<std::pair<Rat, Rat>> intervals;
            std::istringstream body(text.substr(open + 1, close - open - 1));
            std::string item;
            while (std::getline(body, item, ',')) {
                const auto ends = split_whitespace(item);
                if (ends.size() != 2)
                    parse_fail(line, "union item needs two endpoints: '" + item + "'");
                intervals.emplace_back(parse_rat(ends[0]), parse_rat(ends[1]));
            }
            return TargetSet::union_of(std::move(intervals));
        }
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& err) {
        parse_fail(line, err.what());
    }
    parse_fail(line, "unknown target descriptor '" + tokens[0] + "'");
}

} // namespace

std::string to_string(ModelKind m)
{
    return m == ModelKind::finite ? "finite" : "dyadic";
}

std::string to_string(RuleKind r)
{
    switch (r) {
    case RuleKind::additive: return "additive";
    case RuleKind::distorted: return "distorted";
    case RuleKind::table: return "table";
    case RuleKind::choquet_derived: return "choquet_derived";
    }
    return "?";
}

InstanceSpec parse_spec(std::istream& in)
{
    struct Entry {
        std::size_t line;
        std::string key;
        std::string value;
    };
    std::vector<Entry> entries;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            parse_fail(line_no, "expected 'key = value'");
        entries.push_back({line_no, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }

    InstanceSpec spec;
    bool model_seen = false;
    for (const auto& e : entries) {
        if (e.key == "model") {
            if (e.value == "finite")
                spec.model = ModelKind::finite;
            else if (e.value == "dyadic")
                spec.model = ModelKind::dyadic;
            else
                parse_fail(e.line, "unknown model '" + e.value + "'");
            model_seen = true;
            break;
        }
    }
    if (!model_seen)
        parse_fail(1, "missing 'model' key");

    if (spec.model == ModelKind::finite) {
        FiniteInstance inst;
        std::optional<std::string> generators_text;
        std::size_t generators_line = 0;
        std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> table_raw;
        for (const auto& e : entries) {
            try {
                if (e.key == "model") {
                } else if (e.key == "universe") {
                    inst.universe = unsigned(std::stoul(e.value));
                } else if (e.key == "generators") {
                    generators_text = e.value;
                    generators_line = e.line;
                } else if (e.key == "rule") {
                    inst.rule = parse_rule_kind(e.value, e.line);
                } else if (e.key == "base_rule") {
                    inst.base_rule = parse_rule_kind(e.value, e.line);
                } else if (e.key == "weights") {
                    for (const auto& group : split_groups(e.value, '(', ')'))
                        inst.weights.push_back(parse_vector_literal(group));
                } else if (e.key == "base_weights") {
                    for (const auto& tok : split_whitespace(e.value))
                        inst.base_weights.push_back(parse_rat(tok));
                } else if (e.key == "distortion") {
                    inst.distortion = parse_distortion(e.value);
                } else if (e.key == "direction") {
                    inst.direction = parse_vector_literal(e.value);
                } else if (e.key == "f") {
                    inst.density = parse_density(e.value).values;
                } else if (e.key == "eps_grid") {
                    for (const auto& tok : split_whitespace(e.value))
                        spec.eps_grid.push_back(parse_rat(tok));
                } else if (e.key.rfind("value ", 0) == 0) {
                    table_raw.push_back({e.line, {e.key.substr(6), e.value}});
                } else {
                    parse_fail(e.line, "unknown key '" + e.key + "'");
                }
            } catch (const std::runtime_error&) {
                throw;
            } catch (const std::exception& err) {
                parse_fail(e.line, err.what());
            }
        }
        if (inst.universe == 0)
            parse_fail(1, "finite model needs a positive 'universe'");
        if (generators_text) {
            try {
                for (const auto& group : split_groups(*generators_text, '{', '}'))
                    inst.generators.push_back(parse_set(group, inst.universe));
            } catch (const std::exception& err) {
                parse_fail(generators_line, err.what());
            }
        }
        for (const auto& [line, kv] : table_raw) {
            try {
                inst.table_entries.emplace_back(parse_set(kv.first, inst.universe),
                                                parse_vector_literal(kv.second));
            } catch (const std::exception& err) {
                parse_fail(line, err.what());
            }
        }
        spec.finite = std::move(inst);
    } else {
        DyadicInstance inst;
        for (const auto& e : entries) {
            try {
                if (e.key == "model") {
                } else if (e.key == "distortions") {
                    // groups separated by whitespace; "power p" counts as one
                    const auto tokens = split_whitespace(e.value);
                    for (std::size_t i = 0; i < tokens.size(); ++i) {
                        if (tokens[i] == "power") {
                            if (i + 1 == tokens.size())
                                parse_fail(e.line, "power distortion needs an exponent");
                            inst.distortions.push_back(
                                parse_distortion("power " + tokens[i + 1]));
                            ++i;
                        } else {
                            inst.distortions.push_back(parse_distortion(tokens[i]));
                        }
                    }
                } else if (e.key == "target") {
                    inst.target = parse_target(e.value, e.line);
                } else if (e.key == "tol") {
                    inst.tol = std::stod(e.value);
                } else if (e.key == "max_depth") {
                    inst.max_depth = unsigned(std::stoul(e.value));
                } else if (e.key == "n_max") {
                    inst.n_max = unsigned(std::stoul(e.value));
                } else if (e.key == "eps_grid") {
                    for (const auto& tok : split_whitespace(e.value))
                        spec.eps_grid.push_back(parse_rat(tok));
                } else {
                    parse_fail(e.line, "unknown key '" + e.key + "'");
                }
            } catch (const std::runtime_error&) {
                throw;
            } catch (const std::exception& err) {
                parse_fail(e.line, err.what());
            }
        }
        if (inst.distortions.empty())
            parse_fail(1, "dyadic model needs 'distortions'");
        spec.dyadic = std::move(inst);
    }
    return spec;
}

InstanceSpec parse_spec_text(const std::string& text)
{
    std::istringstream in(text);
    return parse_spec(in);
}

InstanceSpec parse_spec_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open spec file '" + path + "'");
    return parse_spec(in);
}

std::string serialize_spec(const InstanceSpec& spec)
{
    std::ostringstream out;
    out << "model = " << to_string(spec.model) << '\n';
    if (spec.model == ModelKind::finite && spec.finite) {
        const auto& inst = *spec.finite;
        out << "universe = " << inst.universe << '\n';
        out << "generators =";
        for (const auto& g : inst.generators)
            out << ' ' << g.to_string();
        out << '\n';
        out << "rule = " << to_string(inst.rule) << '\n';
        if (inst.base_rule)
            out << "base_rule = " << to_string(*inst.base_rule) << '\n';
        if (!inst.weights.empty()) {
            out << "weights =";
            for (const auto& w : inst.weights)
                out << ' ' << format_vector_literal(w);
            out << '\n';
        }
        if (!inst.base_weights.empty()) {
            out << "base_weights =";
            for (const auto& w : inst.base_weights)
                out << ' ' << to_string(w);
            out << '\n';
        }
        if (inst.distortion)
            out << "distortion = " << inst.distortion->name() << '\n';
        if (inst.direction)
            out << "direction = " << format_vector_literal(*inst.direction) << '\n';
        for (const auto& [set, value] : inst.table_entries)
            out << "value " << set.to_string() << " = " << format_vector_literal(value) << '\n';
        if (inst.density)
            out << "f = " << Density(*inst.density).to_string() << '\n';
    } else if (spec.dyadic) {
        const auto& inst = *spec.dyadic;
        out << "distortions =";
        for (const auto& g : inst.distortions)
            out << ' ' << g.name();
        out << '\n';
        if (inst.target) {
            out << "target = ";
            const auto& intervals = inst.target->intervals();
            if (intervals.size() == 1) {
                out << "interval " << to_string(intervals[0].first) << ' '
                    << to_string(intervals[0].second);
            } else {
                out << "union [";
                for (std::size_t i = 0; i < intervals.size(); ++i) {
                    if (i)
                        out << ", ";
                    out << to_string(intervals[i].first) << ' ' << to_string(intervals[i].second);
                }
                out << ']';
            }
            out << '\n';
        }
        out << "tol = " << inst.tol << '\n';
        out << "max_depth = " << inst.max_depth << '\n';
        out << "n_max = " << inst.n_max << '\n';
    }
    if (!spec.eps_grid.empty()) {
        out << "eps_grid =";
        for (const auto& eps : spec.eps_grid)
            out << ' ' << to_string(eps);
        out << '\n';
    }
    return out.str();
}

namespace {

Submeasure build_rule(const Ring& ring, RuleKind rule, const FiniteInstance& inst)
{
    switch (rule) {
    case RuleKind::additive: {
        AdditiveRule r;
        r.point_weights = inst.weights;
        return Submeasure(ring, std::move(r));
    }
    case RuleKind::distorted: {
        if (!inst.distortion || !inst.direction)
            throw std::invalid_argument("distorted rule needs 'distortion' and 'direction'");
        DistortedRule r;
        r.base_weights = inst.base_weights;
        r.distortion = *inst.distortion;
        r.direction = *inst.direction;
        return Submeasure(ring, std::move(r));
    }
    case RuleKind::table: {
        TableRule r;
        r.entries = inst.table_entries;
        return Submeasure(ring, std::move(r));
    }
    case RuleKind::choquet_derived:
        throw std::invalid_argument("choquet_derived cannot be its own base rule");
    }
    throw std::logic_error("unknown rule");
}

} // namespace

Submeasure build_submeasure(const FiniteInstance& inst)
{
    const Ring ring =
        generate_ring(inst.universe, SetClass(inst.universe, inst.generators));
    if (inst.rule != RuleKind::choquet_derived)
        return build_rule(ring, inst.rule, inst);

    if (!inst.base_rule)
        throw std::invalid_argument("choquet_derived rule needs 'base_rule'");
    if (!inst.density)
        throw std::invalid_argument("choquet_derived rule needs a density 'f'");
    ChoquetDerivedRule rule;
    rule.base = std::make_shared<Submeasure>(build_rule(ring, *inst.base_rule, inst));
    rule.density = *inst.density;
    return Submeasure(ring, std::move(rule));
}

IntervalRule build_interval_rule(const DyadicInstance& inst)
{
    return IntervalRule(inst.distortions);
}

bool semantically_equal(const InstanceSpec& a, const InstanceSpec& b)
{
    return serialize_spec(a) == serialize_spec(b);
}

} // namespace submeas
