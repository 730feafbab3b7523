#include "submeas/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace submeas {

LatticeValue::LatticeValue(std::vector<Rat> components) : vec_(std::move(components))
{
    if (vec_.empty())
        throw std::invalid_argument("lattice value needs dimension >= 1");
    for (const auto& c : vec_)
        if (c < 0)
            throw std::invalid_argument("lattice value outside the positive cone");
}

LatticeValue LatticeValue::top()
{
    return LatticeValue();
}

LatticeValue LatticeValue::zero(std::size_t dim)
{
    return LatticeValue(std::vector<Rat>(dim, Rat(0)));
}

bool LatticeValue::is_zero() const
{
    if (top_)
        return false;
    return std::all_of(vec_.begin(), vec_.end(), [](const Rat& c) { return c == 0; });
}

std::size_t LatticeValue::dim() const
{
    if (top_)
        throw std::logic_error("top element has no dimension");
    return vec_.size();
}

const std::vector<Rat>& LatticeValue::components() const
{
    if (top_)
        throw std::logic_error("top element has no components");
    return vec_;
}

std::string LatticeValue::to_string() const
{
    return format_vector_literal(*this);
}

ExtRat norm(const LatticeValue& v)
{
    if (v.is_top())
        return ExtRat::infinity();
    Rat sum = 0;
    for (const auto& c : v.components())
        sum += c;
    return ExtRat(sum);
}

bool lattice_leq(const LatticeValue& a, const LatticeValue& b)
{
    if (b.is_top())
        return true;
    if (a.is_top())
        return false;
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a.components()[i] > b.components()[i])
            return false;
    return true;
}

LatticeValue add(const LatticeValue& a, const LatticeValue& b)
{
    if (a.is_top() || b.is_top())
        return LatticeValue::top();
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    std::vector<Rat> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        out[i] = a.components()[i] + b.components()[i];
    return LatticeValue(std::move(out));
}

LatticeValue scale(const Rat& c, const LatticeValue& v)
{
    if (c < 0)
        throw std::invalid_argument("negative scale on the cone");
    if (v.is_top()) {
        if (c == 0)
            throw std::invalid_argument("0 * top is undefined");
        return LatticeValue::top();
    }
    std::vector<Rat> out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        out[i] = c * v.components()[i];
    return LatticeValue(std::move(out));
}

ExtRat norm_of_difference(const LatticeValue& a, const LatticeValue& b)
{
    if (a.is_top() || b.is_top()) {
        if (a.is_top() && b.is_top())
            return ExtRat(0);
        return ExtRat::infinity();
    }
    if (a.dim() != b.dim())
        throw std::invalid_argument("dimension mismatch");
    Rat sum = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Rat d = a.components()[i] - b.components()[i];
        sum += d < 0 ? -d : d;
    }
    return ExtRat(sum);
}

LatticeValue lattice_sup(const std::vector<LatticeValue>& vs)
{
    if (vs.empty())
        throw std::invalid_argument("supremum of an empty family");
    for (const auto& v : vs)
        if (v.is_top())
            return LatticeValue::top();
    std::vector<Rat> out = vs.front().components();
    for (std::size_t k = 1; k < vs.size(); ++k) {
        if (vs[k].dim() != out.size())
            throw std::invalid_argument("dimension mismatch");
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::max(out[i], vs[k].components()[i]);
    }
    return LatticeValue(std::move(out));
}

LatticeValue lattice_inf(const std::vector<LatticeValue>& vs)
{
    if (vs.empty())
        throw std::invalid_argument("infimum of an empty family");
    std::vector<Rat> out;
    bool seeded = false;
    for (const auto& v : vs) {
        if (v.is_top())
            continue;
        if (!seeded) {
            out = v.components();
            seeded = true;
            continue;
        }
        if (v.dim() != out.size())
            throw std::invalid_argument("dimension mismatch");
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::min(out[i], v.components()[i]);
    }
    if (!seeded)
        return LatticeValue::top();
    return LatticeValue(std::move(out));
}

OrderInterval::OrderInterval(LatticeValue lo_, LatticeValue hi_)
    : lo(std::move(lo_)), hi(std::move(hi_))
{
    if (lo.is_top() || hi.is_top())
        throw std::invalid_argument("order interval endpoints must be vectors");
    if (!lattice_leq(lo, hi))
        throw std::invalid_argument("order interval requires lo <= hi");
}

OrderBoundedness is_order_bounded(const std::vector<LatticeValue>& values, std::size_t dim)
{
    OrderBoundedness out;
    if (values.empty()) {
        out.bounded = true;
        out.interval = OrderInterval(LatticeValue::zero(dim), LatticeValue::zero(dim));
        return out;
    }
    for (const auto& v : values)
        if (v.is_top())
            return out; // unbounded
    out.bounded = true;
    out.interval = OrderInterval(lattice_inf(values), lattice_sup(values));
    return out;
}

PropertyReport check_directed_norm_limit(const std::vector<LatticeValue>& family,
                                         Direction direction)
{
    if (family.empty())
        throw std::invalid_argument("empty family");
    const bool down = direction == Direction::down;

    auto comparable_towards = [&](const LatticeValue& c, const LatticeValue& x) {
        return down ? lattice_leq(c, x) : lattice_leq(x, c);
    };

    // Directedness: every pair has a common lower (upper) member inside the
    // family. A finite directed family then contains its extremum.
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            bool found = false;
            for (const auto& c : family)
                if (comparable_towards(c, family[i]) && comparable_towards(c, family[j])) {
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("not directed: no common " +
                                            std::string(down ? "lower" : "upper") +
                                            " member for " + family[i].to_string() + " and " +
                                            family[j].to_string());
        }

    const LatticeValue* extremum = &family.front();
    for (const auto& v : family)
        if (comparable_towards(v, *extremum))
            extremum = &v;

    PropertyReport report;
    report.property = down ? "directed_norm_limit_down" : "directed_norm_limit_up";
    ExtRat extremal_norm = norm(family.front());
    for (const auto& v : family)
        extremal_norm = down ? ext_min(extremal_norm, norm(v)) : ext_max(extremal_norm, norm(v));
    if (norm(*extremum) != extremal_norm) {
        Witness w;
        w.label = "norm of extremum differs from extremal member norm";
        w.values = {extremum->to_string(), to_string(norm(*extremum)), to_string(extremal_norm)};
        report.fail(std::move(w));
        return report;
    }
    Witness w;
    w.label = "extremum";
    w.values = {extremum->to_string(), to_string(extremal_norm)};
    report.witnesses.push_back(std::move(w));
    return report;
}

std::string format_vector_literal(const LatticeValue& v)
{
    if (v.is_top())
        return "top";
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i)
            out << ", ";
        out << to_string(v.components()[i]);
    }
    out << ')';
    return out.str();
}

LatticeValue parse_vector_literal(const std::string& text)
{
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed == "top")
        return LatticeValue::top();
    if (trimmed.size() < 2 || trimmed.front() != '(' || trimmed.back() != ')')
        throw std::invalid_argument("malformed vector literal '" + text + "'");
    std::vector<Rat> components;
    std::istringstream in(trimmed.substr(1, trimmed.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        components.push_back(parse_rat(item));
    }
    return LatticeValue(std::move(components));
}

} // namespace submeas
