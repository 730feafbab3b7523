#include "submeas/setring.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace submeas {

FiniteSet::FiniteSet(unsigned universe_size, std::uint64_t mask)
    : universe_size_(universe_size), mask_(mask)
{
    if (universe_size == 0)
        throw std::invalid_argument("empty universe");
    if (universe_size > 63)
        throw std::invalid_argument("universe too large for bitmask representation");
    if (mask >> universe_size)
        throw std::invalid_argument("set references points outside the universe");
}

FiniteSet FiniteSet::full(unsigned universe_size)
{
    if (universe_size == 0)
        throw std::invalid_argument("empty universe");
    return FiniteSet(universe_size, (std::uint64_t(1) << universe_size) - 1);
}

FiniteSet FiniteSet::of(unsigned universe_size, std::initializer_list<unsigned> points)
{
    std::uint64_t mask = 0;
    for (unsigned p : points) {
        if (p >= universe_size)
            throw std::invalid_argument("set references points outside the universe");
        mask |= std::uint64_t(1) << p;
    }
    return FiniteSet(universe_size, mask);
}

unsigned FiniteSet::size() const
{
    return unsigned(std::popcount(mask_));
}

void FiniteSet::require_same_universe(const FiniteSet& other) const
{
    if (universe_size_ != other.universe_size_)
        throw std::invalid_argument("mismatched universes");
}

FiniteSet FiniteSet::intersect(const FiniteSet& other) const
{
    require_same_universe(other);
    return FiniteSet(universe_size_, mask_ & other.mask_);
}

FiniteSet FiniteSet::unite(const FiniteSet& other) const
{
    require_same_universe(other);
    return FiniteSet(universe_size_, mask_ | other.mask_);
}

FiniteSet FiniteSet::symm_diff(const FiniteSet& other) const
{
    require_same_universe(other);
    return FiniteSet(universe_size_, mask_ ^ other.mask_);
}

FiniteSet FiniteSet::difference(const FiniteSet& other) const
{
    require_same_universe(other);
    return FiniteSet(universe_size_, mask_ & ~other.mask_);
}

bool FiniteSet::subset_of(const FiniteSet& other) const
{
    require_same_universe(other);
    return (mask_ & ~other.mask_) == 0;
}

std::string FiniteSet::to_string() const
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (unsigned t = 0; t < universe_size_; ++t) {
        if (!contains(t))
            continue;
        if (!first)
            out << ',';
        out << t;
        first = false;
    }
    out << '}';
    return out.str();
}

FiniteSet parse_set(const std::string& text, unsigned universe_size)
{
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
    if (trimmed.size() < 2 || trimmed.front() != '{' || trimmed.back() != '}')
        throw std::invalid_argument("malformed set literal '" + text + "'");
    std::uint64_t mask = 0;
    std::string body = trimmed.substr(1, trimmed.size() - 2);
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty())
            throw std::invalid_argument("malformed set literal '" + text + "'");
        const unsigned long p = std::stoul(item);
        if (p >= universe_size)
            throw std::invalid_argument("set references points outside the universe");
        mask |= std::uint64_t(1) << p;
    }
    return FiniteSet(universe_size, mask);
}

SetClass::SetClass(unsigned universe_size) : universe_size_(universe_size)
{
    if (universe_size == 0)
        throw std::invalid_argument("empty universe");
}

SetClass::SetClass(unsigned universe_size, std::vector<FiniteSet> sets)
    : universe_size_(universe_size), sets_(std::move(sets))
{
    if (universe_size == 0)
        throw std::invalid_argument("empty universe");
    for (const auto& s : sets_)
        if (s.universe_size() != universe_size_)
            throw std::invalid_argument("mismatched universes");
    std::sort(sets_.begin(), sets_.end());
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetClass::contains(const FiniteSet& s) const
{
    if (s.universe_size() != universe_size_)
        return false;
    return std::binary_search(sets_.begin(), sets_.end(), s);
}

bool SetClass::subclass_of(const SetClass& other) const
{
    if (universe_size_ != other.universe_size_)
        return false;
    for (const auto& s : sets_)
        if (!other.contains(s))
            return false;
    return true;
}

std::string SetClass::to_string() const
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (i)
            out << ", ";
        out << sets_[i].to_string();
    }
    out << '}';
    return out.str();
}

Ring::Ring(SetClass base) : base_(std::move(base))
{
    if (!base_.contains(FiniteSet::empty(base_.universe_size())))
        throw std::invalid_argument("ring must contain the empty set");
    for (const auto& a : base_)
        for (const auto& b : base_) {
            if (!base_.contains(a.symm_diff(b)))
                throw std::invalid_argument("ring not closed under symmetric difference");
            if (!base_.contains(a.intersect(b)))
                throw std::invalid_argument("ring not closed under intersection");
        }
}

Ring generate_ring(unsigned universe_size, const SetClass& generators)
{
    if (universe_size == 0)
        throw std::invalid_argument("empty universe");
    if (generators.universe_size() != universe_size)
        throw std::invalid_argument("mismatched universes");

    std::set<std::uint64_t> masks;
    masks.insert(0);
    for (const auto& g : generators)
        masks.insert(g.mask());

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> snapshot(masks.begin(), masks.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i; j < snapshot.size(); ++j) {
                grew |= masks.insert(snapshot[i] ^ snapshot[j]).second;
                grew |= masks.insert(snapshot[i] & snapshot[j]).second;
            }
    }

    std::vector<FiniteSet> sets;
    sets.reserve(masks.size());
    for (std::uint64_t m : masks)
        sets.emplace_back(universe_size, m);
    return Ring(SetClass(universe_size, std::move(sets)));
}

SetClass hereditary_class(const Ring& ring)
{
    std::set<std::uint64_t> masks;
    for (const auto& s : ring.sets()) {
        // submask enumeration
        std::uint64_t sub = s.mask();
        for (;;) {
            masks.insert(sub);
            if (sub == 0)
                break;
            sub = (sub - 1) & s.mask();
        }
    }
    std::vector<FiniteSet> sets;
    sets.reserve(masks.size());
    for (std::uint64_t m : masks)
        sets.emplace_back(ring.universe_size(), m);
    return SetClass(ring.universe_size(), std::move(sets));
}

Ring r_sigma(const Ring& ring)
{
    return ring;
}

SetClass class_op(const SetClass& a, const SetClass& b, ClassOp op)
{
    if (a.universe_size() != b.universe_size())
        throw std::invalid_argument("mismatched universes");
    std::vector<FiniteSet> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) {
            switch (op) {
            case ClassOp::intersect: out.push_back(x.intersect(y)); break;
            case ClassOp::unite: out.push_back(x.unite(y)); break;
            case ClassOp::symm_diff: out.push_back(x.symm_diff(y)); break;
            }
        }
    return SetClass(a.universe_size(), std::move(out));
}

std::vector<Ring> enumerate_subrings(unsigned universe_size)
{
    if (universe_size == 0)
        throw std::invalid_argument("empty universe");
    if (universe_size > 4)
        throw std::invalid_argument("enumeration bound exceeded");

    const unsigned n_sets = 1u << universe_size;
    std::vector<Ring> rings;
    // Every candidate family is a bitmask over the power set; the empty set
    // (mask 0) must be a member, so only families with bit 0 set qualify.
    for (std::uint64_t fam = 1; fam < (std::uint64_t(1) << n_sets); fam += 2) {
        bool closed = true;
        for (unsigned i = 0; i < n_sets && closed; ++i) {
            if (!((fam >> i) & 1))
                continue;
            for (unsigned j = i; j < n_sets && closed; ++j) {
                if (!((fam >> j) & 1))
                    continue;
                if (!((fam >> (i ^ j)) & 1) || !((fam >> (i & j)) & 1))
                    closed = false;
            }
        }
        if (!closed)
            continue;
        std::vector<FiniteSet> sets;
        for (unsigned i = 0; i < n_sets; ++i)
            if ((fam >> i) & 1)
                sets.emplace_back(universe_size, i);
        rings.emplace_back(SetClass(universe_size, std::move(sets)));
    }
    return rings;
}

std::vector<FiniteSet> subsets_of(const FiniteSet& s)
{
    std::vector<FiniteSet> out;
    std::uint64_t sub = 0;
    for (;;) {
        out.emplace_back(s.universe_size(), sub);
        if (sub == s.mask())
            break;
        sub = (sub - s.mask()) & s.mask();
    }
    return out;
}

} // namespace submeas
