#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace submeas {

/// A subset of the finite universe {0, ..., universe_size-1}, stored as a
/// bitmask. Values are immutable after construction.
class FiniteSet {
public:
    FiniteSet(unsigned universe_size, std::uint64_t mask);

    static FiniteSet empty(unsigned universe_size) { return FiniteSet(universe_size, 0); }
    static FiniteSet full(unsigned universe_size);
    static FiniteSet of(unsigned universe_size, std::initializer_list<unsigned> points);

    unsigned universe_size() const { return universe_size_; }
    std::uint64_t mask() const { return mask_; }
    bool contains(unsigned t) const { return t < universe_size_ && (mask_ >> t) & 1u; }
    bool is_empty() const { return mask_ == 0; }
    unsigned size() const;

    FiniteSet intersect(const FiniteSet& other) const;
    FiniteSet unite(const FiniteSet& other) const;
    FiniteSet symm_diff(const FiniteSet& other) const;
    FiniteSet difference(const FiniteSet& other) const;
    bool subset_of(const FiniteSet& other) const;

    std::string to_string() const;

    friend bool operator==(const FiniteSet& a, const FiniteSet& b)
    {
        return a.universe_size_ == b.universe_size_ && a.mask_ == b.mask_;
    }
    friend bool operator!=(const FiniteSet& a, const FiniteSet& b) { return !(a == b); }
    friend bool operator<(const FiniteSet& a, const FiniteSet& b)
    {
        return a.mask_ < b.mask_;
    }

private:
    void require_same_universe(const FiniteSet& other) const;

    unsigned universe_size_;
    std::uint64_t mask_;
};

/// Parses a set literal like "{0,2}" or "{}".
FiniteSet parse_set(const std::string& text, unsigned universe_size);

/// A finite duplicate-free family of sets over one universe, kept sorted by
/// bitmask for deterministic iteration.
class SetClass {
public:
    explicit SetClass(unsigned universe_size);
    SetClass(unsigned universe_size, std::vector<FiniteSet> sets);

    unsigned universe_size() const { return universe_size_; }
    std::size_t size() const { return sets_.size(); }
    bool contains(const FiniteSet& s) const;
    const std::vector<FiniteSet>& sets() const { return sets_; }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }

    bool subclass_of(const SetClass& other) const;
    std::string to_string() const;

    friend bool operator==(const SetClass& a, const SetClass& b)
    {
        return a.universe_size_ == b.universe_size_ && a.sets_ == b.sets_;
    }
    friend bool operator!=(const SetClass& a, const SetClass& b) { return !(a == b); }

private:
    unsigned universe_size_;
    std::vector<FiniteSet> sets_; // sorted by mask, unique
};

/// A set class containing the empty set and closed under symmetric
/// difference and intersection (hence union and difference). The
/// constructor verifies the closure certificates.
class Ring {
public:
    explicit Ring(SetClass base);

    unsigned universe_size() const { return base_.universe_size(); }
    const SetClass& base() const { return base_; }
    std::size_t size() const { return base_.size(); }
    bool contains(const FiniteSet& s) const { return base_.contains(s); }
    const std::vector<FiniteSet>& sets() const { return base_.sets(); }

    friend bool operator==(const Ring& a, const Ring& b) { return a.base_ == b.base_; }
    friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

private:
    SetClass base_;
};

/// Smallest ring containing the generators: fixpoint closure under the
/// symmetric difference and intersection, always containing the empty set.
Ring generate_ring(unsigned universe_size, const SetClass& generators);

/// All subsets of all members of the ring. On a finite universe the
/// increasing-limit class of a ring is the ring itself, so this is the
/// hereditary class of the ring and forms a sigma-ring.
SetClass hereditary_class(const Ring& ring);

/// On a finite universe every increasing sequence of sets stabilizes, so
/// the class of increasing limits coincides with the ring itself.
Ring r_sigma(const Ring& ring);

enum class ClassOp { intersect, unite, symm_diff };

/// Elementwise product family {a op b : a in A, b in B}, deduplicated.
SetClass class_op(const SetClass& a, const SetClass& b, ClassOp op);

/// All distinct rings of subsets of the universe, by brute-force filtering
/// of every sub-family of the power set. Guarded to universe_size <= 4.
std::vector<Ring> enumerate_subrings(unsigned universe_size);

/// All subsets of s, in increasing bitmask order.
std::vector<FiniteSet> subsets_of(const FiniteSet& s);

} // namespace submeas
