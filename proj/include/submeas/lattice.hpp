#pragma once

#include "submeas/numeric.hpp"
#include "submeas/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace submeas {

/// An element of the extended positive cone: either a nonnegative
/// d-dimensional rational vector under the componentwise order with the
/// l1 norm, or the top element dominating every vector.
class LatticeValue {
public:
    explicit LatticeValue(std::vector<Rat> components);

    static LatticeValue top();
    static LatticeValue zero(std::size_t dim);
    static LatticeValue scalar(Rat v) { return LatticeValue({std::move(v)}); }

    bool is_top() const { return top_; }
    bool is_zero() const;
    std::size_t dim() const;
    const std::vector<Rat>& components() const;

    std::string to_string() const;

    friend bool operator==(const LatticeValue& a, const LatticeValue& b)
    {
        return a.top_ == b.top_ && a.vec_ == b.vec_;
    }
    friend bool operator!=(const LatticeValue& a, const LatticeValue& b) { return !(a == b); }

private:
    LatticeValue() : top_(true) {}

    bool top_ = false;
    std::vector<Rat> vec_;
};

/// l1 norm on the cone; +infinity for the top element.
ExtRat norm(const LatticeValue& v);

/// Componentwise order; the top element dominates everything.
bool lattice_leq(const LatticeValue& a, const LatticeValue& b);

/// Cone addition; the top element absorbs.
LatticeValue add(const LatticeValue& a, const LatticeValue& b);

/// Scaling by a nonnegative rational; scaling the top element requires c > 0.
LatticeValue scale(const Rat& c, const LatticeValue& v);

/// l1 distance between two finite vectors of the same dimension.
ExtRat norm_of_difference(const LatticeValue& a, const LatticeValue& b);

/// Componentwise max; any top input makes the supremum top.
LatticeValue lattice_sup(const std::vector<LatticeValue>& vs);

/// Componentwise min; top inputs are ignored exactly when a vector member
/// exists.
LatticeValue lattice_inf(const std::vector<LatticeValue>& vs);

struct OrderInterval {
    OrderInterval(LatticeValue lo_, LatticeValue hi_);
    LatticeValue lo;
    LatticeValue hi;
};

struct OrderBoundedness {
    bool bounded = false;
    std::optional<OrderInterval> interval;
};

/// A finite vector family is always order bounded by its componentwise
/// extrema; any top member breaks boundedness. The empty family is bounded
/// by the degenerate zero interval.
OrderBoundedness is_order_bounded(const std::vector<LatticeValue>& values, std::size_t dim);

enum class Direction { down, up };

/// For a finite family directed in the stated direction, verifies that the
/// norm of its extremum equals the extremal member norm. Throws when the
/// family is not directed, naming a violating pair.
PropertyReport check_directed_norm_limit(const std::vector<LatticeValue>& family,
                                         Direction direction);

/// Textual vector literal "(a/b, c/d, ...)"; "top" for the top element.
std::string format_vector_literal(const LatticeValue& v);
LatticeValue parse_vector_literal(const std::string& text);

} // namespace submeas
