#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace submeas {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Extended nonnegative rational: a finite value or +infinity.
class ExtRat {
public:
    ExtRat() = default;
    ExtRat(Rat v) : value_(std::move(v)) {}
    ExtRat(int v) : value_(v) {}

    static ExtRat infinity()
    {
        ExtRat r;
        r.infinite_ = true;
        return r;
    }

    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && value_ == 0; }

    /// Finite payload; only meaningful when !is_infinite().
    const Rat& value() const
    {
        if (infinite_)
            throw std::logic_error("ExtRat: value() on infinity");
        return value_;
    }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b)
    {
        if (a.infinite_ || b.infinite_)
            return infinity();
        return ExtRat(a.value_ + b.value_);
    }

    friend bool operator==(const ExtRat& a, const ExtRat& b)
    {
        if (a.infinite_ != b.infinite_)
            return false;
        return a.infinite_ || a.value_ == b.value_;
    }

    friend bool operator<(const ExtRat& a, const ExtRat& b)
    {
        if (a.infinite_)
            return false;
        if (b.infinite_)
            return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }

private:
    bool infinite_ = false;
    Rat value_{};
};

inline ExtRat ext_min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }
inline ExtRat ext_max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }

Rat pow2(int k);
Rat pow10(unsigned k);

/// floor(x) for a rational x >= 0.
Int rat_floor(const Rat& x);

/// Floor of the b-th root of a nonnegative integer (b >= 1).
Int nth_root_floor(const Int& x, unsigned b);

/// Monotone 40-significant-digit rational approximation of sqrt(x), x >= 0.
/// Exact whenever sqrt(x) has a terminating decimal expansion of at most
/// 40 fractional digits (in particular for perfect squares).
Rat approx_sqrt(const Rat& x);

/// Monotone 40-digit rational approximation of x^p for x >= 0 and
/// rational p = a/b in (0, 1]. Reduces to the identity for p = 1.
Rat approx_pow(const Rat& x, const Rat& p);

double to_double(const Rat& x);

std::string to_string(const Rat& x);
std::string to_string(const ExtRat& x);

/// Parses "p/q", an integer, or a plain decimal like "0.25".
Rat parse_rat(const std::string& text);

} // namespace submeas
