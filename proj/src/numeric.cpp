#include "submeas/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace submeas {

namespace {

// Comparison slack for the irrational rule families lives at 1e-30; the
// approximation grain below (1e-40) stays well under it.
constexpr unsigned kApproxDigits = 40;

} // namespace

Rat pow2(int k)
{
    if (k >= 0)
        return Rat(Int(1) << k);
    return Rat(1, Int(1) << (-k));
}

Rat pow10(unsigned k)
{
    Int v = 1;
    for (unsigned i = 0; i < k; ++i)
        v *= 10;
    return Rat(v);
}

Int rat_floor(const Rat& x)
{
    if (x < 0)
        throw std::invalid_argument("rat_floor: negative argument");
    return numerator(x) / denominator(x);
}

Int nth_root_floor(const Int& x, unsigned b)
{
    if (x < 0)
        throw std::invalid_argument("nth_root_floor: negative argument");
    if (b == 0)
        throw std::invalid_argument("nth_root_floor: zeroth root");
    if (b == 1 || x <= 1)
        return x;
    if (b == 2)
        return boost::multiprecision::sqrt(x);

    // Newton iteration from an upper bound; terminates at floor(x^(1/b)).
    Int r = Int(1) << (unsigned(boost::multiprecision::msb(x)) / b + 1);
    for (;;) {
        Int rb = boost::multiprecision::pow(r, b - 1);
        Int next = ((b - 1) * r + x / rb) / b;
        if (next >= r)
            break;
        r = next;
    }
    while (boost::multiprecision::pow(r, b) > x)
        --r;
    return r;
}

Rat approx_sqrt(const Rat& x)
{
    if (x < 0)
        throw std::invalid_argument("approx_sqrt: negative argument");
    const Int scale = numerator(pow10(kApproxDigits));
    // floor(sqrt(x) * 10^40) = isqrt(floor(x * 10^80))
    const Int scaled = rat_floor(x * Rat(scale * scale));
    Rat r(boost::multiprecision::sqrt(scaled), scale);
    return r;
}

Rat approx_pow(const Rat& x, const Rat& p)
{
    if (x < 0)
        throw std::invalid_argument("approx_pow: negative base");
    if (p <= 0 || p > 1)
        throw std::invalid_argument("approx_pow: exponent outside (0, 1]");
    if (p == 1)
        return x;
    const Int a = numerator(p);
    const Int b = denominator(p);
    const unsigned bu = b.convert_to<unsigned>();
    const unsigned au = a.convert_to<unsigned>();
    const Int scale = numerator(pow10(kApproxDigits));
    // floor(x^(a/b) * 10^40) = floor of the b-th root of x^a * 10^(40 b)
    Rat xa = 1;
    for (unsigned i = 0; i < au; ++i)
        xa *= x;
    const Int scaled = rat_floor(xa * Rat(boost::multiprecision::pow(scale, bu)));
    return Rat(nth_root_floor(scaled, bu), scale);
}

double to_double(const Rat& x)
{
    return x.convert_to<double>();
}

std::string to_string(const Rat& x)
{
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::string to_string(const ExtRat& x)
{
    if (x.is_infinite())
        return "inf";
    return to_string(x.value());
}

Rat parse_rat(const std::string& text)
{
    if (text.empty())
        throw std::invalid_argument("parse_rat: empty literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("parse_rat: malformed fraction '" + text + "'");
        const Int n(num);
        const Int d(den);
        return Rat(n, d);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        if (frac.empty())
            throw std::invalid_argument("parse_rat: malformed decimal '" + text + "'");
        bool negative = !whole.empty() && whole[0] == '-';
        Int w = whole.empty() || whole == "-" ? Int(0) : Int(whole);
        Rat r = Rat(w < 0 ? -w : w) + Rat(Int(frac), numerator(pow10(unsigned(frac.size()))));
        return negative ? -r : r;
    }
    return Rat(Int(text));
}

} // namespace submeas
