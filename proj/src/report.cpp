#include "submeas/report.hpp"

#include <sstream>

namespace submeas {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::vacuous: return "vacuous";
    }
    return "?";
}

std::string PropertyReport::to_text() const
{
    std::ostringstream out;
    out << property << ": " << to_string(verdict) << '\n';
    for (const auto& w : witnesses) {
        out << "  witness " << w.label << ":";
        for (const auto& s : w.sets)
            out << ' ' << s.to_string();
        for (const auto& v : w.values)
            out << ' ' << v;
        out << '\n';
    }
    for (const auto& [eps, delta] : moduli)
        out << "  eps=" << to_string(eps) << " -> delta=" << to_string(delta) << '\n';
    for (const auto& [label, value] : numbers)
        out << "  " << label << " = " << value << '\n';
    for (const auto& n : notes)
        out << "  note: " << n << '\n';
    return out.str();
}

} // namespace submeas
