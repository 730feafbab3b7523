#pragma once

#include "submeas/numeric.hpp"
#include "submeas/setring.hpp"

#include <string>
#include <utility>
#include <vector>

namespace submeas {

enum class Verdict { holds, fails, vacuous };

std::string to_string(Verdict v);

/// A failure (or success) exhibit: the sets and values involved. Witness
/// sets are stored as real sets so a checker can re-evaluate them.
struct Witness {
    std::string label;
    std::vector<FiniteSet> sets;
    std::vector<std::string> values;
};

struct PropertyReport {
    std::string property;
    Verdict verdict = Verdict::holds;
    std::vector<Witness> witnesses;
    std::vector<std::pair<Rat, ExtRat>> moduli; // epsilon -> delta rows
    std::vector<std::pair<std::string, double>> numbers;
    std::vector<std::string> notes;

    bool ok() const { return verdict != Verdict::fails; }

    void fail(Witness w)
    {
        verdict = Verdict::fails;
        witnesses.push_back(std::move(w));
    }

    std::string to_text() const;
};

} // namespace submeas
