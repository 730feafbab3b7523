#pragma once

#include "submeas/choquet.hpp"
#include "submeas/dyadic.hpp"
#include "submeas/setring.hpp"
#include "submeas/submeasure.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace submeas {

enum class ModelKind { finite, dyadic };
enum class RuleKind { additive, distorted, table, choquet_derived };

std::string to_string(ModelKind m);
std::string to_string(RuleKind r);

struct FiniteInstance {
    unsigned universe = 0;
    std::vector<FiniteSet> generators;
    RuleKind rule = RuleKind::additive;
    std::vector<LatticeValue> weights;                            // additive
    std::vector<Rat> base_weights;                                // distorted
    std::optional<Distortion> distortion;                         // distorted
    std::optional<LatticeValue> direction;                        // distorted
    std::vector<std::pair<FiniteSet, LatticeValue>> table_entries; // table
    std::optional<RuleKind> base_rule;                            // choquet_derived
    std::optional<std::vector<Rat>> density;                      // key "f"
};

struct DyadicInstance {
    std::vector<Distortion> distortions;
    std::optional<TargetSet> target;
    double tol = 1e-6;
    unsigned max_depth = 30;
    unsigned n_max = 40;
};

struct InstanceSpec {
    ModelKind model = ModelKind::finite;
    std::optional<FiniteInstance> finite;
    std::optional<DyadicInstance> dyadic;
    std::vector<Rat> eps_grid; // user-supplied extra epsilon values
};

/// Line-oriented "key = value" format; '#' starts a comment. Unknown keys
/// are rejected; parse errors carry the line number.
InstanceSpec parse_spec(std::istream& in);
InstanceSpec parse_spec_text(const std::string& text);
InstanceSpec parse_spec_file(const std::string& path);

std::string serialize_spec(const InstanceSpec& spec);

/// Builds the submeasure a finite-model spec describes (generating the
/// ring from the listed generators).
Submeasure build_submeasure(const FiniteInstance& inst);

IntervalRule build_interval_rule(const DyadicInstance& inst);

bool semantically_equal(const InstanceSpec& a, const InstanceSpec& b);

} // namespace submeas
