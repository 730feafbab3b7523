#pragma once

#include "submeas/extension.hpp"
#include "submeas/report.hpp"
#include "submeas/specfile.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace submeas {

struct RunOptions {
    std::vector<Rat> extra_eps;
    std::optional<double> tol;
    std::optional<unsigned> max_depth;
    std::uint64_t seed = 0x5eedcafe;
    unsigned workers = 1;
};

struct RunReport {
    std::string command;
    std::string instance_echo;
    std::string classification;
    std::optional<std::string> choquet_value;
    std::vector<PropertyReport> properties;
    std::optional<ExtensionResult> extension;

    /// 0 iff every non-vacuous property holds.
    int exit_status() const;
};

/// classify + the ring-level checkers: equivalences, sigma-subadditivity,
/// the absolute-continuity condition, exhaustivity, a seeded chained
/// union-bound sample, the filter-base axioms and the density collapse.
RunReport run_check(const InstanceSpec& spec, const RunOptions& opts);

/// The extension pipeline with its verification reports.
RunReport run_extend(const InstanceSpec& spec, const RunOptions& opts);

/// Integral of the spec density over the given set, plus the derived
/// instance's classification.
RunReport run_choquet(const InstanceSpec& spec, const std::string& set_expr,
                      const RunOptions& opts);

/// The interval-model suite at the spec tolerances.
RunReport run_dyadic(const InstanceSpec& spec, const RunOptions& opts);

std::string to_text(const RunReport& report);
std::string to_json_text(const RunReport& report);

} // namespace submeas
