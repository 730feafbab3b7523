#pragma once

#include "submeas/report.hpp"
#include "submeas/setring.hpp"
#include "submeas/submeasure.hpp"

#include <utility>
#include <vector>

namespace submeas {

/// The hypotheses the extension pipeline needs: an order bounded exhaustive
/// uniform instance. `failed` names the first missing hypothesis.
struct ExtensionHypotheses {
    bool ok = false;
    std::string failed;
};

ExtensionHypotheses check_extension_hypotheses(const Submeasure& mu);

/// Inner extension value: the lattice supremum of mu over ring subsets of
/// A. On a finite universe the increasing-limit class is the ring itself,
/// so A must be a ring member.
LatticeValue mu_hat(const Submeasure& mu, const FiniteSet& a);

/// Outer extension value on the hereditary class: the lattice infimum of
/// the inner extension over ring supersets of A.
LatticeValue mu_star(const Submeasure& mu, const FiniteSet& a);

/// The closure ring: members of the hereditary class at outer-extension
/// distance zero from the ring. Throws when an extension hypothesis fails,
/// naming it.
SetClass r_zero(const Submeasure& mu);

/// The inner extension materialized as a table over the closure ring.
Submeasure inner_extension(const Submeasure& mu);

/// Restriction identity, monotonicity, the finite-model reductions of
/// exhaustivity and continuity, and uniform subadditive continuity of the
/// inner extension, with each reduction recorded.
PropertyReport verify_inner_extension(const Submeasure& mu);

/// Membership characterization of the closure ring, its agreement with the
/// topological closure, outer approximants with null excess, and the
/// finite-model continuity reduction of the outer extension.
PropertyReport verify_closure_ring(const Submeasure& mu);

/// A sandwich B subset A subset C by ring members with null outer value on
/// C \ B. Throws when no pair exists; the extension construction rules
/// that out for eligible instances, so a throw is a finding.
std::pair<FiniteSet, FiniteSet> null_completion_witnesses(const Submeasure& mu,
                                                          const FiniteSet& a);

/// Null-completeness of the closure ring: subsets of null members are null
/// members.
PropertyReport verify_null_completeness(const Submeasure& mu);

/// Norm agreement between an alternative uniform extension restricting to
/// mu and the outer extension, on every closure-ring member. Vacuous when
/// nu_alt misses its preconditions.
PropertyReport verify_norm_uniqueness(const Submeasure& mu, const Submeasure& nu_alt);

struct ExtensionResult {
    SetClass r_star;
    std::vector<std::pair<FiniteSet, LatticeValue>> mu_star_table; // aligned with r_star
    SetClass r_zero;
    std::vector<std::pair<FiniteSet, std::pair<FiniteSet, FiniteSet>>> completion_witnesses;
    std::vector<PropertyReport> reports;
};

/// Runs the whole pipeline: hereditary class, outer extension table,
/// closure ring, null-completion witnesses for every closure-ring member,
/// and the verification reports.
ExtensionResult run_extension(const Submeasure& mu);

} // namespace submeas
