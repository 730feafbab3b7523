#pragma once

#include "submeas/report.hpp"
#include "submeas/setring.hpp"
#include "submeas/submeasure.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace submeas {

/// Sublevel class U_eps = {A in R : ||mu(A)|| <= eps}.
SetClass u_epsilon(const Submeasure& mu, const Rat& eps);

/// The neighborhood base at the empty set: one sublevel class of the
/// source per grid value, sorted by eps. For monotone instances every
/// level is a normal (downward closed) subclass and levels nest with eps.
struct NeighborhoodBase {
    Submeasure source;
    std::vector<std::pair<Rat, SetClass>> levels;
};

NeighborhoodBase build_neighborhood_base(const Submeasure& mu, const std::vector<Rat>& grid);

/// The five filter-base conditions for the sublevel classes: for each eps a
/// positive delta must exist with U_delta (delta-combined under symmetric
/// difference, intersection, union, and against arbitrary ring members)
/// inside U_eps, and U_eps itself must be normal. Vacuous unless the
/// instance is an order bounded uniform one.
PropertyReport check_filterbase_axioms(const Submeasure& mu, const std::vector<Rat>& grid);

/// Pseudometric value ||mu(A delta B)||.
ExtRat rho(const Submeasure& mu, const FiniteSet& a, const FiniteSet& b);

using SetFunction = std::function<LatticeValue(const FiniteSet&)>;

/// Exact finite-model closure of a subclass inside a delta-closed ambient
/// class: the members of the ambient class at pseudometric distance zero
/// from the subclass.
SetClass closure(const SetClass& subclass, const SetClass& ambient, const SetFunction& mu_ambient);

/// The closure of a subring is again a ring.
PropertyReport check_subring_closure(const Ring& subring, const SetClass& ambient,
                                     const SetFunction& mu_ambient);

/// Density of r in s under the topology generated by mu_on_s: the closure
/// of r inside s must be all of s. Vacuous unless mu_on_s is an order
/// bounded uniform instance.
PropertyReport check_density(const Ring& r, const Ring& s, const Submeasure& mu_on_s);

} // namespace submeas
