#pragma once

#include "submeas/report.hpp"
#include "submeas/submeasure.hpp"

#include <vector>

namespace submeas {

/// A nonnegative rational density on the universe points.
struct Density {
    explicit Density(std::vector<Rat> values);
    std::vector<Rat> values; // one per universe point

    const Rat& at(unsigned t) const { return values.at(t); }
    std::string to_string() const;
};

/// Density literal "[v0, v1, ...]".
Density parse_density(const std::string& text);

/// Whether every superlevel set {t : f(t) > x} belongs to the ring. The
/// verdict is reported, not enforced; integration only needs the level sets
/// restricted to the integration domain.
PropertyReport check_density_measurable(const Density& f, const Ring& ring);

/// Discrete layer-cake integral of f over A against mu: with the distinct
/// values 0 = x_0 < x_1 < ... < x_m of f on A, the sum of
/// (x_j - x_{j-1}) * mu({t in A : f(t) >= x_j}). Exact over rationals.
/// Throws when a needed level set is missing from the ring, naming the
/// offending level, or when mu(empty) != 0.
LatticeValue choquet_integral(const Submeasure& mu, const Density& f, const FiniteSet& a);

/// The set function A -> integral of f over A, as a submeasure on the same
/// ring.
Submeasure derived_submeasure(const Submeasure& mu, const Density& f);

/// Error propagation: || integral(f) - integral(g) || over A is bounded by
/// tau * ||mu(A)|| with tau = max over A of |f - g|.
PropertyReport check_sup_lipschitz(const Submeasure& mu, const Density& f, const Density& g,
                                   const FiniteSet& a);

/// If mu has the pseudometric generating property and the derived set
/// function is finite on the largest set, the derived set function keeps
/// the property; asserted over the standard epsilon grid.
PropertyReport check_pgp_preservation(const Submeasure& mu, const Density& f);

} // namespace submeas
