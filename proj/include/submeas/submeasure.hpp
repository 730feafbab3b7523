#pragma once

#include "submeas/lattice.hpp"
#include "submeas/report.hpp"
#include "submeas/setring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace submeas {

enum class DistortionKind { identity, sqrt, x_over_1px, cap2x, power, zero };

/// A nondecreasing distortion g with g(0) = 0, applied to additively
/// accumulated weights. The irrational members (sqrt, fractional power)
/// evaluate to monotone 40-digit rational approximations; all finite-model
/// comparisons against such instances carry a declared slack of 1e-30.
struct Distortion {
    DistortionKind kind = DistortionKind::identity;
    Rat exponent = 1; // only for power, in (0, 1]

    Rat apply(const Rat& x) const;
    double apply(double x) const;
    bool is_exact() const;
    std::string name() const;
};

Distortion parse_distortion(const std::string& text);

struct AdditiveRule {
    std::vector<LatticeValue> point_weights; // one per universe point
};

struct DistortedRule {
    std::vector<Rat> base_weights; // one per universe point, >= 0
    Distortion distortion;
    LatticeValue direction = LatticeValue::scalar(1);
};

struct TableRule {
    std::vector<std::pair<FiniteSet, LatticeValue>> entries; // must cover the ring
};

class Submeasure;

struct ChoquetDerivedRule {
    std::shared_ptr<const Submeasure> base;
    std::vector<Rat> density; // one per universe point, >= 0
};

using SubmeasureRule = std::variant<AdditiveRule, DistortedRule, TableRule, ChoquetDerivedRule>;

/// A total map from a finite ring into the extended positive cone. Values
/// are evaluated eagerly at construction, so every later check is a table
/// lookup and instances are safe to share across concurrent sweeps.
class Submeasure {
public:
    Submeasure(Ring domain, AdditiveRule rule);
    Submeasure(Ring domain, DistortedRule rule);
    Submeasure(Ring domain, TableRule rule);
    Submeasure(Ring domain, ChoquetDerivedRule rule);

    const Ring& domain() const { return domain_; }
    std::size_t dimension() const { return dimension_; }
    const SubmeasureRule& rule() const { return rule_; }

    /// Declared comparison slack: 0 for the exact rule families, 1e-30 for
    /// instances built on irrational distortions.
    const Rat& slack() const { return slack_; }

    const LatticeValue& evaluate(const FiniteSet& a) const;
    ExtRat norm_of(const FiniteSet& a) const { return norm(evaluate(a)); }

    /// Values aligned with domain().sets().
    const std::vector<LatticeValue>& value_table() const { return values_; }
    const ExtRat& norm_at(std::size_t index) const { return norms_[index]; }

    /// The inclusion-maximal domain set (the union of all members).
    const FiniteSet& largest_set() const { return domain_.sets().back(); }

    std::string rule_name() const;

private:
    void build_tables();

    Ring domain_;
    std::size_t dimension_ = 0;
    SubmeasureRule rule_;
    Rat slack_ = 0;
    std::vector<LatticeValue> values_;
    std::vector<ExtRat> norms_;
};

/// {2^-j : j = 0..j_max}, the default epsilon grid for moduli reports.
std::vector<Rat> standard_eps_grid(unsigned j_max = 10);

PropertyReport check_monotone(const Submeasure& mu);

/// On a finite ring every decreasing-to-empty sequence is eventually empty,
/// so continuity reduces to ||mu(empty)|| = 0; the reduction is recorded.
PropertyReport check_continuity(const Submeasure& mu);

/// Largest admissible delta for subadditive continuity at (A, eps): the
/// smallest norm among sets violating the union or difference inequality,
/// +infinity when nothing violates. A zero result means the property fails
/// at (A, eps).
ExtRat sc_modulus(const Submeasure& mu, const FiniteSet& a, const Rat& eps);

/// Uniform modulus: the minimum of sc_modulus over all domain sets.
ExtRat usc_modulus(const Submeasure& mu, const Rat& eps);

/// Exact quantifier forms ("for every eps some positive delta works"),
/// decidable on a finite ring without picking a grid.
bool sc_holds_exact(const Submeasure& mu, const FiniteSet& a,
                    std::optional<FiniteSet>* witness = nullptr);
bool usc_holds_exact(const Submeasure& mu,
                     std::optional<std::pair<FiniteSet, FiniteSet>>* witness = nullptr);
bool pgp_holds_exact(const Submeasure& mu,
                     std::optional<std::pair<FiniteSet, FiniteSet>>* witness = nullptr);

/// Agreement between the modulus formulation of subadditive continuity and
/// its symmetric-difference characterization.
PropertyReport check_sc_equivalence(const Submeasure& mu);
PropertyReport check_usc_equivalence(const Submeasure& mu);

/// Largest admissible delta for the pseudometric generating property at
/// eps: the smallest max-norm among pairs whose union reaches eps.
ExtRat pgp_modulus(const Submeasure& mu, const Rat& eps);

/// Chained union-bound sequence: delta_1 = min(1/2, pgp(1/2))/2 and
/// delta_{k+1} = min(2^-(k+1), delta_k, pgp(delta_k))/2. Throws when the
/// pseudometric generating property fails at some level, naming the pair.
std::vector<Rat> delta_sequence(const Submeasure& mu, unsigned k_max);

/// For a pairwise disjoint family with ||mu(A_k)|| < delta_k, checks
/// ||mu(A_{k+1} u ... u A_{k+p})|| < delta_k for all admissible k, p.
/// Precondition violations yield a vacuous verdict naming the gate.
PropertyReport verify_chained_union_bound(const Submeasure& mu, const std::vector<Rat>& deltas,
                                          const std::vector<FiniteSet>& family);

/// Finite-ring reduction of exhaustivity (disjoint sequences are eventually
/// empty), mirroring check_continuity.
PropertyReport check_exhaustive(const Submeasure& mu);

PropertyReport check_subadditive(const Submeasure& mu);
PropertyReport check_additive(const Submeasure& mu);

enum class SubmeasureClass { not_d, d, d_u, d_s, d_a };
std::string to_string(SubmeasureClass cls);

struct Classification {
    SubmeasureClass cls = SubmeasureClass::not_d;
    bool monotone = false;
    bool continuous = false;
    bool sc = false;
    bool usc = false;
    bool subadditive = false;
    bool additive = false;
    bool pgp = false;
    bool order_bounded = false;
    std::vector<PropertyReport> reports;
};

/// Runs every defining check and returns the strongest class whose
/// conditions all hold, together with the per-property reports.
Classification classify(const Submeasure& mu);

/// sigma-subadditivity realized finitely: every cover of a domain set by at
/// most max_cover domain sets bounds its norm by the sum of cover norms.
/// Vacuous unless the instance is subadditive (or stronger).
PropertyReport check_sigma_subadditive(const Submeasure& mu, unsigned max_cover);

/// Finite restatement of the absolute-continuity style condition: small
/// norm sums force small union norms.
PropertyReport check_ac_condition(const Submeasure& mu);

} // namespace submeas
