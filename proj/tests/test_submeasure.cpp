#include "submeas/submeasure.hpp"

#include "support/catalog.hpp"

#include <doctest.h>

#include <random>

using namespace submeas;
using submeas::testing::catalog_on;
using submeas::testing::power_set_ring;

namespace {

Submeasure additive_pair_basis()
{
    // w = ((1,0), (0,1)) on P({0,1})
    AdditiveRule rule;
    rule.point_weights = {LatticeValue({Rat(1), Rat(0)}), LatticeValue({Rat(0), Rat(1)})};
    return Submeasure(power_set_ring(2), std::move(rule));
}

Submeasure additive_scalar_pair()
{
    return submeas::testing::additive_scalar_ones(power_set_ring(2));
}

Submeasure zero_mu(unsigned n)
{
    AdditiveRule rule;
    rule.point_weights.assign(n, LatticeValue::scalar(0));
    return Submeasure(power_set_ring(n), std::move(rule));
}

Submeasure sqrt_mu(unsigned n)
{
    DistortedRule rule;
    rule.base_weights.assign(n, Rat(1));
    rule.distortion = Distortion{DistortionKind::sqrt, 1};
    rule.direction = LatticeValue::scalar(1);
    return Submeasure(power_set_ring(n), std::move(rule));
}

Submeasure table_mu(const Ring& ring, const std::vector<std::pair<FiniteSet, LatticeValue>>& rows)
{
    TableRule rule;
    rule.entries = rows;
    return Submeasure(ring, std::move(rule));
}

} // namespace

TEST_CASE("evaluate follows the rule family")
{
    const Submeasure basis = additive_pair_basis();
    CHECK(basis.evaluate(FiniteSet::of(2, {0, 1})) == LatticeValue({Rat(1), Rat(1)}));
    CHECK(basis.evaluate(FiniteSet::empty(2)).is_zero());

    const Submeasure root = sqrt_mu(3);
    const LatticeValue two_points = root.evaluate(FiniteSet::of(3, {0, 1}));
    CHECK(two_points == scale(approx_sqrt(Rat(2)), LatticeValue::scalar(1)));
    CHECK(to_double(two_points.components()[0]) == doctest::Approx(1.41421356).epsilon(1e-8));
    CHECK(root.evaluate(FiniteSet::empty(3)).is_zero());

    for (const auto& entry : submeas::testing::catalog())
        if (entry.name == "choquet_over_additive_d1") {
            const Submeasure derived = *entry.build(power_set_ring(2));
            CHECK(derived.evaluate(FiniteSet::empty(2)).is_zero());
        }

    const Ring atom = generate_ring(2, SetClass(2, {FiniteSet::of(2, {0, 1})}));
    const Submeasure on_atom = submeas::testing::additive_scalar_ones(atom);
    CHECK_THROWS_WITH_AS(on_atom.evaluate(FiniteSet::of(2, {0})), "set outside ring",
                         std::invalid_argument);
}

TEST_CASE("monotonicity sweeps find violations with witnesses")
{
    CHECK(check_monotone(additive_pair_basis()).verdict == Verdict::holds);
    CHECK(check_monotone(zero_mu(2)).verdict == Verdict::holds);

    const Ring ring = power_set_ring(2);
    const Submeasure bad = table_mu(ring, {{FiniteSet::empty(2), LatticeValue::scalar(0)},
                                           {FiniteSet::of(2, {0}), LatticeValue::scalar(2)},
                                           {FiniteSet::of(2, {1}), LatticeValue::scalar(1)},
                                           {FiniteSet::of(2, {0, 1}), LatticeValue::scalar(1)}});
    const PropertyReport report = check_monotone(bad);
    CHECK(report.verdict == Verdict::fails);
    REQUIRE(!report.witnesses.empty());
    // re-evaluating the witness reproduces the violation
    const auto& w = report.witnesses[0];
    REQUIRE(w.sets.size() == 2);
    CHECK(w.sets[0].subset_of(w.sets[1]));
    CHECK_FALSE(lattice_leq(bad.evaluate(w.sets[0]), bad.evaluate(w.sets[1])));
}

TEST_CASE("continuity reduces to the value at the empty set")
{
    CHECK(check_continuity(additive_scalar_pair()).verdict == Verdict::holds);
    CHECK(check_continuity(sqrt_mu(2)).verdict == Verdict::holds);

    const Ring trivial = Ring(SetClass(1, {FiniteSet::empty(1)}));
    const Submeasure bad = table_mu(trivial, {{FiniteSet::empty(1), LatticeValue::scalar(1)}});
    CHECK(check_continuity(bad).verdict == Verdict::fails);
}

TEST_CASE("subadditive-continuity modulus matches the brute-force sweep")
{
    const Submeasure mu = additive_scalar_pair();
    const FiniteSet a = FiniteSet::of(2, {0});
    CHECK(sc_modulus(mu, a, Rat(1, 2)) == ExtRat(Rat(1)));

    // eps at least the largest norm kills both inequalities
    for (const auto& x : mu.domain().sets())
        CHECK(sc_modulus(mu, x, Rat(2)).is_infinite());

    const Submeasure zero = zero_mu(2);
    for (const auto& x : zero.domain().sets())
        CHECK(sc_modulus(zero, x, Rat(1, 4)).is_infinite());

    // independent sweep: delta is the least violating norm
    for (const auto& x : mu.domain().sets())
        for (const Rat& eps : standard_eps_grid(4)) {
            ExtRat expected = ExtRat::infinity();
            for (const auto& b : mu.domain().sets()) {
                const bool violates =
                    mu.norm_of(x.unite(b)) > mu.norm_of(x) + ExtRat(eps) ||
                    mu.norm_of(x) > mu.norm_of(x.difference(b)) + ExtRat(eps);
                if (violates)
                    expected = ext_min(expected, mu.norm_of(b));
            }
            CHECK(sc_modulus(mu, x, eps) == expected);
        }
}

TEST_CASE("uniform modulus is the minimum over sets and is monotone in eps")
{
    const Submeasure mu = additive_scalar_pair();
    CHECK(usc_modulus(mu, Rat(1, 2)) == ExtRat(Rat(1)));
    CHECK(usc_modulus(zero_mu(2), Rat(1, 1024)).is_infinite());

    const Ring ring = power_set_ring(2);
    for (const auto& [name, inst] : catalog_on(ring)) {
        INFO(name);
        for (const Rat& eps : standard_eps_grid()) {
            ExtRat by_min = ExtRat::infinity();
            for (const auto& a : inst.domain().sets())
                by_min = ext_min(by_min, sc_modulus(inst, a, eps));
            CHECK(usc_modulus(inst, eps) == by_min);
        }
        // monotone in eps (the grid descends, so compare adjacent entries)
        const auto grid = standard_eps_grid();
        for (std::size_t i = 1; i < grid.size(); ++i)
            CHECK(usc_modulus(inst, grid[i]) <= usc_modulus(inst, grid[i - 1]));
    }
}

TEST_CASE("a table built to vary the per-set modulus reports the minimum")
{
    const Ring ring = power_set_ring(2);
    // mu({0}) large step, mu({1}) small step: the uniform modulus is the
    // smaller per-set one.
    const Submeasure mu = table_mu(ring, {{FiniteSet::empty(2), LatticeValue::scalar(0)},
                                          {FiniteSet::of(2, {0}), LatticeValue::scalar(4)},
                                          {FiniteSet::of(2, {1}), LatticeValue::scalar(1)},
                                          {FiniteSet::of(2, {0, 1}), LatticeValue::scalar(4)}});
    const Rat eps(1, 2);
    const ExtRat at0 = sc_modulus(mu, FiniteSet::of(2, {0}), eps);
    const ExtRat at1 = sc_modulus(mu, FiniteSet::of(2, {1}), eps);
    CHECK(at0 > at1);
    CHECK(usc_modulus(mu, eps) == ext_min(at0, at1));
}

TEST_CASE("the two formulations of subadditive continuity agree")
{
    for (const auto& [name, inst] : catalog_on(power_set_ring(3))) {
        INFO(name);
        const bool monotone = check_monotone(inst).verdict == Verdict::holds;
        const Verdict expected = monotone ? Verdict::holds : Verdict::vacuous;
        CHECK(check_sc_equivalence(inst).verdict == expected);
        CHECK(check_usc_equivalence(inst).verdict == expected);
    }

    // constructed violator: both formulations must fail together
    const Ring ring = power_set_ring(2);
    const Submeasure bad = table_mu(ring, {{FiniteSet::empty(2), LatticeValue::scalar(0)},
                                           {FiniteSet::of(2, {0}), LatticeValue::scalar(1)},
                                           {FiniteSet::of(2, {1}), LatticeValue::scalar(0)},
                                           {FiniteSet::of(2, {0, 1}), LatticeValue::scalar(3)}});
    CHECK_FALSE(sc_holds_exact(bad, FiniteSet::of(2, {0})));
    const PropertyReport sc = check_sc_equivalence(bad);
    CHECK(sc.verdict == Verdict::holds); // formulations agree (both fail)
    CHECK(sc.notes[0] == "modulus formulation: fails");
    CHECK(sc.notes[1] == "symmetric-difference formulation: fails");
    CHECK(check_usc_equivalence(bad).verdict == Verdict::holds);

    CHECK(check_sc_equivalence(zero_mu(2)).notes[0] == "modulus formulation: holds");
}

TEST_CASE("pseudometric-generating modulus by pair sweep")
{
    const Submeasure mu = additive_scalar_pair();
    CHECK(pgp_modulus(mu, Rat(3, 2)) == ExtRat(Rat(1)));
    CHECK(pgp_modulus(zero_mu(2), Rat(1, 1024)).is_infinite());

    // any subadditive instance: delta >= eps/2
    for (const auto& [name, inst] : catalog_on(power_set_ring(3))) {
        if (check_subadditive(inst).verdict != Verdict::holds ||
            check_continuity(inst).verdict != Verdict::holds)
            continue;
        INFO(name);
        for (const Rat& eps : standard_eps_grid())
            CHECK(pgp_modulus(inst, eps) >= ExtRat(eps / 2));
    }

    // uniform subadditive continuity implies the property
    for (const auto& [name, inst] : catalog_on(power_set_ring(3))) {
        INFO(name);
        if (usc_holds_exact(inst))
            CHECK(pgp_holds_exact(inst));
    }
}

TEST_CASE("delta sequences obey the halving policy")
{
    const std::vector<Rat> zero_seq = delta_sequence(zero_mu(2), 3);
    CHECK(zero_seq == std::vector<Rat>{Rat(1, 4), Rat(1, 8), Rat(1, 16)});

    for (const auto& [name, inst] : catalog_on(power_set_ring(3))) {
        if (!pgp_holds_exact(inst))
            continue;
        INFO(name);
        const std::vector<Rat> deltas = delta_sequence(inst, 8);
        REQUIRE(deltas.size() == 8);
        CHECK(deltas[0] < Rat(1, 2));
        CHECK(deltas[0] > 0);
        for (std::size_t k = 1; k < deltas.size(); ++k) {
            CHECK(deltas[k] > 0);
            CHECK(deltas[k] < deltas[k - 1]);
            CHECK(deltas[k] < pow2(-int(k) - 1));
        }
    }
}

TEST_CASE("chained union bound holds on admissible families and gates otherwise")
{
    const Submeasure zero = zero_mu(3);
    const std::vector<Rat> deltas = delta_sequence(zero, 4);
    const std::vector<FiniteSet> family = {FiniteSet::of(3, {0}), FiniteSet::of(3, {1}),
                                           FiniteSet::of(3, {2})};
    CHECK(verify_chained_union_bound(zero, deltas, family).verdict == Verdict::holds);

    // tiny additive weights keep every singleton admissible
    AdditiveRule small;
    small.point_weights.assign(3, LatticeValue::scalar(Rat(1, 1000)));
    const Submeasure mu(power_set_ring(3), std::move(small));
    const std::vector<Rat> ds = delta_sequence(mu, 4);
    const PropertyReport ok = verify_chained_union_bound(mu, ds, family);
    CHECK(ok.verdict == Verdict::holds);

    // precondition gate: a member too large for its delta slot
    const Submeasure big = additive_scalar_pair();
    const std::vector<Rat> ds2 = delta_sequence(big, 4);
    const PropertyReport gated =
        verify_chained_union_bound(big, ds2, {FiniteSet::of(2, {0}), FiniteSet::of(2, {1})});
    CHECK(gated.verdict == Verdict::vacuous);

    const PropertyReport overlap =
        verify_chained_union_bound(zero, deltas,
                                   {FiniteSet::of(3, {0, 1}), FiniteSet::of(3, {1})});
    CHECK(overlap.verdict == Verdict::vacuous);
}

TEST_CASE("chained union bound on random admissible families")
{
    std::mt19937_64 rng(2024);
    for (const auto& [name, inst] : catalog_on(power_set_ring(3))) {
        if (!pgp_holds_exact(inst))
            continue;
        INFO(name);
        const std::vector<Rat> deltas = delta_sequence(inst, 6);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<FiniteSet> family;
            FiniteSet used = FiniteSet::empty(3);
            for (std::size_t k = 0; k < deltas.size(); ++k) {
                std::vector<FiniteSet> candidates;
                for (const auto& s : inst.domain().sets())
                    if (s.intersect(used).is_empty() && inst.norm_of(s) < ExtRat(deltas[k]))
                        candidates.push_back(s);
                if (candidates.empty())
                    break;
                const FiniteSet pick = candidates[rng() % candidates.size()];
                family.push_back(pick);
                used = used.unite(pick);
            }
            if (family.size() < 2)
                continue;
            CHECK(verify_chained_union_bound(inst, deltas, family).verdict == Verdict::holds);
        }
    }
}

TEST_CASE("classification returns the strongest class")
{
    CHECK(classify(additive_pair_basis()).cls == SubmeasureClass::d_a);
    CHECK(classify(zero_mu(2)).cls == SubmeasureClass::d_a);

    const Classification root = classify(sqrt_mu(3));
    CHECK(root.cls == SubmeasureClass::d_s);
    CHECK(root.subadditive);
    CHECK_FALSE(root.additive);

    const Ring ring = power_set_ring(2);
    const Submeasure bad = table_mu(ring, {{FiniteSet::empty(2), LatticeValue::scalar(0)},
                                           {FiniteSet::of(2, {0}), LatticeValue::scalar(2)},
                                           {FiniteSet::of(2, {1}), LatticeValue::scalar(1)},
                                           {FiniteSet::of(2, {0, 1}), LatticeValue::scalar(1)}});
    CHECK(classify(bad).cls == SubmeasureClass::not_d);

    // a uniform instance that is not subadditive
    const Submeasure squared =
        table_mu(ring, {{FiniteSet::empty(2), LatticeValue::scalar(0)},
                        {FiniteSet::of(2, {0}), LatticeValue::scalar(1)},
                        {FiniteSet::of(2, {1}), LatticeValue::scalar(1)},
                        {FiniteSet::of(2, {0, 1}), LatticeValue::scalar(4)}});
    CHECK(classify(squared).cls == SubmeasureClass::d_u);
}

TEST_CASE("class hierarchy holds on the whole catalog")
{
    for (unsigned n = 1; n <= 3; ++n)
        for (const Ring& ring : enumerate_subrings(n))
            for (const auto& [name, inst] : catalog_on(ring)) {
                INFO(name);
                const Classification cls = classify(inst);
                if (cls.additive)
                    CHECK(cls.subadditive);
                if (cls.monotone && cls.continuous && cls.subadditive) {
                    CHECK(cls.sc);
                    CHECK(cls.usc);
                }
                if (cls.usc)
                    CHECK(cls.sc);
            }
}

TEST_CASE("sigma-subadditivity over bounded covers")
{
    const PropertyReport additive = check_sigma_subadditive(additive_scalar_pair(), 4);
    CHECK(additive.verdict == Verdict::holds);

    CHECK(check_sigma_subadditive(sqrt_mu(3), 3).verdict == Verdict::holds);

    const Ring ring = power_set_ring(2);
    const Submeasure squared =
        table_mu(ring, {{FiniteSet::empty(2), LatticeValue::scalar(0)},
                        {FiniteSet::of(2, {0}), LatticeValue::scalar(1)},
                        {FiniteSet::of(2, {1}), LatticeValue::scalar(1)},
                        {FiniteSet::of(2, {0, 1}), LatticeValue::scalar(4)}});
    CHECK(check_sigma_subadditive(squared, 4).verdict == Verdict::vacuous);
}

TEST_CASE("the absolute-continuity style condition")
{
    for (const auto& [name, inst] : catalog_on(power_set_ring(3))) {
        INFO(name);
        const Classification cls = classify(inst);
        const PropertyReport ac = check_ac_condition(inst);
        if (cls.monotone && cls.continuous && cls.sc && cls.usc)
            CHECK(ac.verdict == Verdict::holds); // uniform instances satisfy it
    }
    CHECK(check_ac_condition(zero_mu(2)).verdict == Verdict::holds);

    // search for a non-uniform violator among catalog instances at this
    // scale; on finite rings none can exist, which is worth pinning down
    bool counterexample = false;
    for (unsigned n = 1; n <= 3; ++n)
        for (const Ring& ring : enumerate_subrings(n))
            for (const auto& [name, inst] : catalog_on(ring)) {
                (void)name;
                const Classification cls = classify(inst);
                const bool is_d = cls.monotone && cls.continuous && cls.sc;
                if (is_d && check_ac_condition(inst).verdict == Verdict::fails)
                    counterexample = true;
            }
    CHECK_MESSAGE(!counterexample, "no counterexample found at this scale");
}

TEST_CASE("exhaustivity mirrors the continuity reduction")
{
    CHECK(check_exhaustive(additive_scalar_pair()).verdict == Verdict::holds);
    CHECK(check_exhaustive(sqrt_mu(2)).verdict == Verdict::holds);
    const Ring trivial = Ring(SetClass(1, {FiniteSet::empty(1)}));
    CHECK(check_exhaustive(table_mu(trivial, {{FiniteSet::empty(1), LatticeValue::scalar(1)}}))
              .verdict == Verdict::fails);
}

TEST_CASE("distortions are nondecreasing and vanish at zero")
{
    const std::vector<Distortion> gs = {{DistortionKind::identity, 1},
                                        {DistortionKind::sqrt, 1},
                                        {DistortionKind::x_over_1px, 1},
                                        {DistortionKind::cap2x, 1},
                                        {DistortionKind::power, Rat(1, 2)},
                                        {DistortionKind::power, Rat(2, 3)},
                                        {DistortionKind::power, Rat(1)},
                                        {DistortionKind::zero, 1}};
    for (const auto& g : gs) {
        CHECK(g.apply(Rat(0)) == 0);
        CHECK(g.apply(0.0) == 0.0);
        Rat prev = g.apply(Rat(0));
        for (int i = 1; i <= 64; ++i) {
            const Rat x = Rat(i, 16);
            const Rat y = g.apply(x);
            CHECK(y >= prev);
            prev = y;
        }
        // continuity at 0 on a shrinking numeric grid
        CHECK(g.apply(1e-12) <= 2e-6);
    }
}

TEST_CASE("forty-digit roots are monotone and exact on perfect squares")
{
    CHECK(approx_sqrt(Rat(4)) == Rat(2));
    CHECK(approx_sqrt(Rat(9, 4)) == Rat(3, 2));
    CHECK(approx_pow(Rat(8), Rat(1, 3)) == Rat(2));
    CHECK(approx_pow(Rat(5), Rat(1)) == Rat(5));
    std::mt19937_64 rng(3);
    Rat prev_x(0), prev_y(0);
    for (int i = 0; i < 500; ++i) {
        const Rat x = Rat(Int(rng() % 10000), Int(1 + rng() % 100));
        const Rat y = approx_sqrt(x);
        if (x >= prev_x)
            CHECK(y >= prev_y);
        else
            CHECK(y <= prev_y);
        // 40-digit accuracy
        const double err = std::abs(to_double(y) * to_double(y) - to_double(x));
        CHECK(err <= 1e-9 * (1 + to_double(x)));
        prev_x = x;
        prev_y = y;
    }
}
