#include "submeas/dyadic.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace submeas;

namespace {

IntervalRule sqrt_rule()
{
    return IntervalRule({Distortion{DistortionKind::sqrt, 1}});
}

IntervalRule identity_rule()
{
    return IntervalRule({Distortion{DistortionKind::identity, 1}});
}

double number(const PropertyReport& report, const std::string& label)
{
    for (const auto& [key, value] : report.numbers)
        if (key == label)
            return value;
    const std::string message = "missing number '" + label + "'";
    REQUIRE_MESSAGE(false, message);
    return 0;
}

DyadicSet random_dyadic(std::mt19937_64& rng, unsigned depth)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    const std::uint64_t cells = std::uint64_t(1) << depth;
    std::uint64_t pos = rng() % 8;
    while (pos < cells) {
        const std::uint64_t len = 1 + rng() % 16;
        const std::uint64_t end = std::min(cells, pos + len);
        runs.emplace_back(pos, end);
        pos = end + 1 + rng() % 32;
    }
    return DyadicSet(depth, std::move(runs));
}

} // namespace

TEST_CASE("inner refinement hulls")
{
    const DyadicSet third = inner_refine(TargetSet::interval(Rat(0), Rat(1, 3)), 2);
    CHECK(third.runs() == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}});
    CHECK(third.length_exact() == Rat(1, 4));

    for (unsigned k = 1; k <= 8; ++k)
        CHECK(inner_refine(TargetSet::interval(Rat(0), Rat(1, 2)), k).length_exact() ==
              Rat(1, 2));

    const DyadicSet cantor = inner_refine(TargetSet::cantor_stage(1), 4);
    CHECK(cantor.runs() ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 5}, {11, 16}});

    CHECK_THROWS_WITH_AS(inner_refine(TargetSet::interval(Rat(0), Rat(1, 3)), 61), "depth cap",
                         std::invalid_argument);
}

TEST_CASE("outer refinement mirrors the inner hull")
{
    const TargetSet t = TargetSet::interval(Rat(0), Rat(1, 3));
    for (unsigned k = 1; k <= 20; ++k) {
        const DyadicSet in = inner_refine(t, k);
        const DyadicSet out = outer_refine(t, k);
        CHECK(in.subset_of(out));
        CHECK(in.length_exact() <= t.length());
        CHECK(out.length_exact() >= t.length());
    }
}

TEST_CASE("inner refinement is monotone in depth with bounded deficit")
{
    const std::vector<TargetSet> targets = {
        TargetSet::interval(Rat(0), Rat(1, 3)),
        TargetSet::interval(Rat(1, 7), Rat(5, 7)),
        TargetSet::cantor_stage(2),
        TargetSet::union_of({{Rat(0), Rat(1, 5)}, {Rat(1, 2), Rat(9, 10)}}),
    };
    for (const auto& target : targets) {
        for (unsigned k = 1; k <= 30; ++k) {
            const DyadicSet a = inner_refine(target, k);
            const DyadicSet b = inner_refine(target, k + 1);
            CHECK(a.subset_of(b));
            const Rat deficit = target.length() - a.length_exact();
            CHECK(deficit <= Rat(target.intervals().size()) * pow2(1 - int(k)));
        }
    }
}

TEST_CASE("refinement convergence reaches the analytic limit")
{
    const PropertyReport root =
        check_refinement_convergence(sqrt_rule(), TargetSet::interval(Rat(0), Rat(1, 3)), 1e-6,
                                     25);
    CHECK(root.verdict == Verdict::holds);
    CHECK(number(root, "first_depth") <= 25);
    CHECK(std::abs(number(root, "value") - 1.0 / std::sqrt(3.0)) <= 1e-6);

    const PropertyReport exact =
        check_refinement_convergence(identity_rule(), TargetSet::interval(Rat(0), Rat(1, 2)),
                                     0.0, 3);
    CHECK(exact.verdict == Verdict::holds);
    CHECK(number(exact, "first_depth") == 1);

    const IntervalRule two({Distortion{DistortionKind::identity, 1},
                            Distortion{DistortionKind::sqrt, 1}});
    const PropertyReport mixed =
        check_refinement_convergence(two, TargetSet::interval(Rat(0), Rat(1, 4)), 1e-9, 40);
    CHECK(mixed.verdict == Verdict::holds);
    CHECK(number(mixed, "analytic_limit") == doctest::Approx(0.75).epsilon(1e-12));

    const PropertyReport hopeless =
        check_refinement_convergence(sqrt_rule(), TargetSet::interval(Rat(0), Rat(1, 3)), 0.0, 10);
    CHECK(hopeless.verdict == Verdict::fails);
}

TEST_CASE("continuity along the shrinking family")
{
    const PropertyReport root = check_continuity_sequence(sqrt_rule(), 40, 1e-4);
    CHECK(root.verdict == Verdict::holds);
    CHECK(number(root, "first_n") == 27);
    // closed form 2^(-n/2) to 1e-12
    CHECK(std::abs(number(root, "value") - std::pow(2.0, -13.5)) <= 1e-12);

    const PropertyReport line = check_continuity_sequence(identity_rule(), 40, 1e-4);
    CHECK(line.verdict == Verdict::holds);
    CHECK(number(line, "first_n") == 14);

    const IntervalRule zero({Distortion{DistortionKind::zero, 1}});
    const PropertyReport z = check_continuity_sequence(zero, 5, 0.0);
    CHECK(z.verdict == Verdict::holds);
    CHECK(number(z, "first_n") == 1);
}

TEST_CASE("exhaustivity along the disjoint family")
{
    const PropertyReport root = check_exhaustive_sequence(sqrt_rule(), 40, 1e-4);
    CHECK(root.verdict == Verdict::holds);
    // norm is 2^(-(n+1)/2)
    const unsigned n = unsigned(number(root, "first_n"));
    CHECK(std::abs(number(root, "value") - std::pow(2.0, -double(n + 1) / 2)) <= 1e-12);

    const PropertyReport line = check_exhaustive_sequence(identity_rule(), 40, 1e-4);
    CHECK(line.verdict == Verdict::holds);
    CHECK(number(line, "first_n") == 13); // 2^-(n+1) <= 1e-4 first at n = 13

    const IntervalRule zero({Distortion{DistortionKind::zero, 1}});
    CHECK(check_exhaustive_sequence(zero, 3, 0.0).verdict == Verdict::holds);
}

TEST_CASE("refinement families become Cauchy for the pseudometric")
{
    const PropertyReport root =
        check_mu_cauchy(sqrt_rule(), TargetSet::interval(Rat(0), Rat(1, 3)), 40, 1e-4);
    CHECK(root.verdict == Verdict::holds);

    // constant family: a dyadic target refines exactly from depth one
    const PropertyReport constant =
        check_mu_cauchy(identity_rule(), TargetSet::interval(Rat(0), Rat(1, 2)), 20, 0.0);
    CHECK(constant.verdict == Verdict::holds);
    CHECK(number(constant, "threshold_n") == 1);

    // identity rule: the worst tail pair has norm (2^n mod 3)/(3*2^n) up to
    // the negligible depth-40 deficit, first below 1e-4 at n = 12
    const PropertyReport line =
        check_mu_cauchy(identity_rule(), TargetSet::interval(Rat(0), Rat(1, 3)), 40, 1e-4);
    CHECK(line.verdict == Verdict::holds);
    CHECK(number(line, "threshold_n") == 12);
}

TEST_CASE("norm limits along increasing families")
{
    const PropertyReport root =
        check_monotone_limit(sqrt_rule(), TargetSet::interval(Rat(0), Rat(1, 3)), 40, 1e-6);
    CHECK(root.verdict == Verdict::holds);
    CHECK(std::abs(number(root, "value") - 1.0 / std::sqrt(3.0)) <= 1e-6);

    const PropertyReport exact =
        check_monotone_limit(identity_rule(), TargetSet::interval(Rat(0), Rat(3, 4)), 10, 0.0);
    CHECK(exact.verdict == Verdict::holds);
    CHECK(number(exact, "first_n") <= 2);

    const IntervalRule two({Distortion{DistortionKind::identity, 1},
                            Distortion{DistortionKind::sqrt, 1}});
    CHECK(check_monotone_limit(two, TargetSet::cantor_stage(1), 45, 1e-5).verdict ==
          Verdict::holds);
}

TEST_CASE("closed-form decay matches the generic numeric path to 1e-12")
{
    for (unsigned n = 1; n <= 40; ++n) {
        const double len = std::ldexp(1.0, -int(n));
        CHECK(std::abs(sqrt_rule().norm_of_length(len) - std::pow(2.0, -double(n) / 2)) <= 1e-12);
        CHECK(std::abs(identity_rule().norm_of_length(len) - len) <= 1e-12);
    }
}

TEST_CASE("sampled subadditivity for concave rules")
{
    std::mt19937_64 rng(41);
    const std::vector<IntervalRule> rules = {
        sqrt_rule(), identity_rule(),
        IntervalRule({Distortion{DistortionKind::cap2x, 1}}),
        IntervalRule({Distortion{DistortionKind::x_over_1px, 1}}),
        IntervalRule({Distortion{DistortionKind::power, Rat(2, 3)}}),
    };
    for (int i = 0; i < 10000; ++i) {
        const DyadicSet a = random_dyadic(rng, 10);
        const DyadicSet b = random_dyadic(rng, 10);
        const DyadicSet u = a.unite(b);
        const IntervalRule& rule = rules[i % rules.size()];
        CHECK(rule.norm_of(u) <= rule.norm_of(a) + rule.norm_of(b) + 1e-12);
    }
}

TEST_CASE("dyadic set algebra")
{
    const DyadicSet a(3, {{0, 2}, {4, 6}});
    const DyadicSet b(3, {{1, 5}});
    CHECK(a.unite(b).runs() ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 6}});
    CHECK(a.intersect(b).runs() ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2}, {4, 5}});
    CHECK(a.symm_diff(b).runs() ==
          std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}, {2, 4}, {5, 6}});
    CHECK(a.symm_diff(a).is_empty());

    // depth alignment
    const DyadicSet half(1, {{0, 1}});
    const DyadicSet quarter(2, {{0, 1}});
    CHECK(half.symm_diff(quarter).length_exact() == Rat(1, 4));

    CHECK_THROWS_AS(DyadicSet(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(DyadicSet(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(DyadicSet(2, {{0, 2}, {1, 3}}), std::invalid_argument);
}

TEST_CASE("touching target intervals merge, keeping inner hulls exact")
{
    const TargetSet split =
        TargetSet::union_of({{Rat(0), Rat(1, 3)}, {Rat(1, 3), Rat(1, 2)}});
    CHECK(split == TargetSet::interval(Rat(0), Rat(1, 2)));
    CHECK(inner_refine(split, 2).length_exact() == Rat(1, 2));
}

TEST_CASE("targets validate and measure exactly")
{
    CHECK(TargetSet::cantor_stage(0).length() == 1);
    CHECK(TargetSet::cantor_stage(1).length() == Rat(2, 3));
    CHECK(TargetSet::cantor_stage(3).length() == Rat(8, 27));
    CHECK(TargetSet::union_of({{Rat(0), Rat(1, 4)}, {Rat(1, 2), Rat(3, 4)}}).length() ==
          Rat(1, 2));
    CHECK_THROWS_AS(TargetSet::interval(Rat(1, 2), Rat(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(TargetSet::union_of({{Rat(0), Rat(1, 2)}, {Rat(1, 4), Rat(3, 4)}}),
                    std::invalid_argument);
}
