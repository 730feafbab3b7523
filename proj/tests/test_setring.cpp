#include "submeas/setring.hpp"

#include "support/catalog.hpp"

#include <doctest.h>

#include <set>

using namespace submeas;

namespace {

// Independent fixpoint-closure oracle: rescan the whole family until no
// pairwise combination adds a member.
std::set<std::uint64_t> closure_oracle(unsigned n, const std::vector<std::uint64_t>& generators)
{
    std::set<std::uint64_t> masks(generators.begin(), generators.end());
    masks.insert(0);
    bool changed;
    do {
        changed = false;
        for (auto a : masks)
            for (auto b : masks) {
                changed |= masks.insert(a ^ b).second;
                changed |= masks.insert(a & b).second;
            }
    } while (changed);
    (void)n;
    return masks;
}

std::set<std::uint64_t> masks_of(const SetClass& c)
{
    std::set<std::uint64_t> out;
    for (const auto& s : c)
        out.insert(s.mask());
    return out;
}

} // namespace

TEST_CASE("generate_ring closes generators under the ring operations")
{
    const Ring single = generate_ring(2, SetClass(2, {FiniteSet::of(2, {0})}));
    CHECK(masks_of(single.base()) == std::set<std::uint64_t>{0b00, 0b01});

    const Ring both = generate_ring(2, SetClass(2, {FiniteSet::of(2, {0}), FiniteSet::of(2, {1})}));
    CHECK(masks_of(both.base()) == closure_oracle(2, {0b01, 0b10}));
    CHECK(masks_of(both.base()) == std::set<std::uint64_t>{0b00, 0b01, 0b10, 0b11});

    const Ring trivial = generate_ring(3, SetClass(3));
    CHECK(masks_of(trivial.base()) == std::set<std::uint64_t>{0});
}

TEST_CASE("generate_ring rejects bad inputs")
{
    CHECK_THROWS_WITH_AS(generate_ring(0, SetClass(1)), "empty universe", std::invalid_argument);
    CHECK_THROWS_AS(FiniteSet::of(2, {5}), std::invalid_argument);
    CHECK_THROWS_AS(generate_ring(2, SetClass(3, {FiniteSet::of(3, {2})})),
                    std::invalid_argument);
}

TEST_CASE("hereditary_class enumerates all subsets of all members")
{
    const Ring pair = Ring(SetClass(2, {FiniteSet::empty(2), FiniteSet::of(2, {0, 1})}));
    // oracle: subsets of each member, deduplicated
    std::set<std::uint64_t> expected;
    for (const auto& s : pair.sets())
        for (const auto& sub : subsets_of(s))
            expected.insert(sub.mask());
    CHECK(masks_of(hereditary_class(pair)) == expected);
    CHECK(masks_of(hereditary_class(pair)) == std::set<std::uint64_t>{0b00, 0b01, 0b10, 0b11});

    const Ring trivial = Ring(SetClass(3, {FiniteSet::empty(3)}));
    CHECK(masks_of(hereditary_class(trivial)) == std::set<std::uint64_t>{0});

    const Ring full = submeas::testing::power_set_ring(3);
    CHECK(hereditary_class(full) == full.base());
}

TEST_CASE("hereditary_class is closed under subsets and the ring operations")
{
    for (const Ring& ring : enumerate_subrings(3)) {
        const SetClass h = hereditary_class(ring);
        for (const auto& a : h) {
            for (const auto& sub : subsets_of(a))
                CHECK(h.contains(sub));
            for (const auto& b : h) {
                CHECK(h.contains(a.symm_diff(b)));
                CHECK(h.contains(a.intersect(b)));
                CHECK(h.contains(a.unite(b)));
            }
        }
    }
}

TEST_CASE("class_op forms the elementwise product family")
{
    const SetClass a(2, {FiniteSet::of(2, {0})});
    const SetClass b(2, {FiniteSet::of(2, {1})});
    CHECK(masks_of(class_op(a, b, ClassOp::unite)) == std::set<std::uint64_t>{0b11});

    const SetClass c(2, {FiniteSet::empty(2), FiniteSet::of(2, {0})});
    // all four pairs by hand: {}d{}={}, {}d{0}={0}, {0}d{}={0}, {0}d{0}={}
    CHECK(masks_of(class_op(c, c, ClassOp::symm_diff)) == std::set<std::uint64_t>{0b00, 0b01});

    const SetClass d(3, {FiniteSet::of(3, {0, 1})});
    const SetClass e(3, {FiniteSet::of(3, {1, 2})});
    CHECK(masks_of(class_op(d, e, ClassOp::intersect)) == std::set<std::uint64_t>{0b010});

    CHECK_THROWS_AS(class_op(a, d, ClassOp::unite), std::invalid_argument);
}

TEST_CASE("enumerate_subrings lists every ring up to the bound")
{
    const auto rings1 = enumerate_subrings(1);
    REQUIRE(rings1.size() == 2);
    CHECK(masks_of(rings1[0].base()) == std::set<std::uint64_t>{0});
    CHECK(masks_of(rings1[1].base()) == std::set<std::uint64_t>{0, 1});

    for (unsigned n = 1; n <= 4; ++n) {
        bool has_trivial = false;
        for (const auto& ring : enumerate_subrings(n))
            has_trivial |= ring.size() == 1;
        CHECK(has_trivial);
    }

    const auto rings2 = enumerate_subrings(2);
    bool has_power_set = false;
    bool has_atom = false;
    for (const auto& ring : rings2) {
        has_power_set |= masks_of(ring.base()) == std::set<std::uint64_t>{0, 1, 2, 3};
        has_atom |= masks_of(ring.base()) == std::set<std::uint64_t>{0, 3};
    }
    CHECK(has_power_set);
    CHECK(has_atom);

    CHECK_THROWS_WITH_AS(enumerate_subrings(5), "enumeration bound exceeded",
                         std::invalid_argument);
}

TEST_CASE("closure audit: every enumerated ring is closed under all four operations")
{
    for (unsigned n = 1; n <= 4; ++n)
        for (const Ring& ring : enumerate_subrings(n))
            for (const auto& a : ring.sets())
                for (const auto& b : ring.sets()) {
                    CHECK(ring.contains(a.symm_diff(b)));
                    CHECK(ring.contains(a.intersect(b)));
                    CHECK(ring.contains(a.unite(b)));
                    CHECK(ring.contains(a.difference(b)));
                }
}

TEST_CASE("ring constructor rejects families missing closure certificates")
{
    CHECK_THROWS_AS(Ring(SetClass(2, {FiniteSet::of(2, {0})})), std::invalid_argument);
    CHECK_THROWS_AS(Ring(SetClass(2, {FiniteSet::empty(2), FiniteSet::of(2, {0}),
                                      FiniteSet::of(2, {0, 1})})),
                    std::invalid_argument);
}

TEST_CASE("r_sigma is the identity on finite universes")
{
    const Ring ring = submeas::testing::worked_example_ring();
    CHECK(r_sigma(ring) == ring);
}

TEST_CASE("set literals parse and print")
{
    CHECK(parse_set("{0,2}", 3) == FiniteSet::of(3, {0, 2}));
    CHECK(parse_set("{}", 3) == FiniteSet::empty(3));
    CHECK(FiniteSet::of(3, {0, 2}).to_string() == "{0,2}");
    CHECK_THROWS_AS(parse_set("{3}", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_set("0,2", 3), std::invalid_argument);
}
