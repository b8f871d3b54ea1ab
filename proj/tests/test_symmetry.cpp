#include <doctest.h>

#include <algorithm>

#include "dsieve/symmetry.hpp"

using namespace dsieve;

namespace {

SymmetryGroup group_of(std::uint64_t n) { return compute_symmetry_group(build_sieve(n)); }

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("published symmetry groups") {
    const SymmetryGroup g12 = group_of(12);
    CHECK(g12.elements.size() == 8);
    CHECK(g12.descriptor.name == "Z2^3");
    CHECK(g12.g1_generator == 6);
    CHECK(g12.unit_part == std::vector<std::uint64_t>{1, 5, 7, 11});

    const SymmetryGroup g90 = group_of(90);
    CHECK(g90.descriptor.name == "Z2");
    CHECK(g90.elements.size() == 2);

    const SymmetryGroup g120 = group_of(120);
    CHECK(g120.descriptor.name == "V");
    CHECK(g120.central_element_present);
}

TEST_CASE("two-prime groups are plain reflections") {
    const SymmetryGroup g10 = group_of(10);
    CHECK(g10.elements ==
          std::vector<AffineMap>{affine_identity(10), unit_map(10, 9)});
    for (std::uint64_t p : {7, 11, 13})
        CHECK(!translation_part(group_of(2 * p)).has_value());
}

TEST_CASE("N=16 lies outside the conjectured pattern") {
    // G_16 keeps mixed elements like x -> 3x + 4 even though T_8 and f_9
    // are both present, so neither factorization regime fits
    const SymmetryGroup g16 = group_of(16);
    CHECK(g16.elements.size() == 16);
    CHECK(g16.unit_part == std::vector<std::uint64_t>{1, 7, 9, 15});
    CHECK(g16.g1_generator == 8);
    CHECK(g16.contains(AffineMap{3, 4, 16}));
    CHECK(g16.contains(translation(16, 8)));
    CHECK(g16.contains(unit_map(16, 9)));
    CHECK_FALSE(g16.contains(translation(16, 4)));
    CHECK_FALSE(g16.contains(unit_map(16, 3)));
    const StructureReport r = decompose(g16);
    CHECK(r.regime == Regime::violated);
    CHECK(r.mixed_count == 8);
}

TEST_CASE("translation_part") {
    CHECK(translation_part(group_of(12)) == std::uint64_t{6});
    CHECK(!translation_part(group_of(128)).has_value());
    CHECK(group_of(8).g1_generator == 2);
}

TEST_CASE("negation map always belongs") {
    for (std::uint64_t n = 4; n <= 300; n += 2) {
        const SymmetryGroup g = group_of(n);
        CHECK(g.contains(unit_map(n, n - 1)));
    }
}

TEST_CASE("members fix the covering as well as the complement") {
    const GoldbachSieve sieve = build_sieve(60);
    const SymmetryGroup g = compute_symmetry_group(sieve);
    for (const AffineMap& f : g.elements)
        for (std::uint64_t x = 0; x < sieve.n; ++x)
            CHECK(sieve.covered(f(x)) == sieve.covered(x));
}

TEST_CASE("decompose regimes") {
    SUBCASE("direct product at N=120") {
        const StructureReport r = decompose(group_of(120));
        CHECK(r.regime == Regime::direct_product);
        CHECK(r.central_present);
        CHECK(r.group_order == 2 * r.g1_order * r.h_order);
        CHECK(r.mixed_count == 2);
    }
    SUBCASE("split at N=30: the group is its unit part") {
        const SymmetryGroup g = group_of(30);
        const StructureReport r = decompose(g);
        CHECK(r.regime == Regime::split);
        CHECK(g.g1_generator == 0);
        CHECK(r.h_order == 8);
        CHECK(r.group_order == 8);
    }
    SUBCASE("split at N=12: every element splits") {
        const StructureReport r = decompose(group_of(12));
        CHECK(r.regime == Regime::split);
        CHECK(r.mixed_count == 0);
        CHECK(r.group_order == r.g1_order * r.h_order);
    }
    SUBCASE("split at N=4 with T_2 present") {
        const StructureReport r = decompose(group_of(4));
        CHECK(r.regime == Regime::split);
        CHECK(r.group_order == 4);
    }
}

TEST_CASE("mixed element closure") {
    for (std::uint64_t n : {16, 90, 120, 128})
        CHECK(mixed_element_closure_check(group_of(n)));
}

TEST_CASE("half-shift coset uniqueness") {
    const HalfShiftCheck no_mixed = half_shift_uniqueness_check(group_of(12));
    CHECK(no_mixed.holds);
    CHECK_FALSE(no_mixed.applicable);

    for (std::uint64_t n : {16, 120}) {
        const HalfShiftCheck mixed = half_shift_uniqueness_check(group_of(n));
        CHECK(mixed.holds);
        CHECK(mixed.applicable);
    }
}

TEST_CASE("N=6 keeps its full rotation part") {
    // 1 + 2 = 3 divides 6, so T_2 drags no unit map in and the group stays
    // <T_2> x| <f_5> of order six
    const SymmetryGroup g6 = group_of(6);
    CHECK(g6.elements.size() == 6);
    CHECK(g6.g1_generator == 2);
    CHECK(g6.unit_part == std::vector<std::uint64_t>{1, 5});
    CHECK_FALSE(g6.descriptor.is_abelian);
}

TEST_CASE("reflection-only unit part forces the minimal group") {
    // whenever H = {1, N-1}, G is <f_-1> alone or joined by the central
    // element; N=6 sits outside (see the rotation-part case above)
    for (std::uint64_t n = 8; n <= 512; n += 2) {
        const SymmetryGroup g = group_of(n);
        if (g.unit_part != std::vector<std::uint64_t>{1, n - 1}) continue;
        std::vector<AffineMap> expect{affine_identity(n), unit_map(n, n - 1)};
        if (n % 4 == 0 && !g.contains(translation(n, n / 2))) {
            const AffineMap c{1 + n / 2, n / 2, n};
            expect.push_back(c);
            expect.push_back(affine_compose(c, unit_map(n, n - 1)));
        }
        std::sort(expect.begin(), expect.end());
        CHECK(g.elements == expect);
    }
}

TEST_CASE("translations drag unit maps in") {
    const SymmetryGroup g12 = group_of(12);
    CHECK(std::binary_search(g12.unit_part.begin(), g12.unit_part.end(), 7));  // 1 + 6
}

TEST_CASE("multi-invariance witnesses") {
    SUBCASE("identity is invariant for every group in the list") {
        for (std::uint64_t n : {12, 16, 30}) {
            const GoldbachSieve sieve = build_sieve(n);
            for (const GroupWitness& w :
                 multi_invariance_witnesses(affine_identity(n), sieve))
                CHECK(w.invariant);
            CHECK(is_multi_invariant_symmetry(affine_identity(n), sieve));
        }
    }
    SUBCASE("negation is invariant for every rotation group") {
        for (std::uint64_t n : {12, 16, 30, 60}) {
            const GoldbachSieve sieve = build_sieve(n);
            for (const GroupWitness& w :
                 multi_invariance_witnesses(unit_map(n, n - 1), sieve))
                if (!w.is_q_group) CHECK(w.invariant);
            CHECK(is_multi_invariant_symmetry(unit_map(n, n - 1), sieve));
        }
    }
    SUBCASE("T_1 against the halving group at N=12") {
        const GoldbachSieve sieve = build_sieve(12);
        const std::vector<GroupWitness> ws =
            multi_invariance_witnesses(translation(12, 1), sieve);
        REQUIRE(!ws.empty());
        CHECK_FALSE(ws[0].is_q_group);
        CHECK(ws[0].prime == 2);
        CHECK(ws[0].invariant);
        CHECK(ws[0].witness.shift == 1);  // odd translations need the orbit swap
        CHECK(ws[0].witness.mult == 1);
        // T_1 moves survivors onto covered residues, so it is no sieve symmetry
        CHECK_FALSE(is_multi_invariant_symmetry(translation(12, 1), sieve));
    }
    SUBCASE("sieve symmetries are multi-invariant at N=16") {
        const GoldbachSieve sieve = build_sieve(16);
        const SymmetryGroup g = compute_symmetry_group(sieve);
        for (const AffineMap& f : g.elements) {
            for (const GroupWitness& w : multi_invariance_witnesses(f, sieve))
                if (!w.is_q_group) CHECK(w.invariant);
        }
    }
}

TEST_CASE("capacity guard") {
    GoldbachSieve fake;
    fake.n = (std::uint64_t{1} << 16) + 2;
    CHECK_THROWS_AS(compute_symmetry_group(fake), CapacityError);
}

}  // TEST_SUITE
