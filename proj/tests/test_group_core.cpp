#include <doctest.h>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "dsieve/dihedral.hpp"
#include "dsieve/group_core.hpp"

using namespace dsieve;

namespace {

FiniteGroup cyclic_group(unsigned n) {
    std::vector<unsigned> table(static_cast<std::size_t>(n) * n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    return FiniteGroup(n, std::move(table));
}

FiniteAction regular_action(const FiniteGroup& g) {
    std::vector<unsigned> act(static_cast<std::size_t>(g.order()) * g.order());
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned x = 0; x < g.order(); ++x) act[a * g.order() + x] = g.mul(a, x);
    return FiniteAction(g, g.order(), std::move(act));
}

FiniteAction trivial_action(const FiniteGroup& g, unsigned set_size) {
    std::vector<unsigned> act(static_cast<std::size_t>(g.order()) * set_size);
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned x = 0; x < set_size; ++x) act[a * set_size + x] = x;
    return FiniteAction(g, set_size, std::move(act));
}

// Klein four group acting on {0,1}: e, a fix both points; b, c swap them.
FiniteGroup klein_group() {
    return FiniteGroup(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0});
}

FiniteAction klein_swap_action() {
    return FiniteAction(klein_group(), 2, {0, 1, 0, 1, 1, 0, 1, 0});
}

}  // namespace

TEST_SUITE("group_core") {

TEST_CASE("table validation") {
    CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), std::invalid_argument);  // no inverse for 1
    CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), std::invalid_argument);  // identity not at 0
    // latin square with identity but broken group laws
    CHECK_THROWS_AS(FiniteGroup(3, {0, 1, 2, 1, 2, 0, 2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_group(201), CapacityError);
    CHECK_NOTHROW(cyclic_group(200));
}

TEST_CASE("cayley fixture loading") {
    std::ifstream good(std::string(DSIEVE_FIXTURE_DIR) + "/klein4.cayley");
    REQUIRE(good.is_open());
    const FiniteGroup g = FiniteGroup::from_cayley_text(good);
    CHECK(g.order() == 4);
    CHECK(g.element_order(1) == 2);

    std::ifstream bad(std::string(DSIEVE_FIXTURE_DIR) + "/truncated.cayley");
    REQUIRE(bad.is_open());
    CHECK_THROWS_AS(FiniteGroup::from_cayley_text(bad), std::invalid_argument);

    std::istringstream empty("");
    CHECK_THROWS_AS(FiniteGroup::from_cayley_text(empty), std::invalid_argument);
}

TEST_CASE("orbits") {
    const OrbitPartition d3 = orbits(dihedral_natural_action(3));
    CHECK(d3.orbits == std::vector<std::vector<unsigned>>{{0, 2, 4}, {1, 3, 5}});
    CHECK(d3.representative == std::vector<unsigned>{0, 1});

    const OrbitPartition d4 = orbits(dihedral_natural_action(4));
    CHECK(d4.orbits == std::vector<std::vector<unsigned>>{{0, 2, 4, 6}, {1, 3, 5, 7}});

    const OrbitPartition trivial = orbits(trivial_action(cyclic_group(1), 2));
    CHECK(trivial.orbits == std::vector<std::vector<unsigned>>{{0}, {1}});
}

TEST_CASE("stabilizers") {
    const FiniteAction d5 = dihedral_natural_action(5);
    CHECK(stabilizer(d5, 0).members == std::vector<unsigned>{0, 5});   // <sigma>
    CHECK(stabilizer(d5, 1).members == std::vector<unsigned>{0, 9});   // <rho sigma>
    const FiniteAction reg = regular_action(cyclic_group(6));
    for (unsigned x = 0; x < 6; ++x)
        CHECK(stabilizer(reg, x).members == std::vector<unsigned>{0});
    CHECK_THROWS_AS(stabilizer(d5, 10), std::invalid_argument);
}

TEST_CASE("normalizers") {
    const FiniteAction d5 = dihedral_natural_action(5);
    const Subgroup s = stabilizer(d5, 0);
    CHECK(normalizer(d5.group(), s) == s);

    const FiniteAction d4 = dihedral_natural_action(4);
    CHECK(normalizer(d4.group(), stabilizer(d4, 0)).members ==
          std::vector<unsigned>{0, 2, 4, 6});
    CHECK(normalizer(d4.group(), stabilizer(d4, 1)).members ==
          std::vector<unsigned>{0, 2, 5, 7});

    const FiniteGroup z6 = cyclic_group(6);
    const Subgroup sub = subgroup(z6, {0, 3});
    std::vector<unsigned> all(6);
    std::iota(all.begin(), all.end(), 0u);
    CHECK(normalizer(z6, sub).members == all);
}

TEST_CASE("subgroup validation") {
    const FiniteGroup z6 = cyclic_group(6);
    CHECK_THROWS_AS(subgroup(z6, {0, 1}), std::invalid_argument);  // not closed
    CHECK_THROWS_AS(subgroup(z6, {3}), std::invalid_argument);     // no identity
    CHECK(subgroup(z6, {0, 2, 4}).order() == 3);
}

TEST_CASE("conjugating_element") {
    const FiniteAction d5 = dihedral_natural_action(5);
    const Subgroup s0 = stabilizer(d5, 0), s1 = stabilizer(d5, 1);
    CHECK(conjugating_element(d5.group(), s0, s0) == 0u);
    // <rho sigma> = <sigma>^(rho^3), and rho^3 is the smallest witness
    CHECK(conjugating_element(d5.group(), s0, s1) == 3u);

    const FiniteAction d4 = dihedral_natural_action(4);
    CHECK(!conjugating_element(d4.group(), stabilizer(d4, 0), stabilizer(d4, 1)));
}

TEST_CASE("all_automorphisms counts") {
    CHECK(all_automorphisms(dihedral_cayley_table(3)).size() == 6);
    CHECK(all_automorphisms(dihedral_cayley_table(4)).size() == 8);
    CHECK(all_automorphisms(dihedral_cayley_table(5)).size() == 20);
    CHECK(all_automorphisms(cyclic_group(8)).size() == 4);
    CHECK(all_automorphisms(klein_group()).size() == 6);
    CHECK(all_automorphisms(cyclic_group(1)).size() == 1);
}

TEST_CASE("s_invariant_automorphisms") {
    CHECK(s_invariant_automorphisms(dihedral_natural_action(5)).size() == 20);
    CHECK(s_invariant_automorphisms(dihedral_natural_action(4)).size() == 8);
    // trivial action: every stabilizer is the whole group, all autos qualify
    CHECK(s_invariant_automorphisms(trivial_action(dihedral_cayley_table(3), 2)).size() == 6);
    // swap action on the Klein group: only automorphisms fixing {e,a} qualify
    CHECK(s_invariant_automorphisms(klein_swap_action()).size() == 2);
}

TEST_CASE("build_phi_invariant") {
    const FiniteAction d3 = dihedral_natural_action(3);
    const unsigned order = d3.group().order();
    std::vector<unsigned> id_image(order);
    std::iota(id_image.begin(), id_image.end(), 0u);
    const GroupAutomorphism identity_aut{id_image};

    SUBCASE("identity choices give the identity map") {
        const InvariantFunction f =
            build_phi_invariant(d3, identity_aut, {{0, 0}, {1, 0}});
        std::vector<unsigned> expect(6);
        std::iota(expect.begin(), expect.end(), 0u);
        CHECK(f.map == expect);
    }
    SUBCASE("inner automorphism gives the group translation") {
        const unsigned rho = dihedral_index(dihedral_rho(3));
        std::vector<unsigned> conj(order);
        for (unsigned x = 0; x < order; ++x)
            conj[x] = d3.group().mul(d3.group().mul(rho, x), d3.group().inv(rho));
        const InvariantFunction f =
            build_phi_invariant(d3, GroupAutomorphism{conj}, {{0, rho}, {1, rho}});
        for (unsigned x = 0; x < 6; ++x) CHECK(f.map[x] == (x + 2) % 6);
    }
    SUBCASE("orbit swap produces the half translation") {
        const FiniteAction d5 = dihedral_natural_action(5);
        std::vector<unsigned> id10(d5.group().order());
        std::iota(id10.begin(), id10.end(), 0u);
        // 2^-1 = 3 mod 5: swap with g_01 = rho^2, g_10 = rho^3
        const InvariantFunction f =
            build_phi_invariant(d5, GroupAutomorphism{id10}, {{1, 2}, {0, 3}});
        for (unsigned x = 0; x < 10; ++x) CHECK(f.map[x] == (x + 5) % 10);
        CHECK(induced_permutation(d5, f.map) == std::vector<unsigned>{1, 0});
    }
    SUBCASE("rejects automorphisms with no invariant") {
        const FiniteAction swap = klein_swap_action();
        // exchange a <-> b: sends Stab(0) = {e,a} to {e,b}, never a stabilizer
        const GroupAutomorphism bad{{0, 2, 1, 3}};
        CHECK_THROWS_AS(build_phi_invariant(swap, bad, {{0, 0}}), std::domain_error);
    }
    SUBCASE("rejects ill-formed coset elements") {
        const unsigned rho = dihedral_index(dihedral_rho(3));
        CHECK_THROWS_AS(build_phi_invariant(d3, identity_aut, {{0, rho}, {1, 0}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(build_phi_invariant(d3, identity_aut, {{0, 0}}),
                        std::invalid_argument);
    }
}

TEST_CASE("induced_permutation of gamma_g invariants is the identity") {
    const FiniteAction d4 = dihedral_natural_action(4);
    const FiniteGroup& g = d4.group();
    const OrbitPartition part = orbits(d4);
    for (unsigned e = 0; e < g.order(); ++e) {
        std::vector<unsigned> map(d4.set_size());
        for (unsigned x = 0; x < d4.set_size(); ++x) map[x] = d4.act(e, x);
        std::vector<unsigned> expect(part.orbits.size());
        std::iota(expect.begin(), expect.end(), 0u);
        CHECK(induced_permutation(d4, map) == expect);
    }
}

TEST_CASE("enumerate_invariant_group orders") {
    CHECK(enumerate_invariant_group(dihedral_natural_action(3)).elements.size() == 12);
    CHECK(enumerate_invariant_group(dihedral_natural_action(4)).elements.size() == 32);
    CHECK(enumerate_invariant_group(trivial_action(cyclic_group(1), 2)).elements.size() == 2);
    CHECK_THROWS_AS(enumerate_invariant_group(trivial_action(cyclic_group(1), 11)),
                    CapacityError);
}

TEST_CASE("uniqueness when normalizers equal stabilizers") {
    // D_5 on Z_10: each (automorphism, induced permutation) pair owns one map
    const FiniteAction d5 = dihedral_natural_action(5);
    const InvariantGroup hat = enumerate_invariant_group(d5);
    std::set<std::pair<unsigned, std::vector<unsigned>>> slots;
    std::size_t pairs = 0;
    for (std::size_t e = 0; e < hat.elements.size(); ++e) {
        const std::vector<unsigned> gamma = induced_permutation(d5, hat.elements[e]);
        for (unsigned w : hat.witnesses[e]) {
            CHECK(slots.insert({w, gamma}).second);
            ++pairs;
        }
    }
    CHECK(pairs == slots.size());
}

TEST_CASE("identity-induced permutations are normal as a set") {
    const FiniteAction d3 = dihedral_natural_action(3);
    const InvariantGroup hat = enumerate_invariant_group(d3);
    std::vector<unsigned> id_image(d3.group().order());
    std::iota(id_image.begin(), id_image.end(), 0u);
    std::size_t id_aut = 0;
    for (std::size_t i = 0; i < hat.automorphisms.size(); ++i)
        if (hat.automorphisms[i].image == id_image) id_aut = i;

    std::set<std::vector<unsigned>> identity_perms, all_perms;
    for (std::size_t e = 0; e < hat.elements.size(); ++e) {
        const std::vector<unsigned> gamma = induced_permutation(d3, hat.elements[e]);
        all_perms.insert(gamma);
        for (unsigned w : hat.witnesses[e])
            if (w == id_aut) identity_perms.insert(gamma);
    }
    for (const std::vector<unsigned>& s : all_perms)
        for (const std::vector<unsigned>& t : identity_perms) {
            std::vector<unsigned> sinv(s.size());
            for (unsigned i = 0; i < s.size(); ++i) sinv[s[i]] = i;
            std::vector<unsigned> conj(s.size());
            for (unsigned i = 0; i < s.size(); ++i) conj[i] = s[t[sinv[i]]];
            CHECK(identity_perms.count(conj) == 1);
        }
}

TEST_CASE("decomposition_report on the odd fixture") {
    const DecompositionReport r = decomposition_report(dihedral_natural_action(3));
    CHECK(r.invariant_group_order == 12);
    CHECK(r.normalizer_index_product == 1);
    CHECK(r.identity_induced_order == 2);
    CHECK(r.aut_s_order == 6);
    CHECK(r.quasi_identical_order == 1);
    CHECK(r.product_identity);
    CHECK(r.assumption_i);
    CHECK(r.assumption_ii);
}

TEST_CASE("decomposition_report flags assumption II failure on the even fixture") {
    const DecompositionReport r = decomposition_report(dihedral_natural_action(4));
    CHECK(r.invariant_group_order == 32);
    CHECK(r.normalizer_index_product == 4);
    CHECK(r.identity_induced_order == 1);
    CHECK(r.aut_s_order == 8);
    CHECK(r.product_identity);
    CHECK(r.assumption_i);
    CHECK_FALSE(r.assumption_ii);
    CHECK(r.assumption_ii_mode == ChoiceMode::unsatisfiable);
}

TEST_CASE("decomposition_report on the one-point action") {
    const DecompositionReport r = decomposition_report(trivial_action(cyclic_group(1), 1));
    CHECK(r.invariant_group_order == 1);
    CHECK(r.normalizer_index_product == 1);
    CHECK(r.identity_induced_order == 1);
    CHECK(r.product_identity);
}

}  // TEST_SUITE
