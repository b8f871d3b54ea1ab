#include <doctest.h>

#include <algorithm>

#include "dsieve/criteria.hpp"

using namespace dsieve;

using U64Set = std::vector<std::uint64_t>;

TEST_SUITE("criteria") {

TEST_CASE("two-prime divisor bound") {
    const TwoPrimeBound b13 = prop81_bound(13);
    CHECK(b13.alpha == 8);
    CHECK(b13.beta == 4);
    CHECK(b13.alpha + b13.beta == 12);
    CHECK(b13.gcd_divisors == U64Set{1, 2, 4});
    CHECK(b13.even_gcd_divisors == U64Set{2, 4});
    // before computing alpha and beta, only these orders are possible
    CHECK(b13.candidate_orders == U64Set{2, 4, 6});

    const TwoPrimeBound b5 = prop81_bound(5);
    CHECK(gcd_u64(b5.alpha, b5.beta) == 2);
    CHECK_THROWS_AS(prop81_bound(8), std::invalid_argument);
}

TEST_CASE("safe primes") {
    CHECK(prop83_safe_prime(11) == std::string("Z2"));
    CHECK(prop83_safe_prime(47) == std::string("Z2"));
    CHECK(prop83_safe_prime(5) == std::string("Z2"));
    CHECK(!prop83_safe_prime(13));
    CHECK(!prop83_safe_prime(3));  // (3-1)/2 = 1 is not prime
}

TEST_CASE("cyclotomic predicate") {
    CHECK(is_cyclotomic(12));
    CHECK(is_cyclotomic(30));
    CHECK(is_cyclotomic(2));
    CHECK(is_cyclotomic(8));
    CHECK_FALSE(is_cyclotomic(16));
    CHECK_FALSE(is_cyclotomic(10));
    // the full list below 2000
    U64Set found;
    for (std::uint64_t n = 2; n <= 2000; n += 2)
        if (is_cyclotomic(n)) found.push_back(n);
    CHECK(found == U64Set{2, 4, 6, 8, 12, 18, 24, 30});
}

TEST_CASE("cyclotomic structure") {
    const CyclotomicCheck c18 = cyclotomic_structure_check(18);
    CHECK(c18.complement_is_units);
    CHECK(c18.h_is_units);
    CHECK(c18.translation_generator == 6);
    CHECK(c18.group_order == 18);

    CHECK(cyclotomic_structure_check(24).group_order == 32);

    const CyclotomicCheck c30 = cyclotomic_structure_check(30);
    CHECK(c30.translation_generator == 0);
    CHECK(c30.group_order == 8);

    CHECK_THROWS_AS(cyclotomic_structure_check(16), std::invalid_argument);
}

TEST_CASE("converse cyclotomic") {
    CHECK(converse_cyclotomic_check(18));
    CHECK(converse_cyclotomic_check(10));   // vacuous: H smaller than U
    CHECK(converse_cyclotomic_check(128));  // vacuous
    for (std::uint64_t n = 8; n <= 512; n += 2) CHECK(converse_cyclotomic_check(n));
}

TEST_CASE("orbit classification") {
    const NClassification c90 = orbit_classification(90);
    CHECK(c90.mono_orbital);
    CHECK(c90.qmo);
    CHECK_FALSE(c90.cyclotomic);

    CHECK(orbit_classification(120).mono_orbital);

    const NClassification c12 = orbit_classification(12);
    CHECK(c12.qmo);
    CHECK_FALSE(c12.mono_orbital);
    CHECK(c12.cyclotomic);
}

TEST_CASE("classification implications and power chain") {
    for (std::uint64_t n = 2; n <= 1024; n += 2) {
        const NClassification c = orbit_classification(n);
        if (c.cyclotomic) CHECK(c.qmo);
        if (c.mono_orbital) CHECK(c.qmo);
        // a mono-orbital sieve always keeps survivors
        if (c.mono_orbital) CHECK_FALSE(build_sieve(n).complement.empty());
        // halving the power of two preserves quasi-mono-orbitality
        if (c.qmo) {
            std::uint64_t odd = n, k = 0;
            while (odd % 2 == 0) {
                odd /= 2;
                ++k;
            }
            for (std::uint64_t j = 2; j < k; ++j)
                CHECK(orbit_classification((std::uint64_t{1} << j) * odd).qmo);
        }
    }
}

TEST_CASE("translation bound") {
    const TranslationBound b12 = prop89_translation_bound(12);
    CHECK(b12.alpha == 2);
    CHECK(b12.beta == 4);
    CHECK(b12.bound_generator == 6);  // admits exactly T_6

    for (std::uint64_t n = 6; n <= 512; n += 2) {
        const TranslationBound b = prop89_translation_bound(n);
        CHECK(b.alpha + b.beta == n / 2);
        const SymmetryGroup g = compute_symmetry_group(build_sieve(n));
        const std::uint64_t g1_order = g.g1_order();
        CHECK(gcd_u64(b.alpha, b.beta) % g1_order == 0);
        if (g.g1_generator != 0) CHECK(g.g1_generator % b.bound_generator == 0);
    }
}

TEST_CASE("window sets") {
    CHECK(window_set(64, 128).members ==
          U64Set{3, 5, 11, 17, 23, 41, 47, 53, 59, 61});
    CHECK(window_set(2, 12).members == U64Set{1});
    CHECK(window_set(4, 12).members == U64Set{1, 3});
    CHECK_THROWS_AS(window_set(5, 12), std::invalid_argument);
    CHECK_THROWS_AS(window_set(12, 12), std::invalid_argument);

    for (std::uint64_t m = 2; m <= 400; m += 2) {
        const WindowSet w = window_set(m, 4096);
        // mirror-closed, and identical to the complement of the sieve at m
        for (std::uint64_t q : w.members)
            CHECK(std::binary_search(w.members.begin(), w.members.end(), m - q));
        CHECK(w.members == build_sieve(m).complement);
    }
}

TEST_CASE("exclusion criterion verdicts") {
    CHECK(exclusion_criterion(build_sieve(128), 32, 1) == ExclusionVerdict::asymmetric);
    CHECK(exclusion_criterion(build_sieve(12), 3, 1) == ExclusionVerdict::not_excluded);
    for (std::uint64_t n : {10, 12, 100})
        CHECK(exclusion_criterion(build_sieve(n), 1, 1) != ExclusionVerdict::not_excluded);
    CHECK_THROWS_AS(exclusion_criterion(build_sieve(12), 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(exclusion_criterion(build_sieve(12), 3, 4), std::invalid_argument);
    CHECK(verdict_name(ExclusionVerdict::asymmetric) == "excluded-by-(2)");
}

TEST_CASE("coverage identity") {
    CHECK(coverage_identity_check(build_sieve(12), 3, 1));
    CHECK_FALSE(coverage_identity_check(build_sieve(128), 32, 1));
    CHECK_FALSE(coverage_identity_check(build_sieve(10), 1, 1));
}

TEST_CASE("T_2 exclusion") {
    CHECK(prop823_check(compute_symmetry_group(build_sieve(10))));
    CHECK(prop823_check(compute_symmetry_group(build_sieve(100))));
    const SymmetryGroup g8 = compute_symmetry_group(build_sieve(8));
    CHECK(g8.contains(translation(8, 2)));  // below the threshold T_2 still fits
    CHECK_THROWS_AS(prop823_check(g8), std::invalid_argument);
}

}  // TEST_SUITE
