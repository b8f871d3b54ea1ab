#include "dsieve/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsieve {

static std::vector<std::uint64_t> divisors_of(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 1; d * d <= x; ++d) {
        if (x % d != 0) continue;
        out.push_back(d);
        if (d != x / d) out.push_back(x / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

TwoPrimeBound prop81_bound(std::uint64_t p) {
    if (!is_prime_or_one(p) || p < 3) throw std::invalid_argument("prop81_bound: p must be an odd prime");
    const std::uint64_t n = 2 * p;
    const GoldbachSieve sieve = build_sieve(n);
    const UnitGroup u = units(n);

    TwoPrimeBound b;
    b.p = p;
    std::uint64_t survivors_in_units = 0;
    for (std::uint64_t r : sieve.complement) {
        if (r == p) continue;
        if (u.contains(r)) ++survivors_in_units;
    }
    b.beta = survivors_in_units;  // complement minus {p} lies inside U(Z_2p)
    b.alpha = u.order() - survivors_in_units;
    const std::uint64_t g = gcd_u64(b.alpha, b.beta);
    b.gcd_divisors = divisors_of(g == 0 ? b.alpha + b.beta : g);
    for (std::uint64_t d : b.gcd_divisors)
        if (d % 2 == 0) b.even_gcd_divisors.push_back(d);
    for (std::uint64_t d = 2; d <= (p - 1) / 2; d += 2)
        if ((p - 1) % d == 0) b.candidate_orders.push_back(d);
    return b;
}

std::optional<std::string> prop83_safe_prime(std::uint64_t p) {
    if (!is_prime_or_one(p) || p < 2) throw std::invalid_argument("prop83_safe_prime: p must be prime");
    if (p % 2 == 1 && is_prime_or_one((p - 1) / 2) && (p - 1) / 2 >= 2)
        return std::string("Z2");
    return std::nullopt;
}

bool is_cyclotomic(std::uint64_t n) {
    if (n % 2 != 0 || n == 0) throw std::invalid_argument("is_cyclotomic: N must be even");
    for (std::uint64_t p : primes_upto(isqrt(n)))
        if (p != 2 && n % p != 0) return false;
    return true;
}

CyclotomicCheck cyclotomic_structure_check(std::uint64_t n) {
    if (!is_cyclotomic(n))
        throw std::invalid_argument("cyclotomic_structure_check: N is not cyclotomic");
    const GoldbachSieve sieve = build_sieve(n);
    const SymmetryGroup g = compute_symmetry_group(sieve);
    const UnitGroup u = units(n);

    CyclotomicCheck c;
    c.complement_is_units = sieve.complement == u.elements;
    c.h_is_units = g.unit_part == u.elements;
    c.translation_generator = g.g1_generator;
    c.group_order = g.elements.size();
    return c;
}

bool converse_cyclotomic_check(std::uint64_t n) {
    if (n <= 6 || n % 2 != 0)
        throw std::invalid_argument("converse_cyclotomic_check: need even N > 6");
    const GoldbachSieve sieve = build_sieve(n);
    if (sieve.complement.empty())
        throw std::invalid_argument("converse_cyclotomic_check: empty complement");
    const SymmetryGroup g = compute_symmetry_group(sieve);
    if (g.unit_part != units(n).elements) return true;  // hypothesis not met
    return is_cyclotomic(n);
}

NClassification orbit_classification(std::uint64_t n) {
    const PrimeSplit split = prime_split(n);
    NClassification c;
    c.n = n;
    c.cyclotomic = split.q_list.empty();
    c.mono_orbital = split.q_list.size() == 1;
    c.qmo = split.q_list.size() <= 1;
    return c;
}

TranslationBound prop89_translation_bound(std::uint64_t n) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("prop89_translation_bound: need even N >= 6");
    const GoldbachSieve sieve = build_sieve(n);
    TranslationBound b;
    b.beta = sieve.complement.size();
    std::uint64_t covered_odd = 0;
    for (std::uint64_t x = 1; x < n; x += 2)
        if (sieve.covered(x)) ++covered_odd;
    b.alpha = covered_odd;
    const std::uint64_t g = gcd_u64(b.alpha, b.beta);
    b.bound_generator = g == 0 ? 0 : n / g;
    return b;
}

WindowSet window_set(std::uint64_t m, std::uint64_t n) {
    if (m == 0 || m % 2 != 0 || m >= n)
        throw std::invalid_argument("window_set: need even 0 < m < N");
    WindowSet w;
    w.m = m;
    w.n = n;
    for (std::uint64_t q = 1; q < m; q += 2)
        if (is_prime_or_one(q) && is_prime_or_one(m - q)) w.members.push_back(q);
    return w;
}

std::string verdict_name(ExclusionVerdict v) {
    switch (v) {
        case ExclusionVerdict::not_excluded: return "not-excluded";
        case ExclusionVerdict::empty_intersection: return "excluded-by-(1)";
        case ExclusionVerdict::asymmetric: return "excluded-by-(2)";
        case ExclusionVerdict::union_proper_subset: return "excluded-by-(3)";
        case ExclusionVerdict::union_mismatch: return "excluded-by-(4)";
    }
    return "not-excluded";
}

namespace {

struct TranslationTestData {
    std::uint64_t m = 0;  // 2 d alpha mod N
    std::vector<std::uint64_t> intersection;       // window ^ complement
    std::vector<std::uint64_t> translated_union;   // union over multiples of 2d
};

TranslationTestData translation_test(const GoldbachSieve& sieve, std::uint64_t d,
                                     std::uint64_t alpha) {
    const std::uint64_t n = sieve.n;
    if (d == 0 || n % (2 * d) != 0)
        throw std::invalid_argument("translation criterion: 2d must divide N");
    if (gcd_u64(alpha, n) != 1)
        throw std::invalid_argument("translation criterion: alpha must be coprime to N");
    TranslationTestData t;
    t.m = (2 * d * (alpha % n)) % n;
    if (t.m == 0) return t;

    const WindowSet w = window_set(t.m, n);
    for (std::uint64_t q : w.members)
        if (!sieve.covered(q)) t.intersection.push_back(q);

    std::vector<std::uint8_t> hit(n, 0);
    for (std::uint64_t shift = 0; shift < n; shift += 2 * d)
        for (std::uint64_t q : t.intersection) hit[(q + shift) % n] = 1;
    for (std::uint64_t x = 0; x < n; ++x)
        if (hit[x]) t.translated_union.push_back(x);
    return t;
}

}  // namespace

ExclusionVerdict exclusion_criterion(const GoldbachSieve& sieve, std::uint64_t d,
                                     std::uint64_t alpha) {
    const TranslationTestData t = translation_test(sieve, d, alpha);
    if (t.m == 0) return ExclusionVerdict::not_excluded;  // the identity translation
    if (t.intersection.empty()) return ExclusionVerdict::empty_intersection;
    for (std::uint64_t q : t.intersection) {
        const std::uint64_t mirror = (t.m + sieve.n - q) % sieve.n;
        if (!std::binary_search(t.intersection.begin(), t.intersection.end(), mirror))
            return ExclusionVerdict::asymmetric;
    }
    if (t.translated_union != sieve.complement) {
        const bool subset =
            std::includes(sieve.complement.begin(), sieve.complement.end(),
                          t.translated_union.begin(), t.translated_union.end());
        return subset ? ExclusionVerdict::union_proper_subset
                      : ExclusionVerdict::union_mismatch;
    }
    return ExclusionVerdict::not_excluded;
}

bool coverage_identity_check(const GoldbachSieve& sieve, std::uint64_t d, std::uint64_t alpha) {
    const TranslationTestData t = translation_test(sieve, d, alpha);
    if (t.m == 0) return true;
    return t.translated_union == sieve.complement;
}

bool prop823_check(const SymmetryGroup& g) {
    if (g.n < 10) throw std::invalid_argument("prop823_check: needs N >= 10");
    return !g.contains(translation(g.n, 2));
}

}  // namespace dsieve
