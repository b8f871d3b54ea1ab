#pragma once

// Calculation methods for G_N that do not need the full enumeration:
// divisor bounds for N = 2p, the cyclotomic / mono-orbital classification,
// window sets, and the translation exclusion criteria.  Each criterion is
// one-directional: it can rule a translation out, never in; membership is
// always settled by enumeration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsieve/sieve.hpp"
#include "dsieve/symmetry.hpp"

namespace dsieve {

// |G_2p| divides gcd(alpha, beta) where alpha counts unit survivors'
// complement inside U(Z_2p) and beta the survivors besides p itself.
struct TwoPrimeBound {
    std::uint64_t p = 0;
    std::uint64_t alpha = 0;  // |A_2p ^ U(Z_2p)|
    std::uint64_t beta = 0;   // |complement - {p}|
    std::vector<std::uint64_t> gcd_divisors;       // divisors of gcd(alpha, beta)
    std::vector<std::uint64_t> even_gcd_divisors;  // the even ones
    // a-priori possibilities before computing alpha, beta: even d | p-1
    // with d <= (p-1)/2
    std::vector<std::uint64_t> candidate_orders;
};

TwoPrimeBound prop81_bound(std::uint64_t p);

// p = 2q + 1 with q prime pins G_2p to order two.
std::optional<std::string> prop83_safe_prime(std::uint64_t p);

// Every odd prime <= floor(sqrt(N)) divides N.
bool is_cyclotomic(std::uint64_t n);

struct CyclotomicCheck {
    bool complement_is_units = false;  // survivors = U(Z_N)
    bool h_is_units = false;           // H = U(Z_N) in the computed group
    std::uint64_t translation_generator = 0;  // empirical 2m (0 if trivial)
    std::uint64_t group_order = 0;
};

CyclotomicCheck cyclotomic_structure_check(std::uint64_t n);

// H = U(Z_N) forces the cyclotomic shape; returns whether the implication
// held (vacuously true when H is smaller).
bool converse_cyclotomic_check(std::uint64_t n);

struct NClassification {
    std::uint64_t n = 0;
    bool cyclotomic = false;
    bool mono_orbital = false;  // exactly one non-dividing small prime
    bool qmo = false;           // at most one
};

NClassification orbit_classification(std::uint64_t n);

struct TranslationBound {
    std::uint64_t alpha = 0;  // odd residues covered
    std::uint64_t beta = 0;   // survivors
    std::uint64_t bound_generator = 0;  // N / gcd(alpha, beta)
};

TranslationBound prop89_translation_bound(std::uint64_t n);

// Residues q with q odd and q, m - q both prime or 1, as integers below m;
// coincides with the complement of the sieve built at m.
struct WindowSet {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> members;
};

WindowSet window_set(std::uint64_t m, std::uint64_t n);

enum class ExclusionVerdict {
    not_excluded,
    empty_intersection,    // window ^ complement empty
    asymmetric,            // intersection not fixed by x -> m - x
    union_proper_subset,   // translated union strictly inside the complement
    union_mismatch,        // translated union differs from the complement
};

std::string verdict_name(ExclusionVerdict v);

// Tests applied in order; the verdict names the first that fires.
ExclusionVerdict exclusion_criterion(const GoldbachSieve& sieve, std::uint64_t d,
                                     std::uint64_t alpha);

// The coverage identity: the complement equals the union of its window
// intersection translated by all multiples of 2d.  Holds iff T_{2 d alpha}
// fixes the sieve.
bool coverage_identity_check(const GoldbachSieve& sieve, std::uint64_t d, std::uint64_t alpha);

// T_2 never fixes a nonempty sieve once N >= 10.
bool prop823_check(const SymmetryGroup& g);

}  // namespace dsieve
