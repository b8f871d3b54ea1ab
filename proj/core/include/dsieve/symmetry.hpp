#pragma once

// G_N: the subgroup of Aff(Z_N) whose elements fix the sieve partition
// setwise, together with its translation part G_N^(1) = <T> intersect G_N,
// unit part H, and the two structural regimes: either a direct product
// with the order-two element T_{N/2} f_{1+N/2}, or a clean split with no
// mixed elements.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsieve/affine.hpp"
#include "dsieve/dihedral.hpp"
#include "dsieve/sieve.hpp"

namespace dsieve {

inline constexpr std::uint64_t kSymmetryModulusCap = std::uint64_t{1} << 16;

struct SymmetryGroup {
    std::uint64_t n = 0;
    std::vector<AffineMap> elements;          // sorted by (mult, offset)
    std::uint64_t g1_generator = 0;           // smallest d > 0 with T_d in G, or 0
    std::vector<std::uint64_t> unit_part;     // H = { nu : f_nu in G }, sorted
    bool central_element_present = false;     // T_{N/2} f_{1+N/2} in G (when 4 | N)
    GroupDescriptor descriptor;

    bool contains(const AffineMap& f) const;
    std::uint64_t g1_order() const { return g1_generator == 0 ? 1 : n / g1_generator; }
};

// Exhaustive filter of Aff(Z_N) by complement-fixing; derived fields filled
// and subgroup closure verified.
SymmetryGroup compute_symmetry_group(const GoldbachSieve& sieve);

// Minimal positive d with T_d in G; absent when only T_0 is present.
std::optional<std::uint64_t> translation_part(const SymmetryGroup& g);

enum class Regime { direct_product, split, violated };

std::string regime_name(Regime r);

// Which factorization regime the computed group realizes, with the
// verified cardinality identity.
struct StructureReport {
    Regime regime = Regime::violated;
    bool central_present = false;       // T_{N/2} f_{1+N/2} in G
    std::uint64_t g1_order = 1;
    std::uint64_t h_order = 1;
    std::uint64_t group_order = 1;
    std::uint64_t mixed_count = 0;      // elements with both parts outside G
};

StructureReport decompose(const SymmetryGroup& g);

// Every mixed element T_d f_nu in G must drag T_2d and f_nu^2 in with it.
bool mixed_element_closure_check(const SymmetryGroup& g);

// All mixed elements lie in one coset of <T_m> x| H shifted by half the
// translation generator.  Vacuously true (not applicable) without mixed
// elements.
struct HalfShiftCheck {
    bool holds = true;
    bool applicable = false;
};

HalfShiftCheck half_shift_uniqueness_check(const SymmetryGroup& g);

// Per-group equivariance witnesses for one affine map against every group
// of the sieve's dihedral list (rotation-by-p groups and transported
// q-orbit groups).
struct GroupWitness {
    bool is_q_group = false;
    std::uint64_t prime = 0;
    std::uint64_t degree = 0;  // n of the dihedral group
    bool invariant = false;
    DihedralAut witness;       // valid only when invariant
};

std::vector<GroupWitness> multi_invariance_witnesses(const AffineMap& f,
                                                     const GoldbachSieve& sieve);

// Conjunction over all groups plus complement-fixing: membership in the
// all-actions symmetry group restricted to affine candidates.
bool is_multi_invariant_symmetry(const AffineMap& f, const GoldbachSieve& sieve);

}  // namespace dsieve
