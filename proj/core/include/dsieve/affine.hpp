#pragma once

// The affine group Aff(Z_N) = { x -> a x + b : a in U(Z_N) }.
// Every map factors as T_b . f_a where T_d is the translation x -> x + d
// and f_nu the unit map x -> nu x.  Maps are compared by their (a, b)
// pair, never by pointwise tables.

#include <cstdint>
#include <string>
#include <vector>

#include "dsieve/modarith.hpp"

namespace dsieve {

struct AffineMap {
    std::uint64_t mult = 1;    // a, unit of Z_N
    std::uint64_t offset = 0;  // b
    std::uint64_t modulus = 1;

    std::uint64_t operator()(std::uint64_t x) const {
        return (mult * (x % modulus) + offset) % modulus;
    }
    bool is_identity() const { return mult == 1 % modulus && offset == 0; }
    bool is_translation() const { return mult == 1 % modulus; }
    bool is_unit_map() const { return offset == 0; }

    auto operator<=>(const AffineMap&) const = default;
};

AffineMap affine_identity(std::uint64_t n);
AffineMap translation(std::uint64_t n, std::uint64_t d);  // T_d
AffineMap unit_map(std::uint64_t n, std::uint64_t nu);    // f_nu

AffineMap affine_compose(const AffineMap& f, const AffineMap& g);  // f after g
AffineMap affine_inverse(const AffineMap& f);

std::uint64_t affine_order(const AffineMap& f);

// All N * phi(N) maps, ordered by (mult, offset).
std::vector<AffineMap> full_affine_group(std::uint64_t n);

// Elements commuting with every element of the input; the input must be
// closed under composition.
std::vector<AffineMap> center(const std::vector<AffineMap>& closed_set);

// Smallest subgroup containing the generators (breadth-first closure).
std::vector<AffineMap> generated_subgroup(std::uint64_t n, const std::vector<AffineMap>& gens);

bool is_closed_under_composition(const std::vector<AffineMap>& sorted_set);

// Structure of a subgroup of Aff(Z_N): abelian invariant factors where
// applicable, a descriptor tuple otherwise.  Groups of order <= 64 get an
// explicit name ("Z2", "V", "Z2^3", "Z2xZ4", ...).
struct GroupDescriptor {
    std::uint64_t order = 1;
    bool is_abelian = true;
    std::vector<std::uint64_t> invariant_factors;  // d1 | d2 | ... , abelian only
    std::uint64_t exponent = 1;
    std::uint64_t center_order = 1;
    std::string name = "Z1";
};

GroupDescriptor recognize(const std::vector<AffineMap>& closed_set);

// The map as a permutation table of Z_N (for comparisons against the
// brute-force invariant-group enumeration).
std::vector<unsigned> as_permutation(const AffineMap& f);

}  // namespace dsieve
