#pragma once

// Exact arithmetic over Z and Z_N: primes, units, totient, canonical residues.
// Everything here is plain unsigned machine arithmetic; moduli are capped at
// 2^20 so that N * phi(N) enumerations elsewhere stay desk-scale.

#include <cstdint>
#include <vector>

#include "dsieve/errors.hpp"

namespace dsieve {

inline constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 20;

// Canonical residue in [0, N).  Arithmetic is closed: every operation
// returns a canonical residue with the same modulus.  Mixed-modulus
// operations throw std::invalid_argument.  Negative inputs are rejected
// rather than normalized; negation goes through the dedicated operator.
class ZMod {
public:
    ZMod(std::int64_t value, std::uint64_t modulus);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }

    ZMod operator+(ZMod rhs) const;
    ZMod operator-(ZMod rhs) const;
    ZMod operator*(ZMod rhs) const;
    ZMod operator-() const;  // the one place negatives are allowed

    bool operator==(const ZMod&) const = default;

private:
    std::uint64_t value_;
    std::uint64_t modulus_;
};

// The multiplicative group U(Z_N): sorted, duplicate-free residues coprime
// to the modulus.
struct UnitGroup {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> elements;

    bool contains(std::uint64_t u) const;
    std::size_t order() const { return elements.size(); }
};

// Sieve of Eratosthenes; primes p <= bound, ascending.
std::vector<std::uint64_t> primes_upto(std::uint64_t bound);

// True iff x = 1 or x is prime (trial division; independent of the sieve
// above so the two can cross-check each other).
bool is_prime_or_one(std::uint64_t x);

UnitGroup units(std::uint64_t modulus);

std::uint64_t euler_phi(std::uint64_t modulus);

// Multiplicative inverse; throws std::domain_error when gcd(u, N) > 1.
ZMod mod_inverse(ZMod u);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// floor(sqrt(x)), exact.
std::uint64_t isqrt(std::uint64_t x);

}  // namespace dsieve
