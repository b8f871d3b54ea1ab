#pragma once

// The dihedral prime-pair sieve over Z_N (N even): small primes dividing N
// cover their multiples through the rotation/negation action, while each
// small prime q not dividing N covers the doubled-orbit set
// Q_q = { +-(2+m) q : 0 <= m <= floor(N/q) - 2 }.  What survives is exactly
// the set of residues r with r and N - r both prime or 1 (the prime pairs
// summing to N), except that the pair (2, 2) at N = 4 is not representable.

#include <cstdint>
#include <vector>

#include "dsieve/dihedral.hpp"
#include "dsieve/modarith.hpp"

namespace dsieve {

// Primes up to floor(sqrt(N)), split by divisibility; 2 is always kept on
// the dividing side.
struct PrimeSplit {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> p_list;  // p | N (2 always included)
    std::vector<std::uint64_t> q_list;  // odd q, q does not divide N
};

PrimeSplit prime_split(std::uint64_t n);

// The transported dihedral orbit attached to one non-dividing prime q.
struct QOrbit {
    std::uint64_t n = 0;
    std::uint64_t q = 0;
    std::uint64_t group_degree = 0;          // floor(N/q) - 1
    std::vector<std::uint64_t> forward;      // C_q  = { (2+m) q }
    std::vector<std::uint64_t> backward;     // C_-q = { -(2+m) q }
    std::vector<std::uint64_t> members;      // sorted union
    bool contains(std::uint64_t x) const;
};

QOrbit q_orbit(std::uint64_t n, std::uint64_t q);

// The action of D_{floor(N/q)-1} transported into Q_q; outside Q_q only the
// sign part acts.
std::uint64_t act_q(const QOrbit& orbit, const DihedralElement& g, std::uint64_t x);
std::uint64_t act_q(std::uint64_t n, std::uint64_t q, const DihedralElement& g, std::uint64_t x);

struct GoldbachSieve {
    std::uint64_t n = 0;
    PrimeSplit split;
    std::vector<std::uint8_t> covering;     // membership bitset over Z_N
    std::vector<std::uint64_t> complement;  // sorted survivors
    std::vector<QOrbit> q_orbit_sets;

    bool covered(std::uint64_t x) const { return covering[x % n] != 0; }
};

GoldbachSieve build_sieve(std::uint64_t n);

// Independent brute-force check: residues x in [1, N-1] with x and N-x
// both prime or 1.
std::vector<std::uint64_t> goldbach_oracle(std::uint64_t n);

}  // namespace dsieve
