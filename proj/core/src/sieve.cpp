#include "dsieve/sieve.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsieve {

PrimeSplit prime_split(std::uint64_t n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("prime_split: N must be even and >= 2");
    PrimeSplit s;
    s.n = n;
    s.p_list.push_back(2);  // 2 always divides, even when 2 > floor(sqrt(N))
    for (std::uint64_t p : primes_upto(isqrt(n))) {
        if (p == 2) continue;
        (n % p == 0 ? s.p_list : s.q_list).push_back(p);
    }
    return s;
}

bool QOrbit::contains(std::uint64_t x) const {
    return std::binary_search(members.begin(), members.end(), x % n);
}

QOrbit q_orbit(std::uint64_t n, std::uint64_t q) {
    if (n % q == 0) throw std::invalid_argument("q_orbit: q divides N");
    QOrbit o;
    o.n = n;
    o.q = q;
    o.group_degree = n / q - 1;  // floor, q does not divide n
    for (std::uint64_t m = 0; m + 2 <= n / q; ++m) {
        const std::uint64_t fwd = ((2 + m) * q) % n;
        o.forward.push_back(fwd);
        o.backward.push_back((n - fwd) % n);
    }
    o.members = o.forward;
    o.members.insert(o.members.end(), o.backward.begin(), o.backward.end());
    std::sort(o.members.begin(), o.members.end());
    return o;
}

std::uint64_t act_q(const QOrbit& orbit, const DihedralElement& g, std::uint64_t x) {
    x %= orbit.n;
    if (!orbit.contains(x)) return g.reflect ? (orbit.n - x) % orbit.n : x;
    // transport: x = +-(2+m) q corresponds to sigma^h rho^m
    DihedralElement word{0, 0, orbit.group_degree};
    for (std::uint64_t m = 0; m < orbit.forward.size(); ++m) {
        if (orbit.forward[m] == x) {
            word = DihedralElement{0, m, orbit.group_degree};
            break;
        }
        if (orbit.backward[m] == x) {
            word = DihedralElement{1, m, orbit.group_degree};
            break;
        }
    }
    const DihedralElement moved = dihedral_mul(g, word);
    const std::uint64_t value = ((2 + moved.rot) * orbit.q) % orbit.n;
    return moved.reflect ? (orbit.n - value) % orbit.n : value;
}

std::uint64_t act_q(std::uint64_t n, std::uint64_t q, const DihedralElement& g, std::uint64_t x) {
    return act_q(q_orbit(n, q), g, x);
}

GoldbachSieve build_sieve(std::uint64_t n) {
    GoldbachSieve sieve;
    sieve.n = n;
    sieve.split = prime_split(n);
    sieve.covering.assign(n, 0);
    for (std::uint64_t p : sieve.split.p_list)
        for (std::uint64_t x = 0; x < n; x += p) sieve.covering[x] = 1;
    for (std::uint64_t q : sieve.split.q_list) {
        QOrbit o = q_orbit(n, q);
        for (std::uint64_t x : o.members) sieve.covering[x] = 1;
        sieve.q_orbit_sets.push_back(std::move(o));
    }
    for (std::uint64_t x = 0; x < n; ++x)
        if (!sieve.covering[x]) sieve.complement.push_back(x);
    return sieve;
}

std::vector<std::uint64_t> goldbach_oracle(std::uint64_t n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("goldbach_oracle: N must be even and >= 2");
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 1; x < n; ++x)
        if (is_prime_or_one(x) && is_prime_or_one(n - x)) out.push_back(x);
    return out;
}

}  // namespace dsieve
