#include "dsieve/modarith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dsieve {

ZMod::ZMod(std::int64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("ZMod: modulus must be positive");
    if (modulus > kModulusCap) throw CapacityError("ZMod: modulus exceeds cap 2^20");
    if (value < 0) throw std::invalid_argument("ZMod: negative input; use the negation operator");
    value_ = static_cast<std::uint64_t>(value) % modulus;
}

static void require_same_modulus(const ZMod& a, const ZMod& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("ZMod: modulus mismatch");
}

ZMod ZMod::operator+(ZMod rhs) const {
    require_same_modulus(*this, rhs);
    return ZMod(value_ + rhs.value_, modulus_);
}

ZMod ZMod::operator-(ZMod rhs) const {
    require_same_modulus(*this, rhs);
    return ZMod(value_ + modulus_ - rhs.value_, modulus_);
}

ZMod ZMod::operator*(ZMod rhs) const {
    require_same_modulus(*this, rhs);
    return ZMod(value_ * rhs.value_, modulus_);
}

ZMod ZMod::operator-() const { return ZMod(modulus_ - value_ % modulus_, modulus_); }

bool UnitGroup::contains(std::uint64_t u) const {
    return std::binary_search(elements.begin(), elements.end(), u % modulus);
}

std::vector<std::uint64_t> primes_upto(std::uint64_t bound) {
    std::vector<std::uint64_t> primes;
    if (bound < 2) return primes;
    std::vector<std::uint8_t> composite(bound + 1, 0);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t m = p * p; m <= bound; m += p) composite[m] = 1;
    }
    return primes;
}

bool is_prime_or_one(std::uint64_t x) {
    if (x == 1) return true;
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::uint64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

UnitGroup units(std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("units: modulus must be positive");
    if (modulus > kModulusCap) throw CapacityError("units: modulus exceeds cap 2^20");
    UnitGroup g;
    g.modulus = modulus;
    for (std::uint64_t r = 0; r < modulus; ++r)
        if (std::gcd(r, modulus) == 1) g.elements.push_back(r);
    return g;
}

std::uint64_t euler_phi(std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("euler_phi: modulus must be positive");
    std::uint64_t n = modulus, result = modulus;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

ZMod mod_inverse(ZMod u) {
    // extended Euclid on (u, N); N = 1 degenerates to the zero residue
    const std::uint64_t n = u.modulus();
    if (n == 1) return ZMod(0, 1);
    std::int64_t r0 = static_cast<std::int64_t>(n), r1 = static_cast<std::int64_t>(u.value());
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: residue is not invertible");
    if (t0 < 0) t0 += static_cast<std::int64_t>(n);
    return ZMod(static_cast<std::uint64_t>(t0), n);
}

std::uint64_t isqrt(std::uint64_t x) {
    if (x == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace dsieve
