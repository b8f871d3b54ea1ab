#include "dsieve/dihedral.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dsieve {

static void require_same_n(std::uint64_t a, std::uint64_t b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": mixed dihedral orders");
}

DihedralElement dihedral_identity(std::uint64_t n) { return {0, 0, n}; }
DihedralElement dihedral_rho(std::uint64_t n, std::uint64_t k) { return {0, k % n, n}; }
DihedralElement dihedral_sigma(std::uint64_t n) { return {1, 0, n}; }

DihedralElement dihedral_mul(const DihedralElement& a, const DihedralElement& b) {
    require_same_n(a.n, b.n, "dihedral_mul");
    const std::uint64_t n = a.n;
    // sigma^h1 rho^k1 * sigma^h2 rho^k2 = sigma^(h1^h2) rho^(k2 +- k1)
    const std::uint64_t k =
        b.reflect ? (b.rot + n - a.rot % n) % n : (a.rot + b.rot) % n;
    return {a.reflect ^ b.reflect, k, n};
}

DihedralElement dihedral_inv(const DihedralElement& a) {
    if (a.reflect) return a;  // reflections are involutions
    return {0, (a.n - a.rot % a.n) % a.n, a.n};
}

ZMod act(const DihedralElement& g, const ZMod& x) {
    if (x.modulus() != 2 * g.n) throw std::invalid_argument("act: point modulus is not 2n");
    ZMod moved = x + ZMod((2 * g.rot) % x.modulus(), x.modulus());
    return g.reflect ? -moved : moved;
}

DihedralAut aut_identity(std::uint64_t n) { return {0, 1 % n, n}; }

DihedralAut aut_compose(const DihedralAut& a, const DihedralAut& b) {
    require_same_n(a.n, b.n, "aut_compose");
    const std::uint64_t n = a.n;
    // T^k phi_nu T^l phi_up = T^(k + nu l) phi_(nu up)
    return {(a.shift + a.mult * b.shift) % n, (a.mult * b.mult) % n, n};
}

DihedralAut aut_inverse(const DihedralAut& a) {
    const std::uint64_t n = a.n;
    if (n == 1) return a;
    const std::uint64_t nu_inv = mod_inverse(ZMod(a.mult, n)).value();
    return {(n - (nu_inv * a.shift) % n) % n, nu_inv, n};
}

DihedralElement aut_apply(const DihedralAut& a, const DihedralElement& g) {
    require_same_n(a.n, g.n, "aut_apply");
    const std::uint64_t n = a.n;
    // T^k phi_nu (sigma^h rho^m) = (rho^k sigma)^h rho^(nu m)
    //                            = sigma^h rho^(nu m - h k)
    const std::uint64_t nm = (a.mult * g.rot) % n;
    const std::uint64_t k = g.reflect ? (nm + n - a.shift % n) % n : nm;
    return {g.reflect, k, n};
}

std::vector<DihedralAut> all_dihedral_auts(std::uint64_t n) {
    std::vector<DihedralAut> out;
    const UnitGroup u = units(n);
    for (std::uint64_t k = 0; k < n; ++k)
        for (std::uint64_t nu : u.elements) out.push_back({k, nu, n});
    return out;
}

StabilizerRecord stabilizers_and_normalizers(std::uint64_t n) {
    if (n < 3) throw std::invalid_argument("stabilizers_and_normalizers: need n >= 3");
    StabilizerRecord r;
    const DihedralElement id = dihedral_identity(n);
    const DihedralElement sigma = dihedral_sigma(n);
    const DihedralElement rho_sigma{1, n - 1, n};  // rho sigma = sigma rho^(n-1)
    r.stab0 = {id, sigma};
    r.stab1 = {id, rho_sigma};
    if (n % 2 == 1) {
        r.norm0 = r.stab0;
        r.norm1 = r.stab1;
    } else {
        const std::uint64_t h = n / 2;
        r.norm0 = {id, dihedral_rho(n, h), sigma, DihedralElement{1, h, n}};
        // rho^(n/2+1) sigma = sigma rho^(n/2-1)
        r.norm1 = {id, dihedral_rho(n, h), rho_sigma, DihedralElement{1, h - 1, n}};
    }
    return r;
}

unsigned dihedral_index(const DihedralElement& g) {
    return static_cast<unsigned>(g.reflect * g.n + g.rot);
}

DihedralElement dihedral_from_index(std::uint64_t n, unsigned index) {
    if (index >= 2 * n) throw std::invalid_argument("dihedral_from_index: out of range");
    return {static_cast<std::uint32_t>(index / n), index % n, n};
}

FiniteGroup dihedral_cayley_table(std::uint64_t n) {
    const unsigned order = static_cast<unsigned>(2 * n);
    std::vector<unsigned> table(static_cast<std::size_t>(order) * order);
    for (unsigned a = 0; a < order; ++a)
        for (unsigned b = 0; b < order; ++b)
            table[a * order + b] = dihedral_index(
                dihedral_mul(dihedral_from_index(n, a), dihedral_from_index(n, b)));
    return FiniteGroup(order, std::move(table));
}

FiniteAction dihedral_natural_action(std::uint64_t n) {
    FiniteGroup group = dihedral_cayley_table(n);
    const unsigned order = group.order();
    const unsigned nx = static_cast<unsigned>(2 * n);
    std::vector<unsigned> act_table(static_cast<std::size_t>(order) * nx);
    for (unsigned g = 0; g < order; ++g)
        for (unsigned x = 0; x < nx; ++x)
            act_table[g * nx + x] = static_cast<unsigned>(
                act(dihedral_from_index(n, g), ZMod(x, 2 * n)).value());
    return FiniteAction(std::move(group), nx, std::move(act_table));
}

}  // namespace dsieve
