#pragma once

// Closed-form dihedral group D_n = <rho, sigma | rho^n = sigma^2 = 1,
// rho^k sigma = sigma rho^-k>, its automorphism group, and its action on
// Z_{2n} by rho.x = x + 2k, sigma.x = -x.
//
// Words are kept in the normal form sigma^h rho^k (reflection bit on the
// left), so the action of sigma^h rho^k on x is (-1)^h (x + 2k).

#include <cstdint>
#include <vector>

#include "dsieve/group_core.hpp"
#include "dsieve/modarith.hpp"

namespace dsieve {

struct DihedralElement {
    std::uint32_t reflect = 0;  // h in {0,1}
    std::uint64_t rot = 0;      // k mod n
    std::uint64_t n = 1;

    bool is_identity() const { return reflect == 0 && rot == 0; }
    bool operator==(const DihedralElement&) const = default;
};

// The automorphism T^k phi_nu of D_n, acting by T^k(sigma) = rho^k sigma,
// phi_nu(rho) = rho^nu with nu a unit of Z_n.
struct DihedralAut {
    std::uint64_t shift = 0;  // k mod n
    std::uint64_t mult = 1;   // nu in U(Z_n)
    std::uint64_t n = 1;

    bool operator==(const DihedralAut&) const = default;
};

DihedralElement dihedral_identity(std::uint64_t n);
DihedralElement dihedral_rho(std::uint64_t n, std::uint64_t k = 1);
DihedralElement dihedral_sigma(std::uint64_t n);

DihedralElement dihedral_mul(const DihedralElement& a, const DihedralElement& b);
DihedralElement dihedral_inv(const DihedralElement& a);

// sigma^h rho^k . x = (-1)^h (x + 2k) on Z_{2n}; x must have modulus 2n.
ZMod act(const DihedralElement& g, const ZMod& x);

DihedralAut aut_identity(std::uint64_t n);
DihedralAut aut_compose(const DihedralAut& a, const DihedralAut& b);
DihedralAut aut_inverse(const DihedralAut& a);
DihedralElement aut_apply(const DihedralAut& a, const DihedralElement& g);

// All n * phi(n) automorphisms T^k phi_nu, shift-major order.
std::vector<DihedralAut> all_dihedral_auts(std::uint64_t n);

// Stab(0), Stab(1) and their normalizers for the action on Z_{2n}.
// For odd n the normalizers equal the stabilizers; for even n each is the
// four-element group containing rho^{n/2}.
struct StabilizerRecord {
    std::vector<DihedralElement> stab0, stab1;
    std::vector<DihedralElement> norm0, norm1;
};

StabilizerRecord stabilizers_and_normalizers(std::uint64_t n);

// Index of sigma^h rho^k in the Cayley-table numbering h*n + k.
unsigned dihedral_index(const DihedralElement& g);
DihedralElement dihedral_from_index(std::uint64_t n, unsigned index);

// Bridges into the generic engine: the Cayley table of D_n and the natural
// action on Z_{2n}.
FiniteGroup dihedral_cayley_table(std::uint64_t n);
FiniteAction dihedral_natural_action(std::uint64_t n);

}  // namespace dsieve
