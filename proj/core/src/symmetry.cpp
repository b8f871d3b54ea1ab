#include "dsieve/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsieve {

bool SymmetryGroup::contains(const AffineMap& f) const {
    return std::binary_search(elements.begin(), elements.end(), f);
}

SymmetryGroup compute_symmetry_group(const GoldbachSieve& sieve) {
    const std::uint64_t n = sieve.n;
    if (n > kSymmetryModulusCap)
        throw CapacityError("compute_symmetry_group: N exceeds 2^16");

    SymmetryGroup g;
    g.n = n;
    const UnitGroup u = units(n);
    const std::vector<std::uint64_t>& bad = sieve.complement;

    if (bad.empty()) {
        g.elements = full_affine_group(n);
    } else {
        // a map fixes the complement setwise iff it maps it into itself;
        // the offset is pinned by where the first survivor lands
        const std::uint64_t r0 = bad.front();
        for (std::uint64_t a : u.elements) {
            std::vector<AffineMap> hits;
            for (std::uint64_t target : bad) {
                const std::uint64_t b = (target + n - (a * r0) % n) % n;
                bool ok = true;
                for (std::uint64_t r : bad)
                    if (sieve.covered(a * r + b)) {
                        ok = false;
                        break;
                    }
                if (ok) hits.push_back({a, b, n});
            }
            std::sort(hits.begin(), hits.end());
            g.elements.insert(g.elements.end(), hits.begin(), hits.end());
        }
        std::sort(g.elements.begin(), g.elements.end());
    }

    if (!is_closed_under_composition(g.elements))
        throw std::logic_error("compute_symmetry_group: result is not a subgroup");

    g.g1_generator = 0;
    for (const AffineMap& f : g.elements)
        if (f.is_translation() && f.offset != 0) {
            g.g1_generator = f.offset;  // sorted, so first hit is minimal
            break;
        }
    for (const AffineMap& f : g.elements)
        if (f.is_unit_map()) g.unit_part.push_back(f.mult);
    if (n % 4 == 0)
        g.central_element_present = g.contains(AffineMap{1 + n / 2, n / 2, n});
    g.descriptor = recognize(g.elements);
    return g;
}

std::optional<std::uint64_t> translation_part(const SymmetryGroup& g) {
    if (g.g1_generator == 0) return std::nullopt;
    return g.g1_generator;
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::direct_product: return "direct_product";
        case Regime::split: return "split";
        case Regime::violated: return "violated";
    }
    return "violated";
}

static bool splits(const SymmetryGroup& g, const AffineMap& f) {
    return g.contains(translation(g.n, f.offset)) && g.contains(unit_map(g.n, f.mult));
}

StructureReport decompose(const SymmetryGroup& g) {
    const std::uint64_t n = g.n;
    StructureReport r;
    r.group_order = g.elements.size();
    r.g1_order = g.g1_order();
    r.h_order = g.unit_part.size();
    for (const AffineMap& f : g.elements)
        if (!splits(g, f)) ++r.mixed_count;

    std::uint64_t k = 0, odd = n;
    while (odd % 2 == 0) {
        odd /= 2;
        ++k;
    }

    if (k > 1) {
        r.central_present = g.contains(AffineMap{(1 + n / 2) % n, n / 2, n});
        if (!r.central_present) {
            r.regime = Regime::violated;  // T_{N/2} f_{1+N/2} fixes survivors pointwise
            return r;
        }
        const bool half_translation = g.contains(translation(n, n / 2));
        const bool half_unit = g.contains(unit_map(n, (1 + n / 2) % n));
        if (half_translation != half_unit) {
            r.regime = Regime::violated;
            return r;
        }
        if (!half_translation) {
            // direct product with the order-two central element: everything
            // is a split element or the central element times one
            const AffineMap c{(1 + n / 2) % n, n / 2, n};
            bool ok = r.group_order == 2 * r.g1_order * r.h_order;
            for (const AffineMap& f : g.elements)
                if (!splits(g, f) && !splits(g, affine_compose(c, f))) ok = false;
            r.regime = ok ? Regime::direct_product : Regime::violated;
            return r;
        }
    }
    // k == 1, or k > 1 with both halves present: no mixed element may exist
    const bool ok = r.mixed_count == 0 && r.group_order == r.g1_order * r.h_order;
    r.regime = ok ? Regime::split : Regime::violated;
    return r;
}

bool mixed_element_closure_check(const SymmetryGroup& g) {
    const std::uint64_t n = g.n;
    for (const AffineMap& f : g.elements) {
        if (splits(g, f)) continue;
        if (!g.contains(translation(n, (2 * f.offset) % n))) return false;
        if (!g.contains(unit_map(n, (f.mult * f.mult) % n))) return false;
    }
    return true;
}

HalfShiftCheck half_shift_uniqueness_check(const SymmetryGroup& g) {
    const std::uint64_t n = g.n;
    std::vector<AffineMap> mixed;
    for (const AffineMap& f : g.elements)
        if (!splits(g, f)) mixed.push_back(f);
    if (mixed.empty()) return {true, false};

    // <T_m> x| H as a coset base; trivial G^(1) degenerates to m = N
    const std::uint64_t m = g.g1_generator == 0 ? n : g.g1_generator;
    std::vector<AffineMap> base;
    for (std::uint64_t nu : g.unit_part)
        for (std::uint64_t d = 0; d < n; d += m) base.push_back({nu, d, n});
    std::vector<AffineMap> coset;
    for (const AffineMap& s : base) coset.push_back(affine_compose(mixed.front(), s));
    std::sort(coset.begin(), coset.end());
    std::sort(mixed.begin(), mixed.end());
    return {coset == mixed, true};
}

// ---------------------------------------------------------------------------
// Multi-invariance

// Rotation-by-p group D_{N/p} acting by rho.x = x + p, sigma.x = -x.
// Equivariance of an affine map on the generators pins the witness: the
// rotation forces nu = a mod (N/p), the reflection forces c p = 2b mod N.
static GroupWitness p_group_witness(const AffineMap& f, std::uint64_t p) {
    const std::uint64_t n = f.modulus;
    const std::uint64_t degree = n / p;
    GroupWitness w;
    w.is_q_group = false;
    w.prime = p;
    w.degree = degree;
    const std::uint64_t nu = f.mult % degree;
    if (gcd_u64(nu, degree) != 1) return w;  // never: gcd(a, N) = 1
    const std::uint64_t wanted = (2 * f.offset) % n;
    if (wanted % p != 0) return w;
    const DihedralAut aut{(wanted / p) % degree, nu, degree};
    // verify both generator conditions over every point
    for (std::uint64_t x = 0; x < n; ++x) {
        if (f((x + p) % n) != (f(x) + nu * p) % n) return w;
        if (f((n - x) % n) != (n - f(x) + aut.shift * p) % n) return w;
    }
    w.invariant = true;
    w.witness = aut;
    return w;
}

static GroupWitness q_group_witness(const AffineMap& f, const QOrbit& orbit) {
    const std::uint64_t n = f.modulus;
    GroupWitness w;
    w.is_q_group = true;
    w.prime = orbit.q;
    w.degree = orbit.group_degree;
    const DihedralElement rho = dihedral_rho(orbit.group_degree);
    const DihedralElement sigma = dihedral_sigma(orbit.group_degree);
    for (const DihedralAut& aut : all_dihedral_auts(orbit.group_degree)) {
        const DihedralElement rho_img = aut_apply(aut, rho);
        const DihedralElement sigma_img = aut_apply(aut, sigma);
        bool ok = true;
        for (std::uint64_t x = 0; x < n && ok; ++x) {
            const std::uint64_t fx = f(x);
            if (f(act_q(orbit, rho, x)) != act_q(orbit, rho_img, fx)) ok = false;
            else if (f(act_q(orbit, sigma, x)) != act_q(orbit, sigma_img, fx)) ok = false;
        }
        if (ok) {
            w.invariant = true;
            w.witness = aut;
            return w;
        }
    }
    return w;
}

std::vector<GroupWitness> multi_invariance_witnesses(const AffineMap& f,
                                                     const GoldbachSieve& sieve) {
    if (f.modulus != sieve.n)
        throw std::invalid_argument("multi_invariance_witnesses: modulus mismatch");
    std::vector<GroupWitness> out;
    for (std::uint64_t p : sieve.split.p_list) out.push_back(p_group_witness(f, p));
    for (const QOrbit& orbit : sieve.q_orbit_sets) out.push_back(q_group_witness(f, orbit));
    return out;
}

bool is_multi_invariant_symmetry(const AffineMap& f, const GoldbachSieve& sieve) {
    for (const GroupWitness& w : multi_invariance_witnesses(f, sieve))
        if (!w.invariant) return false;
    for (std::uint64_t r : sieve.complement)
        if (sieve.covered(f(r))) return false;
    return true;
}

}  // namespace dsieve
