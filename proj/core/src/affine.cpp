#include "dsieve/affine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dsieve {

inline constexpr std::uint64_t kAffineEnumCap = 4000000;

AffineMap affine_identity(std::uint64_t n) { return {1 % n, 0, n}; }

AffineMap translation(std::uint64_t n, std::uint64_t d) { return {1 % n, d % n, n}; }

AffineMap unit_map(std::uint64_t n, std::uint64_t nu) {
    nu %= n;
    if (gcd_u64(nu, n) != 1) throw std::invalid_argument("unit_map: multiplier is not a unit");
    return {nu, 0, n};
}

AffineMap affine_compose(const AffineMap& f, const AffineMap& g) {
    if (f.modulus != g.modulus) throw std::invalid_argument("affine_compose: modulus mismatch");
    const std::uint64_t n = f.modulus;
    return {(f.mult * g.mult) % n, (f.mult * g.offset + f.offset) % n, n};
}

AffineMap affine_inverse(const AffineMap& f) {
    const std::uint64_t n = f.modulus;
    const std::uint64_t ainv = mod_inverse(ZMod(f.mult, n)).value();
    return {ainv, (n - (ainv * f.offset) % n) % n, n};
}

std::uint64_t affine_order(const AffineMap& f) {
    std::uint64_t k = 1;
    AffineMap acc = f;
    while (!acc.is_identity()) {
        acc = affine_compose(acc, f);
        ++k;
    }
    return k;
}

std::vector<AffineMap> full_affine_group(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("full_affine_group: modulus must be positive");
    const UnitGroup u = units(n);
    if (n * u.order() > kAffineEnumCap)
        throw CapacityError("full_affine_group: N * phi(N) exceeds capacity");
    std::vector<AffineMap> out;
    out.reserve(n * u.order());
    for (std::uint64_t a : u.elements)
        for (std::uint64_t b = 0; b < n; ++b) out.push_back({a, b, n});
    std::sort(out.begin(), out.end());
    return out;
}

bool is_closed_under_composition(const std::vector<AffineMap>& sorted_set) {
    for (const AffineMap& f : sorted_set)
        for (const AffineMap& g : sorted_set)
            if (!std::binary_search(sorted_set.begin(), sorted_set.end(), affine_compose(f, g)))
                return false;
    return true;
}

std::vector<AffineMap> center(const std::vector<AffineMap>& closed_set) {
    std::vector<AffineMap> sorted = closed_set;
    std::sort(sorted.begin(), sorted.end());
    if (!is_closed_under_composition(sorted))
        throw std::invalid_argument("center: input is not closed under composition");
    std::vector<AffineMap> out;
    for (const AffineMap& f : sorted) {
        bool central = true;
        for (const AffineMap& g : sorted)
            if (affine_compose(f, g) != affine_compose(g, f)) {
                central = false;
                break;
            }
        if (central) out.push_back(f);
    }
    return out;
}

std::vector<AffineMap> generated_subgroup(std::uint64_t n, const std::vector<AffineMap>& gens) {
    for (const AffineMap& g : gens)
        if (g.modulus != n) throw std::invalid_argument("generated_subgroup: modulus mismatch");
    std::set<AffineMap> closure{affine_identity(n)};
    std::vector<AffineMap> frontier{affine_identity(n)};
    while (!frontier.empty()) {
        const AffineMap e = frontier.back();
        frontier.pop_back();
        for (const AffineMap& g : gens) {
            for (const AffineMap& next : {affine_compose(e, g), affine_compose(e, affine_inverse(g))}) {
                if (closure.insert(next).second) {
                    if (closure.size() > kAffineEnumCap)
                        throw CapacityError("generated_subgroup: closure exceeds capacity");
                    frontier.push_back(next);
                }
            }
        }
    }
    return std::vector<AffineMap>(closure.begin(), closure.end());
}

std::vector<unsigned> as_permutation(const AffineMap& f) {
    std::vector<unsigned> p(f.modulus);
    for (std::uint64_t x = 0; x < f.modulus; ++x) p[x] = static_cast<unsigned>(f(x));
    return p;
}

// ---------------------------------------------------------------------------
// Isomorphism-type recognition

namespace {

// Small abstract group over indices 0..n-1 with identity 0.
struct Table {
    unsigned n = 1;
    std::vector<unsigned> mul;  // n x n

    unsigned prod(unsigned a, unsigned b) const { return mul[a * n + b]; }
    unsigned element_order(unsigned a) const {
        unsigned acc = a, k = 1;
        while (acc != 0) {
            acc = prod(acc, a);
            ++k;
        }
        return k;
    }
};

// A maximal-order cyclic subgroup of a finite abelian group is a direct
// summand, so the invariant factors are those of the quotient followed by
// the maximal order.
std::vector<std::uint64_t> abelian_invariant_factors(const Table& t) {
    if (t.n == 1) return {};
    unsigned best = 0, best_order = 1;
    for (unsigned a = 0; a < t.n; ++a) {
        const unsigned o = t.element_order(a);
        if (o > best_order) {
            best_order = o;
            best = a;
        }
    }
    // cosets of <best>
    std::vector<unsigned> cyclic{0};
    {
        unsigned acc = best;
        while (acc != 0) {
            cyclic.push_back(acc);
            acc = t.prod(acc, best);
        }
        std::sort(cyclic.begin(), cyclic.end());
    }
    const unsigned nq = t.n / best_order;
    std::vector<unsigned> coset_of(t.n, nq);
    std::vector<unsigned> coset_rep;
    for (unsigned a = 0; a < t.n; ++a) {
        if (coset_of[a] != nq) continue;
        const unsigned id = static_cast<unsigned>(coset_rep.size());
        for (unsigned c : cyclic) coset_of[t.prod(a, c)] = id;
        coset_rep.push_back(a);
    }
    Table q;
    q.n = nq;
    q.mul.assign(static_cast<std::size_t>(nq) * nq, 0);
    // identity coset first
    {
        const unsigned idc = coset_of[0];
        if (idc != 0) {
            for (unsigned& c : coset_of) {
                if (c == idc)
                    c = 0;
                else if (c == 0)
                    c = idc;
            }
            std::swap(coset_rep[0], coset_rep[idc]);
        }
    }
    for (unsigned a = 0; a < nq; ++a)
        for (unsigned b = 0; b < nq; ++b)
            q.mul[a * nq + b] = coset_of[t.prod(coset_rep[a], coset_rep[b])];
    std::vector<std::uint64_t> factors = abelian_invariant_factors(q);
    factors.push_back(best_order);
    return factors;
}

std::string abelian_name(const std::vector<std::uint64_t>& factors) {
    if (factors.empty()) return "Z1";
    if (factors.size() == 2 && factors[0] == 2 && factors[1] == 2) return "V";
    std::string name;
    std::size_t i = 0;
    while (i < factors.size()) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        if (!name.empty()) name += "x";
        name += "Z" + std::to_string(factors[i]);
        if (j - i > 1) name += "^" + std::to_string(j - i);
        i = j;
    }
    return name;
}

}  // namespace

GroupDescriptor recognize(const std::vector<AffineMap>& closed_set) {
    std::vector<AffineMap> sorted = closed_set;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) throw std::invalid_argument("recognize: empty set");
    if (!is_closed_under_composition(sorted))
        throw std::invalid_argument("recognize: input is not closed under composition");
    if (sorted.size() > 4096) throw CapacityError("recognize: group too large");

    const std::uint64_t n = sorted.front().modulus;
    std::map<AffineMap, unsigned> index;
    // identity must take index 0
    std::vector<AffineMap> order_list{affine_identity(n)};
    for (const AffineMap& f : sorted)
        if (!f.is_identity()) order_list.push_back(f);
    for (unsigned i = 0; i < order_list.size(); ++i) index[order_list[i]] = i;

    Table t;
    t.n = static_cast<unsigned>(order_list.size());
    t.mul.assign(static_cast<std::size_t>(t.n) * t.n, 0);
    for (unsigned a = 0; a < t.n; ++a)
        for (unsigned b = 0; b < t.n; ++b)
            t.mul[a * t.n + b] = index.at(affine_compose(order_list[a], order_list[b]));

    GroupDescriptor d;
    d.order = t.n;
    d.is_abelian = true;
    for (unsigned a = 0; a < t.n && d.is_abelian; ++a)
        for (unsigned b = a + 1; b < t.n; ++b)
            if (t.prod(a, b) != t.prod(b, a)) {
                d.is_abelian = false;
                break;
            }
    d.exponent = 1;
    for (unsigned a = 0; a < t.n; ++a)
        d.exponent = std::lcm<std::uint64_t>(d.exponent, t.element_order(a));
    d.center_order = 0;
    for (unsigned a = 0; a < t.n; ++a) {
        bool central = true;
        for (unsigned b = 0; b < t.n; ++b)
            if (t.prod(a, b) != t.prod(b, a)) {
                central = false;
                break;
            }
        if (central) ++d.center_order;
    }

    if (d.is_abelian) {
        d.invariant_factors = abelian_invariant_factors(t);
        d.name = d.order <= 64 ? abelian_name(d.invariant_factors)
                               : "abelian(" + std::to_string(d.order) + "," +
                                     std::to_string(d.exponent) + ")";
    } else {
        d.name = "nonabelian(" + std::to_string(d.order) + "," + std::to_string(d.exponent) +
                 "," + std::to_string(d.center_order) + ")";
    }
    return d;
}

}  // namespace dsieve
