#pragma once

// Generic finite group action engine for desk-scale brute force.
//
// Groups are Cayley tables with identity at index 0; actions are lookup
// tables over group-index x point.  Everything is validated on
// construction and immutable afterwards.  Hard capacity limits: |G| <= 200,
// and |X| <= 10 wherever a factorial enumeration is involved.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dsieve/errors.hpp"

namespace dsieve {

inline constexpr unsigned kMaxGroupOrder = 200;
inline constexpr unsigned kMaxEnumeratedSet = 10;
inline constexpr std::uint64_t kMaxAutCandidates = 10000;

class FiniteGroup {
public:
    // table is row-major order x order; validates group laws and identity
    // at index 0.
    FiniteGroup(unsigned order, std::vector<unsigned> table);

    // Plain-text fixture format: first line n, then n rows of n indices.
    static FiniteGroup from_cayley_text(std::istream& in);

    unsigned order() const { return order_; }
    unsigned mul(unsigned a, unsigned b) const { return table_[a * order_ + b]; }
    unsigned inv(unsigned a) const { return inverse_[a]; }
    unsigned element_order(unsigned a) const;

    static constexpr unsigned identity = 0;

private:
    unsigned order_;
    std::vector<unsigned> table_;
    std::vector<unsigned> inverse_;
};

class FiniteAction {
public:
    // act is row-major |G| x |X|; validates the action laws.
    FiniteAction(FiniteGroup group, unsigned set_size, std::vector<unsigned> act);

    const FiniteGroup& group() const { return group_; }
    unsigned set_size() const { return set_size_; }
    unsigned act(unsigned g, unsigned x) const { return act_[g * set_size_ + x]; }

private:
    FiniteGroup group_;
    unsigned set_size_;
    std::vector<unsigned> act_;
};

// Sorted member indices; construction via subgroup() validates closure,
// identity and inverses against the parent group.
struct Subgroup {
    std::vector<unsigned> members;

    bool contains(unsigned g) const;
    std::size_t order() const { return members.size(); }
    bool operator==(const Subgroup&) const = default;
};

Subgroup subgroup(const FiniteGroup& g, std::vector<unsigned> members);

// Permutation of group indices preserving the multiplication table.
struct GroupAutomorphism {
    std::vector<unsigned> image;  // image[g]

    unsigned operator()(unsigned g) const { return image[g]; }
    bool operator==(const GroupAutomorphism&) const = default;
};

struct OrbitPartition {
    std::vector<std::vector<unsigned>> orbits;  // each sorted ascending
    std::vector<unsigned> representative;       // smallest point per orbit
    std::vector<unsigned> orbit_of;             // point -> orbit index
};

OrbitPartition orbits(const FiniteAction& action);

Subgroup stabilizer(const FiniteAction& action, unsigned x);

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s);

// Smallest g with g S1 g^-1 = S2, if any.
std::optional<unsigned> conjugating_element(const FiniteGroup& g, const Subgroup& s1,
                                            const Subgroup& s2);

// All automorphisms of g, found by mapping an irredundant generating
// sequence (first in index order) onto same-order candidates and closing.
std::vector<GroupAutomorphism> all_automorphisms(const FiniteGroup& g);

// The subgroup Aut(G)^S: automorphisms sending each orbit-representative
// stabilizer to a conjugate of some representative stabilizer.
std::vector<GroupAutomorphism> s_invariant_automorphisms(const FiniteAction& action);

// One coset choice per orbit: the image f(x_rep_i) = element . x_rep_{target}.
struct CosetChoice {
    unsigned target_orbit = 0;
    unsigned element = 0;
};

struct InvariantFunction {
    std::vector<unsigned> map;  // permutation of X
    GroupAutomorphism aut;
    std::vector<CosetChoice> choices;
};

// Builds the equivariant bijection f(g.x_i) = phi(g) g_i . x_{j(i)} and
// verifies f(g.x) = phi(g).f(x) exhaustively before returning.
InvariantFunction build_phi_invariant(const FiniteAction& action, const GroupAutomorphism& phi,
                                      const std::vector<CosetChoice>& choices);

// The permutation of orbit indices realized by an invariant function.
std::vector<unsigned> induced_permutation(const FiniteAction& action,
                                          const std::vector<unsigned>& map);

// Brute-force enumeration of every bijection of X that is phi-invariant
// for some automorphism phi.  Requires |X| <= 10.
struct InvariantGroup {
    std::vector<std::vector<unsigned>> elements;   // sorted permutation set
    std::vector<std::vector<unsigned>> witnesses;  // per element: aut indices
    std::vector<GroupAutomorphism> automorphisms;  // the Aut(G)^S list used
};

InvariantGroup enumerate_invariant_group(const FiniteAction& action);

enum class ChoiceMode { canonical, searched, unsatisfiable };

struct DecompositionReport {
    std::uint64_t invariant_group_order = 0;    // |hat Aut(G)^S|
    std::uint64_t normalizer_index_product = 1; // prod |N_i| / |S_i|
    std::uint64_t identity_induced_order = 0;   // orbit perms with identity witness
    std::uint64_t aut_s_order = 0;
    std::uint64_t quasi_identical_order = 0;    // phi with g^-1 phi(g) in every S_i
    bool assumption_i = false;
    ChoiceMode assumption_i_mode = ChoiceMode::unsatisfiable;
    bool assumption_ii = false;
    ChoiceMode assumption_ii_mode = ChoiceMode::unsatisfiable;
    bool product_identity = false;  // |hat| = prod * |SymI| * |Aut^S|/|quasi|
};

DecompositionReport decomposition_report(const FiniteAction& action);

}  // namespace dsieve
