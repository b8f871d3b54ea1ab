#include "dsieve/group_core.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dsieve {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(unsigned order, std::vector<unsigned> table)
    : order_(order), table_(std::move(table)) {
    if (order == 0) throw std::invalid_argument("FiniteGroup: empty group");
    if (order > kMaxGroupOrder) throw CapacityError("FiniteGroup: order exceeds 200");
    if (table_.size() != static_cast<std::size_t>(order) * order)
        throw std::invalid_argument("FiniteGroup: table size mismatch");
    for (unsigned v : table_)
        if (v >= order) throw std::invalid_argument("FiniteGroup: table entry out of range");
    for (unsigned g = 0; g < order; ++g)
        if (mul(identity, g) != g || mul(g, identity) != g)
            throw std::invalid_argument("FiniteGroup: index 0 is not an identity");
    inverse_.assign(order, order);
    for (unsigned a = 0; a < order; ++a)
        for (unsigned b = 0; b < order; ++b)
            if (mul(a, b) == identity && mul(b, a) == identity) inverse_[a] = b;
    for (unsigned a = 0; a < order; ++a)
        if (inverse_[a] >= order) throw std::invalid_argument("FiniteGroup: missing inverse");
    for (unsigned a = 0; a < order; ++a)
        for (unsigned b = 0; b < order; ++b)
            for (unsigned c = 0; c < order; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("FiniteGroup: table is not associative");
}

FiniteGroup FiniteGroup::from_cayley_text(std::istream& in) {
    unsigned n = 0;
    if (!(in >> n)) throw std::invalid_argument("cayley fixture: missing order line");
    std::vector<unsigned> table;
    table.reserve(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) {
        unsigned v = 0;
        if (!(in >> v)) throw std::invalid_argument("cayley fixture: truncated table");
        table.push_back(v);
    }
    return FiniteGroup(n, std::move(table));
}

unsigned FiniteGroup::element_order(unsigned a) const {
    unsigned acc = a, k = 1;
    while (acc != identity) {
        acc = mul(acc, a);
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// FiniteAction

FiniteAction::FiniteAction(FiniteGroup group, unsigned set_size, std::vector<unsigned> act)
    : group_(std::move(group)), set_size_(set_size), act_(std::move(act)) {
    if (set_size == 0) throw std::invalid_argument("FiniteAction: empty set");
    const unsigned n = group_.order();
    if (act_.size() != static_cast<std::size_t>(n) * set_size)
        throw std::invalid_argument("FiniteAction: table size mismatch");
    for (unsigned v : act_)
        if (v >= set_size) throw std::invalid_argument("FiniteAction: point out of range");
    for (unsigned x = 0; x < set_size; ++x)
        if (this->act(FiniteGroup::identity, x) != x)
            throw std::invalid_argument("FiniteAction: identity must fix every point");
    for (unsigned g = 0; g < n; ++g)
        for (unsigned h = 0; h < n; ++h)
            for (unsigned x = 0; x < set_size; ++x)
                if (this->act(g, this->act(h, x)) != this->act(group_.mul(g, h), x))
                    throw std::invalid_argument("FiniteAction: not a group action");
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(unsigned g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

Subgroup subgroup(const FiniteGroup& g, std::vector<unsigned> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup s{std::move(members)};
    if (!s.contains(FiniteGroup::identity))
        throw std::invalid_argument("subgroup: missing identity");
    for (unsigned a : s.members) {
        if (a >= g.order()) throw std::invalid_argument("subgroup: element out of range");
        if (!s.contains(g.inv(a))) throw std::invalid_argument("subgroup: not inverse-closed");
        for (unsigned b : s.members)
            if (!s.contains(g.mul(a, b))) throw std::invalid_argument("subgroup: not closed");
    }
    return s;
}

static Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& s, unsigned by) {
    std::vector<unsigned> out;
    out.reserve(s.members.size());
    for (unsigned m : s.members) out.push_back(g.mul(g.mul(by, m), g.inv(by)));
    std::sort(out.begin(), out.end());
    return Subgroup{std::move(out)};
}

// ---------------------------------------------------------------------------
// Orbits and stabilizers

OrbitPartition orbits(const FiniteAction& action) {
    const unsigned nx = action.set_size();
    OrbitPartition part;
    part.orbit_of.assign(nx, nx);
    for (unsigned x = 0; x < nx; ++x) {
        if (part.orbit_of[x] != nx) continue;
        std::vector<unsigned> orbit;
        for (unsigned g = 0; g < action.group().order(); ++g) orbit.push_back(action.act(g, x));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        const unsigned index = static_cast<unsigned>(part.orbits.size());
        for (unsigned y : orbit) part.orbit_of[y] = index;
        part.representative.push_back(orbit.front());
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

Subgroup stabilizer(const FiniteAction& action, unsigned x) {
    if (x >= action.set_size()) throw std::invalid_argument("stabilizer: point out of range");
    std::vector<unsigned> members;
    for (unsigned g = 0; g < action.group().order(); ++g)
        if (action.act(g, x) == x) members.push_back(g);
    return Subgroup{std::move(members)};
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& s) {
    std::vector<unsigned> members;
    for (unsigned c = 0; c < g.order(); ++c)
        if (conjugate_subgroup(g, s, c) == s) members.push_back(c);
    return Subgroup{std::move(members)};
}

std::optional<unsigned> conjugating_element(const FiniteGroup& g, const Subgroup& s1,
                                            const Subgroup& s2) {
    if (s1.members.size() != s2.members.size()) return std::nullopt;
    for (unsigned c = 0; c < g.order(); ++c)
        if (conjugate_subgroup(g, s1, c) == s2) return c;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Automorphisms

// Greedy generating sequence in index order, then pruned to an irredundant
// one: no generator remains that the others already produce.
static std::vector<unsigned> generating_sequence(const FiniteGroup& g) {
    auto closure = [&](const std::vector<unsigned>& gens) {
        std::vector<char> seen(g.order(), 0);
        std::vector<unsigned> frontier{FiniteGroup::identity};
        seen[FiniteGroup::identity] = 1;
        while (!frontier.empty()) {
            unsigned e = frontier.back();
            frontier.pop_back();
            for (unsigned x : gens) {
                unsigned next = g.mul(e, x);
                if (!seen[next]) {
                    seen[next] = 1;
                    frontier.push_back(next);
                }
            }
        }
        return seen;
    };
    std::vector<unsigned> gens;
    std::vector<char> seen = closure(gens);
    for (unsigned e = 0; e < g.order(); ++e) {
        if (seen[e]) continue;
        gens.push_back(e);
        seen = closure(gens);
    }
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<unsigned> without = gens;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        const std::vector<char> s = closure(without);
        if (std::all_of(s.begin(), s.end(), [](char c) { return c != 0; })) {
            gens = std::move(without);
            i = 0;
        } else {
            ++i;
        }
    }
    return gens;
}

std::vector<GroupAutomorphism> all_automorphisms(const FiniteGroup& g) {
    const unsigned n = g.order();
    const std::vector<unsigned> gens = generating_sequence(g);

    // BFS words: each element reached as parent * generator
    std::vector<int> parent(n, -1), via(n, -1);
    std::vector<unsigned> bfs_order{FiniteGroup::identity};
    {
        std::vector<char> seen(n, 0);
        seen[FiniteGroup::identity] = 1;
        for (std::size_t head = 0; head < bfs_order.size(); ++head) {
            unsigned e = bfs_order[head];
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                unsigned next = g.mul(e, gens[gi]);
                if (!seen[next]) {
                    seen[next] = 1;
                    parent[next] = static_cast<int>(e);
                    via[next] = static_cast<int>(gi);
                    bfs_order.push_back(next);
                }
            }
        }
    }

    std::vector<std::vector<unsigned>> candidates;
    std::uint64_t combos = 1;
    for (unsigned gen : gens) {
        std::vector<unsigned> same_order;
        const unsigned target = g.element_order(gen);
        for (unsigned e = 0; e < n; ++e)
            if (g.element_order(e) == target) same_order.push_back(e);
        combos *= same_order.size();
        if (combos > kMaxAutCandidates)
            throw CapacityError("all_automorphisms: candidate space exceeds 10^4");
        candidates.push_back(std::move(same_order));
    }

    std::vector<GroupAutomorphism> result;
    std::vector<unsigned> pick(gens.size(), 0);
    std::vector<unsigned> image(n);
    const std::uint64_t total = combos;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rem = idx;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            pick[i] = candidates[i][rem % candidates[i].size()];
            rem /= candidates[i].size();
        }
        image[FiniteGroup::identity] = FiniteGroup::identity;
        for (std::size_t k = 1; k < bfs_order.size(); ++k) {
            unsigned e = bfs_order[k];
            image[e] = g.mul(image[parent[e]], pick[static_cast<std::size_t>(via[e])]);
        }
        // bijectivity, then the homomorphism law against every generator
        std::vector<char> hit(n, 0);
        bool ok = true;
        for (unsigned v : image) {
            if (hit[v]) {
                ok = false;
                break;
            }
            hit[v] = 1;
        }
        for (unsigned e = 0; ok && e < n; ++e)
            for (std::size_t gi = 0; ok && gi < gens.size(); ++gi)
                if (image[g.mul(e, gens[gi])] != g.mul(image[e], pick[gi])) ok = false;
        if (ok) result.push_back(GroupAutomorphism{image});
    }
    std::sort(result.begin(), result.end(),
              [](const GroupAutomorphism& a, const GroupAutomorphism& b) { return a.image < b.image; });
    return result;
}

static std::vector<unsigned> apply_aut_to_set(const GroupAutomorphism& phi,
                                              const std::vector<unsigned>& set) {
    std::vector<unsigned> out;
    out.reserve(set.size());
    for (unsigned m : set) out.push_back(phi(m));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GroupAutomorphism> s_invariant_automorphisms(const FiniteAction& action) {
    const FiniteGroup& g = action.group();
    const OrbitPartition part = orbits(action);
    std::vector<Subgroup> stabs;
    for (unsigned rep : part.representative) stabs.push_back(stabilizer(action, rep));

    std::vector<GroupAutomorphism> result;
    for (const GroupAutomorphism& phi : all_automorphisms(g)) {
        bool ok = true;
        for (const Subgroup& s : stabs) {
            const Subgroup image{apply_aut_to_set(phi, s.members)};
            bool found = false;
            for (const Subgroup& t : stabs)
                if (conjugating_element(g, t, image)) {
                    found = true;
                    break;
                }
            if (!found) {
                ok = false;
                break;
            }
        }
        if (ok) result.push_back(phi);
    }

    // the criterion is closed under composition and inverse; verify
    auto find = [&](const std::vector<unsigned>& img) {
        return std::any_of(result.begin(), result.end(),
                           [&](const GroupAutomorphism& a) { return a.image == img; });
    };
    for (const GroupAutomorphism& a : result) {
        std::vector<unsigned> inv_img(g.order());
        for (unsigned e = 0; e < g.order(); ++e) inv_img[a(e)] = e;
        if (!find(inv_img)) throw std::logic_error("s_invariant_automorphisms: not inverse-closed");
        for (const GroupAutomorphism& b : result) {
            std::vector<unsigned> comp(g.order());
            for (unsigned e = 0; e < g.order(); ++e) comp[e] = a(b(e));
            if (!find(comp)) throw std::logic_error("s_invariant_automorphisms: not closed");
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Invariant functions

InvariantFunction build_phi_invariant(const FiniteAction& action, const GroupAutomorphism& phi,
                                      const std::vector<CosetChoice>& choices) {
    const FiniteGroup& g = action.group();
    const OrbitPartition part = orbits(action);
    const std::size_t t = part.orbits.size();
    if (choices.size() != t)
        throw std::invalid_argument("build_phi_invariant: one coset choice per orbit required");

    std::vector<Subgroup> stabs;
    for (unsigned rep : part.representative) stabs.push_back(stabilizer(action, rep));

    // phi must satisfy the existence criterion at all
    for (std::size_t i = 0; i < t; ++i) {
        const Subgroup image{apply_aut_to_set(phi, stabs[i].members)};
        bool found = false;
        for (const Subgroup& s : stabs)
            if (conjugating_element(g, s, image)) {
                found = true;
                break;
            }
        if (!found)
            throw std::domain_error("build_phi_invariant: no invariant exists for this automorphism");
    }
    // and the supplied choices must realize it exactly, on distinct orbits
    std::vector<char> target_used(t, 0);
    for (std::size_t i = 0; i < t; ++i) {
        const CosetChoice& c = choices[i];
        if (c.target_orbit >= t || c.element >= g.order())
            throw std::invalid_argument("build_phi_invariant: coset choice out of range");
        if (target_used[c.target_orbit])
            throw std::invalid_argument("build_phi_invariant: duplicate target orbit");
        target_used[c.target_orbit] = 1;
        const Subgroup image{apply_aut_to_set(phi, stabs[i].members)};
        if (conjugate_subgroup(g, stabs[c.target_orbit], c.element) != image)
            throw std::invalid_argument("build_phi_invariant: ill-formed coset element");
        if (part.orbits[i].size() != part.orbits[c.target_orbit].size())
            throw std::invalid_argument("build_phi_invariant: orbit size mismatch");
    }

    // minimal-index transversal: some g_y with g_y . rep = y
    const unsigned nx = action.set_size();
    std::vector<unsigned> transversal(nx, g.order());
    for (unsigned y = 0; y < nx; ++y)
        for (unsigned e = 0; e < g.order(); ++e)
            if (action.act(e, part.representative[part.orbit_of[y]]) == y) {
                transversal[y] = e;
                break;
            }

    InvariantFunction f;
    f.aut = phi;
    f.choices = choices;
    f.map.assign(nx, nx);
    for (unsigned y = 0; y < nx; ++y) {
        const unsigned i = part.orbit_of[y];
        const CosetChoice& c = choices[i];
        const unsigned mover = g.mul(phi(transversal[y]), c.element);
        f.map[y] = action.act(mover, part.representative[c.target_orbit]);
    }

    std::vector<char> hit(nx, 0);
    for (unsigned v : f.map) {
        if (hit[v]) throw std::logic_error("build_phi_invariant: map is not a bijection");
        hit[v] = 1;
    }
    for (unsigned e = 0; e < g.order(); ++e)
        for (unsigned x = 0; x < nx; ++x)
            if (f.map[action.act(e, x)] != action.act(phi(e), f.map[x]))
                throw std::logic_error("build_phi_invariant: equivariance check failed");
    return f;
}

std::vector<unsigned> induced_permutation(const FiniteAction& action,
                                          const std::vector<unsigned>& map) {
    const OrbitPartition part = orbits(action);
    std::vector<unsigned> gamma(part.orbits.size());
    for (std::size_t i = 0; i < part.orbits.size(); ++i)
        gamma[i] = part.orbit_of[map[part.representative[i]]];
    return gamma;
}

// ---------------------------------------------------------------------------
// Brute-force enumeration of the invariant group

InvariantGroup enumerate_invariant_group(const FiniteAction& action) {
    const unsigned nx = action.set_size();
    if (nx > kMaxEnumeratedSet)
        throw CapacityError("enumerate_invariant_group: |X| exceeds 10");
    const FiniteGroup& g = action.group();
    const std::vector<unsigned> gens = generating_sequence(g);

    InvariantGroup out;
    out.automorphisms = s_invariant_automorphisms(action);

    // Equivariance against every generator at every point implies it for
    // the whole group, so that is the whole test.
    std::vector<unsigned> perm(nx);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        std::vector<unsigned> witnesses;
        for (std::size_t ai = 0; ai < out.automorphisms.size(); ++ai) {
            const GroupAutomorphism& phi = out.automorphisms[ai];
            bool ok = true;
            for (unsigned gen : gens) {
                const unsigned pg = phi(gen);
                for (unsigned x = 0; x < nx; ++x)
                    if (perm[action.act(gen, x)] != action.act(pg, perm[x])) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (ok) witnesses.push_back(static_cast<unsigned>(ai));
        }
        if (!witnesses.empty()) {
            out.elements.push_back(perm);
            out.witnesses.push_back(std::move(witnesses));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // closure and inverse laws must hold for the collected set
    auto member = [&](const std::vector<unsigned>& p) {
        return std::binary_search(out.elements.begin(), out.elements.end(), p);
    };
    for (const std::vector<unsigned>& f : out.elements) {
        std::vector<unsigned> inv(nx);
        for (unsigned x = 0; x < nx; ++x) inv[f[x]] = x;
        if (!member(inv)) throw std::logic_error("enumerate_invariant_group: not inverse-closed");
    }
    for (const std::vector<unsigned>& f : out.elements)
        for (const std::vector<unsigned>& h : out.elements) {
            std::vector<unsigned> comp(nx);
            for (unsigned x = 0; x < nx; ++x) comp[x] = f[h[x]];
            if (!member(comp)) throw std::logic_error("enumerate_invariant_group: not closed");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition report

namespace {

std::vector<unsigned> compose_perm(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

std::vector<unsigned> invert_perm(const std::vector<unsigned>& a) {
    std::vector<unsigned> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = i;
    return out;
}

// Orbit permutations an automorphism can induce: targets whose stabilizer
// is conjugate to the image of the source stabilizer.
std::vector<std::vector<unsigned>> valid_induced_perms(const FiniteGroup& g,
                                                       const std::vector<Subgroup>& stabs,
                                                       const std::vector<std::vector<unsigned>>& orbit_sets,
                                                       const GroupAutomorphism& phi) {
    const std::size_t t = stabs.size();
    std::vector<std::vector<unsigned>> targets(t);
    for (std::size_t i = 0; i < t; ++i) {
        const Subgroup image{apply_aut_to_set(phi, stabs[i].members)};
        for (std::size_t j = 0; j < t; ++j)
            if (orbit_sets[i].size() == orbit_sets[j].size() &&
                conjugating_element(g, stabs[j], image))
                targets[i].push_back(static_cast<unsigned>(j));
    }
    std::vector<std::vector<unsigned>> perms;
    std::vector<unsigned> cur(t, 0);
    std::vector<char> used(t, 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == t) {
            perms.push_back(cur);
            return;
        }
        for (unsigned j : targets[i]) {
            if (used[j]) continue;
            used[j] = 1;
            cur[i] = j;
            self(self, i + 1);
            used[j] = 0;
        }
    };
    rec(rec, 0);
    std::sort(perms.begin(), perms.end());
    return perms;
}

struct ChoiceSearch {
    std::uint64_t visits = 0;
    static constexpr std::uint64_t kVisitBound = 1000000;
};

}  // namespace

DecompositionReport decomposition_report(const FiniteAction& action) {
    const FiniteGroup& g = action.group();
    const OrbitPartition part = orbits(action);
    const std::size_t t = part.orbits.size();

    std::vector<Subgroup> stabs;
    for (unsigned rep : part.representative) stabs.push_back(stabilizer(action, rep));

    DecompositionReport rep;
    const InvariantGroup hat = enumerate_invariant_group(action);
    rep.invariant_group_order = hat.elements.size();
    rep.aut_s_order = hat.automorphisms.size();

    rep.normalizer_index_product = 1;
    for (const Subgroup& s : stabs)
        rep.normalizer_index_product *= normalizer(g, s).order() / s.order();

    // identity automorphism index in the Aut(G)^S list
    std::vector<unsigned> id_image(g.order());
    std::iota(id_image.begin(), id_image.end(), 0u);
    std::size_t id_index = hat.automorphisms.size();
    for (std::size_t i = 0; i < hat.automorphisms.size(); ++i)
        if (hat.automorphisms[i].image == id_image) id_index = i;
    if (id_index == hat.automorphisms.size())
        throw std::logic_error("decomposition_report: identity automorphism missing");

    std::vector<std::vector<unsigned>> identity_induced;
    for (std::size_t e = 0; e < hat.elements.size(); ++e) {
        const auto& w = hat.witnesses[e];
        if (std::find(w.begin(), w.end(), static_cast<unsigned>(id_index)) == w.end()) continue;
        identity_induced.push_back(induced_permutation(action, hat.elements[e]));
    }
    std::sort(identity_induced.begin(), identity_induced.end());
    identity_induced.erase(std::unique(identity_induced.begin(), identity_induced.end()),
                           identity_induced.end());
    rep.identity_induced_order = identity_induced.size();

    // quasi-identical automorphisms: g^-1 phi(g) lands in every stabilizer
    std::vector<unsigned> core = stabs.empty() ? std::vector<unsigned>{} : stabs[0].members;
    for (const Subgroup& s : stabs) {
        std::vector<unsigned> next;
        std::set_intersection(core.begin(), core.end(), s.members.begin(), s.members.end(),
                              std::back_inserter(next));
        core = std::move(next);
    }
    std::vector<std::size_t> quasi;
    for (std::size_t ai = 0; ai < hat.automorphisms.size(); ++ai) {
        const GroupAutomorphism& phi = hat.automorphisms[ai];
        bool ok = true;
        for (unsigned e = 0; e < g.order() && ok; ++e)
            if (!std::binary_search(core.begin(), core.end(), g.mul(g.inv(e), phi(e)))) ok = false;
        if (ok) quasi.push_back(ai);
    }
    rep.quasi_identical_order = quasi.size();

    rep.product_identity =
        rep.aut_s_order % rep.quasi_identical_order == 0 &&
        rep.invariant_group_order == rep.normalizer_index_product * rep.identity_induced_order *
                                         (rep.aut_s_order / rep.quasi_identical_order);

    // --- assumption (I): a multiplicative choice of induced permutations ---
    {
        const std::size_t na = hat.automorphisms.size();
        std::vector<std::vector<std::vector<unsigned>>> valid(na);
        for (std::size_t i = 0; i < na; ++i)
            valid[i] = valid_induced_perms(g, stabs, part.orbits, hat.automorphisms[i]);

        std::vector<unsigned> id_perm(t);
        std::iota(id_perm.begin(), id_perm.end(), 0u);
        std::vector<char> is_quasi(na, 0);
        for (std::size_t q : quasi) is_quasi[q] = 1;

        // composition and inverse tables on Aut(G)^S indices
        std::map<std::vector<unsigned>, std::size_t> aut_index;
        for (std::size_t i = 0; i < na; ++i) aut_index[hat.automorphisms[i].image] = i;
        std::vector<std::vector<std::size_t>> comp(na, std::vector<std::size_t>(na));
        std::vector<std::size_t> invs(na);
        for (std::size_t i = 0; i < na; ++i) {
            invs[i] = aut_index.at(invert_perm(hat.automorphisms[i].image));
            for (std::size_t j = 0; j < na; ++j)
                comp[i][j] = aut_index.at(
                    compose_perm(hat.automorphisms[i].image, hat.automorphisms[j].image));
        }

        std::vector<std::vector<unsigned>> chosen(na);
        auto full_check = [&]() {
            for (std::size_t i = 0; i < na; ++i) {
                if (invert_perm(chosen[i]) != chosen[invs[i]]) return false;
                for (std::size_t j = 0; j < na; ++j)
                    if (compose_perm(chosen[i], chosen[j]) != chosen[comp[i][j]]) return false;
            }
            return true;
        };
        auto candidates_for = [&](std::size_t k) -> std::vector<std::vector<unsigned>> {
            if (is_quasi[k]) {
                // forced identity, per the indexing convention
                if (std::find(valid[k].begin(), valid[k].end(), id_perm) == valid[k].end())
                    return {};
                return {id_perm};
            }
            return valid[k];
        };

        bool canonical_ok = true;
        for (std::size_t k = 0; k < na; ++k) {
            const auto cands = candidates_for(k);
            if (cands.empty()) {
                canonical_ok = false;
                break;
            }
            chosen[k] = cands.front();
        }
        canonical_ok = canonical_ok && full_check();

        bool found = canonical_ok;
        if (!found) {
            std::vector<char> assigned(na, 0);
            ChoiceSearch search;
            auto consistent = [&](std::size_t k) {
                for (std::size_t i = 0; i < na; ++i) {
                    if (!assigned[i]) continue;
                    if (assigned[comp[i][k]] &&
                        compose_perm(chosen[i], chosen[k]) != chosen[comp[i][k]])
                        return false;
                    if (assigned[comp[k][i]] &&
                        compose_perm(chosen[k], chosen[i]) != chosen[comp[k][i]])
                        return false;
                }
                if (assigned[invs[k]] && invert_perm(chosen[k]) != chosen[invs[k]]) return false;
                return true;
            };
            auto rec = [&](auto&& self, std::size_t k) -> bool {
                if (search.visits++ > ChoiceSearch::kVisitBound) return false;
                if (k == na) return true;
                for (const auto& cand : candidates_for(k)) {
                    chosen[k] = cand;
                    assigned[k] = 1;
                    if (consistent(k) && self(self, k + 1)) return true;
                    assigned[k] = 0;
                }
                return false;
            };
            found = rec(rec, 0);
        }
        rep.assumption_i = found;
        rep.assumption_i_mode = !found          ? ChoiceMode::unsatisfiable
                                : canonical_ok ? ChoiceMode::canonical
                                               : ChoiceMode::searched;
    }

    // --- assumption (II): a transversal of <f_nS> closed under composition ---
    {
        // f_nS: identity-witnessed elements fixing every orbit
        std::vector<unsigned> id_perm_t(t);
        std::iota(id_perm_t.begin(), id_perm_t.end(), 0u);
        std::vector<std::vector<unsigned>> fns;
        for (std::size_t e = 0; e < hat.elements.size(); ++e) {
            const auto& w = hat.witnesses[e];
            if (std::find(w.begin(), w.end(), static_cast<unsigned>(id_index)) == w.end()) continue;
            if (induced_permutation(action, hat.elements[e]) == id_perm_t)
                fns.push_back(hat.elements[e]);
        }
        std::sort(fns.begin(), fns.end());
        if (fns.size() != rep.normalizer_index_product)
            throw std::logic_error("decomposition_report: |f_nS| != prod |N_i/S_i|");

        // left cosets of fns (fns is normal, so sides agree)
        std::map<std::vector<unsigned>, std::size_t> coset_of;
        std::vector<std::vector<std::vector<unsigned>>> cosets;
        for (const auto& e : hat.elements) {
            if (coset_of.count(e)) continue;
            std::vector<std::vector<unsigned>> coset;
            for (const auto& s : fns) coset.push_back(compose_perm(e, s));
            std::sort(coset.begin(), coset.end());
            for (const auto& m : coset) coset_of[m] = cosets.size();
            cosets.push_back(std::move(coset));
        }

        const std::size_t nc = cosets.size();
        std::vector<std::vector<unsigned>> chosen(nc);
        auto closed = [&]() {
            for (std::size_t i = 0; i < nc; ++i)
                for (std::size_t j = 0; j < nc; ++j) {
                    const auto p = compose_perm(chosen[i], chosen[j]);
                    if (chosen[coset_of.at(p)] != p) return false;
                }
            return true;
        };

        for (std::size_t k = 0; k < nc; ++k) chosen[k] = cosets[k].front();
        const bool canonical_ok = closed();

        bool found = canonical_ok;
        if (!found) {
            std::vector<char> assigned(nc, 0);
            ChoiceSearch search;
            auto consistent = [&](std::size_t k) {
                for (std::size_t i = 0; i < nc; ++i) {
                    if (!assigned[i]) continue;
                    const auto p1 = compose_perm(chosen[i], chosen[k]);
                    const std::size_t c1 = coset_of.at(p1);
                    if (assigned[c1] && chosen[c1] != p1) return false;
                    const auto p2 = compose_perm(chosen[k], chosen[i]);
                    const std::size_t c2 = coset_of.at(p2);
                    if (assigned[c2] && chosen[c2] != p2) return false;
                }
                return true;
            };
            auto rec = [&](auto&& self, std::size_t k) -> bool {
                if (search.visits++ > ChoiceSearch::kVisitBound) return false;
                if (k == nc) return true;
                for (const auto& cand : cosets[k]) {
                    chosen[k] = cand;
                    assigned[k] = 1;
                    if (consistent(k) && self(self, k + 1)) return true;
                    assigned[k] = 0;
                }
                return false;
            };
            found = rec(rec, 0);
        }
        rep.assumption_ii = found;
        rep.assumption_ii_mode = !found          ? ChoiceMode::unsatisfiable
                                 : canonical_ok ? ChoiceMode::canonical
                                                : ChoiceMode::searched;
    }

    return rep;
}

}  // namespace dsieve
