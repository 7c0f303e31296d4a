#ifndef FUSIONKIT_GROUP_OPS_HPP
#define FUSIONKIT_GROUP_OPS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fusionkit/perm_group.hpp"

namespace fusionkit {

// Every subgroup of G, each exactly once, sorted canonically by
// (order, element list). Seeds with the cyclic subgroups, then repeatedly
// extends known subgroups by conjugacy-class representatives; the running
// list is kept closed under conjugation so the extension step is exhaustive.
// Throws CapExceeded when |G| > caps.subgroup_enum.
std::vector<Subgroup> all_subgroups(const PermGroup& G, const Caps& caps = Caps{});

Subgroup normalizer(const PermGroup& G, const Subgroup& H);
Subgroup centralizer(const PermGroup& G, const std::vector<Permutation>& set);
Subgroup center(const PermGroup& G);

// A Sylow p-subgroup, chosen deterministically: the ascent is scanned in
// canonical element order and the result is replaced by its lexicographically
// least conjugate. Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow(const PermGroup& G, unsigned p);

std::vector<Permutation> conjugacy_class(const PermGroup& G, const Permutation& x);
bool is_conjugate(const PermGroup& G, const Permutation& x, const Permutation& y);

// Intersection of the maximal subgroups. For p-groups the result is
// cross-checked against the subgroup generated by commutators and p-th
// powers; disagreement is an engine bug.
Subgroup frattini(const PermGroup& G, const Caps& caps = Caps{});

// True iff G has a normal p-complement, tested as closure of the set of
// elements of order coprime to p.
bool is_p_nilpotent(const PermGroup& G, unsigned p);

// K^G ∩ H ≤ K at the group level: no element of Q is G-conjugate to an
// element of P outside Q. The witness variant reports the first fused pair
// (x in Q, its conjugate in P \ Q).
bool is_strongly_closed_group(const PermGroup& G, const Subgroup& P, const Subgroup& Q);
std::optional<std::pair<Permutation, Permutation>> strong_closure_violation_group(
    const PermGroup& G, const Subgroup& P, const Subgroup& Q);

// All automorphisms of Q, by backtracking over generator-image assignments
// and validating each candidate on the full multiplication table. Canonical
// order (by image sequence over Q's canonical element order).
std::vector<GroupHom> automorphism_group(const PermGroup& Q, const Caps& caps = Caps{});

// Commutator subgroup [G,G], materialized from all commutators.
PermGroup derived_subgroup(const PermGroup& G);

// Elementwise conjugate H^g, as a group.
PermGroup conjugate_group(const PermGroup& H, const Permutation& g);

// Subgroup of `parent` generated by the given elements.
PermGroup subgroup_generated(const PermGroup& parent, std::vector<Permutation> gens);

bool is_normal_in(const PermGroup& H, const PermGroup& G);

// Intersection of two element sets (both subgroups of a common ambient group).
PermGroup intersect_groups(const PermGroup& A, const PermGroup& B);

bool is_abelian(const PermGroup& G);

}  // namespace fusionkit

#endif
