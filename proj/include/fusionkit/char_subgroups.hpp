#ifndef FUSIONKIT_CHAR_SUBGROUPS_HPP
#define FUSIONKIT_CHAR_SUBGROUPS_HPP

#include <vector>

#include "fusionkit/group_ops.hpp"

namespace fusionkit {

// J(base), Z(J(base)) and the abelian subgroups of maximal order that
// generate J, bundled for reporting.
struct CharSubReport {
  Subgroup base;
  Subgroup thompson;
  Subgroup z_of_j;
  std::vector<Subgroup> witness_abelians;
};

// Abelian subgroups of P whose order attains the maximum among abelian
// subgroups. P must be a p-group. Never empty: the trivial subgroup is
// abelian.
std::vector<Subgroup> abelian_subgroups_max_order(const PermGroup& P,
                                                  const Caps& caps = Caps{});

// Thompson subgroup: generated by the abelian subgroups of maximal order.
Subgroup thompson_J(const PermGroup& P, const Caps& caps = Caps{});

// Center of the Thompson subgroup, as a subgroup of P.
Subgroup ZJ(const PermGroup& P, const Caps& caps = Caps{});

CharSubReport char_sub_report(const PermGroup& P, const Caps& caps = Caps{});

// All Q ≤ P strongly closed in P with respect to G, canonical order.
// Always contains the trivial subgroup and P itself. P must be a Sylow
// p-subgroup of G.
std::vector<Subgroup> enumerate_strongly_closed(const PermGroup& G, const Subgroup& P,
                                                const Caps& caps = Caps{});

}  // namespace fusionkit

#endif
