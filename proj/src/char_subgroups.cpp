#include "fusionkit/char_subgroups.hpp"

#include <algorithm>

namespace fusionkit {

std::vector<Subgroup> abelian_subgroups_max_order(const PermGroup& P, const Caps& caps) {
  if (!P.is_p_group())
    throw PreconditionError("Thompson subgroup machinery expects a p-group");

  auto subs = all_subgroups(P, caps);
  std::uint64_t best = 1;
  for (const auto& s : subs)
    if (is_abelian(s.group())) best = std::max(best, s.order());

  std::vector<Subgroup> out;
  for (auto& s : subs)
    if (s.order() == best && is_abelian(s.group())) out.push_back(std::move(s));
  return out;
}

Subgroup thompson_J(const PermGroup& P, const Caps& caps) {
  auto abelians = abelian_subgroups_max_order(P, caps);
  std::vector<Permutation> gens;
  for (const auto& a : abelians)
    for (const auto& g : a.group().generators()) gens.push_back(g);
  return Subgroup(P, subgroup_generated(P, std::move(gens)));
}

Subgroup ZJ(const PermGroup& P, const Caps& caps) {
  Subgroup J = thompson_J(P, caps);
  return Subgroup(P, center(J.group()).group());
}

CharSubReport char_sub_report(const PermGroup& P, const Caps& caps) {
  auto abelians = abelian_subgroups_max_order(P, caps);
  Subgroup J = thompson_J(P, caps);
  Subgroup Z = Subgroup(P, center(J.group()).group());
  return CharSubReport{Subgroup(P, P), std::move(J), std::move(Z), std::move(abelians)};
}

std::vector<Subgroup> enumerate_strongly_closed(const PermGroup& G, const Subgroup& P,
                                                const Caps& caps) {
  if (!P.parent().same_elements(G))
    throw PreconditionError("P must be a subgroup of G");
  unsigned p = 0;
  if (!P.group().is_p_group(&p))
    throw PreconditionError("P is not a p-group, so not a Sylow subgroup");
  if (p != 0 && P.order() != p_part(G.order(), p))
    throw PreconditionError("P is not a Sylow subgroup of G");

  std::vector<Subgroup> out;
  for (auto& q : all_subgroups(P.group(), caps)) {
    Subgroup q_in_G(G, q.group());
    if (is_strongly_closed_group(G, P, q_in_G)) out.push_back(std::move(q_in_G));
  }
  return out;
}

}  // namespace fusionkit
