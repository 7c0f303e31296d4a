#include "fusionkit/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fusionkit {

namespace {

std::vector<Permutation> sorted_unique(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Conjugacy-class representatives of G, one per class, each the least
// element of its class.
std::vector<Permutation> class_representatives(const PermGroup& G) {
  std::vector<bool> covered(G.order(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < G.order(); ++i) {
    if (covered[i]) continue;
    const Permutation& x = G.elements()[i];
    reps.push_back(x);
    for (const auto& g : G.elements()) {
      auto j = G.index_of(x.conjugated_by(g));
      covered[*j] = true;
    }
  }
  return reps;
}

}  // namespace

PermGroup subgroup_generated(const PermGroup& parent, std::vector<Permutation> gens) {
  // closure stays within parent, so the parent's order is the only cap needed
  Caps caps;
  caps.group_order = parent.order();
  PermGroup H = group_closure(std::move(gens), parent.degree(), caps);
  if (!parent.contains_all(H))
    throw PreconditionError("generators do not lie in the ambient group");
  return H;
}

PermGroup conjugate_group(const PermGroup& H, const Permutation& g) {
  std::vector<Permutation> elems;
  elems.reserve(H.order());
  for (const auto& x : H.elements()) elems.push_back(x.conjugated_by(g));
  return group_from_elements(std::move(elems));
}

bool is_normal_in(const PermGroup& H, const PermGroup& G) {
  for (const auto& g : G.generators())
    for (const auto& h : H.generators())
      if (!H.contains(h.conjugated_by(g))) return false;
  return true;
}

PermGroup intersect_groups(const PermGroup& A, const PermGroup& B) {
  std::vector<Permutation> common;
  std::set_intersection(A.elements().begin(), A.elements().end(),
                        B.elements().begin(), B.elements().end(),
                        std::back_inserter(common));
  return group_from_elements(std::move(common));
}

bool is_abelian(const PermGroup& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const PermGroup& G, const Caps& caps) {
  if (G.order() > caps.subgroup_enum)
    throw CapExceeded("group too large for subgroup enumeration (order " +
                      std::to_string(G.order()) + " > cap " +
                      std::to_string(caps.subgroup_enum) + ")");

  // Subgroups are tracked as sorted element-index vectors into G.elements().
  auto key_of = [&](const PermGroup& H) {
    std::vector<std::uint32_t> key;
    key.reserve(H.order());
    for (const auto& x : H.elements())
      key.push_back(static_cast<std::uint32_t>(*G.index_of(x)));
    return key;
  };

  std::map<std::vector<std::uint32_t>, PermGroup> known;
  std::deque<const PermGroup*> queue;
  auto add = [&](PermGroup H) {
    auto key = key_of(H);
    auto [it, fresh] = known.emplace(std::move(key), std::move(H));
    if (fresh) queue.push_back(&it->second);
  };

  add(subgroup_generated(G, {}));
  for (const auto& x : G.elements()) add(subgroup_generated(G, {x}));

  const auto reps = class_representatives(G);
  while (!queue.empty()) {
    const PermGroup* H = queue.front();
    queue.pop_front();
    // keep the list closed under conjugation before extending
    for (const auto& g : G.generators()) add(conjugate_group(*H, g));
    if (H->order() == G.order()) continue;
    for (const auto& r : reps) {
      if (H->contains(r)) continue;
      std::vector<Permutation> gens = H->generators();
      gens.push_back(r);
      add(subgroup_generated(G, std::move(gens)));
    }
  }

  std::vector<PermGroup> list;
  list.reserve(known.size());
  for (auto& [key, H] : known) list.push_back(std::move(H));
  std::sort(list.begin(), list.end(), PermGroup::canonical_less);

  std::vector<Subgroup> out;
  out.reserve(list.size());
  for (auto& H : list) out.emplace_back(G, std::move(H));
  return out;
}

Subgroup normalizer(const PermGroup& G, const Subgroup& H) {
  if (!H.parent().same_elements(G))
    throw PreconditionError("subgroup does not belong to this group");
  const PermGroup& N = H.group();
  std::vector<Permutation> stab;
  for (const auto& g : G.elements()) {
    bool keeps = true;
    for (const auto& h : N.generators())
      if (!N.contains(h.conjugated_by(g))) {
        keeps = false;
        break;
      }
    if (keeps) stab.push_back(g);
  }
  return Subgroup(G, group_from_elements(std::move(stab)));
}

Subgroup centralizer(const PermGroup& G, const std::vector<Permutation>& set) {
  for (const auto& s : set)
    if (!G.contains(s)) throw PreconditionError("centralizer argument outside group");
  std::vector<Permutation> cent;
  for (const auto& g : G.elements()) {
    bool commutes = true;
    for (const auto& s : set)
      if (!(g * s == s * g)) {
        commutes = false;
        break;
      }
    if (commutes) cent.push_back(g);
  }
  return Subgroup(G, group_from_elements(std::move(cent)));
}

Subgroup center(const PermGroup& G) { return centralizer(G, G.elements()); }

Subgroup sylow(const PermGroup& G, unsigned p) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  const std::uint64_t target = p_part(G.order(), p);

  PermGroup P = subgroup_generated(G, {});
  while (P.order() < target) {
    // Every g in N_G(P)\P with g^p in P extends P to a p-group of order p|P|.
    const PermGroup N = normalizer(G, Subgroup(G, P)).group();
    bool extended = false;
    for (const auto& g : N.elements()) {
      if (P.contains(g)) continue;
      Permutation gp = g;
      for (unsigned i = 1; i < p; ++i) gp = gp * g;
      if (!P.contains(gp)) continue;
      std::vector<Permutation> gens = P.generators();
      gens.push_back(g);
      P = subgroup_generated(G, std::move(gens));
      extended = true;
      break;
    }
    if (!extended)
      throw InternalCheckError("Sylow ascent stalled below the p-part");
  }

  // canonicalize: least conjugate in subgroup order
  PermGroup best = P;
  for (const auto& g : G.elements()) {
    PermGroup Pg = conjugate_group(P, g);
    if (PermGroup::canonical_less(Pg, best)) best = std::move(Pg);
  }
  return Subgroup(G, std::move(best));
}

std::vector<Permutation> conjugacy_class(const PermGroup& G, const Permutation& x) {
  if (!G.contains(x)) throw PreconditionError("element outside group");
  std::set<Permutation> orbit{x};
  std::deque<Permutation> queue{x};
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : G.generators()) {
      Permutation y = cur.conjugated_by(g);
      if (orbit.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<Permutation>(orbit.begin(), orbit.end());
}

bool is_conjugate(const PermGroup& G, const Permutation& x, const Permutation& y) {
  if (!G.contains(x) || !G.contains(y))
    throw PreconditionError("element outside group");
  auto cls = conjugacy_class(G, x);
  return std::binary_search(cls.begin(), cls.end(), y);
}

Subgroup frattini(const PermGroup& G, const Caps& caps) {
  auto subs = all_subgroups(G, caps);

  std::vector<const PermGroup*> proper;
  for (const auto& s : subs)
    if (s.order() < G.order()) proper.push_back(&s.group());

  std::vector<const PermGroup*> maximal;
  for (const auto* H : proper) {
    bool is_max = true;
    for (const auto* K : proper)
      if (K != H && K->order() > H->order() && K->contains_all(*H)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(H);
  }

  PermGroup phi = maximal.empty() ? G : *maximal.front();
  for (const auto* M : maximal) phi = intersect_groups(phi, *M);

  unsigned p = 0;
  if (G.is_p_group(&p) && p != 0) {
    // For p-groups Φ(G) = [G,G] G^p; the two routes must agree.
    std::vector<Permutation> gens;
    for (const auto& x : G.elements())
      for (const auto& y : G.elements())
        gens.push_back(x.inverse() * y.inverse() * x * y);
    for (const auto& x : G.elements()) {
      Permutation xp = x;
      for (unsigned i = 1; i < p; ++i) xp = xp * x;
      gens.push_back(xp);
    }
    PermGroup alt = subgroup_generated(G, sorted_unique(std::move(gens)));
    if (!alt.same_elements(phi))
      throw InternalCheckError(
          "Frattini mismatch: maximal-intersection vs commutators and p-th powers");
  }
  return Subgroup(G, std::move(phi));
}

bool is_p_nilpotent(const PermGroup& G, unsigned p) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  std::vector<Permutation> coprime;
  for (const auto& x : G.elements())
    if (x.element_order() % p != 0) coprime.push_back(x);

  std::set<Permutation> members(coprime.begin(), coprime.end());
  for (const auto& x : coprime)
    for (const auto& y : coprime)
      if (!members.count(x * y)) return false;

  if (coprime.size() * p_part(G.order(), p) != G.order())
    throw InternalCheckError("normal p-complement has wrong order");
  return true;
}

std::optional<std::pair<Permutation, Permutation>> strong_closure_violation_group(
    const PermGroup& G, const Subgroup& P, const Subgroup& Q) {
  if (!P.parent().same_elements(G) || !Q.parent().same_elements(G))
    throw PreconditionError("subgroups must live in G");
  if (!P.group().contains_all(Q.group()))
    throw PreconditionError("Q must be contained in P");
  for (const auto& x : Q.group().elements()) {
    for (const auto& y : conjugacy_class(G, x))
      if (P.group().contains(y) && !Q.group().contains(y))
        return std::make_pair(x, y);
  }
  return std::nullopt;
}

bool is_strongly_closed_group(const PermGroup& G, const Subgroup& P, const Subgroup& Q) {
  return !strong_closure_violation_group(G, P, Q).has_value();
}

std::vector<GroupHom> automorphism_group(const PermGroup& Q, const Caps& caps) {
  if (Q.order() > caps.subgroup_enum)
    throw CapExceeded("group too large for automorphism enumeration");

  const std::size_t n = Q.order();
  // express each element as an earlier element times a generator, BFS order
  const auto& gens = Q.generators();
  std::vector<std::size_t> parent(n, n), via(n, gens.size());
  std::vector<std::size_t> bfs_order;
  {
    std::deque<std::size_t> queue;
    std::vector<bool> seen(n, false);
    std::size_t id = *Q.index_of(Permutation(Q.degree()));
    seen[id] = true;
    queue.push_back(id);
    bfs_order.push_back(id);
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        std::size_t nxt = *Q.index_of(Q.elements()[cur] * gens[gi]);
        if (!seen[nxt]) {
          seen[nxt] = true;
          parent[nxt] = cur;
          via[nxt] = gi;
          queue.push_back(nxt);
          bfs_order.push_back(nxt);
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto ord = gens[gi].element_order();
    for (std::size_t i = 0; i < n; ++i)
      if (Q.elements()[i].element_order() == ord) candidates[gi].push_back(i);
  }

  if (gens.empty()) {
    std::vector<GroupHom> out;
    out.emplace_back(Q, Q, std::vector<Permutation>{Q.identity()});
    return out;
  }

  std::vector<std::vector<Permutation>> found;
  std::vector<Permutation> gen_images(gens.size(), Permutation(Q.degree()));

  auto try_assignment = [&]() {
    // extend generator images along the BFS expressions, then validate
    std::vector<Permutation> map(n, Permutation(Q.degree()));
    std::vector<bool> hit(n, false);
    for (std::size_t idx : bfs_order) {
      if (parent[idx] != n) map[idx] = map[parent[idx]] * gen_images[via[idx]];
      auto at = Q.index_of(map[idx]);
      if (!at || hit[*at]) return;  // not injective into Q
      hit[*at] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t ij = *Q.index_of(Q.elements()[i] * Q.elements()[j]);
        if (!(map[ij] == map[i] * map[j])) return;
      }
    found.push_back(std::move(map));
  };

  std::vector<std::size_t> choice(gens.size(), 0);
  while (true) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      gen_images[gi] = Q.elements()[candidates[gi][choice[gi]]];
    try_assignment();
    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == candidates[k].size()) choice[k++] = 0;
    if (k == gens.size()) break;
  }

  std::sort(found.begin(), found.end());

  std::vector<GroupHom> out;
  out.reserve(found.size());
  for (auto& map : found) out.emplace_back(Q, Q, std::move(map));
  return out;
}

PermGroup derived_subgroup(const PermGroup& G) {
  std::vector<Permutation> comms;
  for (const auto& x : G.elements())
    for (const auto& y : G.elements())
      comms.push_back(x.inverse() * y.inverse() * x * y);
  return subgroup_generated(G, sorted_unique(std::move(comms)));
}

}  // namespace fusionkit
