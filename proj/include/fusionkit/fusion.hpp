#ifndef FUSIONKIT_FUSION_HPP
#define FUSIONKIT_FUSION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fusionkit/group_ops.hpp"

namespace fusionkit {

using SubId = std::uint32_t;
using ElemId = std::uint32_t;

// An injective homomorphism between subgroups of a common p-group, stored
// as a full element map: images[i] is the image of source.elements()[i].
struct FusionMorphism {
  PermGroup source;
  PermGroup target;
  std::vector<Permutation> images;
};

// Materialized fusion system data over a p-group P. Subgroups of P are
// enumerated once in canonical order and referenced by SubId; elements of
// P by their index (ElemId) in P.elements(). A hom set homs[a][b] is a
// sorted list of image vectors aligned to the elements of subgroup a.
// Immutable once wrapped in a FusionSystem.
struct FusionData {
  PermGroup P;
  unsigned p = 2;
  Caps caps;
  std::optional<PermGroup> realizing_group;

  std::vector<PermGroup> subgroups;
  std::vector<std::vector<ElemId>> sub_elems;
  std::vector<std::vector<std::int32_t>> pos_in_sub;  // -1 if absent
  std::vector<std::vector<bool>> sub_mask;
  std::map<std::vector<ElemId>, SubId> sub_lookup;
  std::vector<std::vector<ElemId>> mult;
  std::vector<ElemId> inv;
  std::vector<std::vector<std::vector<std::vector<ElemId>>>> homs;

  ElemId mul(ElemId i, ElemId j) const { return mult[i][j]; }
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inv[g], x), g); }
  SubId sub_count() const { return static_cast<SubId>(subgroups.size()); }
  SubId full_id() const { return sub_count() - 1; }
  std::optional<SubId> find_subgroup(const std::vector<ElemId>& sorted_ids) const;
};

class FusionSystem {
 public:
  explicit FusionSystem(std::shared_ptr<const FusionData> data)
      : d_(std::move(data)) {}

  const PermGroup& base() const { return d_->P; }
  unsigned prime() const { return d_->p; }
  const Caps& caps() const { return d_->caps; }
  const std::optional<PermGroup>& realizing_group() const {
    return d_->realizing_group;
  }
  const std::vector<PermGroup>& subgroups() const { return d_->subgroups; }
  std::optional<SubId> subgroup_id(const PermGroup& H) const;
  const std::vector<std::vector<ElemId>>& hom_maps(SubId a, SubId b) const {
    return d_->homs[a][b];
  }
  std::uint64_t morphism_count() const;
  std::uint64_t hom_hash() const;

  // Hom-set equality: same base elements and identical hom tables.
  bool same_homs(const FusionSystem& other) const;

  const FusionData& data() const { return *d_; }

 private:
  std::shared_ptr<const FusionData> d_;
};

// F_P(G): hom sets are the maps induced by conjugation in G, found by the
// transporter scan over all g in G and deduplicated by element map. P must
// be a Sylow p-subgroup of G.
FusionSystem fusion_of_group(const PermGroup& G, const Subgroup& P, unsigned p,
                             const Caps& caps = Caps{});

// F_P(P): all fusion comes from conjugation inside P.
FusionSystem inner_fusion(const PermGroup& P, unsigned p, const Caps& caps = Caps{});

// F = F_P(P), by hom-set equality.
bool is_nilpotent(const FusionSystem& F);

// Classical normal p-complement criterion, used as an independent oracle:
// N_G(Q)/C_G(Q) is a p-group for every Q ≤ P.
bool frobenius_criterion(const PermGroup& G, const Subgroup& P, unsigned p,
                         const Caps& caps = Caps{});

// No element of Q is F-conjugate to an element of P outside Q. The witness
// variant reports a fused pair (x in Q, φ(x) outside Q).
bool is_strongly_closed_F(const FusionSystem& F, const PermGroup& Q);
std::optional<std::pair<Permutation, Permutation>> strong_closure_violation_F(
    const FusionSystem& F, const PermGroup& Q);

// A subgroup of Aut(Q), materialized as image vectors over Q's canonical
// element order. Validated closed under composition and inversion.
class AutSetK {
 public:
  static AutSetK full_aut(const PermGroup& Q, const Caps& caps = Caps{});
  static AutSetK trivial_aut(const PermGroup& Q);
  static AutSetK aut_p(const FusionSystem& F, const PermGroup& Q);

  const PermGroup& domain() const { return Q_; }
  const std::vector<std::vector<Permutation>>& maps() const { return auts_; }
  bool contains_map(const std::vector<Permutation>& images) const;
  std::size_t size() const { return auts_.size(); }

 private:
  AutSetK(PermGroup Q, std::vector<std::vector<Permutation>> auts);
  PermGroup Q_;
  std::vector<std::vector<Permutation>> auts_;
};

// N_F^K(Q): the fusion system over N_P^K(Q) = {x in N_P(Q) : c_x|Q in K}
// whose morphisms φ: A → B admit an extension φ̄: QA → QB in F with
// φ̄(Q) = Q and φ̄|Q in K. Specializations: K = Aut(Q) is N_F(Q),
// K = 1 is C_F(Q), K = Aut_P(Q) is PC_F(Q).
FusionSystem k_normalizer_subsystem(const FusionSystem& F, const PermGroup& Q,
                                    const AutSetK& K);
FusionSystem normalizer_subsystem(const FusionSystem& F, const PermGroup& Q);

// Smallest morphism family over P containing the P-inner morphisms and the
// seed, closed under composition, restriction, inversion of isomorphisms
// and corestriction onto images. Not necessarily saturated.
FusionSystem generated_subsystem(const PermGroup& P, unsigned p,
                                 const std::vector<FusionMorphism>& seed,
                                 const Caps& caps = Caps{});

// Saturation via the fully-automized + receptive axioms: every F-conjugacy
// class of subgroups must contain a member Q with Aut_P(Q) Sylow in
// Aut_F(Q) such that every F-isomorphism onto Q extends to its N_φ.
bool is_saturated(const FusionSystem& F);

// Largest subgroup Q with N_F(Q) = F. The set of such subgroups is checked
// to be closed under join.
Subgroup o_p_of_F(const FusionSystem& F);

// Every F-conjugate Q' of Q satisfies C_P(Q') ≤ Q'.
bool is_centric(const FusionSystem& F, const PermGroup& Q);

// Subgroup of P generated by x^-1 φ(x) over all morphisms into P.
Subgroup focal_subgroup(const FusionSystem& F);

std::vector<FusionMorphism> all_morphisms(const FusionSystem& F);

// F-conjugates of Q among the subgroups of P (including Q itself).
std::vector<SubId> conjugate_subgroup_ids(const FusionSystem& F, SubId q);

// |N_P(Q)| maximal among the F-conjugates of Q.
bool is_fully_normalized(const FusionSystem& F, SubId q);

PermGroup normalizer_in_base(const FusionSystem& F, const PermGroup& Q);

// Direct scan of the fusion axioms (inner containment, composition,
// restriction, inversion, corestriction). Throws InternalCheckError.
void check_fusion_axioms(const FusionSystem& F);

}  // namespace fusionkit

#endif
