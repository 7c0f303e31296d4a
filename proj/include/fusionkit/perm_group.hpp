#ifndef FUSIONKIT_PERM_GROUP_HPP
#define FUSIONKIT_PERM_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fusionkit/common.hpp"
#include "fusionkit/permutation.hpp"

namespace fusionkit {

// A finite permutation group with its element set fully materialized.
// Elements are kept sorted lexicographically by image sequence, which puts
// the identity first and makes iteration order canonical. Immutable after
// construction; copies share the underlying data.
class PermGroup {
 public:
  PermGroup();  // trivial group on 0 points

  unsigned degree() const { return data_->degree; }
  std::uint64_t order() const { return data_->elements.size(); }
  bool is_trivial() const { return order() == 1; }
  const std::vector<Permutation>& generators() const { return data_->generators; }
  const std::vector<Permutation>& elements() const { return data_->elements; }
  const Permutation& identity() const { return data_->elements.front(); }

  bool contains(const Permutation& x) const;
  std::optional<std::size_t> index_of(const Permutation& x) const;
  bool contains_all(const PermGroup& other) const;  // other.elements ⊆ elements
  bool same_elements(const PermGroup& other) const;

  // |G| is a power of a single prime (or |G| = 1). When true and |G| > 1,
  // *prime_out receives that prime.
  bool is_p_group(unsigned* prime_out = nullptr) const;

  // Canonical order on subgroup lists: by (order, element list).
  static bool canonical_less(const PermGroup& a, const PermGroup& b);

 private:
  struct Data {
    unsigned degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;
  };
  explicit PermGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend PermGroup group_closure(std::vector<Permutation> generators,
                                 unsigned degree, const Caps& caps);
  friend PermGroup group_from_elements(std::vector<Permutation> elements);
};

// Closes the generators under products. The result carries a canonical
// element order; the order is cross-checked against the product of orbit
// lengths along a stabilizer chain. Throws CapExceeded once the closure
// grows past caps.group_order.
PermGroup group_closure(std::vector<Permutation> generators, unsigned degree,
                        const Caps& caps = Caps{});

// Wraps an element set that is already known to be closed (this is checked
// via the stabilizer-chain cross-check). A small generating set is chosen
// greedily in canonical element order.
PermGroup group_from_elements(std::vector<Permutation> elements);

// A subgroup remembers the ambient group it was cut from. Containment and
// Lagrange divisibility are validated at construction.
class Subgroup {
 public:
  Subgroup(PermGroup parent, PermGroup group);

  const PermGroup& parent() const { return parent_; }
  const PermGroup& group() const { return group_; }
  std::uint64_t order() const { return group_.order(); }

 private:
  PermGroup parent_;
  PermGroup group_;
};

// A total homomorphism given by the image of every source element;
// images[i] is the image of source.elements()[i]. Multiplicativity is
// validated at construction.
class GroupHom {
 public:
  GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> images);

  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const std::vector<Permutation>& images() const { return images_; }
  const Permutation& apply(const Permutation& x) const;
  bool is_bijective() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b);

 private:
  PermGroup source_;
  PermGroup target_;
  std::vector<Permutation> images_;
};

}  // namespace fusionkit

#endif
