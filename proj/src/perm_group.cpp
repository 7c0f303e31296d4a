#include "fusionkit/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fusionkit {

namespace {

// Independent order computation: |G| must equal the product of orbit
// lengths along a stabilizer chain. Orbit-stabilizer only balances when
// the element set is actually a group, so a closure bug surfaces here.
void check_stabilizer_chain(const std::vector<Permutation>& elements) {
  std::vector<const Permutation*> level;
  level.reserve(elements.size());
  for (const auto& x : elements) level.push_back(&x);

  std::uint64_t product = 1;
  const unsigned degree = elements.front().degree();
  while (level.size() > 1) {
    unsigned base_point = degree;
    for (unsigned pt = 0; pt < degree && base_point == degree; ++pt)
      for (const auto* x : level)
        if (x->image(pt) != pt) {
          base_point = pt;
          break;
        }
    if (base_point == degree)
      throw InternalCheckError("non-identity elements fixing every point");

    std::set<unsigned> orbit;
    std::vector<const Permutation*> stabilizer;
    for (const auto* x : level) {
      orbit.insert(x->image(base_point));
      if (x->image(base_point) == base_point) stabilizer.push_back(x);
    }
    if (orbit.size() * stabilizer.size() != level.size())
      throw InternalCheckError("orbit-stabilizer count mismatch");
    product *= orbit.size();
    level = std::move(stabilizer);
  }
  if (product != elements.size())
    throw InternalCheckError("stabilizer-chain order disagrees with |elements|");
}

std::vector<Permutation> greedy_generators(const std::vector<Permutation>& elements,
                                           unsigned degree) {
  std::vector<Permutation> gens;
  std::set<Permutation> span;
  span.insert(Permutation(degree));
  for (const auto& x : elements) {
    if (span.count(x)) continue;
    gens.push_back(x);
    // re-close the span with the new generator
    std::deque<Permutation> queue(span.begin(), span.end());
    std::set<Permutation> next = span;
    next.insert(x);
    queue.push_back(x);
    while (!queue.empty()) {
      Permutation cur = queue.front();
      queue.pop_front();
      for (const auto& g : gens) {
        Permutation prod = cur * g;
        if (next.insert(prod).second) queue.push_back(prod);
      }
    }
    span = std::move(next);
    if (span.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace

PermGroup::PermGroup() {
  auto data = std::make_shared<Data>();
  data->degree = 0;
  data->elements.push_back(Permutation(0u));
  data_ = std::move(data);
}

bool PermGroup::contains(const Permutation& x) const {
  return std::binary_search(elements().begin(), elements().end(), x);
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& x) const {
  auto it = std::lower_bound(elements().begin(), elements().end(), x);
  if (it == elements().end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - elements().begin());
}

bool PermGroup::contains_all(const PermGroup& other) const {
  if (data_ == other.data_) return true;
  if (other.degree() != degree() || other.order() > order()) return false;
  return std::includes(elements().begin(), elements().end(),
                       other.elements().begin(), other.elements().end());
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return data_ == other.data_ || elements() == other.elements();
}

bool PermGroup::is_p_group(unsigned* prime_out) const {
  std::uint64_t n = order();
  if (n == 1) {
    if (prime_out) *prime_out = 0;
    return true;
  }
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return false;
  if (prime_out) *prime_out = ps.front();
  return true;
}

bool PermGroup::canonical_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

PermGroup group_closure(std::vector<Permutation> generators, unsigned degree,
                        const Caps& caps) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw PreconditionError("generator degree mismatch");

  std::set<Permutation> closed;
  std::deque<Permutation> queue;
  closed.insert(Permutation(degree));
  queue.push_back(Permutation(degree));
  for (const auto& g : generators)
    if (closed.insert(g).second) queue.push_back(g);

  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation prod = cur * g;
      if (closed.insert(prod).second) {
        if (closed.size() > caps.group_order)
          throw CapExceeded("group too large: closure exceeds cap of " +
                            std::to_string(caps.group_order));
        queue.push_back(prod);
      }
    }
  }

  auto data = std::make_shared<PermGroup::Data>();
  data->degree = degree;
  data->generators = std::move(generators);
  data->elements.assign(closed.begin(), closed.end());
  check_stabilizer_chain(data->elements);
  return PermGroup(std::move(data));
}

PermGroup group_from_elements(std::vector<Permutation> elements) {
  if (elements.empty())
    throw PreconditionError("element set must contain the identity");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const unsigned degree = elements.front().degree();
  for (const auto& x : elements)
    if (x.degree() != degree) throw PreconditionError("element degree mismatch");
  if (!elements.front().is_identity())
    throw PreconditionError("element set must contain the identity");

  check_stabilizer_chain(elements);
  auto data = std::make_shared<PermGroup::Data>();
  data->degree = degree;
  data->generators = greedy_generators(elements, degree);
  data->elements = std::move(elements);
  return PermGroup(std::move(data));
}

Subgroup::Subgroup(PermGroup parent, PermGroup group)
    : parent_(std::move(parent)), group_(std::move(group)) {
  if (!parent_.contains_all(group_))
    throw PreconditionError("subgroup elements not contained in parent");
  if (parent_.order() % group_.order() != 0)
    throw InternalCheckError("Lagrange violation: subgroup order does not divide");
}

GroupHom::GroupHom(PermGroup source, PermGroup target, std::vector<Permutation> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.order())
    throw PreconditionError("homomorphism map must be total on the source");
  for (const auto& y : images_)
    if (!target_.contains(y))
      throw PreconditionError("homomorphism image outside target");
  const auto& xs = source_.elements();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) {
      auto k = source_.index_of(xs[i] * xs[j]);
      if (!k || !(images_[*k] == images_[i] * images_[j]))
        throw PreconditionError("map is not multiplicative");
    }
}

const Permutation& GroupHom::apply(const Permutation& x) const {
  auto i = source_.index_of(x);
  if (!i) throw PreconditionError("element outside homomorphism source");
  return images_[*i];
}

bool GroupHom::is_bijective() const {
  if (source_.order() != target_.order()) return false;
  std::set<Permutation> image(images_.begin(), images_.end());
  return image.size() == images_.size();
}

bool operator==(const GroupHom& a, const GroupHom& b) {
  return a.source_.same_elements(b.source_) && a.target_.same_elements(b.target_) &&
         a.images_ == b.images_;
}

}  // namespace fusionkit
