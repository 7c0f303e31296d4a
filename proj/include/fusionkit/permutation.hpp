#ifndef FUSIONKIT_PERMUTATION_HPP
#define FUSIONKIT_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fusionkit/common.hpp"

namespace fusionkit {

// A bijection on {0, ..., degree-1}, stored as its image sequence.
// Products compose left to right: (a * b) applies a first, then b, so
// point images satisfy (a * b)[x] = b[a[x]].
class Permutation {
 public:
  explicit Permutation(unsigned degree);               // identity
  explicit Permutation(std::vector<unsigned> images);  // validates bijection

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned image(unsigned point) const { return images_[point]; }
  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation conjugated_by(const Permutation& g) const;  // g^-1 * this * g
  std::uint64_t element_order() const;  // lcm of cycle lengths

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<unsigned> images_;
};

// Cycle notation with 1-based points: "(1 2 3)(4 5)", identity "()".
// Non-disjoint cycles compose left to right. Throws ParseError on
// malformed input; points outside 1..degree are rejected.
Permutation parse_cycles(const std::string& text, unsigned degree);
std::string to_cycles(const Permutation& perm);

}  // namespace fusionkit

#endif
