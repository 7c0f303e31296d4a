#include "fusionkit/permutation.hpp"

#include <numeric>

namespace fusionkit {

Permutation::Permutation(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned img : images_) {
    if (img >= images_.size() || seen[img])
      throw PreconditionError("image sequence is not a bijection");
    seen[img] = true;
  }
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw PreconditionError("degree mismatch in permutation product");
  std::vector<unsigned> images(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) images[i] = b.images_[a.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

std::uint64_t Permutation::element_order() const {
  std::uint64_t order = 1;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    unsigned pt = start;
    do {
      seen[pt] = true;
      pt = images_[pt];
      ++len;
    } while (pt != start);
    order = std::lcm(order, len);
  }
  return order;
}

namespace {

struct CycleScanner {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    // Corpus generator strings are single-line; the column is 1-based.
    throw ParseError(msg, 1, pos + 1);
  }

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  unsigned read_point(unsigned degree) {
    skip_ws();
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
      fail("expected a point");
    std::uint64_t value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + static_cast<unsigned>(text[pos] - '0');
      if (value > 1000000) fail("point out of range");
      ++pos;
    }
    if (value < 1 || value > degree) fail("point outside 1..degree");
    return static_cast<unsigned>(value - 1);  // to 0-based
  }
};

}  // namespace

Permutation parse_cycles(const std::string& text, unsigned degree) {
  CycleScanner scan{text};
  Permutation result(degree);
  bool saw_cycle = false;
  while (!scan.at_end()) {
    if (scan.text[scan.pos] != '(') scan.fail("expected '('");
    ++scan.pos;
    std::vector<unsigned> cycle;
    std::vector<bool> used(degree, false);
    while (true) {
      scan.skip_ws();
      if (scan.pos >= scan.text.size()) scan.fail("unterminated cycle");
      if (scan.text[scan.pos] == ')') {
        ++scan.pos;
        break;
      }
      unsigned pt = scan.read_point(degree);
      if (used[pt]) scan.fail("point repeated within a cycle");
      used[pt] = true;
      cycle.push_back(pt);
    }
    if (cycle.size() == 1) scan.fail("fixed point written as a 1-cycle");
    saw_cycle = true;
    if (cycle.size() >= 2) {
      std::vector<unsigned> images(degree);
      std::iota(images.begin(), images.end(), 0u);
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      result = result * Permutation(std::move(images));
    }
  }
  if (!saw_cycle) scan.fail("empty generator string");
  return result;
}

std::string to_cycles(const Permutation& perm) {
  std::string out;
  std::vector<bool> seen(perm.degree(), false);
  for (unsigned start = 0; start < perm.degree(); ++start) {
    if (seen[start] || perm.image(start) == start) {
      seen[start] = true;
      continue;
    }
    out += '(';
    unsigned pt = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(pt + 1);
      seen[pt] = true;
      pt = perm.image(pt);
      first = false;
    } while (pt != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace fusionkit
