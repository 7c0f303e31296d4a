#ifndef FUSIONKIT_COMMON_HPP
#define FUSIONKIT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionkit {

// Materialization limits. Every group built by the engine keeps its full
// element set in memory; these caps bound what we agree to materialize.
struct Caps {
  std::uint64_t group_order = 1000;    // max |G| for element materialization
  std::uint64_t subgroup_enum = 400;   // max |G| for full subgroup enumeration
};

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// "group too large" and friends: an input exceeded a configured cap.
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// A caller violated a documented precondition (foreign element, degree
// mismatch, non-p-group input, ...).
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Two independent computations of the same quantity disagreed. Always an
// engine bug, never a property of the input.
struct InternalCheckError : Error {
  explicit InternalCheckError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::vector<unsigned> prime_divisors(std::uint64_t n) {
  std::vector<unsigned> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(static_cast<unsigned>(n));
  return ps;
}

}  // namespace fusionkit

#endif
