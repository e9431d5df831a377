#ifndef SEMIMOD_MONOID_HPP_
#define SEMIMOD_MONOID_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "semimod/natvec.hpp"

namespace semimod {

// Finite commutative monoid by Cayley table.
struct FinMonoid {
  std::uint32_t size = 0;
  std::uint32_t zero = 0;
  std::vector<std::vector<std::uint32_t>> add;

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a][b]; }

  // c-fold sum of m, by doubling; c may be any 64-bit value.
  std::uint32_t times(Nat c, std::uint32_t m) const;

  // Commutativity, associativity, identity; one line per violation.
  std::vector<std::string> validate() const;

  bool is_idempotent(std::uint32_t m) const { return add[m][m] == m; }
  // Every element additively idempotent (a semilattice with identity).
  bool is_semilattice() const;
  // Natural order m <= n iff m + n == n; a partial order on semilattices.
  bool leq(std::uint32_t a, std::uint32_t b) const { return add[a][b] == b; }

  bool operator==(const FinMonoid&) const = default;
};

FinMonoid trivial_monoid();
// The two-element semilattice {0, 1} with 1 + 1 = 1.
FinMonoid boolean_monoid();
FinMonoid cyclic_monoid(std::uint32_t n);
FinMonoid product_monoid(const FinMonoid& a, const FinMonoid& b);

// All monoid endomorphisms (maps fixing zero and preserving +), sorted.
std::vector<std::vector<std::uint32_t>> monoid_endomorphisms(const FinMonoid& m);

// All monoid homomorphisms M -> N, sorted by image vector.
std::vector<std::vector<std::uint32_t>> monoid_homs(const FinMonoid& m, const FinMonoid& n);

// Greedy generating set: least elements that close to the whole monoid.
std::vector<std::uint32_t> monoid_generators(const FinMonoid& m);

// Lexicographically least serialized add table over relabelings fixing
// zero.  Throws BoundError above `bound` elements.
std::string monoid_canonical_form(const FinMonoid& m, std::size_t bound = 12);

}  // namespace semimod

#endif
