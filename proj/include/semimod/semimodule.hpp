#ifndef SEMIMOD_SEMIMODULE_HPP_
#define SEMIMOD_SEMIMODULE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semimod/monoid.hpp"
#include "semimod/semiring.hpp"

namespace semimod {

// A finite left semimodule: a commutative monoid together with one
// endomorphism per semiring generator (basis element in the based case,
// element in the finite case).  The action of a general based-semiring
// element is the coefficient-weighted pointwise sum of basis actions.
struct Semimodule {
  SemiringPtr ring;
  FinMonoid carrier;
  std::vector<std::vector<std::uint32_t>> actions;
  // Optional element labels for diagrams and messages; not serialized.
  std::vector<std::string> labels;

  std::uint32_t act(std::size_t gen, std::uint32_t m) const { return actions[gen][m]; }
  // Based rings only: action of the element with coefficient vector c.
  std::uint32_t act_vec(const NatVec& c, std::uint32_t m) const;

  std::string label(std::uint32_t m) const;

  bool operator==(const Semimodule& o) const {
    return *ring == *o.ring && carrier == o.carrier && actions == o.actions;
  }
};

// Partition of the carrier; blocks sorted by least element, each ascending.
struct Congruence {
  std::vector<std::vector<std::uint32_t>> blocks;

  // block index per carrier element
  std::vector<std::uint32_t> block_of(std::uint32_t size) const;
  bool is_equality(std::uint32_t size) const { return blocks.size() == size; }
  bool is_full() const { return blocks.size() == 1; }

  bool operator==(const Congruence&) const = default;
};

struct Hom {
  std::vector<std::uint32_t> map;
  bool is_zero(const FinMonoid& codomain) const;
  bool operator==(const Hom&) const = default;
};

Semimodule zero_semimodule(SemiringPtr ring);

// One line per violated axiom instance with a witness; empty iff M is a
// semimodule over its ring.  Throws MalformedError on dimension mismatch.
std::vector<std::string> validate_semimodule(const Semimodule& m);

std::vector<std::uint32_t> invertible_elements(const Semimodule& m);
bool is_proper(const Semimodule& m);

// Least subset containing zero and `seed`, closed under + and all actions.
std::vector<std::uint32_t> generated_subsemimodule(const Semimodule& m,
                                                   const std::vector<std::uint32_t>& seed);

// All action-closed submonoids containing zero, deduplicated, sorted.
std::vector<std::vector<std::uint32_t>> all_subsemimodules(const Semimodule& m,
                                                           std::size_t bound = 12);

// Least congruence containing the given pairs (union-find closure under
// translation and all generator actions).
Congruence congruence_closure(const Semimodule& m,
                              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);
Congruence principal_congruence(const Semimodule& m, std::uint32_t a, std::uint32_t b);
bool is_congruence(const Semimodule& m, const Congruence& c);

// All congruences: join-closure of the principal ones.
std::vector<Congruence> all_congruences(const Semimodule& m, std::size_t bound = 12);

// Throws ArgError if c is not a congruence on m.
Semimodule quotient(const Semimodule& m, const Congruence& c);

// Carrier restricted to an action- and sum-closed subset containing zero.
Semimodule subsemimodule(const Semimodule& m, const std::vector<std::uint32_t>& subset);

// Extremality predicates; all false on the zero semimodule.
bool is_minimal(const Semimodule& m);
bool is_elementary(const Semimodule& m);
bool is_simple(const Semimodule& m);

// Componentwise structure on the product carrier; requires equal rings.
Semimodule direct_sum(const Semimodule& m, const Semimodule& n);

bool is_hom(const Semimodule& m, const Semimodule& n, const std::vector<std::uint32_t>& map);

// All homomorphisms M -> N over the same ring, by backtracking over the
// images of a generating set.  Throws BoundError if |M| exceeds the bound.
std::vector<Hom> homs(const Semimodule& m, const Semimodule& n, std::size_t bound = 12);

// Fibers of h (a congruence) and the image subset of N.
std::pair<Congruence, std::vector<std::uint32_t>> kernel_image(const Semimodule& m,
                                                               const Semimodule& n,
                                                               const Hom& h);

// Lexicographically least serialization of (add table, action tables) over
// relabelings fixing zero; equal strings iff isomorphic over the same ring.
std::string canonical_form(const Semimodule& m, std::size_t bound = 12);

// Throws ArgError when the rings differ.
bool are_isomorphic(const Semimodule& m, const Semimodule& n, std::size_t bound = 12);

}  // namespace semimod

#endif
