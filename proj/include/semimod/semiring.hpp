#ifndef SEMIMOD_SEMIRING_HPP_
#define SEMIMOD_SEMIRING_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semimod/natvec.hpp"

namespace semimod {

// A semiring presented by a finite basis over the non-negative integers:
// every element is a unique combination of basis elements, and
// multiplication is determined by the structure constants of basis
// products.  Immutable after construction.
class BasedSemiring {
 public:
  // Throws MalformedError if dimensions are inconsistent or names repeat.
  BasedSemiring(std::vector<std::string> basis_names, NatVec unit,
                std::vector<std::vector<NatVec>> mult);

  std::size_t basis_size() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const std::string& basis_name(std::size_t i) const { return basis_names_[i]; }
  // -1 if the name is not a basis label.
  int basis_index(std::string_view name) const;

  const NatVec& unit() const { return unit_; }
  const NatVec& mult(std::size_t i, std::size_t j) const { return mult_[i][j]; }

  // Bilinear extension of the structure constants; checked arithmetic.
  NatVec mul(const NatVec& a, const NatVec& b) const;

  // One line per violated axiom instance, with witnesses.  Empty iff the
  // tables define a semiring.  Associativity is checked on basis triples
  // only; bilinearity makes that sufficient.
  std::vector<std::string> validate() const;

  bool operator==(const BasedSemiring&) const = default;

 private:
  std::vector<std::string> basis_names_;
  NatVec unit_;
  std::vector<std::vector<NatVec>> mult_;
};

// A semiring given by full Cayley tables on finitely many elements.
class FiniteSemiring {
 public:
  FiniteSemiring(std::vector<std::string> element_names,
                 std::vector<std::vector<std::uint32_t>> add,
                 std::vector<std::vector<std::uint32_t>> mul,
                 std::uint32_t zero, std::uint32_t one);

  std::size_t size() const { return element_names_.size(); }
  const std::vector<std::string>& element_names() const { return element_names_; }
  const std::string& element_name(std::size_t i) const { return element_names_[i]; }
  int element_index(std::string_view name) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a][b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a][b]; }
  const std::vector<std::vector<std::uint32_t>>& add_table() const { return add_; }
  const std::vector<std::vector<std::uint32_t>>& mul_table() const { return mul_; }
  std::uint32_t zero() const { return zero_; }
  std::uint32_t one() const { return one_; }

  std::vector<std::string> validate() const;

  bool operator==(const FiniteSemiring&) const = default;

 private:
  std::vector<std::string> element_names_;
  std::vector<std::vector<std::uint32_t>> add_, mul_;
  std::uint32_t zero_, one_;
};

// Either presentation, shared read-only by the semimodules over it.
struct Semiring {
  std::variant<BasedSemiring, FiniteSemiring> value;

  Semiring(BasedSemiring b) : value(std::move(b)) {}
  Semiring(FiniteSemiring f) : value(std::move(f)) {}

  bool is_based() const { return std::holds_alternative<BasedSemiring>(value); }
  const BasedSemiring& based() const;
  const FiniteSemiring& finite() const;

  // Number of action generators a semimodule carries: basis size in the
  // based case, element count in the finite case.
  std::size_t generator_count() const;
  const std::string& generator_name(std::size_t i) const;

  std::vector<std::string> validate() const;

  bool operator==(const Semiring&) const = default;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

SemiringPtr make_semiring(BasedSemiring b);
SemiringPtr make_semiring(FiniteSemiring f);

// Finite semiring isomorphism by exhaustive bijection search (zero and one
// pinned).  Throws BoundError above 8 elements.
bool finite_semirings_isomorphic(const FiniteSemiring& a, const FiniteSemiring& b);

}  // namespace semimod

#endif
