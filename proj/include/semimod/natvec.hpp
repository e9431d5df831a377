#ifndef SEMIMOD_NATVEC_HPP_
#define SEMIMOD_NATVEC_HPP_

#include <cstdint>
#include <vector>

#include "semimod/errors.hpp"

namespace semimod {

using Nat = std::uint64_t;

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);

// Vector of non-negative coefficients over a fixed basis.  Length always
// equals the basis size of the owning semiring.
struct NatVec {
  std::vector<Nat> coeffs;

  NatVec() = default;
  explicit NatVec(std::vector<Nat> c) : coeffs(std::move(c)) {}

  static NatVec zeros(std::size_t k);
  // The basis vector e_i of length k.
  static NatVec basis(std::size_t k, std::size_t i, Nat coeff = 1);

  std::size_t size() const { return coeffs.size(); }
  Nat operator[](std::size_t i) const { return coeffs[i]; }
  Nat& operator[](std::size_t i) { return coeffs[i]; }
  bool is_zero() const;

  bool operator==(const NatVec&) const = default;
};

// Coordinatewise sum with checked arithmetic.
NatVec add(const NatVec& a, const NatVec& b);

// c * a with checked arithmetic.
NatVec scaled(const NatVec& a, Nat c);

// Indices with non-zero coefficient, ascending.
std::vector<std::uint32_t> support(const NatVec& a);

}  // namespace semimod

#endif
