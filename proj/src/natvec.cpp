#include "semimod/natvec.hpp"

#include <string>

namespace semimod {

Nat checked_add(Nat a, Nat b) {
  Nat r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("coefficient overflow in addition: " + std::to_string(a) + " + " +
                        std::to_string(b));
  return r;
}

Nat checked_mul(Nat a, Nat b) {
  Nat r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("coefficient overflow in multiplication: " + std::to_string(a) + " * " +
                        std::to_string(b));
  return r;
}

NatVec NatVec::zeros(std::size_t k) { return NatVec(std::vector<Nat>(k, 0)); }

NatVec NatVec::basis(std::size_t k, std::size_t i, Nat coeff) {
  NatVec v = zeros(k);
  v[i] = coeff;
  return v;
}

bool NatVec::is_zero() const {
  for (Nat c : coeffs)
    if (c != 0) return false;
  return true;
}

NatVec add(const NatVec& a, const NatVec& b) {
  if (a.size() != b.size()) throw MalformedError("NatVec length mismatch in add");
  NatVec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  return r;
}

NatVec scaled(const NatVec& a, Nat c) {
  NatVec r = a;
  for (auto& x : r.coeffs) x = checked_mul(x, c);
  return r;
}

std::vector<std::uint32_t> support(const NatVec& a) {
  std::vector<std::uint32_t> s;
  for (std::uint32_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s.push_back(i);
  return s;
}

}  // namespace semimod
