#ifndef SEMIMOD_PRESETS_HPP_
#define SEMIMOD_PRESETS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semimod/semiring.hpp"

namespace semimod {

struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> cayley;
  std::uint32_t identity = 0;

  std::size_t size() const { return names.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return cayley[a][b]; }
  // Associativity, identity, inverses; one line per violation.
  std::vector<std::string> validate() const;
};

GroupTable symmetric2();
GroupTable symmetric3();
GroupTable cyclic_group(std::uint32_t n);

// Dihedral group of symmetries of the regular n-gon, n >= 3, as a Coxeter
// group on s, t.  Elements are listed by Coxeter length, the s-initial word
// before the t-initial word: e, s, t, st, ts, sts, tst, ..., w0.
struct DihedralGroup {
  std::uint32_t n = 0;
  GroupTable table;
  std::vector<std::uint32_t> length;
  std::vector<std::uint8_t> starts_with_s, starts_with_t;  // w0 starts with both
  std::vector<std::uint8_t> ends_with_s, ends_with_t;
  std::uint32_t e = 0, s = 1, t = 2, w0 = 0;

  std::size_t size() const { return table.size(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table.mul(a, b); }
  int index_of(const std::string& name) const;
};

DihedralGroup dihedral_group(std::uint32_t n);

// The 2-element Boolean semiring with 1 + 1 = 1.
FiniteSemiring boolean_semiring();

// Rees quotient of the non-negative integers by the classes
// {0}, {1}, ..., {k-1}, I = {m : m >= k}.  Requires k >= 1.
FiniteSemiring nat_rees(std::uint64_t k);

// Group semiring over the non-negative integers: basis = group elements.
BasedSemiring group_semiring(const GroupTable& g);

// Group semiring with coefficients in a finite semiring (functions G -> C
// with convolution product).  Throws BoundError when |C|^|G| is too large.
FiniteSemiring group_semiring_over(const FiniteSemiring& coeffs, const GroupTable& g);

// The non-negative integers as a based semiring on the single basis
// element 1.
BasedSemiring znn_semiring();

// Subsemiring of the dihedral group ring spanned by the Kazhdan-Lusztig
// basis elements w -> sum of all x with x below w in the Bruhat order.
// Structure constants are computed in the integer group ring and converted
// back through the unitriangular change of basis.  For n = 3 this is the
// type A2 table.
BasedSemiring kl_dihedral(std::uint32_t n);

// Basis {e, theta} with theta^2 = 2 theta: the Kazhdan-Lusztig subsemiring
// of the group semiring of the 2-element group.
BasedSemiring kl_hat_s2();

// The two generator products s*w and t*w in kl_dihedral(n), evaluated
// directly from the dihedral case formulas, with no group-ring arithmetic.
// An independent cross-check of kl_dihedral.
std::pair<NatVec, NatVec> kl_generator_oracle(std::uint32_t n, std::uint32_t w);

// Action tables for every element of a dihedral group from the two
// generator actions, peeling the first letter of each reduced word.
std::vector<std::vector<std::uint32_t>> dihedral_actions_from_generators(
    const DihedralGroup& d, const std::vector<std::uint32_t>& act_s,
    const std::vector<std::uint32_t>& act_t);

// CLI preset names: boolean, nat:<k>, group:s2, group:s3, group:c<n>,
// group:d<2n>, kl-dihedral:<n>, kl-hat-s2.  Throws ArgError otherwise.
SemiringPtr build_preset(const std::string& name);
GroupTable group_preset(const std::string& name);  // s2, s3, c<n>, d<2n>

}  // namespace semimod

#endif
