#ifndef SEMIMOD_CLASSIFY_HPP_
#define SEMIMOD_CLASSIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "semimod/monoid.hpp"
#include "semimod/semimodule.hpp"
#include "semimod/semiring.hpp"

namespace semimod {

enum class MonoidClass { all_commutative, semilattice };

struct EnumConfig {
  std::size_t max_carrier_size = 4;
  MonoidClass monoid_class = MonoidClass::all_commutative;
  bool require_proper = false;
};

// Commutative monoids of exactly n elements up to isomorphism, by
// backtracking over Cayley tables with isomorph rejection.  Bounds: n <= 6
// for all_commutative, n <= 7 for semilattice.
std::vector<FinMonoid> enumerate_monoids(std::size_t n, MonoidClass cls);

// Abelian groups of order 2..max_order as monoids, via the direct-product
// classification (independent of Cayley-table search).
std::vector<FinMonoid> abelian_groups_upto(std::size_t max_order);

struct CatalogEntry {
  std::vector<std::string> names;  // aliases when distinct fixtures coincide
  Semimodule module;
  std::string canon;
  bool minimal = false, elementary = false, simple = false, proper = false;

  std::string joined_name() const;
};

struct IsoClassCatalog {
  std::string name;
  std::vector<CatalogEntry> entries;

  std::vector<std::string> canon_set() const;  // sorted
  const CatalogEntry* find(const std::string& fixture_name) const;
};

// Every semimodule structure over R on carriers of the given class up to
// max_carrier_size, one entry per isomorphism class, flags computed.
// Ascending carrier size, then canonical form.
IsoClassCatalog enumerate_semimodules(const SemiringPtr& r, const EnumConfig& cfg);

struct ExtremeReport {
  IsoClassCatalog minimal, elementary, simple;
  std::vector<std::string> notes;
};

// Classification driver.  The minimal-proper search runs over semilattice
// carriers (every element of a minimal proper semimodule over a finitely
// generated semiring is idempotent, and idempotency is re-verified on every
// returned entry); the elementary search runs over all commutative monoids.
// Without require_proper both searches use all commutative monoids.
ExtremeReport classify_extreme(const SemiringPtr& r, std::size_t max_size, bool require_proper);

struct QuotientReport {
  IsoClassCatalog all;         // includes M itself and the zero quotient
  IsoClassCatalog nontrivial;  // congruence neither equality nor full
};

QuotientReport quotients_up_to_iso(const Semimodule& m, std::size_t bound = 12);

// Named fixture collections: s3-kl (M1..M9), dihedral:<n>, klhat-s2,
// z-nonneg, z-s2, boolean, boolean-group:<g>, nat:<k>, nat-group:<k>:<g>,
// s3-modules.  Throws ArgError on unknown names.
IsoClassCatalog builtin_catalog(const std::string& name);

// Single named semimodules: z-cyclic:<n>, s2-trivial:<p>, s2-tau:<p>,
// s3-trivial:<p>, s3-sign:<p>, s3-twodim:<p>, group-trivial-b:<group>,
// klhat-b0.  Throws ArgError on unknown kind or invalid parameter.
Semimodule module_fixture(const std::string& kind);

struct SuiteReport {
  std::string suite;
  std::vector<std::string> expected, computed, missing, extra;
  bool pass = false;
};

// Scripted comparisons between computed and expected catalogs, one report
// per sub-check.  Suite names: boolean, boolean-group:<g>, nat:<k>,
// nat-group:<k>:<g>, z-nonneg, z-s2, klhat-s2, s3-kl, dihedral:<n>.
std::vector<SuiteReport> verify_suite(const std::string& name);

// Canonical forms of the nonzero quotients of reduced cell semimodules
// over all left cells of R (the cell-theoretic side of the classification
// of minimal proper semimodules).  With plain_cells, uses the unreduced
// cell semimodules instead.
std::vector<std::string> cell_quotient_canon_set(const SemiringPtr& r, bool plain_cells);

bool is_prime(std::uint64_t n);

}  // namespace semimod

#endif
