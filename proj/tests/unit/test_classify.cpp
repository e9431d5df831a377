#include <doctest.h>

#include <algorithm>
#include <set>

#include "semimod/classify.hpp"
#include "semimod/presets.hpp"

using namespace semimod;

namespace {

// Independent oracle for small commutative monoids: a flat scan over all
// symmetric tables with the identity row forced, a full associativity check
// on each complete table, and deduplication by direct permutation search
// (no canonical forms involved).
using Table = std::vector<std::vector<std::uint32_t>>;

bool oracle_associative(const Table& t, std::uint32_t n) {
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

bool oracle_isomorphic(const Table& a, const Table& b, std::uint32_t n) {
  std::vector<std::uint32_t> perm;
  for (std::uint32_t i = 1; i < n; ++i) perm.push_back(i);
  do {
    std::vector<std::uint32_t> p(n);
    p[0] = 0;
    for (std::uint32_t i = 1; i < n; ++i) p[i] = perm[i - 1];
    bool ok = true;
    for (std::uint32_t i = 0; i < n && ok; ++i)
      for (std::uint32_t j = 0; j < n && ok; ++j) ok = p[a[i][j]] == b[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Table> oracle_monoids(std::uint32_t n, bool idempotent) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j)
      if (!(idempotent && i == j)) cells.emplace_back(i, j);
  std::vector<Table> classes;
  std::vector<std::uint32_t> choice(cells.size(), 0);
  while (true) {
    Table t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t x = 0; x < n; ++x) t[0][x] = t[x][0] = x;
    if (idempotent)
      for (std::uint32_t x = 0; x < n; ++x) t[x][x] = x;
    for (std::size_t c = 0; c < cells.size(); ++c)
      t[cells[c].first][cells[c].second] = t[cells[c].second][cells[c].first] = choice[c];
    if (oracle_associative(t, n)) {
      bool fresh = true;
      for (const auto& cls : classes)
        if (oracle_isomorphic(t, cls, n)) {
          fresh = false;
          break;
        }
      if (fresh) classes.push_back(std::move(t));
    }
    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < n) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
    if (cells.empty()) break;
  }
  return classes;
}

}  // namespace

TEST_CASE("monoid enumeration agrees with the flat-scan oracle") {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto oracle = oracle_monoids(n, false);
    const auto fast = enumerate_monoids(n, MonoidClass::all_commutative);
    REQUIRE(fast.size() == oracle.size());
    // every oracle class is hit by exactly one enumerated monoid
    for (const auto& cls : oracle) {
      int hits = 0;
      for (const auto& m : fast) hits += oracle_isomorphic(cls, m.add, n);
      CHECK(hits == 1);
    }
  }
  for (std::uint32_t n = 1; n <= 5; ++n) {
    const auto oracle = oracle_monoids(n, true);
    CHECK(enumerate_monoids(n, MonoidClass::semilattice).size() == oracle.size());
  }
}

TEST_CASE("monoid enumeration pinned counts") {
  // counts up to 5 elements are re-derived by the flat-scan oracle above;
  // the 6-element semilattice count was checked with the same oracle
  // offline, and the 7-element one is a regression pin (it equals the
  // number of finite lattices on 7 points)
  const std::size_t commutative[] = {1, 2, 5, 19, 78};
  for (std::uint32_t n = 1; n <= 5; ++n)
    CHECK(enumerate_monoids(n, MonoidClass::all_commutative).size() == commutative[n - 1]);
  const std::size_t semilattices[] = {1, 1, 1, 2, 5, 15, 53};
  for (std::uint32_t n = 1; n <= 7; ++n)
    CHECK(enumerate_monoids(n, MonoidClass::semilattice).size() == semilattices[n - 1]);
  CHECK_THROWS_AS(enumerate_monoids(7, MonoidClass::all_commutative), BoundError);
  CHECK_THROWS_AS(enumerate_monoids(8, MonoidClass::semilattice), BoundError);
}

TEST_CASE("the two monoids with two elements") {
  const auto ms = enumerate_monoids(2, MonoidClass::all_commutative);
  REQUIRE(ms.size() == 2);
  // one is the 2-element group, one the 2-element semilattice
  int groups = 0, semilattices = 0;
  for (const auto& m : ms) {
    groups += m.add[1][1] == 0;
    semilattices += m.add[1][1] == 1;
  }
  CHECK(groups == 1);
  CHECK(semilattices == 1);
}

TEST_CASE("every enumerated monoid validates and is distinct") {
  for (auto cls : {MonoidClass::all_commutative, MonoidClass::semilattice})
    for (std::uint32_t n = 1; n <= 5; ++n) {
      std::set<std::string> canons;
      for (const auto& m : enumerate_monoids(n, cls)) {
        CHECK(m.validate().empty());
        canons.insert(monoid_canonical_form(m));
        if (cls == MonoidClass::semilattice) CHECK(m.is_semilattice());
      }
      CHECK(canons.size() == enumerate_monoids(n, cls).size());
    }
}

TEST_CASE("abelian groups by direct products") {
  const auto groups = abelian_groups_upto(12);
  CHECK(groups.size() == 16);  // orders 2..12: 1,1,2,1,1,1,3,2,1,1,2
  for (const auto& g : groups) {
    CHECK(g.validate().empty());
    for (std::uint32_t x = 0; x < g.size; ++x) {
      bool invertible = false;
      for (std::uint32_t y = 0; y < g.size; ++y) invertible |= g.plus(x, y) == g.zero;
      CHECK(invertible);
    }
  }
  std::size_t order8 = 0;
  for (const auto& g : groups) order8 += g.size == 8;
  CHECK(order8 == 3);
}

TEST_CASE("semimodule enumeration over the boolean semiring") {
  auto ring = make_semiring(boolean_semiring());
  EnumConfig cfg;
  cfg.max_carrier_size = 4;
  cfg.require_proper = true;
  const IsoClassCatalog cat = enumerate_semimodules(ring, cfg);
  const IsoClassCatalog expected = builtin_catalog("boolean");
  bool has_regular = false;
  for (const auto& e : cat.entries) {
    has_regular |= e.canon == expected.entries[0].canon;
    // boolean semimodules are exactly the semilattices
    CHECK(e.module.carrier.is_semilattice());
    CHECK(validate_semimodule(e.module).empty());
  }
  CHECK(has_regular);
}

TEST_CASE("size-one enumeration yields only the zero semimodule") {
  auto ring = make_semiring(kl_dihedral(3));
  EnumConfig cfg;
  cfg.max_carrier_size = 1;
  const IsoClassCatalog cat = enumerate_semimodules(ring, cfg);
  REQUIRE(cat.entries.size() == 1);
  CHECK(cat.entries[0].module.carrier.size == 1);
  CHECK(!cat.entries[0].minimal);
  CHECK(!cat.entries[0].elementary);
  CHECK(!cat.entries[0].simple);
}

TEST_CASE("semilattice restriction agrees with the unrestricted minimal search") {
  auto ring = make_semiring(kl_dihedral(3));
  ExtremeReport via_default = classify_extreme(ring, 4, true);
  EnumConfig all{4, MonoidClass::all_commutative, true};
  IsoClassCatalog cat = enumerate_semimodules(ring, all);
  std::vector<std::string> minimal_all;
  for (const auto& e : cat.entries)
    if (e.minimal) minimal_all.push_back(e.canon);
  std::sort(minimal_all.begin(), minimal_all.end());
  CHECK(via_default.minimal.canon_set() == minimal_all);
  CHECK(!via_default.notes.empty());
}

TEST_CASE("quotient catalogs") {
  const IsoClassCatalog cat = builtin_catalog("s3-kl");
  QuotientReport m1 = quotients_up_to_iso(cat.find("M1")->module);
  CHECK(m1.nontrivial.entries.empty());
  CHECK(m1.all.entries.size() == 2);  // itself and zero

  QuotientReport m4 = quotients_up_to_iso(cat.find("M4")->module);
  REQUIRE(m4.nontrivial.entries.size() == 3);
  std::set<std::string> canons;
  for (const auto& e : m4.nontrivial.entries) canons.insert(e.canon);
  CHECK(canons.count(cat.find("M5")->canon) == 1);
  CHECK(canons.count(cat.find("M6")->canon) == 1);
  CHECK(canons.count(cat.find("M3")->canon) == 1);
}

TEST_CASE("builtin catalog flags match the classification claims") {
  const IsoClassCatalog s3 = builtin_catalog("s3-kl");
  REQUIRE(s3.entries.size() == 9);
  CHECK(s3.find("M4")->minimal);
  CHECK(!s3.find("M4")->elementary);
  for (const char* n : {"M7", "M8", "M9"}) {
    CHECK(s3.find(n)->elementary);
    CHECK(!s3.find(n)->minimal);
  }
  for (const char* n : {"M1", "M2", "M3"}) CHECK(s3.find(n)->simple);
  for (const auto& e : s3.entries) CHECK(e.proper);

  for (std::uint32_t n : {4u, 5u}) {
    const IsoClassCatalog dn = builtin_catalog("dihedral:" + std::to_string(n));
    CHECK(dn.find("C~Ls")->minimal);
    CHECK(!dn.find("C~Ls")->elementary);
    CHECK(dn.find("N1")->minimal);
    CHECK(dn.find("N2")->minimal);
    CHECK(dn.find("N3")->simple);
    CHECK(dn.find("K")->elementary);
    CHECK(!dn.find("K")->minimal);
    CHECK(dn.find("K1")->elementary);
    CHECK(dn.find("K3") != nullptr);
    CHECK(dn.find("K3") == dn.find("N3"));  // the same isomorphism class
    CHECK(dn.find("K3")->module.carrier.size == 2);
  }

  // in the strongly regular case the reduced and plain cell semimodules
  // coincide, so C_Ls and C~Ls are one catalog entry
  const IsoClassCatalog d3 = builtin_catalog("dihedral:3");
  CHECK(d3.find("C_Ls") == d3.find("C~Ls"));
}

TEST_CASE("module fixtures") {
  CHECK(is_simple(module_fixture("z-cyclic:5")));
  CHECK(!is_simple(module_fixture("z-cyclic:6")));
  CHECK(is_simple(module_fixture("s3-twodim:2")));
  CHECK(!is_simple(module_fixture("s3-twodim:3")));
  CHECK(is_simple(module_fixture("s2-tau:5")));

  Semimodule b0 = module_fixture("klhat-b0");
  CHECK(validate_semimodule(b0).empty());
  CHECK(b0.actions[1] == std::vector<std::uint32_t>{0, 0});  // theta acts as zero

  CHECK_THROWS_AS(module_fixture("nonsense"), ArgError);
  CHECK_THROWS_AS(module_fixture("s2-tau:2"), ArgError);
  CHECK_THROWS_AS(module_fixture("s3-trivial:4"), ArgError);
  CHECK_THROWS_AS(module_fixture("z-cyclic:0"), ArgError);
}

TEST_CASE("finitely generated monoids with forced idempotents") {
  // every nonzero commutative monoid with 0 the only invertible element and
  // M = 2M = 3M contains a non-zero idempotent (checked on carriers <= 5)
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (const auto& m : enumerate_monoids(n, MonoidClass::all_commutative)) {
      bool zero_only_invertible = true;
      for (std::uint32_t x = 0; x < n && zero_only_invertible; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
          if (x != 0 && m.plus(x, y) == 0) zero_only_invertible = false;
      if (!zero_only_invertible) continue;
      bool surjective_scaling = true;
      for (std::uint32_t k : {2u, 3u}) {
        std::set<std::uint32_t> image;
        for (std::uint32_t x = 0; x < n; ++x) image.insert(m.times(k, x));
        if (image.size() != n) surjective_scaling = false;
      }
      if (!surjective_scaling) continue;
      bool has_nonzero_idempotent = false;
      for (std::uint32_t x = 1; x < n; ++x) has_nonzero_idempotent |= m.is_idempotent(x);
      CHECK(has_nonzero_idempotent);
    }
}

TEST_CASE("proper extreme classes over small group semirings are trivial") {
  // over the group semirings of S2, S3 and C3 the only extreme proper
  // class is the two-element carrier with every group element acting as
  // the identity
  for (const char* g : {"s2", "s3", "c3"}) {
    auto ring = make_semiring(group_semiring(group_preset(g)));
    const Semimodule trivial = module_fixture(std::string("group-trivial-b:") + g);
    const std::vector<std::string> expected = {canonical_form(trivial)};
    ExtremeReport rep = classify_extreme(ring, 4, true);
    CHECK(rep.minimal.canon_set() == expected);
    CHECK(rep.elementary.canon_set() == expected);
    CHECK(rep.simple.canon_set() == expected);
  }
}

TEST_CASE("suite reports are identical across repeated runs") {
  for (const char* suite : {"s3-kl", "klhat-s2"}) {
    const auto first = verify_suite(suite);
    const auto second = verify_suite(suite);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].suite == second[i].suite);
      CHECK(first[i].expected == second[i].expected);
      CHECK(first[i].computed == second[i].computed);
      CHECK(first[i].pass == second[i].pass);
    }
  }
}

TEST_CASE("primality helper") {
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(11));
  CHECK(!is_prime(12));
  CHECK(is_prime(97));
}
