#include <doctest.h>

#include <algorithm>
#include <set>

#include "semimod/classify.hpp"
#include "semimod/presets.hpp"
#include "semimod/semimodule.hpp"

// Brute-force cross-checks of the search machinery on small fixtures: maps
// are enumerated exhaustively, partitions via restricted growth strings,
// subsets via bitmasks, and the results compared with the backtracking
// implementations.

using namespace semimod;

namespace {

std::vector<Semimodule> small_fixtures() {
  std::vector<Semimodule> out;
  const IsoClassCatalog s3 = builtin_catalog("s3-kl");
  for (const char* n : {"M2", "M3", "M4", "M5", "M7", "M8"}) out.push_back(s3.find(n)->module);
  const IsoClassCatalog kh = builtin_catalog("klhat-s2");
  out.push_back(kh.find("B0")->module);
  out.push_back(kh.find("Z3-tau")->module);
  out.push_back(module_fixture("z-cyclic:4"));
  return out;
}

// all maps carrier(M) -> carrier(N), filtered by is_hom
std::vector<std::vector<std::uint32_t>> oracle_homs(const Semimodule& m, const Semimodule& n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> map(m.carrier.size, 0);
  while (true) {
    if (is_hom(m, n, map)) out.push_back(map);
    std::size_t i = 0;
    for (; i < map.size(); ++i) {
      if (++map[i] < n.carrier.size) break;
      map[i] = 0;
    }
    if (i == map.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// all partitions of {0..n-1} by restricted growth strings
std::vector<Congruence> all_partitions(std::uint32_t n) {
  std::vector<Congruence> out;
  std::vector<std::uint32_t> rgs(n, 0);
  auto emit = [&] {
    std::uint32_t blocks = 1 + *std::max_element(rgs.begin(), rgs.end());
    Congruence c;
    c.blocks.assign(blocks, {});
    for (std::uint32_t x = 0; x < n; ++x) c.blocks[rgs[x]].push_back(x);
    out.push_back(std::move(c));
  };
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t max_used) -> void {
    if (pos == n) {
      emit();
      return;
    }
    for (std::uint32_t b = 0; b <= max_used + 1 && b < n; ++b) {
      rgs[pos] = b;
      self(self, pos + 1, std::max(max_used, b));
    }
  };
  if (n == 0) return out;
  rgs[0] = 0;
  rec(rec, 1, 0);
  return out;
}

std::set<std::vector<std::uint32_t>> congruence_keys(const std::vector<Congruence>& cs,
                                                     std::uint32_t n) {
  std::set<std::vector<std::uint32_t>> keys;
  for (const auto& c : cs) keys.insert(c.block_of(n));
  return keys;
}

// explicit bijection search for semimodule isomorphism
bool oracle_isomorphic(const Semimodule& a, const Semimodule& b) {
  if (a.carrier.size != b.carrier.size) return false;
  std::vector<std::uint32_t> perm;
  for (std::uint32_t i = 0; i < a.carrier.size; ++i)
    if (i != a.carrier.zero) perm.push_back(i);
  std::sort(perm.begin(), perm.end());
  do {
    std::vector<std::uint32_t> p(a.carrier.size);
    p[a.carrier.zero] = b.carrier.zero;
    std::uint32_t k = 0;
    for (std::uint32_t i = 0; i < a.carrier.size; ++i)
      if (i != b.carrier.zero) p[perm[k++]] = i;
    bool ok = true;
    for (std::uint32_t x = 0; x < a.carrier.size && ok; ++x)
      for (std::uint32_t y = 0; y < a.carrier.size && ok; ++y)
        ok = p[a.carrier.plus(x, y)] == b.carrier.plus(p[x], p[y]);
    for (std::size_t g = 0; g < a.actions.size() && ok; ++g)
      for (std::uint32_t x = 0; x < a.carrier.size && ok; ++x)
        ok = p[a.actions[g][x]] == b.actions[g][p[x]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("hom search agrees with the exhaustive map scan") {
  const auto fixtures = small_fixtures();
  for (const auto& m : fixtures)
    for (const auto& n : fixtures) {
      if (!(*m.ring == *n.ring)) continue;
      std::vector<std::vector<std::uint32_t>> fast;
      for (const auto& h : homs(m, n)) fast.push_back(h.map);
      std::sort(fast.begin(), fast.end());
      CHECK(fast == oracle_homs(m, n));
    }
}

TEST_CASE("congruence enumeration agrees with the partition scan") {
  for (const auto& m : small_fixtures()) {
    std::vector<Congruence> oracle;
    for (const auto& part : all_partitions(m.carrier.size))
      if (is_congruence(m, part)) oracle.push_back(part);
    CHECK(congruence_keys(all_congruences(m), m.carrier.size) ==
          congruence_keys(oracle, m.carrier.size));
  }
}

TEST_CASE("principal congruences are least among those merging the pair") {
  for (const auto& m : small_fixtures()) {
    std::vector<Congruence> congruences;
    for (const auto& part : all_partitions(m.carrier.size))
      if (is_congruence(m, part)) congruences.push_back(part);
    for (std::uint32_t a = 0; a < m.carrier.size; ++a)
      for (std::uint32_t b = a + 1; b < m.carrier.size; ++b) {
        const auto principal = principal_congruence(m, a, b).block_of(m.carrier.size);
        // intersect all congruences whose blocks contain both a and b
        for (std::uint32_t x = 0; x < m.carrier.size; ++x)
          for (std::uint32_t y = x + 1; y < m.carrier.size; ++y) {
            if (principal[x] != principal[y]) continue;
            // the pair (x, y) must be merged in every congruence merging (a, b)
            for (const auto& c : congruences) {
              const auto of = c.block_of(m.carrier.size);
              if (of[a] == of[b]) CHECK(of[x] == of[y]);
            }
          }
        // and the principal congruence is itself one of the congruences
        bool found = false;
        for (const auto& c : congruences) found |= c.block_of(m.carrier.size) == principal;
        CHECK(found);
      }
  }
}

TEST_CASE("subsemimodule enumeration agrees with the subset scan") {
  for (const auto& m : small_fixtures()) {
    std::set<std::vector<std::uint32_t>> oracle;
    const std::uint32_t n = m.carrier.size;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (!(mask & (1u << m.carrier.zero))) continue;
      std::vector<std::uint32_t> subset;
      for (std::uint32_t x = 0; x < n; ++x)
        if (mask & (1u << x)) subset.push_back(x);
      bool closed = true;
      for (auto x : subset) {
        for (auto y : subset)
          closed = closed && (mask & (1u << m.carrier.plus(x, y)));
        for (const auto& act : m.actions) closed = closed && (mask & (1u << act[x]));
      }
      if (closed) oracle.insert(subset);
    }
    const auto fast = all_subsemimodules(m);
    CHECK(oracle == std::set<std::vector<std::uint32_t>>(fast.begin(), fast.end()));
  }
}

TEST_CASE("canonical-form equality matches the bijection search") {
  const auto fixtures = small_fixtures();
  for (const auto& a : fixtures)
    for (const auto& b : fixtures) {
      if (!(*a.ring == *b.ring) || a.carrier.size != b.carrier.size) continue;
      CHECK(are_isomorphic(a, b) == oracle_isomorphic(a, b));
    }
}

TEST_CASE("quotients and direct sums validate by construction") {
  const IsoClassCatalog s3 = builtin_catalog("s3-kl");
  const Semimodule& m4 = s3.find("M4")->module;
  for (const auto& c : all_congruences(m4))
    CHECK(validate_semimodule(quotient(m4, c)).empty());
  CHECK(validate_semimodule(direct_sum(m4, s3.find("M1")->module)).empty());
}
