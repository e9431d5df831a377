#include <algorithm>
#include <cstdlib>
#include <set>

#include "semimod/cells.hpp"
#include "semimod/classify.hpp"
#include "semimod/presets.hpp"

namespace semimod {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

SuiteReport make_report(std::string suite, std::vector<std::string> expected,
                        std::vector<std::string> computed) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.expected = sorted_unique(std::move(expected));
  r.computed = sorted_unique(std::move(computed));
  std::set_difference(r.expected.begin(), r.expected.end(), r.computed.begin(), r.computed.end(),
                      std::back_inserter(r.missing));
  std::set_difference(r.computed.begin(), r.computed.end(), r.expected.begin(), r.expected.end(),
                      std::back_inserter(r.extra));
  r.pass = r.missing.empty() && r.extra.empty();
  return r;
}

std::vector<std::string> catalog_canons_by_names(const IsoClassCatalog& cat,
                                                 const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    const CatalogEntry* e = cat.find(n);
    if (!e) throw Error("catalog " + cat.name + " has no fixture named " + n);
    out.push_back(e->canon);
  }
  return out;
}

// The three extremality catalogs compared against one expected set.
void push_extreme_reports(std::vector<SuiteReport>& out, const std::string& suite,
                          const ExtremeReport& rep, const std::vector<std::string>& expected) {
  out.push_back(make_report(suite + "/minimal", expected, rep.minimal.canon_set()));
  out.push_back(make_report(suite + "/elementary", expected, rep.elementary.canon_set()));
  out.push_back(make_report(suite + "/simple", expected, rep.simple.canon_set()));
}

std::vector<SuiteReport> boolean_family_suite(const std::string& name, SemiringPtr ring) {
  const IsoClassCatalog cat = builtin_catalog(name);
  std::vector<std::string> expected = cat.canon_set();
  ExtremeReport rep = classify_extreme(ring, 4, false);
  std::vector<SuiteReport> out;
  push_extreme_reports(out, name, rep, expected);
  return out;
}

// Semimodules on abelian-group carriers over a 2-generator based semiring
// whose second generator satisfies the given pointwise constraint.
std::vector<Semimodule> group_carrier_modules(const SemiringPtr& ring, std::size_t max_order,
                                              bool theta_square_is_double) {
  std::vector<Semimodule> out;
  for (const auto& g : abelian_groups_upto(max_order)) {
    for (const auto& f : monoid_endomorphisms(g)) {
      bool ok = true;
      for (std::uint32_t x = 0; x < g.size && ok; ++x)
        ok = theta_square_is_double ? f[f[x]] == g.plus(f[x], f[x]) : f[f[x]] == x;
      if (!ok) continue;
      Semimodule m;
      m.ring = ring;
      m.carrier = g;
      std::vector<std::uint32_t> id(g.size);
      for (std::uint32_t i = 0; i < g.size; ++i) id[i] = i;
      m.actions = {id, f};
      out.push_back(std::move(m));
    }
  }
  return out;
}

void push_module_reports(std::vector<SuiteReport>& out, const std::string& suite,
                         const std::vector<Semimodule>& modules,
                         const std::vector<std::string>& expected) {
  std::vector<std::string> minimal, elementary, simple;
  for (const auto& m : modules) {
    const bool mi = is_minimal(m), el = is_elementary(m);
    if (!mi && !el) continue;
    std::string canon = canonical_form(m);
    if (mi) minimal.push_back(canon);
    if (el) elementary.push_back(canon);
    if (mi && el) simple.push_back(canon);
  }
  out.push_back(make_report(suite + "/module-minimal", expected, minimal));
  out.push_back(make_report(suite + "/module-elementary", expected, elementary));
  out.push_back(make_report(suite + "/module-simple", expected, simple));
}

std::vector<SuiteReport> z_nonneg_suite() {
  auto ring = make_semiring(znn_semiring());
  const IsoClassCatalog cat = builtin_catalog("z-nonneg");
  std::vector<SuiteReport> out;

  // Cyclic groups Z_n are extreme exactly for prime n (checked for n up to
  // 12 without canonical forms on the non-extreme ones).
  std::vector<std::string> expected_primes, cyclic_min, cyclic_elem, cyclic_simple;
  for (std::uint32_t n = 2; n <= 12; ++n) {
    Semimodule zn = module_fixture("z-cyclic:" + std::to_string(n));
    if (is_prime(n)) expected_primes.push_back(canonical_form(zn));
    const bool mi = is_minimal(zn), el = is_elementary(zn);
    if (mi) cyclic_min.push_back(canonical_form(zn));
    if (el) cyclic_elem.push_back(canonical_form(zn));
    if (mi && el) cyclic_simple.push_back(canonical_form(zn));
  }
  out.push_back(make_report("z-nonneg/cyclic-minimal", expected_primes, cyclic_min));
  out.push_back(make_report("z-nonneg/cyclic-elementary", expected_primes, cyclic_elem));
  out.push_back(make_report("z-nonneg/cyclic-simple", expected_primes, cyclic_simple));

  // Full bounded slice: commutative monoids up to 5 elements plus abelian
  // groups up to order 12.
  std::vector<std::string> expected = catalog_canons_by_names(
      cat, {"B", "Z2", "Z3", "Z5", "Z7", "Z11"});
  ExtremeReport rep = classify_extreme(ring, 5, false);
  std::vector<std::string> minimal = rep.minimal.canon_set(),
                           elementary = rep.elementary.canon_set(),
                           simple = rep.simple.canon_set();
  for (const auto& g : abelian_groups_upto(12)) {
    Semimodule m;
    m.ring = ring;
    m.carrier = g;
    std::vector<std::uint32_t> id(g.size);
    for (std::uint32_t i = 0; i < g.size; ++i) id[i] = i;
    m.actions = {id};
    const bool mi = is_minimal(m), el = is_elementary(m);
    if (!mi && !el) continue;
    std::string canon = canonical_form(m);
    if (mi) minimal.push_back(canon);
    if (el) elementary.push_back(canon);
    if (mi && el) simple.push_back(canon);
  }
  out.push_back(make_report("z-nonneg/minimal", expected, minimal));
  out.push_back(make_report("z-nonneg/elementary", expected, elementary));
  out.push_back(make_report("z-nonneg/simple", expected, simple));
  return out;
}

std::vector<SuiteReport> z_s2_suite() {
  auto ring = make_semiring(group_semiring(symmetric2()));
  const IsoClassCatalog cat = builtin_catalog("z-s2");
  std::vector<SuiteReport> out;

  ExtremeReport rep = classify_extreme(ring, 4, true);
  push_extreme_reports(out, "z-s2/proper", rep, catalog_canons_by_names(cat, {"B-trivial"}));

  std::vector<std::string> expected_modules = catalog_canons_by_names(
      cat, {"Z2-trivial", "Z3-trivial", "Z3-tau", "Z5-trivial", "Z5-tau", "Z7-trivial", "Z7-tau"});
  push_module_reports(out, "z-s2", group_carrier_modules(ring, 7, false), expected_modules);
  return out;
}

std::vector<SuiteReport> klhat_suite() {
  auto ring = make_semiring(kl_hat_s2());
  const IsoClassCatalog cat = builtin_catalog("klhat-s2");
  std::vector<SuiteReport> out;

  ExtremeReport rep = classify_extreme(ring, 4, true);
  push_extreme_reports(out, "klhat-s2/proper", rep,
                       catalog_canons_by_names(cat, {"B0", "B-trivial"}));

  std::vector<std::string> expected_modules = catalog_canons_by_names(
      cat, {"Z2-trivial", "Z2-tau", "Z3-trivial", "Z3-tau", "Z5-trivial", "Z5-tau", "Z7-trivial",
            "Z7-tau"});
  push_module_reports(out, "klhat-s2", group_carrier_modules(ring, 7, true), expected_modules);
  return out;
}

std::vector<SuiteReport> s3_kl_suite() {
  auto ring = make_semiring(kl_dihedral(3));
  const IsoClassCatalog cat = builtin_catalog("s3-kl");
  ExtremeReport rep = classify_extreme(ring, 4, true);
  std::vector<SuiteReport> out;
  out.push_back(make_report("s3-kl/minimal",
                            catalog_canons_by_names(cat, {"M1", "M2", "M3", "M4", "M5", "M6"}),
                            rep.minimal.canon_set()));
  out.push_back(make_report("s3-kl/elementary",
                            catalog_canons_by_names(cat, {"M1", "M2", "M3", "M7", "M8", "M9"}),
                            rep.elementary.canon_set()));
  out.push_back(make_report("s3-kl/simple", catalog_canons_by_names(cat, {"M1", "M2", "M3"}),
                            rep.simple.canon_set()));
  out.push_back(make_report("s3-kl/cells-vs-enumeration", cell_quotient_canon_set(ring, false),
                            rep.minimal.canon_set()));
  out.push_back(make_report("s3-kl/plain-cells-vs-enumeration", cell_quotient_canon_set(ring, true),
                            rep.minimal.canon_set()));
  return out;
}

std::vector<SuiteReport> dihedral_suite(std::uint32_t n) {
  auto ring = make_semiring(kl_dihedral(n));
  const std::string name = "dihedral:" + std::to_string(n);
  const IsoClassCatalog cat = builtin_catalog(name);
  ExtremeReport rep = classify_extreme(ring, 4, true);
  std::vector<SuiteReport> out;
  out.push_back(make_report(name + "/minimal",
                            catalog_canons_by_names(cat, {"C_e", "C_w0", "C~Ls", "N1", "N2", "N3"}),
                            rep.minimal.canon_set()));
  out.push_back(make_report(name + "/elementary",
                            catalog_canons_by_names(cat, {"C_e", "C_w0", "K", "K1", "K2", "K3"}),
                            rep.elementary.canon_set()));
  out.push_back(make_report(name + "/simple",
                            catalog_canons_by_names(cat, {"C_e", "C_w0", "N3"}),
                            rep.simple.canon_set()));

  // the reduced cell semimodule of the left cell of s has exactly the three
  // quotients N1, N2, N3 besides itself and zero
  const BasedSemiring& r = ring->based();
  const CellDecomposition d = cell_decomposition(r);
  const auto& left_s = d.left_cells[d.left_cell_of[r.basis_index("s")]];
  QuotientReport q = quotients_up_to_iso(reduced_cell_semimodule(ring, left_s));
  out.push_back(make_report(name + "/reduced-cell-quotients",
                            catalog_canons_by_names(cat, {"N1", "N2", "N3"}),
                            q.nontrivial.canon_set()));

  out.push_back(make_report(name + "/cells-vs-enumeration", cell_quotient_canon_set(ring, false),
                            rep.minimal.canon_set()));
  return out;
}

}  // namespace

std::vector<std::string> cell_quotient_canon_set(const SemiringPtr& r, bool plain_cells) {
  const BasedSemiring& br = r->based();
  const CellDecomposition d = cell_decomposition(br);
  std::set<std::string> out;
  for (const auto& left_cell : d.left_cells) {
    Semimodule c = plain_cells ? cell_semimodule(r, left_cell) : reduced_cell_semimodule(r, left_cell);
    for (const auto& cong : all_congruences(c))
      if (!cong.is_full()) out.insert(canonical_form(quotient(c, cong)));
  }
  return {out.begin(), out.end()};
}

std::vector<SuiteReport> verify_suite(const std::string& name) {
  if (name == "boolean")
    return boolean_family_suite(name, make_semiring(boolean_semiring()));
  if (name == "z-nonneg") return z_nonneg_suite();
  if (name == "z-s2") return z_s2_suite();
  if (name == "klhat-s2") return klhat_suite();
  if (name == "s3-kl") return s3_kl_suite();
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  if (starts("dihedral:")) {
    const long n = std::strtol(name.c_str() + 9, nullptr, 10);
    if (n >= 3 && std::to_string(n) == name.substr(9))
      return dihedral_suite(static_cast<std::uint32_t>(n));
    throw ArgError("bad dihedral suite: " + name);
  }
  if (starts("boolean-group:"))
    return boolean_family_suite(
        name, make_semiring(group_semiring_over(boolean_semiring(), group_preset(name.substr(14)))));
  if (starts("nat-group:")) {
    const std::string rest = name.substr(10);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ArgError("nat-group suite needs nat-group:<k>:<g>");
    const long k = std::strtol(rest.substr(0, colon).c_str(), nullptr, 10);
    if (k < 1) throw ArgError("nat-group suite needs k >= 1");
    return boolean_family_suite(
        name, make_semiring(group_semiring_over(nat_rees(static_cast<std::uint64_t>(k)),
                                                group_preset(rest.substr(colon + 1)))));
  }
  if (starts("nat:")) {
    const long k = std::strtol(name.c_str() + 4, nullptr, 10);
    if (k >= 1 && std::to_string(k) == name.substr(4))
      return boolean_family_suite(name, make_semiring(nat_rees(static_cast<std::uint64_t>(k))));
    throw ArgError("bad nat suite: " + name);
  }
  throw ArgError("unknown suite: " + name);
}

}  // namespace semimod
