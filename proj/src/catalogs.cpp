#include <algorithm>
#include <cstdlib>
#include <map>

#include "semimod/cells.hpp"
#include "semimod/classify.hpp"
#include "semimod/presets.hpp"

namespace semimod {

namespace {

long parse_long(const std::string& s) {
  if (s.empty()) throw ArgError("missing numeric parameter");
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) throw ArgError("bad numeric parameter: " + s);
  return v;
}

std::vector<std::string> default_number_labels(std::uint32_t n) {
  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

Semimodule make_module(SemiringPtr ring, FinMonoid carrier,
                       std::vector<std::vector<std::uint32_t>> actions,
                       std::vector<std::string> labels = {}) {
  Semimodule m;
  m.ring = std::move(ring);
  m.carrier = std::move(carrier);
  m.actions = std::move(actions);
  m.labels = std::move(labels);
  return m;
}

// carrier B x B with indices (a,b) -> 2a+b and labels (a,b)
FinMonoid b2_monoid() { return product_monoid(boolean_monoid(), boolean_monoid()); }

std::vector<std::string> b2_labels() { return {"(0,0)", "(0,1)", "(1,0)", "(1,1)"}; }

std::vector<std::uint32_t> id_map(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<std::uint32_t> const_map(std::uint32_t n, std::uint32_t v) {
  return std::vector<std::uint32_t>(n, v);
}

// multiplication by a modulo p on the cyclic carrier
std::vector<std::uint32_t> scalar_map(std::uint32_t p, std::uint64_t a) {
  std::vector<std::uint32_t> v(p);
  for (std::uint32_t i = 0; i < p; ++i) v[i] = static_cast<std::uint32_t>((i * a) % p);
  return v;
}

}  // namespace

Semimodule module_fixture(const std::string& kind) {
  const auto colon = kind.find(':');
  const std::string head = kind.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : kind.substr(colon + 1);

  if (head == "z-cyclic") {
    const long n = parse_long(arg);
    if (n < 1) throw ArgError("z-cyclic needs n >= 1");
    auto ring = make_semiring(znn_semiring());
    FinMonoid c = cyclic_monoid(static_cast<std::uint32_t>(n));
    return make_module(ring, c, {id_map(c.size)}, default_number_labels(c.size));
  }
  if (head == "s2-trivial" || head == "s2-tau") {
    const long p = parse_long(arg);
    if (!is_prime(static_cast<std::uint64_t>(std::max(0L, p))))
      throw ArgError(head + " needs a prime p");
    if (head == "s2-tau" && p == 2) throw ArgError("s2-tau needs p > 2");
    auto ring = make_semiring(group_semiring(symmetric2()));
    FinMonoid c = cyclic_monoid(static_cast<std::uint32_t>(p));
    std::vector<std::uint32_t> tau =
        head == "s2-tau" ? scalar_map(c.size, static_cast<std::uint64_t>(p - 1)) : id_map(c.size);
    return make_module(ring, c, {id_map(c.size), std::move(tau)}, default_number_labels(c.size));
  }
  if (head == "s3-trivial" || head == "s3-sign" || head == "s3-twodim") {
    const long p = parse_long(arg);
    if (!is_prime(static_cast<std::uint64_t>(std::max(0L, p))))
      throw ArgError(head + " needs a prime p");
    const DihedralGroup d = dihedral_group(3);
    auto ring = make_semiring(group_semiring(d.table));
    const std::uint32_t up = static_cast<std::uint32_t>(p);
    if (head == "s3-twodim") {
      FinMonoid c = product_monoid(cyclic_monoid(up), cyclic_monoid(up));
      std::vector<std::uint32_t> act_s(c.size), act_t(c.size);
      for (std::uint32_t a = 0; a < up; ++a)
        for (std::uint32_t b = 0; b < up; ++b) {
          act_s[a * up + b] = b * up + a;  // swap coordinates
          act_t[a * up + b] = ((a + (up - 1) * b) % up) * up + ((up - 1) * b) % up;
        }
      std::vector<std::string> labels(c.size);
      for (std::uint32_t a = 0; a < up; ++a)
        for (std::uint32_t b = 0; b < up; ++b)
          labels[a * up + b] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      return make_module(ring, c, dihedral_actions_from_generators(d, act_s, act_t), std::move(labels));
    }
    FinMonoid c = cyclic_monoid(up);
    std::vector<std::uint32_t> gen =
        head == "s3-sign" ? scalar_map(up, static_cast<std::uint64_t>(p - 1)) : id_map(up);
    return make_module(ring, c, dihedral_actions_from_generators(d, gen, gen), default_number_labels(up));
  }
  if (head == "group-trivial-b") {
    auto ring = make_semiring(group_semiring(group_preset(arg)));
    FinMonoid c = boolean_monoid();
    std::vector<std::vector<std::uint32_t>> acts(ring->generator_count(), id_map(2));
    return make_module(ring, c, std::move(acts), {"0", "1"});
  }
  if (head == "klhat-b0") {
    auto ring = make_semiring(kl_hat_s2());
    return make_module(ring, boolean_monoid(), {id_map(2), const_map(2, 0)}, {"0", "1"});
  }
  throw ArgError("unknown module fixture kind: " + kind);
}

namespace {

struct CatalogBuilder {
  IsoClassCatalog cat;
  std::map<std::string, std::size_t> by_canon;

  void add(const std::string& name, Semimodule m) {
    auto report = validate_semimodule(m);
    if (!report.empty())
      throw Error("catalog fixture " + name + " failed validation: " + report.front());
    std::string canon = canonical_form(m);
    auto it = by_canon.find(canon);
    if (it != by_canon.end()) {
      cat.entries[it->second].names.push_back(name);
      return;
    }
    CatalogEntry e;
    e.names = {name};
    e.module = std::move(m);
    e.canon = canon;
    e.minimal = is_minimal(e.module);
    e.elementary = is_elementary(e.module);
    e.simple = e.minimal && e.elementary;
    e.proper = is_proper(e.module);
    by_canon.emplace(std::move(canon), cat.entries.size());
    cat.entries.push_back(std::move(e));
  }
};

IsoClassCatalog s3_kl_catalog() {
  auto ring = make_semiring(kl_dihedral(3));
  const BasedSemiring& r = ring->based();
  const std::uint32_t e = r.basis_index("e"), s = r.basis_index("s"), t = r.basis_index("t"),
                      st = r.basis_index("st"), ts = r.basis_index("ts"),
                      w0 = r.basis_index("w0");

  CatalogBuilder b;
  b.cat.name = "s3-kl";

  auto on_b = [&](std::uint32_t zero_at_w0, bool others_zero) {
    std::vector<std::vector<std::uint32_t>> acts(6, id_map(2));
    if (others_zero)
      for (std::uint32_t g = 0; g < 6; ++g)
        if (g != e) acts[g] = const_map(2, 0);
    if (zero_at_w0) acts[w0] = const_map(2, 0);
    return acts;
  };
  b.add("M1", make_module(ring, boolean_monoid(), on_b(false, false), {"0", "1"}));
  b.add("M2", make_module(ring, boolean_monoid(), on_b(false, true), {"0", "1"}));
  b.add("M3", make_module(ring, boolean_monoid(), on_b(true, false), {"0", "1"}));

  // M4 on B+B: s and st send every non-zero element to (1,0), t and ts to
  // (0,1), w0 to zero.
  std::vector<std::vector<std::uint32_t>> m4(6);
  m4[e] = id_map(4);
  m4[w0] = const_map(4, 0);
  m4[s] = m4[st] = {0, 2, 2, 2};
  m4[t] = m4[ts] = {0, 1, 1, 1};
  Semimodule M4 = make_module(ring, b2_monoid(), std::move(m4), b2_labels());
  b.add("M4", M4);
  b.add("M5", quotient(M4, principal_congruence(M4, 2, 3)));
  b.add("M6", quotient(M4, principal_congruence(M4, 1, 3)));

  std::vector<std::vector<std::uint32_t>> m7(6);
  m7[e] = id_map(4);
  m7[w0] = const_map(4, 0);
  m7[s] = m7[ts] = {0, 0, 3, 3};
  m7[t] = m7[st] = {0, 3, 0, 3};
  Semimodule M7 = make_module(ring, b2_monoid(), std::move(m7), b2_labels());
  b.add("M7", M7);
  b.add("M8", subsemimodule(M7, {0, 2, 3}));
  b.add("M9", subsemimodule(M7, {0, 1, 3}));
  return b.cat;
}

IsoClassCatalog dihedral_catalog(std::uint32_t n) {
  auto ring = make_semiring(kl_dihedral(n));
  const BasedSemiring& r = ring->based();
  const CellDecomposition d = cell_decomposition(r);
  const std::uint32_t e = r.basis_index("e"), s = r.basis_index("s"), w0 = r.basis_index("w0");
  const auto& left_s = d.left_cells[d.left_cell_of[s]];

  CatalogBuilder b;
  b.cat.name = "dihedral:" + std::to_string(n);
  b.add("C_e", cell_semimodule(ring, {e}));
  b.add("C_w0", cell_semimodule(ring, {w0}));
  if (left_s.size() <= 3) b.add("C_Ls", cell_semimodule(ring, left_s));
  Semimodule reduced = reduced_cell_semimodule(ring, left_s);
  b.add("C~Ls", reduced);
  // x = 1, y = 2, x+y = 3 in the boolean carrier of the reduced module
  b.add("N1", quotient(reduced, principal_congruence(reduced, 3, 1)));
  b.add("N2", quotient(reduced, principal_congruence(reduced, 3, 2)));
  b.add("N3", quotient(reduced, congruence_closure(reduced, {{3, 1}, {3, 2}})));

  // K on subsets of {x, y}: members of the left cell of s annihilate y and
  // send x and x+y to x+y; members of the left cell of t mirror that; w0
  // acts as zero.
  std::vector<std::vector<std::uint32_t>> k_acts(r.basis_size());
  for (std::uint32_t g = 0; g < r.basis_size(); ++g) {
    if (g == e) {
      k_acts[g] = id_map(4);
    } else if (g == w0) {
      k_acts[g] = const_map(4, 0);
    } else if (d.left_cell_of[g] == d.left_cell_of[s]) {
      k_acts[g] = {0, 3, 0, 3};
    } else {
      k_acts[g] = {0, 0, 3, 3};
    }
  }
  Semimodule K = make_module(ring, b2_monoid(), std::move(k_acts), {"0", "x", "y", "x+y"});
  b.add("K", K);
  b.add("K1", subsemimodule(K, {0, 1, 3}));
  b.add("K2", subsemimodule(K, {0, 2, 3}));
  b.add("K3", subsemimodule(K, {0, 3}));
  return b.cat;
}

IsoClassCatalog klhat_catalog() {
  auto ring = make_semiring(kl_hat_s2());
  CatalogBuilder b;
  b.cat.name = "klhat-s2";
  b.add("B0", module_fixture("klhat-b0"));
  b.add("B-trivial", make_module(ring, boolean_monoid(), {id_map(2), id_map(2)}, {"0", "1"}));
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    FinMonoid c = cyclic_monoid(p);
    // restriction of the trivial module: theta acts as doubling
    b.add("Z" + std::to_string(p) + "-trivial",
          make_module(ring, c, {id_map(p), scalar_map(p, 2)}, default_number_labels(p)));
    // restriction of (Z_p, tau_p): theta acts as zero
    b.add("Z" + std::to_string(p) + "-tau",
          make_module(ring, c, {id_map(p), const_map(p, 0)}, default_number_labels(p)));
  }
  return b.cat;
}

IsoClassCatalog z_s2_catalog() {
  CatalogBuilder b;
  b.cat.name = "z-s2";
  b.add("B-trivial", module_fixture("group-trivial-b:s2"));
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    b.add("Z" + std::to_string(p) + "-trivial", module_fixture("s2-trivial:" + std::to_string(p)));
    if (p > 2) b.add("Z" + std::to_string(p) + "-tau", module_fixture("s2-tau:" + std::to_string(p)));
  }
  return b.cat;
}

IsoClassCatalog z_nonneg_catalog() {
  CatalogBuilder b;
  b.cat.name = "z-nonneg";
  auto ring = make_semiring(znn_semiring());
  b.add("B", make_module(ring, boolean_monoid(), {id_map(2)}, {"0", "1"}));
  for (std::uint32_t n = 2; n <= 11; ++n)
    b.add("Z" + std::to_string(n), module_fixture("z-cyclic:" + std::to_string(n)));
  return b.cat;
}

IsoClassCatalog s3_modules_catalog() {
  CatalogBuilder b;
  b.cat.name = "s3-modules";
  b.add("Z2-trivial", module_fixture("s3-trivial:2"));
  b.add("Z3-trivial", module_fixture("s3-trivial:3"));
  b.add("Z3-sign", module_fixture("s3-sign:3"));
  b.add("twodim-2", module_fixture("s3-twodim:2"));
  b.add("twodim-3", module_fixture("s3-twodim:3"));  // not simple at p = 3
  return b.cat;
}

// The one extreme class of the Boolean-family semirings: the carrier B with
// every non-zero semiring element acting as the identity.
IsoClassCatalog boolean_family_catalog(const std::string& name, FiniteSemiring ring_tables,
                                       const std::string& entry_name) {
  auto ring = make_semiring(std::move(ring_tables));
  const FiniteSemiring& r = ring->finite();
  std::vector<std::vector<std::uint32_t>> acts(r.size(), id_map(2));
  acts[r.zero()] = const_map(2, 0);
  CatalogBuilder b;
  b.cat.name = name;
  b.add(entry_name, make_module(ring, boolean_monoid(), std::move(acts), {"0", "1"}));
  return b.cat;
}

}  // namespace

IsoClassCatalog builtin_catalog(const std::string& name) {
  if (name == "s3-kl") return s3_kl_catalog();
  if (name == "klhat-s2") return klhat_catalog();
  if (name == "z-s2") return z_s2_catalog();
  if (name == "z-nonneg") return z_nonneg_catalog();
  if (name == "s3-modules") return s3_modules_catalog();
  if (name == "boolean") return boolean_family_catalog("boolean", boolean_semiring(), "B-regular");
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  if (starts("dihedral:")) {
    const long n = parse_long(name.substr(9));
    if (n < 3) throw ArgError("dihedral catalog needs n >= 3");
    return dihedral_catalog(static_cast<std::uint32_t>(n));
  }
  if (starts("boolean-group:")) {
    return boolean_family_catalog(name, group_semiring_over(boolean_semiring(),
                                                            group_preset(name.substr(14))),
                                  "B-trivial");
  }
  if (starts("nat-group:")) {
    const std::string rest = name.substr(10);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw ArgError("nat-group catalog needs nat-group:<k>:<g>");
    const long k = parse_long(rest.substr(0, colon));
    if (k < 1) throw ArgError("nat-group catalog needs k >= 1");
    return boolean_family_catalog(name,
                                  group_semiring_over(nat_rees(static_cast<std::uint64_t>(k)),
                                                      group_preset(rest.substr(colon + 1))),
                                  "B-trivial");
  }
  if (starts("nat:")) {
    const long k = parse_long(name.substr(4));
    if (k < 1) throw ArgError("nat catalog needs k >= 1");
    return boolean_family_catalog(name, nat_rees(static_cast<std::uint64_t>(k)), "B");
  }
  throw ArgError("unknown catalog: " + name);
}

}  // namespace semimod
