#include "semimod/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semimod/cells.hpp"
#include "semimod/detail/search.hpp"

namespace semimod {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string CatalogEntry::joined_name() const {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : "=") + n;
  return s;
}

std::vector<std::string> IsoClassCatalog::canon_set() const {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(e.canon);
  std::sort(out.begin(), out.end());
  return out;
}

const CatalogEntry* IsoClassCatalog::find(const std::string& fixture_name) const {
  for (const auto& e : entries)
    for (const auto& n : e.names)
      if (n == fixture_name) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Monoid enumeration: backtracking over commutative Cayley tables with the
// identity row forced, pruning on every associativity triple that is fully
// determined, isomorph rejection by canonical form.

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

struct MonoidSearch {
  std::uint32_t n;
  bool idempotent;
  std::vector<std::vector<std::uint32_t>> t;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  std::map<std::string, FinMonoid> found;

  bool assoc_consistent() const {
    for (std::uint32_t a = 1; a < n; ++a)
      for (std::uint32_t b = a; b < n; ++b) {
        const std::uint32_t ab = t[a][b];
        if (ab == kUnset) continue;
        for (std::uint32_t c = b; c < n; ++c) {
          const std::uint32_t bc = t[b][c];
          if (bc == kUnset) continue;
          const std::uint32_t abc1 = t[ab][c];
          const std::uint32_t abc2 = t[a][bc];
          if (abc1 != kUnset && abc2 != kUnset && abc1 != abc2) return false;
          // commutativity makes (a,b,c) with a<=b<=c sufficient only
          // together with the rotated reading below
          const std::uint32_t ac = t[a][c];
          if (ac != kUnset) {
            const std::uint32_t acb = t[ac][b];
            if (abc2 != kUnset && acb != kUnset && acb != abc2) return false;
            if (abc1 != kUnset && acb != kUnset && acb != abc1) return false;
          }
        }
      }
    return true;
  }

  void emit() {
    FinMonoid m;
    m.size = n;
    m.zero = 0;
    m.add = t;
    const std::string canon = monoid_canonical_form(m);
    found.emplace(canon, std::move(m));
  }

  void run(std::size_t pos) {
    if (pos == cells.size()) {
      emit();
      return;
    }
    auto [i, j] = cells[pos];
    for (std::uint32_t v = 0; v < n; ++v) {
      t[i][j] = t[j][i] = v;
      if (assoc_consistent()) run(pos + 1);
    }
    t[i][j] = t[j][i] = kUnset;
  }
};

}  // namespace

std::vector<FinMonoid> enumerate_monoids(std::size_t n, MonoidClass cls) {
  if (n == 0) throw ArgError("monoid needs at least one element");
  const std::size_t max_n = cls == MonoidClass::semilattice ? 7 : 6;
  if (n > max_n)
    throw BoundError("monoid enumeration bounded at " + std::to_string(max_n) + " elements");
  if (n == 1) return {trivial_monoid()};

  MonoidSearch s;
  s.n = static_cast<std::uint32_t>(n);
  s.idempotent = cls == MonoidClass::semilattice;
  s.t.assign(n, std::vector<std::uint32_t>(n, kUnset));
  for (std::uint32_t x = 0; x < n; ++x) s.t[0][x] = s.t[x][0] = x;
  if (s.idempotent)
    for (std::uint32_t x = 0; x < n; ++x) s.t[x][x] = x;
  for (std::uint32_t i = 1; i < n; ++i)
    for (std::uint32_t j = i; j < n; ++j)
      if (s.t[i][j] == kUnset) s.cells.emplace_back(i, j);
  s.run(0);

  std::vector<FinMonoid> out;
  for (auto& [canon, m] : s.found) out.push_back(std::move(m));
  return out;  // sorted by canonical form via the map
}

std::vector<FinMonoid> abelian_groups_upto(std::size_t max_order) {
  std::vector<FinMonoid> out;
  for (std::size_t n = 2; n <= max_order; ++n) {
    // factor n and take all partitions of each prime exponent
    std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;
    std::size_t rest = n;
    for (std::uint64_t p = 2; p * p <= rest; ++p)
      if (rest % p == 0) {
        std::uint32_t e = 0;
        while (rest % p == 0) rest /= p, ++e;
        factors.emplace_back(p, e);
      }
    if (rest > 1) factors.emplace_back(rest, 1);

    std::vector<std::vector<std::vector<std::uint32_t>>> per_prime;
    for (auto [p, e] : factors) {
      (void)p;
      std::vector<std::vector<std::uint32_t>> parts;
      std::vector<std::uint32_t> cur;
      // partitions of e, descending parts
      auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
        if (remaining == 0) {
          parts.push_back(cur);
          return;
        }
        for (std::uint32_t part = std::min(remaining, max_part); part >= 1; --part) {
          cur.push_back(part);
          self(self, remaining - part, part);
          cur.pop_back();
        }
      };
      rec(rec, e, e);
      per_prime.push_back(std::move(parts));
    }

    std::vector<std::size_t> choice(per_prime.size(), 0);
    while (true) {
      FinMonoid g = trivial_monoid();
      for (std::size_t f = 0; f < factors.size(); ++f)
        for (auto lambda : per_prime[f][choice[f]]) {
          std::uint64_t q = 1;
          for (std::uint32_t i = 0; i < lambda; ++i) q *= factors[f].first;
          g = product_monoid(g, cyclic_monoid(static_cast<std::uint32_t>(q)));
        }
      out.push_back(std::move(g));
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        if (++choice[i] < per_prime[i].size()) break;
        choice[i] = 0;
      }
      if (i == choice.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Semimodule enumeration: per carrier monoid, backtrack over one
// endomorphism per semiring generator; every defining relation is checked
// at the first position where all of its participants are assigned.

namespace {

struct Relation {
  enum Kind { comp_based, unit_based, comp_fin, sum_fin, zero_fin, one_fin } kind;
  std::uint32_t i = 0, j = 0, t = 0;
  const NatVec* coeffs = nullptr;
  std::uint32_t last = 0;  // highest generator index involved
};

struct ActionSearch {
  const Semiring* ring;
  const FinMonoid* m;
  std::vector<std::vector<std::uint32_t>> endos;
  std::vector<Relation> relations;
  std::vector<std::vector<std::uint32_t>> by_pos;  // relation ids per completion position
  std::vector<const std::vector<std::uint32_t>*> act;
  std::vector<std::vector<std::vector<std::uint32_t>>> results;

  std::uint32_t lincomb(const NatVec& c, std::uint32_t x) const {
    std::uint32_t acc = m->zero;
    for (std::size_t h = 0; h < c.size(); ++h)
      if (c[h] != 0) acc = m->plus(acc, m->times(c[h], (*act[h])[x]));
    return acc;
  }

  bool holds(const Relation& r) const {
    const std::uint32_t n = m->size;
    switch (r.kind) {
      case Relation::comp_based:
        for (std::uint32_t x = 0; x < n; ++x)
          if ((*act[r.i])[(*act[r.j])[x]] != lincomb(*r.coeffs, x)) return false;
        return true;
      case Relation::unit_based:
        for (std::uint32_t x = 0; x < n; ++x)
          if (lincomb(*r.coeffs, x) != x) return false;
        return true;
      case Relation::comp_fin:
        for (std::uint32_t x = 0; x < n; ++x)
          if ((*act[r.i])[(*act[r.j])[x]] != (*act[r.t])[x]) return false;
        return true;
      case Relation::sum_fin:
        for (std::uint32_t x = 0; x < n; ++x)
          if (m->plus((*act[r.i])[x], (*act[r.j])[x]) != (*act[r.t])[x]) return false;
        return true;
      case Relation::zero_fin:
        for (std::uint32_t x = 0; x < n; ++x)
          if ((*act[r.t])[x] != m->zero) return false;
        return true;
      case Relation::one_fin:
        for (std::uint32_t x = 0; x < n; ++x)
          if ((*act[r.t])[x] != x) return false;
        return true;
    }
    return false;
  }

  void build_relations() {
    const std::size_t k = ring->generator_count();
    if (ring->is_based()) {
      const BasedSemiring& r = ring->based();
      for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) {
          Relation rel;
          rel.kind = Relation::comp_based;
          rel.i = i;
          rel.j = j;
          rel.coeffs = &r.mult(i, j);
          rel.last = std::max(i, j);
          for (auto h : support(*rel.coeffs)) rel.last = std::max(rel.last, h);
          relations.push_back(rel);
        }
      Relation unit;
      unit.kind = Relation::unit_based;
      unit.coeffs = &r.unit();
      unit.last = 0;
      for (auto h : support(r.unit())) unit.last = std::max(unit.last, h);
      relations.push_back(unit);
    } else {
      const FiniteSemiring& r = ring->finite();
      for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t b = 0; b < k; ++b) {
          Relation s;
          s.kind = Relation::sum_fin;
          s.i = a;
          s.j = b;
          s.t = r.add(a, b);
          s.last = std::max({a, b, s.t});
          relations.push_back(s);
          Relation c;
          c.kind = Relation::comp_fin;
          c.i = a;
          c.j = b;
          c.t = r.mul(a, b);
          c.last = std::max({a, b, c.t});
          relations.push_back(c);
        }
      Relation z;
      z.kind = Relation::zero_fin;
      z.t = r.zero();
      z.last = r.zero();
      relations.push_back(z);
      Relation o;
      o.kind = Relation::one_fin;
      o.t = r.one();
      o.last = r.one();
      relations.push_back(o);
    }
    by_pos.assign(k, {});
    for (std::uint32_t id = 0; id < relations.size(); ++id)
      by_pos[relations[id].last].push_back(id);
  }

  void run(std::size_t pos) {
    const std::size_t k = ring->generator_count();
    if (pos == k) {
      std::vector<std::vector<std::uint32_t>> assignment;
      for (auto* a : act) assignment.push_back(*a);
      results.push_back(std::move(assignment));
      return;
    }
    for (const auto& cand : endos) {
      act[pos] = &cand;
      bool ok = true;
      for (auto id : by_pos[pos])
        if (!holds(relations[id])) {
          ok = false;
          break;
        }
      if (ok) run(pos + 1);
    }
  }
};

std::vector<std::vector<std::vector<std::uint32_t>>> enumerate_actions(const SemiringPtr& r,
                                                                       const FinMonoid& m) {
  ActionSearch s;
  s.ring = r.get();
  s.m = &m;
  s.endos = monoid_endomorphisms(m);
  s.build_relations();
  s.act.assign(r->generator_count(), nullptr);
  s.run(0);
  return std::move(s.results);
}

}  // namespace

IsoClassCatalog enumerate_semimodules(const SemiringPtr& r, const EnumConfig& cfg) {
  if (cfg.max_carrier_size == 0) throw ArgError("max carrier size must be at least 1");
  IsoClassCatalog cat;
  cat.name = "enumerated";
  std::set<std::string> seen;
  for (std::size_t size = 1; size <= cfg.max_carrier_size; ++size) {
    std::vector<FinMonoid> monoids = enumerate_monoids(size, cfg.monoid_class);
    for (const auto& monoid : monoids) {
      for (auto& actions : enumerate_actions(r, monoid)) {
        Semimodule m;
        m.ring = r;
        m.carrier = monoid;
        m.actions = std::move(actions);
        if (cfg.require_proper && !is_proper(m)) continue;
        std::string canon = canonical_form(m);
        if (!seen.insert(canon).second) continue;
        CatalogEntry e;
        e.module = std::move(m);
        e.canon = std::move(canon);
        e.minimal = is_minimal(e.module);
        e.elementary = is_elementary(e.module);
        e.simple = e.minimal && e.elementary;
        e.proper = is_proper(e.module);
        cat.entries.push_back(std::move(e));
      }
    }
  }
  std::sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.module.carrier.size != b.module.carrier.size)
      return a.module.carrier.size < b.module.carrier.size;
    return a.canon < b.canon;
  });
  for (std::size_t i = 0; i < cat.entries.size(); ++i)
    cat.entries[i].names = {"#" + std::to_string(i)};
  return cat;
}

namespace {

IsoClassCatalog filter_catalog(const IsoClassCatalog& cat, const std::string& name, bool minimal,
                               bool elementary, bool simple, bool proper) {
  IsoClassCatalog out;
  out.name = name;
  for (const auto& e : cat.entries) {
    if (minimal && !e.minimal) continue;
    if (elementary && !e.elementary) continue;
    if (simple && !e.simple) continue;
    if (proper && !e.proper) continue;
    out.entries.push_back(e);
    out.entries.back().names = {"#" + std::to_string(out.entries.size() - 1)};
  }
  return out;
}

}  // namespace

ExtremeReport classify_extreme(const SemiringPtr& r, std::size_t max_size, bool require_proper) {
  ExtremeReport rep;
  EnumConfig all{max_size, MonoidClass::all_commutative, require_proper};
  IsoClassCatalog cat_all = enumerate_semimodules(r, all);
  rep.elementary = filter_catalog(cat_all, "elementary", false, true, false, require_proper);
  rep.simple = filter_catalog(cat_all, "simple", false, false, true, require_proper);
  if (require_proper) {
    EnumConfig sl{max_size, MonoidClass::semilattice, true};
    IsoClassCatalog cat_sl = enumerate_semimodules(r, sl);
    rep.minimal = filter_catalog(cat_sl, "minimal", true, false, false, true);
    for (const auto& e : rep.minimal.entries)
      if (!e.module.carrier.is_semilattice())
        throw Error("minimal-proper class without idempotent carrier");
    rep.notes.push_back(
        "minimal-proper search restricted to semilattice carriers (every element of a minimal "
        "proper semimodule over a finitely generated semiring is additively idempotent); "
        "idempotency re-verified on every returned class");
    rep.notes.push_back(
        "elementary-proper search ran over all commutative monoids up to the size bound");
  } else {
    rep.minimal = filter_catalog(cat_all, "minimal", true, false, false, false);
  }
  return rep;
}

QuotientReport quotients_up_to_iso(const Semimodule& m, std::size_t bound) {
  QuotientReport rep;
  rep.all.name = "quotients";
  rep.nontrivial.name = "nontrivial-quotients";
  std::set<std::string> seen_all, seen_nontrivial;
  std::size_t idx = 0;
  for (const auto& c : all_congruences(m, bound)) {
    Semimodule q = quotient(m, c);
    std::string canon = canonical_form(q);
    const bool nontrivial = !c.is_equality(m.carrier.size) && !c.is_full();
    if (seen_all.insert(canon).second) {
      CatalogEntry e;
      e.names = {"q" + std::to_string(idx++)};
      e.module = q;
      e.canon = canon;
      e.minimal = is_minimal(q);
      e.elementary = is_elementary(q);
      e.simple = e.minimal && e.elementary;
      e.proper = is_proper(q);
      rep.all.entries.push_back(std::move(e));
    }
    if (nontrivial && seen_nontrivial.insert(canon).second) {
      CatalogEntry e;
      e.names = {"nq" + std::to_string(rep.nontrivial.entries.size())};
      e.module = std::move(q);
      e.canon = std::move(canon);
      e.minimal = is_minimal(e.module);
      e.elementary = is_elementary(e.module);
      e.simple = e.minimal && e.elementary;
      e.proper = is_proper(e.module);
      rep.nontrivial.entries.push_back(std::move(e));
    }
  }
  auto by_size_canon = [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.module.carrier.size != b.module.carrier.size)
      return a.module.carrier.size < b.module.carrier.size;
    return a.canon < b.canon;
  };
  std::sort(rep.all.entries.begin(), rep.all.entries.end(), by_size_canon);
  std::sort(rep.nontrivial.entries.begin(), rep.nontrivial.entries.end(), by_size_canon);
  return rep;
}

}  // namespace semimod
