#include "semimod/semimodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "semimod/detail/search.hpp"

namespace semimod {

std::uint32_t Semimodule::act_vec(const NatVec& c, std::uint32_t m) const {
  if (!ring->is_based()) throw MalformedError("act_vec needs a based semiring");
  std::uint32_t acc = carrier.zero;
  for (std::size_t h = 0; h < c.size(); ++h)
    if (c[h] != 0) acc = carrier.plus(acc, carrier.times(c[h], actions[h][m]));
  return acc;
}

std::string Semimodule::label(std::uint32_t m) const {
  if (m < labels.size() && !labels[m].empty()) return labels[m];
  return "m" + std::to_string(m);
}

std::vector<std::uint32_t> Congruence::block_of(std::uint32_t size) const {
  std::vector<std::uint32_t> of(size, 0);
  for (std::uint32_t b = 0; b < blocks.size(); ++b)
    for (auto x : blocks[b]) of[x] = b;
  return of;
}

bool Hom::is_zero(const FinMonoid& codomain) const {
  for (auto v : map)
    if (v != codomain.zero) return false;
  return true;
}

Semimodule zero_semimodule(SemiringPtr ring) {
  Semimodule m;
  m.carrier = trivial_monoid();
  m.actions.assign(ring->generator_count(), {0});
  m.ring = std::move(ring);
  m.labels = {"0"};
  return m;
}

std::vector<std::string> validate_semimodule(const Semimodule& m) {
  const std::uint32_t n = m.carrier.size;
  if (m.actions.size() != m.ring->generator_count())
    throw MalformedError("semimodule has " + std::to_string(m.actions.size()) +
                         " actions for a semiring with " +
                         std::to_string(m.ring->generator_count()) + " generators");
  for (const auto& act : m.actions) {
    if (act.size() != n) throw MalformedError("action table length differs from carrier size");
    for (auto v : act)
      if (v >= n) throw MalformedError("action table entry out of range");
  }

  std::vector<std::string> report = m.carrier.validate();
  if (!report.empty()) return report;

  auto gname = [&](std::size_t i) { return m.ring->generator_name(i); };
  for (std::size_t a = 0; a < m.actions.size(); ++a) {
    const auto& act = m.actions[a];
    if (act[m.carrier.zero] != m.carrier.zero)
      report.push_back("action of " + gname(a) + " moves zero");
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = x; y < n; ++y)
        if (act[m.carrier.plus(x, y)] != m.carrier.plus(act[x], act[y]))
          report.push_back("action of " + gname(a) + " is not additive at (" + m.label(x) + "," +
                           m.label(y) + ")");
  }

  if (m.ring->is_based()) {
    const BasedSemiring& r = m.ring->based();
    const std::size_t k = r.basis_size();
    for (std::uint32_t x = 0; x < n; ++x)
      if (m.act_vec(r.unit(), x) != x) {
        report.push_back("unit does not act as the identity at " + m.label(x));
        break;
      }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const NatVec& c = r.mult(i, j);
        for (std::uint32_t x = 0; x < n; ++x)
          if (m.actions[i][m.actions[j][x]] != m.act_vec(c, x)) {
            report.push_back("product relation (" + gname(i) + "*" + gname(j) + ") fails at " +
                             m.label(x));
            break;
          }
      }
  } else {
    const FiniteSemiring& r = m.ring->finite();
    const std::size_t sz = r.size();
    for (std::uint32_t x = 0; x < n; ++x) {
      if (m.actions[r.zero()][x] != m.carrier.zero)
        report.push_back("semiring zero does not act as the zero map at " + m.label(x));
      if (m.actions[r.one()][x] != x)
        report.push_back("semiring one does not act as the identity at " + m.label(x));
    }
    for (std::size_t a = 0; a < sz; ++a)
      for (std::size_t b = 0; b < sz; ++b) {
        for (std::uint32_t x = 0; x < n; ++x) {
          if (m.actions[r.add(a, b)][x] != m.carrier.plus(m.actions[a][x], m.actions[b][x])) {
            report.push_back("sum relation (" + gname(a) + "+" + gname(b) + ") fails at " +
                             m.label(x));
            break;
          }
        }
        for (std::uint32_t x = 0; x < n; ++x)
          if (m.actions[r.mul(a, b)][x] != m.actions[a][m.actions[b][x]]) {
            report.push_back("product relation (" + gname(a) + "*" + gname(b) + ") fails at " +
                             m.label(x));
            break;
          }
      }
  }
  return report;
}

std::vector<std::uint32_t> invertible_elements(const Semimodule& m) {
  std::vector<std::uint32_t> inv;
  for (std::uint32_t x = 0; x < m.carrier.size; ++x)
    for (std::uint32_t y = 0; y < m.carrier.size; ++y)
      if (m.carrier.plus(x, y) == m.carrier.zero) {
        inv.push_back(x);
        break;
      }
  return inv;
}

bool is_proper(const Semimodule& m) {
  return invertible_elements(m).size() != m.carrier.size;
}

std::vector<std::uint32_t> generated_subsemimodule(const Semimodule& m,
                                                   const std::vector<std::uint32_t>& seed) {
  std::vector<char> in(m.carrier.size, 0);
  in[m.carrier.zero] = 1;
  for (auto s : seed) {
    if (s >= m.carrier.size) throw ArgError("seed element out of range");
    in[s] = 1;
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t x = 0; x < m.carrier.size; ++x) {
      if (!in[x]) continue;
      for (std::uint32_t y = x; y < m.carrier.size; ++y) {
        if (!in[y]) continue;
        std::uint32_t z = m.carrier.plus(x, y);
        if (!in[z]) in[z] = 1, grew = true;
      }
      for (const auto& act : m.actions) {
        std::uint32_t z = act[x];
        if (!in[z]) in[z] = 1, grew = true;
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < m.carrier.size; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::vector<std::uint32_t>> all_subsemimodules(const Semimodule& m, std::size_t bound) {
  const std::uint32_t n = m.carrier.size;
  if (n > bound) throw BoundError("subsemimodule enumeration bounded at " + std::to_string(bound));
  std::vector<std::uint32_t> nonzero;
  for (std::uint32_t x = 0; x < n; ++x)
    if (x != m.carrier.zero) nonzero.push_back(x);
  std::set<std::vector<std::uint32_t>> seen;
  for (std::uint64_t mask = 0; mask < (1ull << nonzero.size()); ++mask) {
    std::vector<std::uint32_t> seed;
    for (std::size_t i = 0; i < nonzero.size(); ++i)
      if (mask & (1ull << i)) seed.push_back(nonzero[i]);
    seen.insert(generated_subsemimodule(m, seed));
  }
  std::vector<std::vector<std::uint32_t>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least index as root, for determinism
    parent[b] = a;
    return true;
  }
};

Congruence blocks_from_uf(UnionFind& uf, std::uint32_t n) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_root;
  for (std::uint32_t x = 0; x < n; ++x) by_root[uf.find(x)].push_back(x);
  Congruence c;
  for (auto& [root, members] : by_root) c.blocks.push_back(std::move(members));
  return c;  // map is keyed by least member, so blocks are sorted already
}

}  // namespace

Congruence congruence_closure(const Semimodule& m,
                              const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  const std::uint32_t n = m.carrier.size;
  UnionFind uf(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
  auto merge = [&](std::uint32_t a, std::uint32_t b) {
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw ArgError("congruence pair out of range");
    merge(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (std::uint32_t k = 0; k < n; ++k) merge(m.carrier.plus(a, k), m.carrier.plus(b, k));
    for (const auto& act : m.actions) merge(act[a], act[b]);
  }
  return blocks_from_uf(uf, n);
}

Congruence principal_congruence(const Semimodule& m, std::uint32_t a, std::uint32_t b) {
  return congruence_closure(m, {{a, b}});
}

bool is_congruence(const Semimodule& m, const Congruence& c) {
  const std::uint32_t n = m.carrier.size;
  std::vector<int> of(n, -1);
  for (std::uint32_t b = 0; b < c.blocks.size(); ++b)
    for (auto x : c.blocks[b]) {
      if (x >= n || of[x] >= 0) return false;
      of[x] = static_cast<int>(b);
    }
  for (auto v : of)
    if (v < 0) return false;
  for (const auto& block : c.blocks) {
    const std::uint32_t rep = block.front();
    for (auto x : block) {
      for (std::uint32_t k = 0; k < n; ++k)
        if (of[m.carrier.plus(x, k)] != of[m.carrier.plus(rep, k)]) return false;
      for (const auto& act : m.actions)
        if (of[act[x]] != of[act[rep]]) return false;
    }
  }
  return true;
}

std::vector<Congruence> all_congruences(const Semimodule& m, std::size_t bound) {
  const std::uint32_t n = m.carrier.size;
  if (n > bound) throw BoundError("congruence enumeration bounded at " + std::to_string(bound));
  auto key = [&](const Congruence& c) { return c.block_of(n); };

  std::vector<Congruence> principals;
  std::set<std::vector<std::uint32_t>> principal_keys;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) {
      Congruence c = principal_congruence(m, a, b);
      if (principal_keys.insert(key(c)).second) principals.push_back(std::move(c));
    }

  std::map<std::vector<std::uint32_t>, Congruence> found;
  Congruence equality;
  for (std::uint32_t x = 0; x < n; ++x) equality.blocks.push_back({x});
  found.emplace(key(equality), equality);
  std::vector<Congruence> queue = {equality};
  while (!queue.empty()) {
    Congruence cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& p : principals) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
      for (const auto& block : cur.blocks)
        for (std::size_t i = 1; i < block.size(); ++i) pairs.emplace_back(block[0], block[i]);
      for (const auto& block : p.blocks)
        for (std::size_t i = 1; i < block.size(); ++i) pairs.emplace_back(block[0], block[i]);
      Congruence join = congruence_closure(m, pairs);
      auto k = key(join);
      if (!found.count(k)) {
        found.emplace(k, join);
        queue.push_back(std::move(join));
      }
    }
  }
  std::vector<Congruence> out;
  for (auto& [k, c] : found) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(), [](const Congruence& a, const Congruence& b) {
    return a.blocks.size() != b.blocks.size() ? a.blocks.size() > b.blocks.size()
                                              : a.blocks < b.blocks;
  });
  return out;
}

Semimodule quotient(const Semimodule& m, const Congruence& c) {
  if (!is_congruence(m, c)) throw ArgError("partition is not a congruence on this semimodule");
  const std::uint32_t nb = static_cast<std::uint32_t>(c.blocks.size());
  const auto of = c.block_of(m.carrier.size);
  Semimodule q;
  q.ring = m.ring;
  q.carrier.size = nb;
  q.carrier.zero = of[m.carrier.zero];
  q.carrier.add.assign(nb, std::vector<std::uint32_t>(nb));
  for (std::uint32_t i = 0; i < nb; ++i)
    for (std::uint32_t j = 0; j < nb; ++j)
      q.carrier.add[i][j] = of[m.carrier.plus(c.blocks[i][0], c.blocks[j][0])];
  q.actions.assign(m.actions.size(), std::vector<std::uint32_t>(nb));
  for (std::size_t a = 0; a < m.actions.size(); ++a)
    for (std::uint32_t i = 0; i < nb; ++i) q.actions[a][i] = of[m.actions[a][c.blocks[i][0]]];
  if (!m.labels.empty()) {
    q.labels.resize(nb);
    for (std::uint32_t i = 0; i < nb; ++i) {
      std::string s;
      for (auto x : c.blocks[i]) s += (s.empty() ? "" : "~") + m.label(x);
      q.labels[i] = s;
    }
  }
  return q;
}

Semimodule subsemimodule(const Semimodule& m, const std::vector<std::uint32_t>& subset) {
  std::vector<std::uint32_t> sub = subset;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (!std::binary_search(sub.begin(), sub.end(), m.carrier.zero))
    throw ArgError("subsemimodule must contain zero");
  std::vector<int> pos(m.carrier.size, -1);
  for (std::uint32_t i = 0; i < sub.size(); ++i) pos[sub[i]] = static_cast<int>(i);
  auto reindex = [&](std::uint32_t x) {
    if (x >= m.carrier.size || pos[x] < 0) throw ArgError("subset is not closed");
    return static_cast<std::uint32_t>(pos[x]);
  };
  Semimodule s;
  s.ring = m.ring;
  s.carrier.size = static_cast<std::uint32_t>(sub.size());
  s.carrier.zero = reindex(m.carrier.zero);
  s.carrier.add.assign(sub.size(), std::vector<std::uint32_t>(sub.size()));
  for (std::uint32_t i = 0; i < sub.size(); ++i)
    for (std::uint32_t j = 0; j < sub.size(); ++j)
      s.carrier.add[i][j] = reindex(m.carrier.plus(sub[i], sub[j]));
  s.actions.assign(m.actions.size(), std::vector<std::uint32_t>(sub.size()));
  for (std::size_t a = 0; a < m.actions.size(); ++a)
    for (std::uint32_t i = 0; i < sub.size(); ++i)
      s.actions[a][i] = reindex(m.actions[a][sub[i]]);
  if (!m.labels.empty()) {
    s.labels.resize(sub.size());
    for (std::uint32_t i = 0; i < sub.size(); ++i) s.labels[i] = m.label(sub[i]);
  }
  return s;
}

bool is_minimal(const Semimodule& m) {
  if (m.carrier.size < 2) return false;
  for (std::uint32_t x = 0; x < m.carrier.size; ++x) {
    if (x == m.carrier.zero) continue;
    if (generated_subsemimodule(m, {x}).size() != m.carrier.size) return false;
  }
  return true;
}

bool is_elementary(const Semimodule& m) {
  if (m.carrier.size < 2) return false;
  for (std::uint32_t a = 0; a < m.carrier.size; ++a)
    for (std::uint32_t b = a + 1; b < m.carrier.size; ++b)
      if (!principal_congruence(m, a, b).is_full()) return false;
  return true;
}

bool is_simple(const Semimodule& m) { return is_minimal(m) && is_elementary(m); }

Semimodule direct_sum(const Semimodule& m, const Semimodule& n) {
  if (!(*m.ring == *n.ring)) throw ArgError("direct sum needs a common semiring");
  Semimodule d;
  d.ring = m.ring;
  d.carrier = product_monoid(m.carrier, n.carrier);
  d.actions.assign(m.actions.size(), std::vector<std::uint32_t>(d.carrier.size));
  for (std::size_t a = 0; a < m.actions.size(); ++a)
    for (std::uint32_t x = 0; x < d.carrier.size; ++x) {
      std::uint32_t xm = x / n.carrier.size, xn = x % n.carrier.size;
      d.actions[a][x] = m.actions[a][xm] * n.carrier.size + n.actions[a][xn];
    }
  d.labels.resize(d.carrier.size);
  for (std::uint32_t x = 0; x < d.carrier.size; ++x)
    d.labels[x] = "(" + m.label(x / n.carrier.size) + "," + n.label(x % n.carrier.size) + ")";
  return d;
}

bool is_hom(const Semimodule& m, const Semimodule& n, const std::vector<std::uint32_t>& map) {
  if (map.size() != m.carrier.size) return false;
  for (auto v : map)
    if (v >= n.carrier.size) return false;
  if (map[m.carrier.zero] != n.carrier.zero) return false;
  for (std::uint32_t x = 0; x < m.carrier.size; ++x)
    for (std::uint32_t y = x; y < m.carrier.size; ++y)
      if (map[m.carrier.plus(x, y)] != n.carrier.plus(map[x], map[y])) return false;
  for (std::size_t a = 0; a < m.actions.size(); ++a)
    for (std::uint32_t x = 0; x < m.carrier.size; ++x)
      if (map[m.actions[a][x]] != n.actions[a][map[x]]) return false;
  return true;
}

std::vector<Hom> homs(const Semimodule& m, const Semimodule& n, std::size_t bound) {
  if (!(*m.ring == *n.ring)) throw ArgError("homs needs a common semiring");
  if (m.carrier.size > bound)
    throw BoundError("hom enumeration bounded at " + std::to_string(bound) + " elements");
  auto maps = detail::hom_search(m.carrier, m.actions, n.carrier, n.actions);
  std::vector<Hom> out;
  out.reserve(maps.size());
  for (auto& f : maps) out.push_back(Hom{std::move(f)});
  return out;
}

std::pair<Congruence, std::vector<std::uint32_t>> kernel_image(const Semimodule& m,
                                                               const Semimodule& n,
                                                               const Hom& h) {
  if (!is_hom(m, n, h.map)) throw ArgError("kernel_image needs a valid homomorphism");
  std::map<std::uint32_t, std::vector<std::uint32_t>> fibers;
  for (std::uint32_t x = 0; x < m.carrier.size; ++x) fibers[h.map[x]].push_back(x);
  Congruence kernel;
  std::vector<std::uint32_t> image;
  for (auto& [v, fiber] : fibers) image.push_back(v);
  std::vector<std::vector<std::uint32_t>> blocks;
  for (auto& [v, fiber] : fibers) blocks.push_back(std::move(fiber));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  kernel.blocks = std::move(blocks);
  return {std::move(kernel), std::move(image)};
}

std::string canonical_form(const Semimodule& m, std::size_t bound) {
  return detail::canon_serialize(m.carrier, m.actions, bound);
}

bool are_isomorphic(const Semimodule& m, const Semimodule& n, std::size_t bound) {
  if (!(*m.ring == *n.ring)) throw ArgError("isomorphism needs a common semiring");
  if (m.carrier.size != n.carrier.size) return false;
  return canonical_form(m, bound) == canonical_form(n, bound);
}

}  // namespace semimod
