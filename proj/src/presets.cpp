#include "semimod/presets.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace semimod {

std::vector<std::string> GroupTable::validate() const {
  std::vector<std::string> report;
  const std::size_t n = size();
  if (n == 0) return {"empty group table"};
  if (identity >= n) return {"identity index out of range"};
  if (cayley.size() != n) return {"cayley table is not square"};
  for (const auto& row : cayley) {
    if (row.size() != n) return {"cayley table row has wrong length"};
    for (auto v : row)
      if (v >= n) return {"cayley table entry out of range"};
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (cayley[a][identity] != a || cayley[identity][a] != a)
      report.push_back("identity fails at " + names[a]);
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < n; ++b)
      if (cayley[a][b] == identity && cayley[b][a] == identity) has_inverse = true;
    if (!has_inverse) report.push_back("no inverse for " + names[a]);
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          report.push_back("associativity fails at (" + names[a] + "," + names[b] + "," +
                           names[c] + ")");
  }
  return report;
}

GroupTable symmetric2() {
  return GroupTable{{"e", "s"}, {{0, 1}, {1, 0}}, 0};
}

GroupTable symmetric3() { return dihedral_group(3).table; }

GroupTable cyclic_group(std::uint32_t n) {
  if (n == 0) throw ArgError("cyclic group order must be positive");
  GroupTable g;
  for (std::uint32_t i = 0; i < n; ++i)
    g.names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  g.cayley.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) g.cayley[a][b] = (a + b) % n;
  g.identity = 0;
  return g;
}

DihedralGroup dihedral_group(std::uint32_t n) {
  if (n < 3) throw ArgError("dihedral group needs n >= 3");
  DihedralGroup d;
  d.n = n;
  const std::uint32_t order = 2 * n;

  // Symmetries of the n-gon as (rotation, flip), with
  // (a,fa)*(b,fb) = (a + (fa ? n-b : b) mod n, fa xor fb), s = (0,1),
  // t = (1,1).  Words are alternating products of s and t.
  struct Sym {
    std::uint32_t rot;
    std::uint8_t flip;
  };
  auto compose = [n](Sym x, Sym y) {
    Sym r;
    r.rot = (x.rot + (x.flip ? n - y.rot : y.rot)) % n;
    r.flip = x.flip ^ y.flip;
    return r;
  };
  const Sym se{0, 1}, te{1, 1};
  auto word_value = [&](std::uint32_t len, bool start_s) {
    Sym v{0, 0};
    for (std::uint32_t i = 0; i < len; ++i)
      v = compose(v, ((i % 2 == 0) == start_s) ? se : te);
    return v;
  };
  auto word_name = [](std::uint32_t len, bool start_s) {
    std::string w;
    for (std::uint32_t i = 0; i < len; ++i) w += ((i % 2 == 0) == start_s) ? 's' : 't';
    return w;
  };

  std::vector<Sym> value;
  auto push = [&](const std::string& name, Sym v, std::uint32_t len, bool ss, bool st,
                  bool es, bool et) {
    d.table.names.push_back(name);
    value.push_back(v);
    d.length.push_back(len);
    d.starts_with_s.push_back(ss);
    d.starts_with_t.push_back(st);
    d.ends_with_s.push_back(es);
    d.ends_with_t.push_back(et);
  };

  push("e", Sym{0, 0}, 0, false, false, false, false);
  for (std::uint32_t len = 1; len < n; ++len) {
    const bool odd = len % 2 == 1;
    push(word_name(len, true), word_value(len, true), len, true, false, odd, !odd);
    push(word_name(len, false), word_value(len, false), len, false, true, !odd, odd);
  }
  Sym w0s = word_value(n, true), w0t = word_value(n, false);
  if (w0s.rot != w0t.rot || w0s.flip != w0t.flip)
    throw Error("dihedral builder: longest-word values disagree");
  push("w0", w0s, n, true, true, true, true);

  std::vector<int> index_of_value(2 * n, -1);
  for (std::uint32_t i = 0; i < order; ++i) {
    const std::uint32_t key = value[i].rot + n * value[i].flip;
    if (index_of_value[key] != -1) throw Error("dihedral builder: repeated element");
    index_of_value[key] = static_cast<int>(i);
  }

  d.table.identity = 0;
  d.table.cayley.assign(order, std::vector<std::uint32_t>(order));
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = 0; b < order; ++b) {
      Sym v = compose(value[a], value[b]);
      d.table.cayley[a][b] = static_cast<std::uint32_t>(index_of_value[v.rot + n * v.flip]);
    }

  d.e = 0;
  d.s = 1;
  d.t = 2;
  d.w0 = order - 1;
  return d;
}

int DihedralGroup::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < table.names.size(); ++i)
    if (table.names[i] == name) return static_cast<int>(i);
  return -1;
}

FiniteSemiring boolean_semiring() {
  return FiniteSemiring({"0", "1"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, 1);
}

FiniteSemiring nat_rees(std::uint64_t k) {
  if (k == 0) throw ArgError("nat_rees needs k >= 1");
  if (k > 64) throw BoundError("nat_rees bounded at k = 64");
  const std::uint32_t n = static_cast<std::uint32_t>(k) + 1;  // 0..k-1 and the class I
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i + 1 < n; ++i) names.push_back(std::to_string(i));
  names.push_back("I");
  auto clamp = [&](std::uint64_t v) {
    return v >= k ? n - 1 : static_cast<std::uint32_t>(v);
  };
  auto val = [&](std::uint32_t i) -> std::uint64_t { return i; };  // index i < k has value i
  std::vector<std::vector<std::uint32_t>> add(n, std::vector<std::uint32_t>(n)),
      mul(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const bool ia = a == n - 1, ib = b == n - 1;
      add[a][b] = (ia || ib) ? n - 1 : clamp(val(a) + val(b));
      if (a == 0 || b == 0)
        mul[a][b] = 0;
      else if (ia || ib)
        mul[a][b] = n - 1;
      else
        mul[a][b] = clamp(val(a) * val(b));
    }
  return FiniteSemiring(std::move(names), std::move(add), std::move(mul), 0, 1);
}

BasedSemiring group_semiring(const GroupTable& g) {
  if (!g.validate().empty()) throw ArgError("invalid group table");
  const std::size_t n = g.size();
  std::vector<std::vector<NatVec>> mult(n, std::vector<NatVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i][j] = NatVec::basis(n, g.cayley[i][j]);
  return BasedSemiring(g.names, NatVec::basis(n, g.identity), std::move(mult));
}

FiniteSemiring group_semiring_over(const FiniteSemiring& coeffs, const GroupTable& g) {
  if (!g.validate().empty()) throw ArgError("invalid group table");
  const std::size_t cs = coeffs.size(), gs = g.size();
  std::size_t m = 1;
  for (std::size_t i = 0; i < gs; ++i) {
    m *= cs;
    if (m > 4096) throw BoundError("group semiring over finite coefficients bounded at 4096 elements");
  }
  auto digit = [&](std::size_t idx, std::size_t pos) {
    for (std::size_t i = 0; i < pos; ++i) idx /= cs;
    return static_cast<std::uint32_t>(idx % cs);
  };
  auto encode = [&](const std::vector<std::uint32_t>& digits) {
    std::size_t idx = 0;
    for (std::size_t i = gs; i-- > 0;) idx = idx * cs + digits[i];
    return idx;
  };

  std::vector<std::string> names(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::string s;
    for (std::size_t i = 0; i < gs; ++i) {
      const std::uint32_t c = digit(x, i);
      if (c == coeffs.zero()) continue;
      if (!s.empty()) s += "+";
      if (c != coeffs.one()) s += coeffs.element_name(c) + "*";
      s += g.names[i];
    }
    names[x] = s.empty() ? "0" : s;
  }

  std::vector<std::vector<std::uint32_t>> add(m, std::vector<std::uint32_t>(m)),
      mul(m, std::vector<std::uint32_t>(m));
  std::vector<std::uint32_t> acc(gs);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t i = 0; i < gs; ++i) acc[i] = coeffs.add(digit(x, i), digit(y, i));
      add[x][y] = static_cast<std::uint32_t>(encode(acc));
      std::fill(acc.begin(), acc.end(), coeffs.zero());
      for (std::size_t u = 0; u < gs; ++u)
        for (std::size_t v = 0; v < gs; ++v) {
          const std::uint32_t c = coeffs.mul(digit(x, u), digit(y, v));
          const std::uint32_t w = g.cayley[u][v];
          acc[w] = coeffs.add(acc[w], c);
        }
      mul[x][y] = static_cast<std::uint32_t>(encode(acc));
    }

  std::vector<std::uint32_t> one_digits(gs, coeffs.zero());
  one_digits[g.identity] = coeffs.one();
  return FiniteSemiring(std::move(names), std::move(add), std::move(mul), 0,
                        static_cast<std::uint32_t>(encode(one_digits)));
}

BasedSemiring znn_semiring() {
  return BasedSemiring({"1"}, NatVec({1}), {{NatVec({1})}});
}

BasedSemiring kl_dihedral(std::uint32_t n) {
  const DihedralGroup d = dihedral_group(n);
  const std::size_t g = 2 * n;

  // Group-ring expansion of each Kazhdan-Lusztig element: the sum of all
  // group elements of strictly smaller length, plus the element itself
  // (the dihedral Bruhat order is the length order).
  std::vector<std::vector<std::int64_t>> kl(g, std::vector<std::int64_t>(g, 0));
  for (std::size_t w = 0; w < g; ++w)
    for (std::size_t x = 0; x < g; ++x)
      if (d.length[x] < d.length[w] || x == w) kl[w][x] = 1;

  // Convert a group-ring vector to the KL basis by eliminating from the
  // longest element down; the change of basis is unitriangular with respect
  // to any length-nonincreasing order, so this is exact integer arithmetic.
  auto to_kl = [&](std::vector<std::int64_t> v) {
    NatVec out = NatVec::zeros(g);
    for (std::size_t w = g; w-- > 0;) {
      const std::int64_t c = v[w];
      if (c == 0) continue;
      if (c < 0)
        throw Error("negative coefficient at " + d.table.names[w] +
                    " while converting to the KL basis");
      out[w] = static_cast<Nat>(c);
      for (std::size_t x = 0; x < g; ++x) v[x] -= c * kl[w][x];
    }
    for (auto r : v)
      if (r != 0) throw Error("KL basis conversion left a nonzero remainder");
    return out;
  };

  std::vector<std::vector<NatVec>> mult(g, std::vector<NatVec>(g));
  std::vector<std::int64_t> prod(g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t u = 0; u < g; ++u) {
        if (kl[i][u] == 0) continue;
        for (std::size_t v = 0; v < g; ++v)
          if (kl[j][v] != 0) prod[d.mul(u, v)] += kl[i][u] * kl[j][v];
      }
      mult[i][j] = to_kl(prod);
    }

  return BasedSemiring(d.table.names, NatVec::basis(g, d.e), std::move(mult));
}

BasedSemiring kl_hat_s2() {
  const NatVec e = NatVec::basis(2, 0), theta = NatVec::basis(2, 1);
  std::vector<std::vector<NatVec>> mult = {{e, theta}, {theta, NatVec::basis(2, 1, 2)}};
  return BasedSemiring({"e", "theta"}, e, std::move(mult));
}

std::pair<NatVec, NatVec> kl_generator_oracle(std::uint32_t n, std::uint32_t w) {
  const DihedralGroup d = dihedral_group(n);
  const std::size_t g = 2 * n;
  if (w >= g) throw ArgError("element index out of range");

  auto prod = [&](std::uint32_t gen, bool gen_is_s) {
    const bool unit_case = gen_is_s ? (w == d.e || w == d.t) : (w == d.e || w == d.s);
    if (unit_case) return NatVec::basis(g, d.mul(gen, w));
    const bool absorbed = gen_is_s ? d.starts_with_s[w] : d.starts_with_t[w];
    if (absorbed) return NatVec::basis(g, w, 2);
    return add(NatVec::basis(g, d.mul(d.s, w)), NatVec::basis(g, d.mul(d.t, w)));
  };
  return {prod(d.s, true), prod(d.t, false)};
}

std::vector<std::vector<std::uint32_t>> dihedral_actions_from_generators(
    const DihedralGroup& d, const std::vector<std::uint32_t>& act_s,
    const std::vector<std::uint32_t>& act_t) {
  if (act_s.size() != act_t.size()) throw ArgError("generator actions must have equal length");
  const std::uint32_t n = static_cast<std::uint32_t>(act_s.size());
  std::vector<std::vector<std::uint32_t>> acts(d.size());
  acts[d.e].resize(n);
  for (std::uint32_t x = 0; x < n; ++x) acts[d.e][x] = x;
  acts[d.s] = act_s;
  acts[d.t] = act_t;
  for (std::uint32_t w = 0; w < d.size(); ++w) {
    if (d.length[w] < 2) continue;
    const std::uint32_t first = d.starts_with_s[w] ? d.s : d.t;
    const std::uint32_t rest = d.mul(first, w);  // strictly shorter
    acts[w].resize(n);
    for (std::uint32_t x = 0; x < n; ++x) acts[w][x] = acts[first][acts[rest][x]];
  }
  return acts;
}

GroupTable group_preset(const std::string& name) {
  if (name == "s2") return symmetric2();
  if (name == "s3") return symmetric3();
  if (name.size() > 1 && name[0] == 'c') {
    const long v = std::strtol(name.c_str() + 1, nullptr, 10);
    if (v >= 1 && std::to_string(v) == name.substr(1)) return cyclic_group(static_cast<std::uint32_t>(v));
  }
  if (name.size() > 1 && name[0] == 'd') {
    const long v = std::strtol(name.c_str() + 1, nullptr, 10);
    if (v >= 6 && v % 2 == 0 && std::to_string(v) == name.substr(1))
      return dihedral_group(static_cast<std::uint32_t>(v / 2)).table;
  }
  throw ArgError("unknown group preset: " + name);
}

SemiringPtr build_preset(const std::string& name) {
  if (name == "boolean") return make_semiring(boolean_semiring());
  if (name == "kl-hat-s2") return make_semiring(kl_hat_s2());
  auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
  if (starts("nat:")) {
    const std::string arg = name.substr(4);
    const long v = std::strtol(arg.c_str(), nullptr, 10);
    if (v >= 1 && std::to_string(v) == arg) return make_semiring(nat_rees(static_cast<std::uint64_t>(v)));
    throw ArgError("bad nat preset: " + name);
  }
  if (starts("group:")) return make_semiring(group_semiring(group_preset(name.substr(6))));
  if (starts("kl-dihedral:")) {
    const std::string arg = name.substr(12);
    const long v = std::strtol(arg.c_str(), nullptr, 10);
    if (v >= 3 && std::to_string(v) == arg) return make_semiring(kl_dihedral(static_cast<std::uint32_t>(v)));
    throw ArgError("bad kl-dihedral preset: " + name);
  }
  throw ArgError("unknown preset: " + name);
}

}  // namespace semimod
