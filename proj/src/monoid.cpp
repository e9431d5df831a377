#include "semimod/monoid.hpp"

#include <algorithm>
#include <set>

#include "semimod/detail/search.hpp"

namespace semimod {

std::uint32_t FinMonoid::times(Nat c, std::uint32_t m) const {
  std::uint32_t acc = zero;
  std::uint32_t pow = m;  // 2^i-fold sum of m
  while (c != 0) {
    if (c & 1) acc = add[acc][pow];
    c >>= 1;
    if (c != 0) pow = add[pow][pow];
  }
  return acc;
}

std::vector<std::string> FinMonoid::validate() const {
  std::vector<std::string> report;
  if (add.size() != size) {
    report.push_back("add table is not square of the carrier size");
    return report;
  }
  for (const auto& row : add) {
    if (row.size() != size) {
      report.push_back("add table row has wrong length");
      return report;
    }
    for (auto v : row)
      if (v >= size) {
        report.push_back("add table entry out of range");
        return report;
      }
  }
  if (zero >= size) {
    report.push_back("zero index out of range");
    return report;
  }
  for (std::uint32_t a = 0; a < size; ++a) {
    if (add[a][zero] != a || add[zero][a] != a)
      report.push_back("zero is not an identity at " + std::to_string(a));
    for (std::uint32_t b = 0; b < size; ++b) {
      if (add[a][b] != add[b][a])
        report.push_back("not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      for (std::uint32_t c = 0; c < size; ++c)
        if (add[add[a][b]][c] != add[a][add[b][c]])
          report.push_back("not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + ")");
    }
  }
  return report;
}

bool FinMonoid::is_semilattice() const {
  for (std::uint32_t m = 0; m < size; ++m)
    if (!is_idempotent(m)) return false;
  return true;
}

FinMonoid trivial_monoid() { return FinMonoid{1, 0, {{0}}}; }

FinMonoid boolean_monoid() { return FinMonoid{2, 0, {{0, 1}, {1, 1}}}; }

FinMonoid cyclic_monoid(std::uint32_t n) {
  FinMonoid m;
  m.size = n;
  m.zero = 0;
  m.add.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) m.add[a][b] = (a + b) % n;
  return m;
}

FinMonoid product_monoid(const FinMonoid& a, const FinMonoid& b) {
  FinMonoid m;
  m.size = a.size * b.size;
  m.zero = a.zero * b.size + b.zero;
  m.add.assign(m.size, std::vector<std::uint32_t>(m.size));
  for (std::uint32_t x = 0; x < m.size; ++x)
    for (std::uint32_t y = 0; y < m.size; ++y)
      m.add[x][y] = a.plus(x / b.size, y / b.size) * b.size + b.plus(x % b.size, y % b.size);
  return m;
}

std::vector<std::vector<std::uint32_t>> monoid_homs(const FinMonoid& m, const FinMonoid& n) {
  return detail::hom_search(m, {}, n, {});
}

std::vector<std::vector<std::uint32_t>> monoid_endomorphisms(const FinMonoid& m) {
  return monoid_homs(m, m);
}

std::vector<std::uint32_t> monoid_generators(const FinMonoid& m) {
  return detail::generators_under(m, {});
}

std::string monoid_canonical_form(const FinMonoid& m, std::size_t bound) {
  return detail::canon_serialize(m, {}, bound);
}

namespace detail {

std::vector<std::uint32_t> generators_under(const FinMonoid& m,
                                            const std::vector<std::vector<std::uint32_t>>& actions) {
  std::vector<std::uint32_t> gens;
  std::vector<char> in(m.size, 0);
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::uint32_t x = 0; x < m.size; ++x) {
        if (!in[x]) continue;
        for (std::uint32_t y = 0; y < m.size; ++y) {
          if (!in[y]) continue;
          std::uint32_t z = m.plus(x, y);
          if (!in[z]) in[z] = 1, grew = true;
        }
        for (const auto& act : actions) {
          std::uint32_t z = act[x];
          if (!in[z]) in[z] = 1, grew = true;
        }
      }
    }
  };
  in[m.zero] = 1;
  close();
  for (std::uint32_t x = 0; x < m.size; ++x) {
    if (in[x]) continue;
    gens.push_back(x);
    in[x] = 1;
    close();
  }
  return gens;
}

std::vector<std::vector<std::uint32_t>> hom_search(
    const FinMonoid& m, const std::vector<std::vector<std::uint32_t>>& acts_m,
    const FinMonoid& n, const std::vector<std::vector<std::uint32_t>>& acts_n) {
  if (acts_m.size() != acts_n.size())
    throw MalformedError("hom search needs equally many actions on both sides");
  std::vector<std::vector<std::uint32_t>> result;
  const std::vector<std::uint32_t> gens = generators_under(m, acts_m);

  std::vector<int> h(m.size, -1);
  std::vector<std::uint32_t> queue;

  auto assign = [&](std::uint32_t x, std::uint32_t v) -> bool {
    if (h[x] >= 0) return h[x] == static_cast<int>(v);
    h[x] = static_cast<int>(v);
    queue.push_back(x);
    return true;
  };

  // Propagate h over sums and actions from the generator images; each pair
  // of set elements and each action application gets checked once.
  auto propagate = [&]() -> bool {
    std::size_t head = 0;
    while (head < queue.size()) {
      std::uint32_t x = queue[head++];
      for (std::uint32_t y = 0; y < m.size; ++y) {
        if (h[y] < 0) continue;
        if (!assign(m.plus(x, y), n.plus(h[x], h[y]))) return false;
      }
      for (std::size_t a = 0; a < acts_m.size(); ++a)
        if (!assign(acts_m[a][x], acts_n[a][h[x]])) return false;
    }
    return true;
  };

  std::vector<std::uint32_t> images(gens.size(), 0);
  while (true) {
    h.assign(m.size, -1);
    queue.clear();
    bool ok = assign(m.zero, n.zero);
    for (std::size_t i = 0; ok && i < gens.size(); ++i) ok = assign(gens[i], images[i]);
    if (ok) ok = propagate();
    if (ok) {
      std::vector<std::uint32_t> full(m.size);
      for (std::uint32_t x = 0; x < m.size; ++x) full[x] = static_cast<std::uint32_t>(h[x]);
      result.push_back(std::move(full));
    }
    // odometer over generator images
    std::size_t i = 0;
    for (; i < images.size(); ++i) {
      if (++images[i] < n.size) break;
      images[i] = 0;
    }
    if (i == images.size()) break;
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::string canon_serialize(const FinMonoid& m,
                            const std::vector<std::vector<std::uint32_t>>& actions,
                            std::size_t bound) {
  const std::uint32_t n = m.size;
  if (n > bound)
    throw BoundError("canonical form bounded at " + std::to_string(bound) + " elements, got " +
                     std::to_string(n));
  const std::size_t total = static_cast<std::size_t>(n) * n + actions.size() * n;

  std::vector<std::uint32_t> old_of_new(n), new_of_old(n);
  std::vector<std::uint32_t> rest;
  for (std::uint32_t i = 0; i < n; ++i)
    if (i != m.zero) rest.push_back(i);

  std::vector<std::uint8_t> best;
  auto emit_all = [&](std::vector<std::uint8_t>& out) {
    out.clear();
    out.reserve(total);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        out.push_back(static_cast<std::uint8_t>(new_of_old[m.add[old_of_new[i]][old_of_new[j]]]));
    for (const auto& act : actions)
      for (std::uint32_t x = 0; x < n; ++x)
        out.push_back(static_cast<std::uint8_t>(new_of_old[act[old_of_new[x]]]));
  };

  do {
    old_of_new[0] = m.zero;
    for (std::uint32_t i = 0; i < rest.size(); ++i) old_of_new[i + 1] = rest[i];
    for (std::uint32_t i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;

    if (best.empty() && total != 0) {
      emit_all(best);
      continue;
    }
    // streaming compare with early exit
    std::size_t pos = 0;
    int cmp = 0;
    for (std::uint32_t i = 0; i < n && cmp == 0; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::uint8_t v = static_cast<std::uint8_t>(new_of_old[m.add[old_of_new[i]][old_of_new[j]]]);
        if (v != best[pos]) {
          cmp = v < best[pos] ? -1 : 1;
          break;
        }
        ++pos;
      }
    for (std::size_t a = 0; a < actions.size() && cmp == 0; ++a)
      for (std::uint32_t x = 0; x < n; ++x) {
        std::uint8_t v = static_cast<std::uint8_t>(new_of_old[actions[a][old_of_new[x]]]);
        if (v != best[pos]) {
          cmp = v < best[pos] ? -1 : 1;
          break;
        }
        ++pos;
      }
    if (cmp < 0) emit_all(best);
  } while (std::next_permutation(rest.begin(), rest.end()));

  static const char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string s = "n=" + std::to_string(n) + ";k=" + std::to_string(actions.size()) + ";";
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i == static_cast<std::size_t>(n) * n || (i > static_cast<std::size_t>(n) * n &&
                                                 (i - static_cast<std::size_t>(n) * n) % n == 0))
      s += '.';
    s += digits[best[i]];
  }
  return s;
}

}  // namespace detail

}  // namespace semimod
