#include "semimod/cells.hpp"

#include <algorithm>
#include <map>

namespace semimod {

BoolSupportAlgebra booleanize(const BasedSemiring& r) {
  const std::size_t k = r.basis_size();
  BoolSupportAlgebra b;
  b.basis_size = k;
  b.supp_mult.assign(k, std::vector<std::vector<std::uint32_t>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) b.supp_mult[i][j] = support(r.mult(i, j));
  return b;
}

namespace {

void transitive_reflexive_close(std::vector<std::vector<std::uint8_t>>& rel) {
  const std::size_t k = rel.size();
  for (std::size_t i = 0; i < k; ++i) rel[i][i] = 1;
  for (std::size_t h = 0; h < k; ++h)
    for (std::size_t i = 0; i < k; ++i) {
      if (!rel[i][h]) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (rel[h][j]) rel[i][j] = 1;
    }
}

std::vector<std::vector<std::uint32_t>> classes_of(const std::vector<std::vector<std::uint8_t>>& leq,
                                                   std::vector<std::uint32_t>& cell_of) {
  const std::size_t k = leq.size();
  std::vector<std::vector<std::uint32_t>> cells;
  cell_of.assign(k, 0);
  std::vector<char> done(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (done[i]) continue;
    std::vector<std::uint32_t> cell;
    for (std::uint32_t j = i; j < k; ++j)
      if (!done[j] && leq[i][j] && leq[j][i]) {
        cell.push_back(j);
        done[j] = 1;
        cell_of[j] = static_cast<std::uint32_t>(cells.size());
      }
    cells.push_back(std::move(cell));
  }
  return cells;
}

}  // namespace

CellDecomposition cell_decomposition(const BasedSemiring& r) {
  const std::size_t k = r.basis_size();
  CellDecomposition d;
  d.left_leq.assign(k, std::vector<std::uint8_t>(k, 0));
  d.right_leq.assign(k, std::vector<std::uint8_t>(k, 0));
  d.two_leq.assign(k, std::vector<std::uint8_t>(k, 0));

  // One-step relations with basis elements as multipliers; supports of sums
  // are unions of supports, so general multipliers add nothing after the
  // transitive closure.
  for (std::size_t h = 0; h < k; ++h)
    for (std::size_t i = 0; i < k; ++i) {
      for (auto j : support(r.mult(h, i))) d.left_leq[i][j] = 1;
      for (auto j : support(r.mult(i, h))) d.right_leq[i][j] = 1;
    }
  for (std::size_t h = 0; h < k; ++h)
    for (std::size_t i = 0; i < k; ++i) {
      const NatVec& left = r.mult(h, i);
      for (auto x : support(left))
        for (std::size_t m = 0; m < k; ++m)
          for (auto j : support(r.mult(x, m))) d.two_leq[i][j] = 1;
    }
  transitive_reflexive_close(d.left_leq);
  transitive_reflexive_close(d.right_leq);
  transitive_reflexive_close(d.two_leq);

  d.left_cells = classes_of(d.left_leq, d.left_cell_of);
  d.right_cells = classes_of(d.right_leq, d.right_cell_of);
  d.two_cells = classes_of(d.two_leq, d.two_cell_of);

  d.h_cells.assign(d.left_cells.size(),
                   std::vector<std::vector<std::uint32_t>>(d.right_cells.size()));
  for (std::uint32_t x = 0; x < k; ++x)
    d.h_cells[d.left_cell_of[x]][d.right_cell_of[x]].push_back(x);

  d.idempotent.assign(d.two_cells.size(), 0);
  d.strongly_regular.assign(d.two_cells.size(), 0);
  for (std::uint32_t c = 0; c < d.two_cells.size(); ++c) {
    const auto& cell = d.two_cells[c];
    for (auto x : cell)
      for (auto y : cell)
        for (auto z : support(r.mult(x, y)))
          if (d.two_cell_of[z] == c) d.idempotent[c] = 1;

    bool sr = true;
    for (std::uint32_t lc = 0; lc < d.left_cells.size() && sr; ++lc) {
      if (d.two_cell_of[d.left_cells[lc][0]] != c) continue;
      for (std::uint32_t rc = 0; rc < d.right_cells.size() && sr; ++rc) {
        if (d.two_cell_of[d.right_cells[rc][0]] != c) continue;
        sr = d.h_cells[lc][rc].size() == 1;
      }
    }
    d.strongly_regular[c] = sr;
  }
  return d;
}

namespace {

// Locate `left_cell` in the decomposition; throws unless it is exactly one
// of the left cells.
std::uint32_t find_left_cell(const CellDecomposition& d, std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  for (std::uint32_t lc = 0; lc < d.left_cells.size(); ++lc)
    if (d.left_cells[lc] == members) return lc;
  throw ArgError("the given set is not a left cell");
}

std::string mask_label(std::uint64_t mask, const std::vector<std::string>& bit_names) {
  std::string s;
  for (std::size_t b = 0; b < bit_names.size(); ++b)
    if (mask & (1ull << b)) s += (s.empty() ? "" : "+") + bit_names[b];
  return s.empty() ? "0" : s;
}

Semimodule boolean_power_semimodule(const SemiringPtr& r,
                                    const std::vector<std::vector<std::uint64_t>>& step,
                                    const std::vector<std::string>& bit_names) {
  const std::size_t bits = bit_names.size();
  // the carrier table is quadratic in 2^bits
  if (bits > 12) throw BoundError("cell semimodule carrier would exceed 2^12 elements");
  const std::uint32_t n = 1u << bits;
  Semimodule m;
  m.ring = r;
  m.carrier.size = n;
  m.carrier.zero = 0;
  m.carrier.add.assign(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) m.carrier.add[x][y] = x | y;
  m.actions.assign(step.size(), std::vector<std::uint32_t>(n, 0));
  for (std::size_t a = 0; a < step.size(); ++a)
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint64_t out = 0;
      for (std::size_t b = 0; b < bits; ++b)
        if (x & (1u << b)) out |= step[a][b];
      m.actions[a][x] = static_cast<std::uint32_t>(out);
    }
  m.labels.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) m.labels[x] = mask_label(x, bit_names);
  return m;
}

}  // namespace

Semimodule cell_semimodule(const SemiringPtr& r, const std::vector<std::uint32_t>& left_cell) {
  const BasedSemiring& br = r->based();
  const CellDecomposition d = cell_decomposition(br);
  const std::uint32_t lc = find_left_cell(d, left_cell);
  const auto& members = d.left_cells[lc];

  std::vector<int> bit_of(br.basis_size(), -1);
  for (std::size_t b = 0; b < members.size(); ++b) bit_of[members[b]] = static_cast<int>(b);

  const std::size_t k = br.basis_size();
  std::vector<std::vector<std::uint64_t>> step(k, std::vector<std::uint64_t>(members.size(), 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t b = 0; b < members.size(); ++b)
      for (auto z : support(br.mult(j, members[b])))
        if (bit_of[z] >= 0) step[j][b] |= 1ull << bit_of[z];

  std::vector<std::string> bit_names;
  for (auto x : members) bit_names.push_back(br.basis_name(x));
  return boolean_power_semimodule(r, step, bit_names);
}

namespace {

// H-cells of a left cell, as groups of basis indices by right cell, ordered
// by least member.
std::vector<std::vector<std::uint32_t>> h_cells_of_left_cell(const CellDecomposition& d,
                                                             const std::vector<std::uint32_t>& members) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_right;
  for (auto x : members) by_right[d.right_cell_of[x]].push_back(x);
  std::vector<std::vector<std::uint32_t>> parts;
  for (auto& [rc, xs] : by_right) parts.push_back(xs);
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

}  // namespace

Semimodule reduced_cell_semimodule(const SemiringPtr& r, const std::vector<std::uint32_t>& left_cell) {
  const BasedSemiring& br = r->based();
  const CellDecomposition d = cell_decomposition(br);
  const std::uint32_t lc = find_left_cell(d, left_cell);
  const auto& members = d.left_cells[lc];
  if (!d.idempotent[d.two_cell_of[members[0]]])
    throw CellError("reduced cell semimodule needs an idempotent two-sided cell");

  const auto parts = h_cells_of_left_cell(d, members);
  std::vector<int> part_of(br.basis_size(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (auto x : parts[p]) part_of[x] = static_cast<int>(p);

  const std::size_t k = br.basis_size();
  std::vector<std::vector<std::uint64_t>> step(k, std::vector<std::uint64_t>(parts.size(), 0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t p = 0; p < parts.size(); ++p)
      for (auto x : parts[p])
        for (auto y : support(br.mult(j, x)))
          if (part_of[y] >= 0) step[j][p] |= 1ull << part_of[y];

  std::vector<std::string> bit_names;
  for (const auto& part : parts) bit_names.push_back(br.basis_name(part.front()));
  return boolean_power_semimodule(r, step, bit_names);
}

Hom cell_collapse_hom(const SemiringPtr& r, const std::vector<std::uint32_t>& left_cell) {
  const BasedSemiring& br = r->based();
  const CellDecomposition d = cell_decomposition(br);
  const std::uint32_t lc = find_left_cell(d, left_cell);
  const auto& members = d.left_cells[lc];
  const auto parts = h_cells_of_left_cell(d, members);

  std::vector<std::uint32_t> bit_to_part(members.size(), 0);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (auto x : parts[p]) {
      auto it = std::find(members.begin(), members.end(), x);
      bit_to_part[static_cast<std::size_t>(it - members.begin())] = static_cast<std::uint32_t>(p);
    }

  Hom h;
  h.map.resize(1u << members.size());
  for (std::uint32_t mask = 0; mask < h.map.size(); ++mask) {
    std::uint32_t out = 0;
    for (std::size_t b = 0; b < members.size(); ++b)
      if (mask & (1u << b)) out |= 1u << bit_to_part[b];
    h.map[mask] = out;
  }
  return h;
}

std::vector<std::uint8_t> annihilator_cells(const Semimodule& m, const CellDecomposition& d) {
  if (!m.ring->is_based()) throw MalformedError("annihilator_cells needs a based semiring");
  if (!m.carrier.is_semilattice())
    throw ArgError("annihilator_cells needs an additively idempotent carrier");
  std::vector<std::uint8_t> flags(d.two_cells.size(), 0);
  for (std::uint32_t c = 0; c < d.two_cells.size(); ++c) {
    std::size_t killing = 0;
    for (auto x : d.two_cells[c]) {
      bool kills = true;
      for (std::uint32_t v = 0; v < m.carrier.size && kills; ++v)
        kills = m.actions[x][v] == m.carrier.zero;
      killing += kills;
    }
    if (killing == d.two_cells[c].size())
      flags[c] = 1;
    else if (killing != 0)
      throw CellError("two-sided cell " + std::to_string(c) +
                      " has both annihilating and non-annihilating elements");
  }
  return flags;
}

std::uint32_t apex(const Semimodule& m, const CellDecomposition& d) {
  if (!m.ring->is_based()) throw MalformedError("apex needs a based semiring");
  if (!is_minimal(m) || !is_proper(m))
    throw ArgError("apex is defined for minimal proper semimodules only");

  std::vector<std::uint32_t> candidates;
  for (std::uint32_t c = 0; c < d.two_cells.size(); ++c) {
    bool annihilates = true;
    for (auto x : d.two_cells[c])
      for (std::uint32_t v = 0; v < m.carrier.size && annihilates; ++v)
        annihilates = m.actions[x][v] == m.carrier.zero;
    if (!annihilates) candidates.push_back(c);
  }
  if (candidates.empty()) throw CellError("every two-sided cell annihilates the semimodule");

  std::vector<std::uint32_t> maximal;
  for (auto c : candidates) {
    bool is_max = true;
    for (auto c2 : candidates)
      if (c2 != c && d.two_cells_leq(c, c2) && !d.two_cells_leq(c2, c)) is_max = false;
    if (is_max) maximal.push_back(c);
  }
  if (maximal.size() != 1)
    throw CellError("apex is not unique; precondition violated");
  if (!d.idempotent[maximal[0]]) throw CellError("apex cell is not idempotent");
  return maximal[0];
}

}  // namespace semimod
