#include "semimod/dot.hpp"

#include <sstream>

namespace semimod {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Semimodule& m, std::vector<std::uint32_t> generators) {
  if (!m.carrier.is_semilattice())
    throw ArgError("DOT export needs an additively idempotent carrier");
  if (generators.empty() && m.ring) {
    for (const char* name : {"s", "t"}) {
      for (std::size_t g = 0; g < m.ring->generator_count(); ++g)
        if (m.ring->generator_name(g) == name) generators.push_back(static_cast<std::uint32_t>(g));
    }
  }
  for (auto g : generators)
    if (g >= m.actions.size()) throw ArgError("generator index out of range");

  const std::uint32_t n = m.carrier.size;
  std::ostringstream os;
  os << "digraph semimodule {\n";
  os << "  rankdir=BT;\n";
  for (std::uint32_t x = 0; x < n; ++x)
    os << "  n" << x << " [label=" << quoted(m.label(x)) << ", shape=plaintext];\n";

  // Hasse covers of the natural order x <= y iff x + y = y.
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      if (x == y || !m.carrier.leq(x, y)) continue;
      bool cover = true;
      for (std::uint32_t z = 0; z < n && cover; ++z)
        cover = z == x || z == y || !(m.carrier.leq(x, z) && m.carrier.leq(z, y));
      if (cover) os << "  n" << x << " -> n" << y << " [dir=none, style=solid];\n";
    }

  const char* styles[] = {"dashed", "dotted"};
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto g = generators[gi];
    const std::string style = gi < 2 ? styles[gi] : "solid";
    for (std::uint32_t x = 0; x < n; ++x)
      os << "  n" << x << " -> n" << m.actions[g][x] << " [style=" << style
         << ", color=gray40, label=" << quoted(m.ring->generator_name(g)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string cells_dot(const BasedSemiring& r, const CellDecomposition& d) {
  std::ostringstream os;
  os << "digraph cells {\n  rankdir=BT;\n";
  auto cell_label = [&](std::uint32_t c) {
    std::string s;
    for (auto i : d.two_cells[c]) s += (s.empty() ? "" : " ") + r.basis_name(i);
    return s;
  };
  for (std::uint32_t c = 0; c < d.two_cells.size(); ++c)
    os << "  c" << c << " [label=" << quoted(cell_label(c)) << ", shape=box];\n";
  // covers of the two-sided order
  for (std::uint32_t a = 0; a < d.two_cells.size(); ++a)
    for (std::uint32_t b = 0; b < d.two_cells.size(); ++b) {
      if (a == b || !d.two_cells_leq(a, b)) continue;
      bool cover = true;
      for (std::uint32_t c = 0; c < d.two_cells.size() && cover; ++c)
        cover = c == a || c == b || !(d.two_cells_leq(a, c) && d.two_cells_leq(c, b));
      if (cover) os << "  c" << a << " -> c" << b << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace semimod
