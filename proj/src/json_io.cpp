#include "semimod/json_io.hpp"

#include <fstream>

namespace semimod {

namespace {

const Json& expect(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw MalformedError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw MalformedError(path + ": missing key \"" + key + "\"");
  return *it;
}

std::uint64_t expect_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned())
    throw MalformedError(path + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint32_t expect_index(const Json& j, std::uint64_t limit, const std::string& path) {
  const std::uint64_t v = expect_uint(j, path);
  if (v >= limit)
    throw MalformedError(path + ": index " + std::to_string(v) + " out of range (< " +
                         std::to_string(limit) + ")");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> expect_names(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw MalformedError(path + ": expected a non-empty array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string())
      throw MalformedError(path + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> expect_index_table(const Json& j, std::uint64_t limit,
                                                           const std::string& path) {
  if (!j.is_array()) throw MalformedError(path + ": expected an array");
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw MalformedError(rp + ": expected an array");
    std::vector<std::uint32_t> r;
    for (std::size_t c = 0; c < row.size(); ++c)
      r.push_back(expect_index(row[c], limit, rp + "[" + std::to_string(c) + "]"));
    out.push_back(std::move(r));
  }
  return out;
}

NatVec expect_natvec(const Json& j, const std::string& path) {
  if (!j.is_array()) throw MalformedError(path + ": expected an array");
  NatVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.coeffs.push_back(expect_uint(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Json natvec_to_json(const NatVec& v) {
  Json a = Json::array();
  for (auto c : v.coeffs) a.push_back(c);
  return a;
}

}  // namespace

Json semiring_to_json(const Semiring& r) {
  Json j;
  if (r.is_based()) {
    const BasedSemiring& b = r.based();
    j["kind"] = "based";
    j["basis"] = b.basis_names();
    j["unit"] = natvec_to_json(b.unit());
    Json mult = Json::array();
    for (std::size_t i = 0; i < b.basis_size(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < b.basis_size(); ++k) row.push_back(natvec_to_json(b.mult(i, k)));
      mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
  } else {
    const FiniteSemiring& f = r.finite();
    j["kind"] = "finite";
    j["elements"] = f.element_names();
    j["add"] = f.add_table();
    j["mul"] = f.mul_table();
    j["zero"] = f.zero();
    j["one"] = f.one();
  }
  return j;
}

Semiring semiring_from_json(const Json& j) {
  const Json& kind = expect(j, "kind", "$");
  if (!kind.is_string()) throw MalformedError("$.kind: expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "based") {
    auto basis = expect_names(expect(j, "basis", "$"), "$.basis");
    NatVec unit = expect_natvec(expect(j, "unit", "$"), "$.unit");
    const Json& mult = expect(j, "mult", "$");
    if (!mult.is_array() || mult.size() != basis.size())
      throw MalformedError("$.mult: expected one row per basis element");
    std::vector<std::vector<NatVec>> table;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      const std::string rp = "$.mult[" + std::to_string(i) + "]";
      if (!mult[i].is_array() || mult[i].size() != basis.size())
        throw MalformedError(rp + ": expected one entry per basis element");
      std::vector<NatVec> row;
      for (std::size_t c = 0; c < mult[i].size(); ++c) {
        NatVec v = expect_natvec(mult[i][c], rp + "[" + std::to_string(c) + "]");
        if (v.size() != basis.size())
          throw MalformedError(rp + "[" + std::to_string(c) + "]: coefficient vector length " +
                               std::to_string(v.size()) + " differs from basis size " +
                               std::to_string(basis.size()));
        row.push_back(std::move(v));
      }
      table.push_back(std::move(row));
    }
    if (unit.size() != basis.size())
      throw MalformedError("$.unit: length differs from basis size");
    return Semiring(BasedSemiring(std::move(basis), std::move(unit), std::move(table)));
  }
  if (k == "finite") {
    auto names = expect_names(expect(j, "elements", "$"), "$.elements");
    const std::uint64_t n = names.size();
    auto add = expect_index_table(expect(j, "add", "$"), n, "$.add");
    auto mul = expect_index_table(expect(j, "mul", "$"), n, "$.mul");
    if (add.size() != n) throw MalformedError("$.add: expected one row per element");
    if (mul.size() != n) throw MalformedError("$.mul: expected one row per element");
    for (std::size_t i = 0; i < n; ++i) {
      if (add[i].size() != n) throw MalformedError("$.add[" + std::to_string(i) + "]: wrong length");
      if (mul[i].size() != n) throw MalformedError("$.mul[" + std::to_string(i) + "]: wrong length");
    }
    std::uint32_t zero = expect_index(expect(j, "zero", "$"), n, "$.zero");
    std::uint32_t one = expect_index(expect(j, "one", "$"), n, "$.one");
    return Semiring(FiniteSemiring(std::move(names), std::move(add), std::move(mul), zero, one));
  }
  throw MalformedError("$.kind: expected \"based\" or \"finite\"");
}

Json semimodule_to_json(const Semimodule& m) {
  Json j;
  j["semiring"] = semiring_to_json(*m.ring);
  j["size"] = m.carrier.size;
  j["zero"] = m.carrier.zero;
  j["add"] = m.carrier.add;
  j["actions"] = m.actions;
  return j;
}

Semimodule semimodule_from_json(const Json& j, const std::string& base_dir) {
  const Json& ring_field = expect(j, "semiring", "$");
  Semiring ring = [&] {
    if (ring_field.is_string()) {
      std::string path = ring_field.get<std::string>();
      if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
      return semiring_from_json(load_json_file(path));
    }
    return semiring_from_json(ring_field);
  }();

  Semimodule m;
  m.ring = std::make_shared<Semiring>(std::move(ring));
  const std::uint64_t n = expect_uint(expect(j, "size", "$"), "$.size");
  if (n == 0) throw MalformedError("$.size: carrier must be non-empty");
  if (n > 4096) throw MalformedError("$.size: carrier too large");
  m.carrier.size = static_cast<std::uint32_t>(n);
  m.carrier.zero = expect_index(expect(j, "zero", "$"), n, "$.zero");
  m.carrier.add = expect_index_table(expect(j, "add", "$"), n, "$.add");
  if (m.carrier.add.size() != n) throw MalformedError("$.add: expected one row per element");
  for (std::size_t i = 0; i < n; ++i)
    if (m.carrier.add[i].size() != n)
      throw MalformedError("$.add[" + std::to_string(i) + "]: wrong length");
  m.actions = expect_index_table(expect(j, "actions", "$"), n, "$.actions");
  if (m.actions.size() != m.ring->generator_count())
    throw MalformedError("$.actions: expected " + std::to_string(m.ring->generator_count()) +
                         " action tables, got " + std::to_string(m.actions.size()));
  for (std::size_t i = 0; i < m.actions.size(); ++i)
    if (m.actions[i].size() != n)
      throw MalformedError("$.actions[" + std::to_string(i) + "]: wrong length");
  return m;
}

Json congruence_to_json(const Congruence& c) {
  Json j;
  j["blocks"] = c.blocks;
  return j;
}

Congruence congruence_from_json(const Json& j) {
  const Json& blocks = expect(j, "blocks", "$");
  if (!blocks.is_array() || blocks.empty())
    throw MalformedError("$.blocks: expected a non-empty array");
  Congruence c;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string bp = "$.blocks[" + std::to_string(b) + "]";
    if (!blocks[b].is_array() || blocks[b].empty())
      throw MalformedError(bp + ": expected a non-empty array");
    std::vector<std::uint32_t> block;
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      const std::uint64_t v = expect_uint(blocks[b][i], bp + "[" + std::to_string(i) + "]");
      block.push_back(static_cast<std::uint32_t>(v));
    }
    c.blocks.push_back(std::move(block));
  }
  return c;
}

Json cells_to_json(const BasedSemiring& r, const CellDecomposition& d) {
  auto names_of = [&](const std::vector<std::uint32_t>& cell) {
    Json a = Json::array();
    for (auto i : cell) a.push_back(r.basis_name(i));
    return a;
  };
  Json j;
  Json left = Json::array(), right = Json::array(), two = Json::array();
  for (const auto& c : d.left_cells) left.push_back(names_of(c));
  for (const auto& c : d.right_cells) right.push_back(names_of(c));
  for (std::uint32_t c = 0; c < d.two_cells.size(); ++c) {
    Json entry;
    entry["members"] = names_of(d.two_cells[c]);
    entry["idempotent"] = d.idempotent[c] != 0;
    entry["strongly_regular"] = d.strongly_regular[c] != 0;
    two.push_back(std::move(entry));
  }
  j["left_cells"] = std::move(left);
  j["right_cells"] = std::move(right);
  j["two_sided_cells"] = std::move(two);
  return j;
}

Json suite_report_to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["missing"] = r.missing;
  j["extra"] = r.extra;
  j["pass"] = r.pass;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedError(path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw MalformedError("cannot write " + path);
  out << dump_json(j);
}

}  // namespace semimod
