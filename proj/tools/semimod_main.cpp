#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "semimod/classify.hpp"
#include "semimod/dot.hpp"
#include "semimod/json_io.hpp"
#include "semimod/presets.hpp"

namespace {

using namespace semimod;

std::string dir_of(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  return parent.empty() ? "." : parent.string();
}

void emit(const std::string& out_path, const Json& j) {
  if (out_path.empty())
    std::cout << dump_json(j);
  else
    write_json_file(out_path, j);
}

Semimodule load_module(const std::string& path) {
  return semimodule_from_json(load_json_file(path), dir_of(path));
}

Json catalog_to_json(const IsoClassCatalog& cat, const std::string& kind) {
  Json j;
  j["kind"] = kind;
  j["count"] = cat.entries.size();
  Json classes = Json::array();
  for (const auto& e : cat.entries) {
    Json c;
    c["names"] = e.names;
    c["canon"] = e.canon;
    c["size"] = e.module.carrier.size;
    c["minimal"] = e.minimal;
    c["elementary"] = e.elementary;
    c["simple"] = e.simple;
    c["proper"] = e.proper;
    c["module"] = semimodule_to_json(e.module);
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

// left cell containing the named basis element
std::vector<std::uint32_t> left_cell_by_name(const BasedSemiring& r, const CellDecomposition& d,
                                             const std::string& repr) {
  const int idx = r.basis_index(repr);
  if (idx < 0) throw ArgError("no basis element named " + repr);
  return d.left_cells[d.left_cell_of[static_cast<std::uint32_t>(idx)]];
}

int run(int argc, char** argv) {
  CLI::App app{"finitely generated semirings and their finite semimodules"};
  app.require_subcommand(1);

  auto* cmd_build = app.add_subcommand("build", "construct a preset semiring");
  std::string preset, out_path;
  cmd_build->add_option("--preset", preset, "preset name")->required();
  cmd_build->add_option("-o,--output", out_path, "output file (default: stdout)");

  auto* cmd_validate = app.add_subcommand("validate", "validate a semiring or semimodule file");
  std::string validate_path;
  cmd_validate->add_option("file", validate_path)->required();

  auto* cmd_cells = app.add_subcommand("cells", "cell decomposition of a based semiring");
  std::string cells_path;
  bool cells_dot_flag = false;
  cmd_cells->add_option("file", cells_path)->required();
  cmd_cells->add_flag("--dot", cells_dot_flag, "emit the two-sided order as DOT");

  auto* cmd_cellmod = app.add_subcommand("cell-module", "cell semimodule of a left cell");
  std::string cellmod_path, cellmod_repr, cellmod_out;
  bool cellmod_reduced = false;
  cmd_cellmod->add_option("file", cellmod_path)->required();
  cmd_cellmod->add_option("--left-cell", cellmod_repr, "basis element naming the left cell")
      ->required();
  cmd_cellmod->add_flag("--reduced", cellmod_reduced, "reduced cell semimodule");
  cmd_cellmod->add_option("-o,--output", cellmod_out, "output file (default: stdout)");

  auto* cmd_check = app.add_subcommand("check", "flags and apex of a semimodule");
  std::string check_ring, check_mod;
  cmd_check->add_option("semiring", check_ring)->required();
  cmd_check->add_option("module", check_mod)->required();

  auto* cmd_classify = app.add_subcommand("classify", "bounded classification up to isomorphism");
  std::string classify_ring, classify_out_dir, classify_kinds = "minimal,elementary,simple";
  std::string classify_monoids;
  std::size_t classify_max = 4;
  bool classify_proper = false;
  cmd_classify->add_option("semiring", classify_ring)->required();
  cmd_classify->add_option("--max-size", classify_max, "carrier size bound");
  cmd_classify->add_option("--kinds", classify_kinds, "comma-separated kinds");
  cmd_classify->add_flag("--proper", classify_proper, "proper semimodules only");
  cmd_classify->add_option("--monoids", classify_monoids,
                           "carrier class override: all or semilattice");
  cmd_classify->add_option("-o,--output", classify_out_dir, "output directory");

  auto* cmd_quot = app.add_subcommand("quotients", "quotients of a semimodule up to isomorphism");
  std::string quot_path;
  cmd_quot->add_option("file", quot_path)->required();

  auto* cmd_iso = app.add_subcommand("iso", "isomorphism test");
  std::string iso_a, iso_b;
  bool iso_semirings = false;
  cmd_iso->add_option("a", iso_a)->required();
  cmd_iso->add_option("b", iso_b)->required();
  cmd_iso->add_flag("--semirings", iso_semirings, "compare two finite semirings instead");

  auto* cmd_homs = app.add_subcommand("homs", "all homomorphisms between two semimodules");
  std::string homs_a, homs_b;
  cmd_homs->add_option("a", homs_a)->required();
  cmd_homs->add_option("b", homs_b)->required();

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  cmd_verify->add_option("--suite", suite, "suite name")->required();

  auto* cmd_dot = app.add_subcommand("export-dot", "DOT diagram of a semilattice semimodule");
  std::string dot_path, dot_generators;
  cmd_dot->add_option("file", dot_path)->required();
  cmd_dot->add_option("--generators", dot_generators, "comma-separated generator names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_build->parsed()) {
    emit(out_path, semiring_to_json(*build_preset(preset)));
    return 0;
  }

  if (cmd_validate->parsed()) {
    const Json j = load_json_file(validate_path);
    std::vector<std::string> report;
    if (j.is_object() && j.contains("kind")) {
      report = semiring_from_json(j).validate();
    } else {
      report = validate_semimodule(semimodule_from_json(j, dir_of(validate_path)));
    }
    for (const auto& line : report) std::cout << line << "\n";
    if (report.empty()) std::cout << "valid\n";
    return report.empty() ? 0 : 1;
  }

  if (cmd_cells->parsed()) {
    const Semiring r = semiring_from_json(load_json_file(cells_path));
    const CellDecomposition d = cell_decomposition(r.based());
    if (cells_dot_flag)
      std::cout << cells_dot(r.based(), d);
    else
      std::cout << dump_json(cells_to_json(r.based(), d));
    return 0;
  }

  if (cmd_cellmod->parsed()) {
    auto ring = std::make_shared<Semiring>(semiring_from_json(load_json_file(cellmod_path)));
    const CellDecomposition d = cell_decomposition(ring->based());
    const auto cell = left_cell_by_name(ring->based(), d, cellmod_repr);
    Semimodule m =
        cellmod_reduced ? reduced_cell_semimodule(ring, cell) : cell_semimodule(ring, cell);
    emit(cellmod_out, semimodule_to_json(m));
    return 0;
  }

  if (cmd_check->parsed()) {
    auto ring = std::make_shared<Semiring>(semiring_from_json(load_json_file(check_ring)));
    Semimodule m = load_module(check_mod);
    if (!(*m.ring == *ring)) throw ArgError("module is not over the given semiring");
    Json out;
    const auto report = validate_semimodule(m);
    out["valid"] = report.empty();
    if (!report.empty()) {
      out["report"] = report;
      std::cout << dump_json(out);
      return 1;
    }
    out["proper"] = is_proper(m);
    out["minimal"] = is_minimal(m);
    out["elementary"] = is_elementary(m);
    out["simple"] = is_simple(m);
    if (ring->is_based() && out["minimal"].get<bool>() && out["proper"].get<bool>()) {
      const CellDecomposition d = cell_decomposition(ring->based());
      const std::uint32_t a = apex(m, d);
      Json members = Json::array();
      for (auto i : d.two_cells[a]) members.push_back(ring->based().basis_name(i));
      out["apex"] = std::move(members);
    } else {
      out["apex"] = nullptr;
    }
    std::cout << dump_json(out);
    return 0;
  }

  if (cmd_classify->parsed()) {
    auto ring = std::make_shared<Semiring>(semiring_from_json(load_json_file(classify_ring)));
    std::vector<std::string> kinds;
    for (std::size_t pos = 0; pos <= classify_kinds.size();) {
      auto comma = classify_kinds.find(',', pos);
      if (comma == std::string::npos) comma = classify_kinds.size();
      if (comma > pos) kinds.push_back(classify_kinds.substr(pos, comma - pos));
      pos = comma + 1;
    }
    for (const auto& k : kinds)
      if (k != "minimal" && k != "elementary" && k != "simple")
        throw ArgError("unknown kind: " + k);

    Json summary;
    auto store = [&](const std::string& kind, const IsoClassCatalog& cat) {
      summary[kind] = cat.entries.size();
      if (!classify_out_dir.empty()) {
        std::filesystem::create_directories(classify_out_dir);
        write_json_file(classify_out_dir + "/" + kind + ".json", catalog_to_json(cat, kind));
      }
    };

    if (!classify_monoids.empty()) {
      if (classify_monoids != "all" && classify_monoids != "semilattice")
        throw ArgError("--monoids takes all or semilattice");
      EnumConfig cfg{classify_max,
                     classify_monoids == "all" ? MonoidClass::all_commutative
                                               : MonoidClass::semilattice,
                     classify_proper};
      IsoClassCatalog cat = enumerate_semimodules(ring, cfg);
      for (const auto& kind : kinds) {
        IsoClassCatalog sub;
        sub.name = kind;
        for (const auto& e : cat.entries) {
          if (kind == "minimal" && !e.minimal) continue;
          if (kind == "elementary" && !e.elementary) continue;
          if (kind == "simple" && !e.simple) continue;
          sub.entries.push_back(e);
        }
        store(kind, sub);
      }
    } else {
      ExtremeReport rep = classify_extreme(ring, classify_max, classify_proper);
      for (const auto& kind : kinds)
        store(kind, kind == "minimal" ? rep.minimal
                                      : (kind == "elementary" ? rep.elementary : rep.simple));
      Json notes = Json::array();
      for (const auto& n : rep.notes) notes.push_back(n);
      summary["notes"] = std::move(notes);
    }
    summary["max_size"] = classify_max;
    summary["proper"] = classify_proper;
    std::cout << dump_json(summary);
    return 0;
  }

  if (cmd_quot->parsed()) {
    Semimodule m = load_module(quot_path);
    QuotientReport rep = quotients_up_to_iso(m);
    Json out;
    out["all"] = catalog_to_json(rep.all, "quotients")["classes"];
    out["nontrivial"] = catalog_to_json(rep.nontrivial, "nontrivial")["classes"];
    out["nontrivial_count"] = rep.nontrivial.entries.size();
    std::cout << dump_json(out);
    return 0;
  }

  if (cmd_iso->parsed()) {
    bool same = false;
    if (iso_semirings) {
      const Semiring a = semiring_from_json(load_json_file(iso_a));
      const Semiring b = semiring_from_json(load_json_file(iso_b));
      same = finite_semirings_isomorphic(a.finite(), b.finite());
    } else {
      same = are_isomorphic(load_module(iso_a), load_module(iso_b));
    }
    std::cout << (same ? "isomorphic\n" : "not isomorphic\n");
    return same ? 0 : 1;
  }

  if (cmd_homs->parsed()) {
    Semimodule a = load_module(homs_a), b = load_module(homs_b);
    const auto hs = homs(a, b);
    Json out;
    out["count"] = hs.size();
    Json maps = Json::array();
    for (const auto& h : hs) maps.push_back(h.map);
    out["maps"] = std::move(maps);
    std::cout << dump_json(out);
    return 0;
  }

  if (cmd_verify->parsed()) {
    const auto reports = verify_suite(suite);
    bool all_pass = true;
    for (const auto& r : reports) {
      std::cout << suite_report_to_json(r).dump() << "\n";
      all_pass = all_pass && r.pass;
    }
    std::cerr << (all_pass ? "PASS " : "FAIL ") << suite << "\n";
    return all_pass ? 0 : 1;
  }

  if (cmd_dot->parsed()) {
    Semimodule m = load_module(dot_path);
    std::vector<std::uint32_t> gens;
    std::size_t pos = 0;
    while (pos < dot_generators.size()) {
      auto comma = dot_generators.find(',', pos);
      if (comma == std::string::npos) comma = dot_generators.size();
      const std::string name = dot_generators.substr(pos, comma - pos);
      bool found = false;
      for (std::size_t g = 0; g < m.ring->generator_count(); ++g)
        if (m.ring->generator_name(g) == name) {
          gens.push_back(static_cast<std::uint32_t>(g));
          found = true;
        }
      if (!found) throw ArgError("no generator named " + name);
      pos = comma + 1;
    }
    std::cout << export_dot(m, gens);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const semimod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
