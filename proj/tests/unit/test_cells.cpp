#include <doctest.h>

#include <algorithm>

#include "semimod/cells.hpp"
#include "semimod/classify.hpp"
#include "semimod/presets.hpp"

using namespace semimod;

namespace {

std::vector<std::uint32_t> cell_by_names(const BasedSemiring& r,
                                         std::vector<std::string> names) {
  std::vector<std::uint32_t> out;
  for (const auto& n : names) out.push_back(r.basis_index(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("booleanization of KL(S3)") {
  const BasedSemiring r = kl_dihedral(3);
  const BoolSupportAlgebra b = booleanize(r);
  const std::uint32_t e = r.basis_index("e"), s = r.basis_index("s"), ts = r.basis_index("ts"),
                      w0 = r.basis_index("w0");
  CHECK(b.supp_mult[s][ts] == std::vector<std::uint32_t>{s, w0});
  for (std::uint32_t x = 0; x < 6; ++x)
    CHECK(b.supp_mult[e][x] == std::vector<std::uint32_t>{x});
  CHECK(b.supp_mult[w0][w0] == std::vector<std::uint32_t>{w0});
}

TEST_CASE("cell decomposition of KL(S3)") {
  const BasedSemiring r = kl_dihedral(3);
  const CellDecomposition d = cell_decomposition(r);
  REQUIRE(d.two_cells.size() == 3);
  REQUIRE(d.left_cells.size() == 4);
  REQUIRE(d.right_cells.size() == 4);

  const std::uint32_t s = r.basis_index("s");
  CHECK(d.left_cells[d.left_cell_of[s]] == cell_by_names(r, {"s", "ts"}));
  CHECK(d.right_cells[d.right_cell_of[s]] == cell_by_names(r, {"s", "st"}));
  CHECK(d.two_cells[d.two_cell_of[s]] == cell_by_names(r, {"s", "t", "st", "ts"}));
  for (std::uint32_t c = 0; c < 3; ++c) {
    CHECK(d.idempotent[c]);
    CHECK(d.strongly_regular[c]);
  }
  // two-sided order: {e} < J < {w0}
  const std::uint32_t ce = d.two_cell_of[r.basis_index("e")], cj = d.two_cell_of[s],
                      cw = d.two_cell_of[r.basis_index("w0")];
  CHECK(d.two_cells_leq(ce, cj));
  CHECK(d.two_cells_leq(cj, cw));
  CHECK(!d.two_cells_leq(cw, cj));
  CHECK(!d.two_cells_leq(cj, ce));
}

TEST_CASE("group semiring has a single two-sided cell") {
  const BasedSemiring r = group_semiring(symmetric3());
  const CellDecomposition d = cell_decomposition(r);
  CHECK(d.two_cells.size() == 1);
  CHECK(d.left_cells.size() == 1);
  CHECK(d.two_cells[0].size() == 6);
  CHECK(d.idempotent[0]);
  CHECK(!d.strongly_regular[0]);  // the single H-cell is the whole basis
}

TEST_CASE("KL(D8) is not strongly regular in the middle cell") {
  const BasedSemiring r = kl_dihedral(4);
  const CellDecomposition d = cell_decomposition(r);
  REQUIRE(d.two_cells.size() == 3);
  const std::uint32_t s = r.basis_index("s");
  const std::uint32_t cj = d.two_cell_of[s];
  CHECK(d.idempotent[cj]);
  CHECK(!d.strongly_regular[cj]);
  const auto h = d.h_cells[d.left_cell_of[s]][d.right_cell_of[s]];
  CHECK(h == cell_by_names(r, {"s", "sts"}));
}

TEST_CASE("cell semimodules of KL(S3) are the named fixtures") {
  auto ring = make_semiring(kl_dihedral(3));
  const BasedSemiring& r = ring->based();
  const CellDecomposition d = cell_decomposition(r);
  const IsoClassCatalog cat = builtin_catalog("s3-kl");
  const std::uint32_t e = r.basis_index("e"), s = r.basis_index("s"),
                      w0 = r.basis_index("w0");

  Semimodule c_e = cell_semimodule(ring, {e});
  Semimodule c_w0 = cell_semimodule(ring, {w0});
  Semimodule c_ls = cell_semimodule(ring, d.left_cells[d.left_cell_of[s]]);
  CHECK(validate_semimodule(c_e).empty());
  CHECK(validate_semimodule(c_ls).empty());
  CHECK(are_isomorphic(c_e, cat.find("M2")->module));
  CHECK(are_isomorphic(c_w0, cat.find("M1")->module));
  CHECK(are_isomorphic(c_ls, cat.find("M4")->module));

  // the unit acts as the identity, w0 kills the singleton {s}
  for (std::uint32_t x = 0; x < c_ls.carrier.size; ++x) CHECK(c_ls.actions[e][x] == x);
  CHECK(c_ls.actions[w0][1] == 0);

  CHECK_THROWS_AS(cell_semimodule(ring, {s}), ArgError);  // {s} is not a left cell
}

TEST_CASE("reduced cell semimodule matches the dihedral two-generator table") {
  for (std::uint32_t n : {4u, 5u, 6u}) {
    auto ring = make_semiring(kl_dihedral(n));
    const BasedSemiring& r = ring->based();
    const CellDecomposition d = cell_decomposition(r);
    const std::uint32_t s = r.basis_index("s"), t = r.basis_index("t"),
                        w0 = r.basis_index("w0");
    const auto& left_s = d.left_cells[d.left_cell_of[s]];
    Semimodule red = reduced_cell_semimodule(ring, left_s);
    CHECK(validate_semimodule(red).empty());
    REQUIRE(red.carrier.size == 4);

    // bit 0 is the H-cell of s (in R_s), bit 1 the H-cell through R_t; the
    // action sends x to y across right cells and w0 kills everything
    const std::uint32_t x = 1, y = 2;
    for (std::uint32_t g = 0; g < r.basis_size(); ++g) {
      if (g == w0) {
        CHECK(red.actions[g][x] == 0);
        CHECK(red.actions[g][y] == 0);
      } else if (static_cast<int>(g) == r.basis_index("e")) {
        CHECK(red.actions[g][x] == x);
        CHECK(red.actions[g][y] == y);
      } else if (d.right_cell_of[g] == d.right_cell_of[t]) {
        CHECK(red.actions[g][x] == y);
        CHECK(red.actions[g][y] == y);
      } else {
        CHECK(red.actions[g][x] == x);
        CHECK(red.actions[g][y] == x);
      }
    }
    CHECK(is_minimal(red));
    CHECK(!is_elementary(red));

    // collapse C_L ->> reduced C_L is a surjective homomorphism
    Semimodule full = cell_semimodule(ring, left_s);
    Hom collapse = cell_collapse_hom(ring, left_s);
    CHECK(is_hom(full, red, collapse.map));
    std::vector<char> hit(red.carrier.size, 0);
    for (auto v : collapse.map) hit[v] = 1;
    CHECK(std::count(hit.begin(), hit.end(), 1) == static_cast<long>(red.carrier.size));
  }
}

TEST_CASE("reduced equals plain for the strongly regular case") {
  auto ring = make_semiring(kl_dihedral(3));
  const BasedSemiring& r = ring->based();
  const CellDecomposition d = cell_decomposition(r);
  const auto& left_s = d.left_cells[d.left_cell_of[r.basis_index("s")]];
  CHECK(are_isomorphic(cell_semimodule(ring, left_s), reduced_cell_semimodule(ring, left_s)));
}

TEST_CASE("nilpotent cell: plain cell module works, reduced refuses") {
  // basis {1, a} with a*a = 0: the cell {a} is nilpotent
  std::vector<std::vector<NatVec>> mult = {{NatVec({1, 0}), NatVec({0, 1})},
                                           {NatVec({0, 1}), NatVec({0, 0})}};
  auto ring = make_semiring(BasedSemiring({"1", "a"}, NatVec({1, 0}), std::move(mult)));
  CHECK(ring->validate().empty());
  const CellDecomposition d = cell_decomposition(ring->based());
  REQUIRE(d.two_cells.size() == 2);
  const std::uint32_t ca = d.two_cell_of[1];
  CHECK(!d.idempotent[ca]);
  Semimodule c = cell_semimodule(ring, {1});
  CHECK(validate_semimodule(c).empty());
  CHECK(c.actions[1][1] == 0);  // a acts as zero on its own cell module
  CHECK_THROWS_AS(reduced_cell_semimodule(ring, {1}), CellError);
}

TEST_CASE("oversized cell carriers are refused") {
  // the group semiring of a large group has a single left cell, and its
  // cell semimodule carrier would be the full power set
  auto ring = make_semiring(group_semiring(group_preset("d16")));
  const CellDecomposition d = cell_decomposition(ring->based());
  REQUIRE(d.left_cells.size() == 1);
  CHECK_THROWS_AS(cell_semimodule(ring, d.left_cells[0]), BoundError);
}

TEST_CASE("apex of the named fixtures") {
  const IsoClassCatalog cat = builtin_catalog("s3-kl");
  const BasedSemiring r = kl_dihedral(3);
  const CellDecomposition d = cell_decomposition(r);
  const std::uint32_t ce = d.two_cell_of[r.basis_index("e")],
                      cj = d.two_cell_of[r.basis_index("s")],
                      cw = d.two_cell_of[r.basis_index("w0")];
  CHECK(apex(cat.find("M4")->module, d) == cj);
  CHECK(apex(cat.find("M1")->module, d) == cw);
  CHECK(apex(cat.find("M2")->module, d) == ce);
  CHECK(apex(cat.find("M5")->module, d) == cj);
  CHECK_THROWS_AS(apex(cat.find("M7")->module, d), ArgError);  // not minimal
}

TEST_CASE("annihilating cells") {
  const IsoClassCatalog cat = builtin_catalog("s3-kl");
  const BasedSemiring r = kl_dihedral(3);
  const CellDecomposition d = cell_decomposition(r);
  const std::uint32_t cw = d.two_cell_of[r.basis_index("w0")];

  const auto m3_flags = annihilator_cells(cat.find("M3")->module, d);
  for (std::uint32_t c = 0; c < 3; ++c) CHECK(m3_flags[c] == (c == cw ? 1 : 0));

  const auto m1_flags = annihilator_cells(cat.find("M1")->module, d);
  CHECK(std::count(m1_flags.begin(), m1_flags.end(), 1) == 0);

  const auto zero_flags = annihilator_cells(zero_semimodule(cat.find("M1")->module.ring), d);
  CHECK(std::count(zero_flags.begin(), zero_flags.end(), 1) == 3);

  // a hand-built invalid action set with a half-annihilating middle cell
  Semimodule fake = cat.find("M1")->module;
  fake.actions[r.basis_index("s")] = {0, 0};
  CHECK_THROWS_AS(annihilator_cells(fake, d), CellError);

  CHECK_THROWS_AS(annihilator_cells(module_fixture("z-cyclic:3"), d), Error);
}
