#ifndef SEMIMOD_CELLS_HPP_
#define SEMIMOD_CELLS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "semimod/semimodule.hpp"
#include "semimod/semiring.hpp"

namespace semimod {

// Support table of all basis products: the multisemigroup structure of the
// quotient of a based semiring by the support congruence.
struct BoolSupportAlgebra {
  std::size_t basis_size = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> supp_mult;  // [i][j] ascending
};

BoolSupportAlgebra booleanize(const BasedSemiring& r);

// Left/right/two-sided pre-orders on the basis, their cells, H-cells and
// per-two-sided-cell flags.
struct CellDecomposition {
  std::vector<std::vector<std::uint8_t>> left_leq, right_leq, two_leq;
  std::vector<std::vector<std::uint32_t>> left_cells, right_cells, two_cells;
  std::vector<std::uint32_t> left_cell_of, right_cell_of, two_cell_of;
  // h_cells[lc][rc]: intersection of left cell lc with right cell rc.
  std::vector<std::vector<std::vector<std::uint32_t>>> h_cells;
  std::vector<std::uint8_t> idempotent, strongly_regular;  // per two-sided cell

  bool two_cells_leq(std::uint32_t a, std::uint32_t b) const {
    return two_leq[two_cells[a][0]][two_cells[b][0]] != 0;
  }
};

CellDecomposition cell_decomposition(const BasedSemiring& r);

// Cell semimodule C_L: subsets of the left cell under union, with the
// support action truncated to L, pulled back to an R-semimodule.
Semimodule cell_semimodule(const SemiringPtr& r, const std::vector<std::uint32_t>& left_cell);

// Reduced cell semimodule on the H-cells of L.  Requires the two-sided
// cell of L to be idempotent; throws CellError on a nilpotent cell.
Semimodule reduced_cell_semimodule(const SemiringPtr& r, const std::vector<std::uint32_t>& left_cell);

// The collapse C_L -> C~_L sending a subset of L to the set of H-cells it
// touches; a surjective homomorphism.
Hom cell_collapse_hom(const SemiringPtr& r, const std::vector<std::uint32_t>& left_cell);

// Index into d.two_cells of the unique maximal two-sided cell that does
// not annihilate M.  Requires M minimal and proper; throws CellError when
// every cell annihilates, when the maximum is not unique, or when the
// found cell is not idempotent.
std::uint32_t apex(const Semimodule& m, const CellDecomposition& d);

// Per two-sided cell: whether its elements annihilate M.  Requires every
// element of M idempotent; throws CellError on a mixed cell.
std::vector<std::uint8_t> annihilator_cells(const Semimodule& m, const CellDecomposition& d);

}  // namespace semimod

#endif
