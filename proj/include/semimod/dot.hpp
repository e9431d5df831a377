#ifndef SEMIMOD_DOT_HPP_
#define SEMIMOD_DOT_HPP_

#include <string>
#include <vector>

#include "semimod/cells.hpp"
#include "semimod/semimodule.hpp"

namespace semimod {

// DOT text for a semimodule whose carrier is a semilattice: solid edges are
// the Hasse relation of the natural order, plus one arrow family per chosen
// generator (first dashed, then dotted, further ones labeled only).
// generators holds generator indices into the ring; when empty, generators
// named "s" and "t" are used if present.  Throws ArgError on a
// non-semilattice carrier.
std::string export_dot(const Semimodule& m, std::vector<std::uint32_t> generators = {});

// The two-sided order of a cell decomposition as a DAG (edges are covers).
std::string cells_dot(const BasedSemiring& r, const CellDecomposition& d);

}  // namespace semimod

#endif
