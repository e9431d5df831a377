#ifndef SEMIMOD_DETAIL_SEARCH_HPP_
#define SEMIMOD_DETAIL_SEARCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "semimod/monoid.hpp"

namespace semimod::detail {

// All maps M -> N fixing zero, additive, and intertwining the paired action
// tables (actions may be empty for plain monoid homomorphisms).  Backtracks
// over images of a generating set of M and propagates to a full map.
std::vector<std::vector<std::uint32_t>> hom_search(
    const FinMonoid& m, const std::vector<std::vector<std::uint32_t>>& acts_m,
    const FinMonoid& n, const std::vector<std::vector<std::uint32_t>>& acts_n);

// Lexicographically least serialization of (add table, action tables) over
// relabelings sending zero to position 0.  Same string iff the structures
// are isomorphic.
std::string canon_serialize(const FinMonoid& m,
                            const std::vector<std::vector<std::uint32_t>>& actions,
                            std::size_t bound);

// Generating set under + and the given actions, greedy by least index.
std::vector<std::uint32_t> generators_under(const FinMonoid& m,
                                            const std::vector<std::vector<std::uint32_t>>& actions);

}  // namespace semimod::detail

#endif
