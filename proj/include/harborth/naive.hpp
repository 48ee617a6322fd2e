#pragma once

// Reference enumerations that walk every weight assignment explicitly. These
// are the independent oracle route for the bit-vector dynamic programs; keep
// them free of DenseSet translation machinery.

#include <cstdint>
#include <span>
#include <vector>

#include "harborth/sequence.hpp"

namespace harborth {
namespace naive {

// rows[k] = W-weighted subsums of length exactly k, k in [0, |S|], computed
// by explicit recursion over include/skip and one weight per included
// element. Guarded to |S| <= 20.
std::vector<DenseSet> profile(const GroupSpec& g, std::span<const ElemRank> elems,
                              const WeightSet& w);

// All full-length W-weighted sums, by explicit recursion.
DenseSet weighted_sigma(const GroupSpec& g, std::span<const ElemRank> elems, const WeightSet& w);

// Largest blocking cardinality by enumerating every subset of the group.
// kind_harborth: blocking means no weighted zero-subsum of length exp(G).
// Guarded to |G| <= 20.
std::uint32_t max_blocking_by_enumeration(const GroupSpec& g, const WeightSet& w,
                                          bool kind_harborth);

}  // namespace naive
}  // namespace harborth
