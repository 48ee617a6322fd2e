#pragma once

// Sumsets and restricted sumsets of element sets, plus the constructive
// pair-finding step used by the coverage arguments.

#include <optional>
#include <utility>

#include "harborth/dense_set.hpp"
#include "harborth/group.hpp"

namespace harborth {

// {a + b : a in A, b in B}
DenseSet sumset(const GroupSpec& g, const DenseSet& a, const DenseSet& b);

// {a + b : a in A, b in B, a != b}
DenseSet restricted_sumset(const GroupSpec& g, const DenseSet& a, const DenseSet& b);

// Some pair with a + b = target (a != b when restricted), smallest a by
// canonical rank, then smallest b; empty when no pair exists.
std::optional<std::pair<GroupElement, GroupElement>> find_pair_with_sum(
    const GroupSpec& g, const DenseSet& a, const DenseSet& b, const GroupElement& target,
    bool restricted);

}  // namespace harborth
