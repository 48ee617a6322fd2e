#pragma once

// The named verification suites behind `verify --check ...`. Each check is
// deterministic for a fixed seed and reports how many property instances it
// tried and how many failed.

#include <cstdint>
#include <string>

#include "harborth/search.hpp"

namespace harborth {

struct CheckResult {
    bool pass = true;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string detail;  // first failure, empty when pass
};

// Set identity for the plus-minus weighted sum: the full-length weighted sums
// of any sequence S equal -sigma(S) + 2 * (classic subsums-with-empty of S);
// likewise the {v,w} generalization and the odd-order cardinality corollary.
// Exhaustive over multisets of size <= 4 when |G| <= 12, plus random trials.
CheckResult check_pm_sum_identity(const GroupSpec& g, std::uint64_t samples, std::uint64_t seed);

// Coverage thresholds: |A|+|B| >= |G|+1 forces A+B = G, and
// |A|+|B| >= |G|+1+2^t (t the 2-rank) forces the restricted sumset to be G.
// Exhaustive over all pairs when |G| <= 8, plus random trials; also checks
// find_pair_with_sum presence against membership.
CheckResult check_coverage_thresholds(const GroupSpec& g, std::uint64_t samples,
                                      std::uint64_t seed);

// For every ordered split H + K (both nontrivial, exp(H) | exp(K)) of every
// group of order <= order_max: the direct-sum bound does not exceed the
// searched constant, and the composed witness certifies it.
CheckResult check_direct_sum_bound(std::uint64_t order_max, const WeightSet& w,
                                   const SearchOptions& opts = {});

// check_even_cover with pass/fail summary.
CheckResult check_even_cover_exhaustive(std::uint32_t n, const SearchBudget& budget = {});

// classify_extremal against the known characterization (classic weights:
// elementary 2-groups and even-order cyclic groups; plus-minus weights:
// elementary 2-groups and cyclic groups of order 2 mod 4).
CheckResult check_extremal_classification(std::uint64_t order_max, const WeightSet& w,
                                          const SearchOptions& opts = {});

// Random (group, set, weights) instances: the bit-vector subsum profile must
// agree with the naive enumeration of every weight assignment.
CheckResult check_profile_against_naive(std::uint64_t samples, std::uint64_t seed);

}  // namespace harborth
