#pragma once

// Exact computation of the Harborth and Olson constants by maximum
// blocking-set search. A set is blocking when it admits no W-weighted
// zero-subsum of the required kind; every subset of a blocking set is
// blocking, so the search is a DFS over canonical-rank-increasing extensions
// of blocking sets. The constant equals one plus the largest blocking
// cardinality, and the reported witness is the lexicographically smallest
// maximum blocking set, independent of worker count and schedule.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "harborth/group.hpp"
#include "harborth/sequence.hpp"

namespace harborth {

enum class ConstantKind { harborth, olson };

const char* to_string(ConstantKind k);

// Thrown by the composite verification helpers when an inner search ran out
// of its node or time budget. Plain compute paths report the condition as a
// status on the result instead.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::uint64_t lb)
        : std::runtime_error("search budget exceeded"), lower_bound(lb) {}
    std::uint64_t lower_bound;  // proven lower bound at the point of abort
};

struct SearchBudget {
    std::uint64_t max_nodes = 4'000'000'000ull;  // extension attempts
    double max_seconds = 600.0;                  // 0 disables the time limit
};

struct SearchOptions {
    SearchBudget budget;
    unsigned workers = 1;
    unsigned split_depth = 3;  // prefix size handed to the worker pool
    bool orbit_prune = false;  // restrict the first element to Aut(G)-orbit reps
};

struct SearchStats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    unsigned workers = 1;
    std::string strategy;
    bool orbit_prune = false;
    bool budget_exceeded = false;
};

struct BlockingSearchResult {
    bool complete = true;
    std::uint32_t max_size = 0;  // when incomplete: best size found, a lower bound
    std::vector<ElemRank> witness;
    SearchStats stats;
};

struct ConstantReport {
    ConstantKind kind = ConstantKind::harborth;
    GroupSpec group;
    WeightSet weights = WeightSet::classic();
    bool complete = true;
    std::uint64_t value = 0;        // meaningful only when complete
    std::uint64_t lower_bound = 0;  // holds even when the budget was exceeded
    ElementSet witness{GroupSpec{}};
    SearchStats stats;
};

// kind harborth: true iff 0 is not a W-weighted subsum of S of length exp(G).
// kind olson: true iff 0 is not a nonempty W-weighted subsum of S.
bool is_blocking(const ElementSet& s, const WeightSet& w, ConstantKind kind);

BlockingSearchResult max_blocking_size(const GroupSpec& g, const WeightSet& w, ConstantKind kind,
                                       const SearchOptions& opts = {});

ConstantReport harborth_constant(const GroupSpec& g, const WeightSet& w,
                                 const SearchOptions& opts = {});
ConstantReport olson_constant(const GroupSpec& g, const WeightSet& w,
                              const SearchOptions& opts = {});
ConstantReport compute_constant(const GroupSpec& g, const WeightSet& w, ConstantKind kind,
                                const SearchOptions& opts = {});

// Closed-form value of the Harborth constant for the families with known
// formulas; empty when (group, weights) is not covered.
std::optional<std::uint64_t> formula_oracle(const GroupSpec& g, const WeightSet& w);

// The direct-sum lower bound: for G = H + K with exp(H) | exp(K),
// g_W(G) >= O_W(H) + g_W(K) - 1, together with the composed witness.
struct DirectSumBound {
    GroupSpec composite;
    std::uint64_t olson_h = 0;
    std::uint64_t harborth_k = 0;
    std::uint64_t bound = 0;
    ElementSet witness{GroupSpec{}};  // over the composite, size bound-1
};
DirectSumBound lower_bound_direct_sum(const GroupSpec& h, const GroupSpec& k, const WeightSet& w,
                                      const SearchOptions& opts = {});

// Exhaustive check over C2+C2+Cn: every squarefree sequence of length 2n+2
// whose projection to the C2+C2 part has nonzero sum must have a classic
// zero-sum subsequence of length 2n.
struct EvenCoverReport {
    std::uint64_t candidates = 0;  // sequences meeting the hypothesis
    std::uint64_t counterexamples = 0;
    std::vector<GroupElement> first_counterexample;
};
EvenCoverReport check_even_cover(std::uint32_t n, const SearchBudget& budget = {});

// All abelian group types of the given order, as ascending invariant chains.
std::vector<std::vector<std::uint64_t>> abelian_group_types(std::uint64_t order);

// Groups of order <= order_max with g_W(G) = |G| + 1, with the computed value.
std::vector<std::pair<GroupSpec, std::uint64_t>> classify_extremal(
    std::uint64_t order_max, const WeightSet& w, const SearchOptions& opts = {});

// Lexicographic representatives of the Aut(G)-orbits of elements, or empty
// when the automorphism group is too large to enumerate directly.
std::optional<std::vector<ElemRank>> orbit_representatives(const GroupSpec& g);

}  // namespace harborth
