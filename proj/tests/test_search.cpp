#include "doctest.h"

#include <map>

#include "harborth/checks.hpp"
#include "harborth/naive.hpp"
#include "harborth/search.hpp"
#include "harborth/sequence.hpp"
#include "harborth/witness.hpp"

using namespace harborth;

namespace {

// blocking flag for every subset mask of a small group, via the DP rows
std::vector<char> blocking_table(const GroupSpec& g, const WeightSet& w, ConstantKind kind) {
    const std::uint64_t n = g.order();
    REQUIRE(n <= 12);
    std::vector<char> table(std::size_t{1} << n);
    std::vector<ElemRank> members;
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
        members.clear();
        for (std::uint64_t i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(static_cast<ElemRank>(i));
        table[mask] = is_blocking(ElementSet(g, members), w, kind);
    }
    return table;
}

}  // namespace

TEST_CASE("is_blocking definitions") {
    GroupSpec c6 = make_group({6});
    // short sets block the harborth kind outright
    CHECK(is_blocking(ElementSet(c6, std::vector<ElemRank>{0, 3}), WeightSet::classic(),
                      ConstantKind::harborth));
    // the full set over C6 blocks the plus-minus harborth kind
    CHECK(is_blocking(ElementSet::full(c6), WeightSet::plus_minus(), ConstantKind::harborth));
    // {0} never blocks the olson kind
    CHECK(!is_blocking(ElementSet(c6, std::vector<ElemRank>{0}), WeightSet::classic(),
                       ConstantKind::olson));
    CHECK(!is_blocking(ElementSet(c6, std::vector<ElemRank>{0}), WeightSet::plus_minus(),
                       ConstantKind::olson));
}

TEST_CASE("max blocking sizes on the worked examples") {
    auto r1 = max_blocking_size(make_group({5}), WeightSet::classic(), ConstantKind::harborth);
    CHECK(r1.complete);
    CHECK(r1.max_size == 4);

    auto r2 = max_blocking_size(make_group({2, 4}), WeightSet::plus_minus(),
                                ConstantKind::harborth);
    CHECK(r2.max_size == 4);

    auto r3 = max_blocking_size(make_group({2}), WeightSet::classic(), ConstantKind::olson);
    CHECK(r3.max_size == 1);
    CHECK(olson_constant(make_group({2}), WeightSet::classic()).value == 2);
    CHECK(olson_constant(make_group({2}), WeightSet::plus_minus()).value == 2);
}

TEST_CASE("harborth constants on the worked examples") {
    CHECK(harborth_constant(make_group({4}), WeightSet::classic()).value == 5);
    CHECK(harborth_constant(make_group({2, 6}), WeightSet::classic()).value == 9);
    CHECK(harborth_constant(make_group({2, 6}), WeightSet::plus_minus()).value == 8);
    CHECK(harborth_constant(make_group({3, 3}), WeightSet::classic()).value == 5);
}

TEST_CASE("trivial group conventions") {
    GroupSpec t = make_group({1});
    ConstantReport h = harborth_constant(t, WeightSet::classic());
    CHECK(h.value == 1);
    CHECK(h.witness.size() == 0);
    CHECK(olson_constant(t, WeightSet::classic()).value == 1);
}

TEST_CASE("search equals naive enumeration for every type of order <= 10") {
    for (std::uint64_t n = 1; n <= 10; ++n) {
        for (const auto& chain : abelian_group_types(n)) {
            GroupSpec g = GroupSpec::from_invariant_factors(chain);
            for (const WeightSet& w : {WeightSet::classic(), WeightSet::plus_minus()}) {
                for (ConstantKind kind : {ConstantKind::harborth, ConstantKind::olson}) {
                    auto res = max_blocking_size(g, w, kind);
                    REQUIRE(res.complete);
                    CHECK(res.max_size ==
                          naive::max_blocking_by_enumeration(g, w,
                                                             kind == ConstantKind::harborth));
                }
            }
        }
    }
}

TEST_CASE("blocking is closed downward and non-blocking upward") {
    for (auto factors : {std::vector<std::uint64_t>{6}, {2, 4}, {3, 3}, {12}}) {
        GroupSpec g = make_group(factors);
        const std::uint64_t n = g.order();
        for (const WeightSet& w : {WeightSet::classic(), WeightSet::plus_minus()}) {
            for (ConstantKind kind : {ConstantKind::harborth, ConstantKind::olson}) {
                auto table = blocking_table(g, w, kind);
                std::uint32_t max_blocking = 0;
                std::uint32_t min_nonblocking = static_cast<std::uint32_t>(n) + 1;
                for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
                    std::uint32_t size = static_cast<std::uint32_t>(std::popcount(mask));
                    if (table[mask]) {
                        max_blocking = std::max(max_blocking, size);
                        for (std::uint64_t i = 0; i < n; ++i)
                            if (mask >> i & 1) CHECK(table[mask & ~(std::uint64_t{1} << i)]);
                    } else {
                        min_nonblocking = std::min(min_nonblocking, size);
                    }
                }
                // sizes strictly above the maximum blocking size are all
                // non-blocking, and the search agrees with the table
                auto res = max_blocking_size(g, w, kind);
                CHECK(res.max_size == max_blocking);
                if (min_nonblocking <= n) CHECK(max_blocking <= n);
            }
        }
    }
}

TEST_CASE("witnesses re-verify and no larger blocking set exists, order <= 16") {
    for (std::uint64_t order = 11; order <= 16; ++order) {
        for (const auto& chain : abelian_group_types(order)) {
            GroupSpec g = GroupSpec::from_invariant_factors(chain);
            for (const WeightSet& w : {WeightSet::classic(), WeightSet::plus_minus()}) {
                ConstantReport rep = harborth_constant(g, w);
                REQUIRE(rep.complete);
                CHECK(rep.witness.size() == rep.value - 1);
                CHECK(verify_blocking(rep.witness, w, g.exponent()).blocking);

                // exhaustively confirm that every set one element larger fails
                const std::uint32_t target = static_cast<std::uint32_t>(rep.value);
                const std::uint32_t n = static_cast<std::uint32_t>(g.order());
                if (target > n) continue;  // value |G|+1: nothing larger exists
                std::vector<ElemRank> comb(target);
                std::uint64_t checked = 0;
                // lexicographic combinations of size `target`
                std::vector<std::uint32_t> idx(target);
                for (std::uint32_t i = 0; i < target; ++i) idx[i] = i;
                while (true) {
                    for (std::uint32_t i = 0; i < target; ++i) comb[i] = idx[i];
                    CHECK(!is_blocking(ElementSet(g, comb), w, ConstantKind::harborth));
                    ++checked;
                    std::int64_t pos = target - 1;
                    while (pos >= 0 && idx[pos] == n - target + pos) --pos;
                    if (pos < 0) break;
                    ++idx[pos];
                    for (std::uint32_t i = static_cast<std::uint32_t>(pos) + 1; i < target; ++i)
                        idx[i] = idx[i - 1] + 1;
                }
                CHECK(checked > 0);
            }
        }
    }
}

TEST_CASE("formula oracle examples") {
    CHECK(formula_oracle(make_group({10}), WeightSet::plus_minus()) == 11);
    CHECK(formula_oracle(make_group({2, 8}), WeightSet::classic()) == 10);
    CHECK(formula_oracle(make_group({2, 4}), WeightSet::plus_minus()) == 5);
    CHECK(formula_oracle(make_group({7, 7}), WeightSet::classic()) == 13);
    CHECK(!formula_oracle(make_group({3, 6}), WeightSet::classic()).has_value());
    CHECK(!formula_oracle(make_group({5}), WeightSet({1, 2})).has_value());
}

TEST_CASE("search matches the formula oracle wherever it speaks, order <= 16") {
    for (std::uint64_t n = 1; n <= 16; ++n) {
        for (const auto& chain : abelian_group_types(n)) {
            GroupSpec g = GroupSpec::from_invariant_factors(chain);
            for (const WeightSet& w : {WeightSet::classic(), WeightSet::plus_minus()}) {
                auto oracle = formula_oracle(g, w);
                if (!oracle) continue;
                ConstantReport rep = harborth_constant(g, w);
                REQUIRE(rep.complete);
                CHECK(rep.value == *oracle);
            }
        }
    }
}

TEST_CASE("result is independent of worker count and schedule") {
    struct Case {
        std::vector<std::uint64_t> factors;
        WeightSet w;
        ConstantKind kind;
    };
    for (const Case& c : {Case{{2, 10}, WeightSet::plus_minus(), ConstantKind::harborth},
                          Case{{5, 5}, WeightSet::classic(), ConstantKind::harborth},
                          Case{{3, 9}, WeightSet::plus_minus(), ConstantKind::olson}}) {
        GroupSpec g = make_group(c.factors);
        SearchOptions base;
        auto ref = max_blocking_size(g, c.w, c.kind, base);
        for (unsigned workers : {2u, 3u, 5u}) {
            SearchOptions opts;
            opts.workers = workers;
            opts.split_depth = 2 + workers % 3;
            auto res = max_blocking_size(g, c.w, c.kind, opts);
            CHECK(res.complete);
            CHECK(res.max_size == ref.max_size);
            CHECK(res.witness == ref.witness);
        }
    }
}

TEST_CASE("parallel search agrees with sequential on every type of order <= 14") {
    SearchOptions par;
    par.workers = 3;
    par.split_depth = 2;
    for (std::uint64_t n = 2; n <= 14; ++n) {
        for (const auto& chain : abelian_group_types(n)) {
            GroupSpec g = GroupSpec::from_invariant_factors(chain);
            for (const WeightSet& w : {WeightSet::classic(), WeightSet::plus_minus()}) {
                for (ConstantKind kind : {ConstantKind::harborth, ConstantKind::olson}) {
                    auto seq = max_blocking_size(g, w, kind);
                    auto pool = max_blocking_size(g, w, kind, par);
                    REQUIRE(seq.complete);
                    REQUIRE(pool.complete);
                    CHECK(seq.max_size == pool.max_size);
                    CHECK(seq.witness == pool.witness);
                }
            }
        }
    }
}

TEST_CASE("search equals naive enumeration for assorted weight sets") {
    for (const WeightSet& w :
         {WeightSet({0}), WeightSet({2}), WeightSet({0, 1}), WeightSet({1, 3}),
          WeightSet({-2, 3}), WeightSet({-1, 0, 1})}) {
        for (std::uint64_t n : {4ull, 6ull, 8ull}) {
            for (const auto& chain : abelian_group_types(n)) {
                GroupSpec g = GroupSpec::from_invariant_factors(chain);
                for (ConstantKind kind : {ConstantKind::harborth, ConstantKind::olson}) {
                    auto res = max_blocking_size(g, w, kind);
                    REQUIRE(res.complete);
                    CHECK(res.max_size ==
                          naive::max_blocking_by_enumeration(g, w,
                                                             kind == ConstantKind::harborth));
                }
            }
        }
    }
}

TEST_CASE("orbit pruning keeps the value") {
    for (auto factors : {std::vector<std::uint64_t>{5, 5}, {2, 6}, {4, 4}}) {
        GroupSpec g = make_group(factors);
        SearchOptions pruned;
        pruned.orbit_prune = true;
        auto a = max_blocking_size(g, WeightSet::classic(), ConstantKind::harborth);
        auto b = max_blocking_size(g, WeightSet::classic(), ConstantKind::harborth, pruned);
        CHECK(a.max_size == b.max_size);
        CHECK(b.stats.orbit_prune);
    }
}

TEST_CASE("oversized groups are rejected up front") {
    CHECK_THROWS_AS(
        max_blocking_size(make_group({65536}), WeightSet::classic(), ConstantKind::harborth),
        std::invalid_argument);
}

TEST_CASE("node budget aborts explicitly") {
    SearchOptions opts;
    opts.budget.max_nodes = 50;
    auto res = max_blocking_size(make_group({5, 5}), WeightSet::classic(),
                                 ConstantKind::harborth, opts);
    CHECK(!res.complete);
    CHECK(res.stats.budget_exceeded);
    CHECK(res.max_size >= 4);  // the seeded lower bound survives

    ConstantReport rep = harborth_constant(make_group({5, 5}), WeightSet::classic(), opts);
    CHECK(!rep.complete);
    CHECK(rep.lower_bound >= 5);
    CHECK_THROWS_AS(classify_extremal(10, WeightSet::classic(), opts), BudgetExceeded);
}

TEST_CASE("direct-sum lower bound with composed witnesses") {
    // classic: O(C2) + g(C6) - 1 = 2 + 7 - 1 = 8 <= g(C2+C6) = 9
    DirectSumBound b1 =
        lower_bound_direct_sum(make_group({2}), make_group({6}), WeightSet::classic());
    CHECK(b1.olson_h == 2);
    CHECK(b1.harborth_k == 7);
    CHECK(b1.bound == 8);
    CHECK(b1.witness.size() == 7);
    CHECK(verify_blocking(b1.witness, WeightSet::classic(), b1.composite.exponent()).blocking);
    CHECK(harborth_constant(b1.composite, WeightSet::classic()).value == 9);

    // plus-minus: the same bound is tight, 2 + 7 - 1 = 8 = g_pm(C2+C6)
    DirectSumBound b2 =
        lower_bound_direct_sum(make_group({2}), make_group({6}), WeightSet::plus_minus());
    CHECK(b2.bound == 8);
    CHECK(harborth_constant(b2.composite, WeightSet::plus_minus()).value == 8);

    // both sides computed from scratch for H = K = C2
    DirectSumBound b3 =
        lower_bound_direct_sum(make_group({2}), make_group({2}), WeightSet::plus_minus());
    CHECK(b3.bound == b3.olson_h + b3.harborth_k - 1);
    CHECK(harborth_constant(b3.composite, WeightSet::plus_minus()).value >= b3.bound);

    CHECK_THROWS_AS(
        lower_bound_direct_sum(make_group({4}), make_group({6}), WeightSet::classic()),
        std::invalid_argument);
}

TEST_CASE("direct-sum bound holds for all splits up to order 16") {
    for (const WeightSet& w : {WeightSet::classic(), WeightSet::plus_minus()}) {
        CheckResult r = check_direct_sum_bound(16, w);
        CHECK(r.pass);
        CHECK(r.cases > 0);
        if (!r.pass) MESSAGE(r.detail);
    }
}

TEST_CASE("even-cover proposition verified exhaustively") {
    EvenCoverReport r1 = check_even_cover(1);
    CHECK(r1.candidates == 0);  // vacuous: the single sequence has sum zero
    CHECK(r1.counterexamples == 0);

    EvenCoverReport r3 = check_even_cover(3);
    CHECK(r3.candidates > 0);
    CHECK(r3.counterexamples == 0);

    // even n is allowed by the statement as well
    EvenCoverReport r2 = check_even_cover(2);
    CHECK(r2.counterexamples == 0);
}

TEST_CASE("abelian group type enumeration") {
    CHECK(abelian_group_types(1) == std::vector<std::vector<std::uint64_t>>{{}});
    CHECK(abelian_group_types(12).size() == 2);   // 12; 2,6
    CHECK(abelian_group_types(16).size() == 5);   // 16; 2,8; 4,4; 2,2,4; 2,2,2,2
    CHECK(abelian_group_types(36).size() == 4);   // 36; 2,18; 3,12; 6,6
    for (const auto& chain : abelian_group_types(24)) {
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            prod *= chain[i];
            if (i) CHECK(chain[i] % chain[i - 1] == 0);
        }
        CHECK(prod == 24);
    }
}

TEST_CASE("extremal classification matches the characterization up to order 8") {
    auto classic = classify_extremal(8, WeightSet::classic());
    std::vector<std::string> names;
    for (const auto& [g, v] : classic) {
        names.push_back(g.to_string());
        CHECK(v == g.order() + 1);
    }
    CHECK(names == std::vector<std::string>{"2", "2,2", "4", "6", "2,2,2", "8"});

    auto pm = classify_extremal(8, WeightSet::plus_minus());
    names.clear();
    for (const auto& [g, v] : pm) names.push_back(g.to_string());
    CHECK(names == std::vector<std::string>{"2", "2,2", "6", "2,2,2"});

    // the trivial group is not extremal
    CHECK(classify_extremal(1, WeightSet::classic()).empty());
}

TEST_CASE("orbit representative computation") {
    // all nonzero elements of an elementary group are equivalent
    auto reps = orbit_representatives(make_group({7, 7}));
    REQUIRE(reps);
    CHECK(reps->size() == 2);  // zero and one nonzero representative

    auto reps2 = orbit_representatives(make_group({2, 4}));
    REQUIRE(reps2);
    CHECK(reps2->size() >= 3);
    CHECK((*reps2)[0] == 0);
}
