#include "doctest.h"

#include <set>

#include "harborth/search.hpp"
#include "harborth/witness.hpp"

using namespace harborth;

TEST_CASE("full cyclic set blocking behavior by residue of n") {
    // n = 0 mod 4: 0 is a plus-minus weighted full-length sum
    ElementSet t4 = full_cyclic_set(4);
    CHECK(!verify_blocking(t4, WeightSet::plus_minus(), 4).blocking);
    ElementSet t8 = full_cyclic_set(8);
    CHECK(!verify_blocking(t8, WeightSet::plus_minus(), 8).blocking);

    // n = 2 mod 4: it is not
    ElementSet t6 = full_cyclic_set(6);
    CHECK(verify_blocking(t6, WeightSet::plus_minus(), 6).blocking);
    ElementSet t10 = full_cyclic_set(10);
    CHECK(verify_blocking(t10, WeightSet::plus_minus(), 10).blocking);

    ElementSet t1 = full_cyclic_set(1);
    CHECK(t1.size() == 1);
    CHECK(t1.group().order() == 1);
}

TEST_CASE("the explicit sign split hits zero when 4 divides n") {
    // over Cn with T = {0, e, ..., (n-1)e}: adding i e for i <= n/2 and
    // subtracting for i > n/2 gives n (1 - n/4), which is 0 mod n exactly
    // when 4 | n
    for (std::uint32_t n : {4u, 8u, 12u, 6u, 10u}) {
        GroupSpec g = make_group({n});
        ElemRank acc = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            std::int64_t sign = i <= n / 2 ? 1 : -1;
            acc = g.add_ranks(acc, g.mul_rank(sign, static_cast<ElemRank>(i)));
        }
        if (n % 4 == 0)
            CHECK(acc == 0);
        else
            CHECK(acc != 0);
    }
}

TEST_CASE("plus-minus lower-bound construction") {
    for (std::uint32_t n : {4u, 6u, 8u, 10u, 12u}) {
        ElementSet s = lower_bound_witness_pm(n);
        CHECK(s.size() == 2 * n + 1);
        CHECK(s.group().invariant_factors() == std::vector<std::uint32_t>{2, 2 * n});
        BlockingCheck check = verify_blocking(s, WeightSet::plus_minus(), 2 * n);
        CHECK(check.blocking);
    }
    CHECK_THROWS_AS(lower_bound_witness_pm(3), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_witness_pm(2), std::invalid_argument);
}

TEST_CASE("the tail of the plus-minus construction sums as stated") {
    for (std::uint32_t n : {4u, 6u, 8u}) {
        GroupSpec g = make_group({2, 2ull * n});
        std::vector<ElemRank> t_ranks;
        for (std::uint32_t i = 1; i <= 2 * n - 2; ++i)
            t_ranks.push_back(g.rank_of(g.element(std::vector<std::uint32_t>{0, i})));
        ElementSet t(g, t_ranks);
        // sigma(T) = (n+1) e2
        CHECK(sigma(t) == g.element(std::vector<std::uint32_t>{0, (n + 1) % (2 * n)}));
        // plus-minus sums of T stay inside e2 + <2 e2>
        DenseSet pm = weighted_sigma(t, WeightSet::plus_minus());
        DenseSet coset = g.empty_set();
        for (std::uint32_t i = 1; i < 2 * n; i += 2)
            coset.set(g.rank_of(g.element(std::vector<std::uint32_t>{0, i})));
        CHECK(coset.contains_all(pm));
    }
}

TEST_CASE("classic lower-bound construction") {
    // the n = 3 instance, spelled out in split coordinates
    ElementSet a3 = lower_bound_witness_classic(3);
    CHECK(a3.size() == 8);
    const GroupSpec& g = a3.group();
    CHECK(g.invariant_factors() == std::vector<std::uint32_t>{2, 6});

    Decomposition d = chinese_split(g, 2);
    auto one = [&](std::size_t part) {
        GroupElement u = d.parts()[part].zero();
        u.coords[0] = 1;
        return d.embed(part, u);
    };
    GroupElement f1 = one(0), f2 = one(1), e = one(2);
    std::vector<GroupElement> expected{
        g.zero(),
        e,
        g.add(f1, f2),
        g.add(g.add(f1, f2), e),
        f1,
        g.add(f1, g.neg(e)),
        f2,
        g.add(f2, g.neg(e)),
    };
    CHECK(a3 == ElementSet(g, expected));

    for (std::uint32_t n : {3u, 5u, 7u, 9u, 11u}) {
        ElementSet a = lower_bound_witness_classic(n);
        GroupSpec gn = a.group();
        CHECK(a.size() == 2 * n + 2);
        CHECK(sigma(a) == gn.zero());
        CHECK(verify_blocking(a, WeightSet::classic(), 2 * n).blocking);
        // no two elements cancel
        auto elems = a.elements();
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (std::size_t j = i + 1; j < elems.size(); ++j)
                CHECK(gn.add(elems[i], elems[j]) != gn.zero());
    }
    CHECK_THROWS_AS(lower_bound_witness_classic(4), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_witness_classic(1), std::invalid_argument);
}

TEST_CASE("construction sizes are lower bounds for the searched constants") {
    // pm construction of size 2n+1 forces the constant above 2n+1
    ElementSet s = lower_bound_witness_pm(4);
    ConstantReport rep = harborth_constant(s.group(), WeightSet::plus_minus());
    CHECK(rep.value >= s.size() + 1);

    ElementSet a = lower_bound_witness_classic(3);
    ConstantReport rep2 = harborth_constant(a.group(), WeightSet::classic());
    CHECK(rep2.value >= a.size() + 1);
}

TEST_CASE("composition embeds disjoint witnesses and blocks") {
    GroupSpec h = make_group({2});
    ElementSet wh(h, std::vector<ElemRank>{1});  // {e1}, olson-blocking

    // K = C6 with a maximum plus-minus blocking set found by search
    ConstantReport k6 = harborth_constant(make_group({6}), WeightSet::plus_minus());
    REQUIRE(k6.complete);
    CHECK(k6.value == 7);
    ElementSet composed = compose_blocking_witnesses(wh, k6.witness, WeightSet::plus_minus());
    CHECK(composed.size() == 1 + k6.witness.size());
    CHECK(composed.group().invariant_factors() == std::vector<std::uint32_t>{2, 6});
    CHECK(verify_blocking(composed, WeightSet::plus_minus(),
                          composed.group().exponent()).blocking);

    // classic witness over C5 composes into C10
    ConstantReport k5 = harborth_constant(make_group({5}), WeightSet::classic());
    ElementSet composed2 = compose_blocking_witnesses(wh, k5.witness, WeightSet::classic());
    CHECK(composed2.group().invariant_factors() == std::vector<std::uint32_t>{10});
    CHECK(composed2.size() == 5);
    CHECK(verify_blocking(composed2, WeightSet::classic(), 10).blocking);

    // a non-blocking H witness is rejected
    ElementSet bad(h, std::vector<ElemRank>{0, 1});
    CHECK_THROWS_AS(compose_blocking_witnesses(bad, k6.witness, WeightSet::plus_minus()),
                    std::invalid_argument);
    // a non-blocking K witness is rejected too
    ElementSet badk(make_group({3}), std::vector<ElemRank>{0, 1, 2});
    CHECK_THROWS_AS(compose_blocking_witnesses(wh, badk, WeightSet::classic()),
                    std::invalid_argument);
}

TEST_CASE("verify_blocking reports the achievable set") {
    ElementSet t6 = full_cyclic_set(6);
    BlockingCheck c = verify_blocking(t6, WeightSet::plus_minus(), 6);
    CHECK(c.blocking);
    CHECK(c.k == 6);
    CHECK(!c.achievable.test(0));
    CHECK(c.achievable.count() > 0);

    // a length-1 zero selection exists whenever 0 is in the set
    GroupSpec t = make_group({1});
    ElementSet z(t, std::vector<ElemRank>{0});
    CHECK(!verify_blocking(z, WeightSet::classic(), 1).blocking);
}
