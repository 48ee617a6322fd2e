#include "doctest.h"

#include "harborth/checks.hpp"
#include "harborth/naive.hpp"
#include "harborth/rng.hpp"
#include "harborth/sequence.hpp"

using namespace harborth;

namespace {

GroupElement el(const GroupSpec& g, std::initializer_list<std::uint32_t> coords) {
    return g.element(std::vector<std::uint32_t>(coords));
}

DenseSet set_of(const GroupSpec& g, std::initializer_list<ElemRank> ranks) {
    DenseSet s = g.empty_set();
    for (ElemRank r : ranks) s.set(r);
    return s;
}

}  // namespace

TEST_CASE("weight sets normalize and reject empties") {
    WeightSet w({3, -1, 3, 1});
    CHECK(w.weights() == std::vector<std::int64_t>{-1, 1, 3});
    CHECK(WeightSet::plus_minus().to_string() == "-1,1");
    CHECK(WeightSet::classic().is_classic());
    CHECK_THROWS_AS(WeightSet({}), std::invalid_argument);
}

TEST_CASE("element sets stay canonical and squarefree") {
    GroupSpec g = make_group({6});
    ElementSet s(g, std::vector<ElemRank>{4, 1, 2});
    CHECK(s.ranks() == std::vector<ElemRank>{1, 2, 4});
    CHECK_THROWS_AS(ElementSet(g, std::vector<ElemRank>{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ElementSet(g, std::vector<ElemRank>{6}), std::invalid_argument);
    CHECK(ElementSet::full(g).size() == 6);

    GroupSequence q(g, std::vector<ElemRank>{1, 1, 3});
    CHECK(!q.squarefree());
    CHECK(q.size() == 3);
}

TEST_CASE("difference and support") {
    GroupSpec g = make_group({8});
    ElementSet a(g, std::vector<ElemRank>{0, 2, 5, 7});
    ElementSet b(g, std::vector<ElemRank>{2, 7});
    CHECK(difference(a, b).ranks() == std::vector<ElemRank>{0, 5});
    CHECK(difference(b, a).size() == 0);
    CHECK_THROWS_AS(difference(a, ElementSet(make_group({9}))), std::invalid_argument);

    GroupSequence q(g, std::vector<ElemRank>{3, 3, 1, 3});
    CHECK(q.support() == std::vector<ElemRank>{1, 3});
}

TEST_CASE("sigma") {
    GroupSpec c6 = make_group({6});
    CHECK(sigma(ElementSet(c6, std::vector<ElemRank>{1, 2, 3})) == c6.zero());
    CHECK(sigma(ElementSet(c6)) == c6.zero());
    // full cyclic set over even n sums to (n/2)e
    CHECK(sigma(ElementSet::full(c6)) == el(c6, {3}));
}

TEST_CASE("translate, negate, dilate") {
    GroupSpec g = make_group({2, 4});
    ElementSet s(g, std::vector<GroupElement>{el(g, {0, 0}), el(g, {0, 1})});
    ElementSet t = translate(el(g, {1, 0}), s);
    CHECK(t.ranks() == ElementSet(g, std::vector<GroupElement>{el(g, {1, 0}), el(g, {1, 1})}).ranks());

    GroupSpec c5 = make_group({5});
    ElementSet n5 = negate_seq(ElementSet(c5, std::vector<ElemRank>{1, 2}));
    CHECK(n5.ranks() == std::vector<ElemRank>{3, 4});

    GroupSpec c4 = make_group({4});
    ElementSet d = dilate(2, ElementSet::full(c4));
    CHECK(d.ranks() == std::vector<ElemRank>{0, 2});  // dilation collapses
}

TEST_CASE("weighted_sigma") {
    GroupSpec c5 = make_group({5});
    ElementSet single(c5, std::vector<ElemRank>{1});
    CHECK(weighted_sigma(single, WeightSet::plus_minus()) == set_of(c5, {1, 4}));

    // classic weighted sigma is the singleton {sigma(S)}
    Rng rng(3);
    for (auto factors : {std::vector<std::uint64_t>{7}, {2, 6}}) {
        GroupSpec g = make_group(factors);
        std::vector<ElemRank> ranks;
        for (int i = 0; i < 4; ++i) ranks.push_back(static_cast<ElemRank>(rng.below(g.order())));
        GroupSequence s(g, ranks);
        DenseSet ws = weighted_sigma(s, WeightSet::classic());
        CHECK(ws.count() == 1);
        CHECK(ws.test(g.rank_of(sigma(s))));
    }

    // full set over C6: plus-minus sums avoid 0 and live in e + <2e>
    GroupSpec c6 = make_group({6});
    DenseSet pm = weighted_sigma(ElementSet::full(c6), WeightSet::plus_minus());
    CHECK(!pm.test(0));
    DenseSet coset = set_of(c6, {1, 3, 5});
    CHECK(coset.contains_all(pm));

    CHECK(weighted_sigma(ElementSet(c6), WeightSet::plus_minus()) == set_of(c6, {0}));
}

TEST_CASE("subsum profile per-length rows") {
    GroupSpec g = make_group({2, 4});
    // full-length identity: profile[|S|] = weighted sigma
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ElemRank> ranks;
        for (int i = 0; i < 5; ++i) ranks.push_back(static_cast<ElemRank>(rng.below(g.order())));
        GroupSequence s(g, ranks);
        for (const WeightSet& w : {WeightSet::classic(), WeightSet::plus_minus()}) {
            SubsumProfile p = subsum_profile(s, w);
            REQUIRE(p.by_length.size() == s.size() + 1);
            CHECK(p.by_length[0] == set_of(g, {0}));
            CHECK(p.by_length[s.size()] == weighted_sigma(s, w));
        }
    }

    // length-2 plus-minus subsums of any squarefree 3-set inside one fiber of
    // the order-2 projection cover all nonzero multiples of e2
    DenseSet target = set_of(g, {1, 2, 3});  // <e2> minus 0
    for (std::uint32_t fiber = 0; fiber < 2; ++fiber) {
        std::vector<ElemRank> pool;
        for (std::uint32_t i = 0; i < 4; ++i) pool.push_back(fiber * 4 + i);
        for (std::size_t skip = 0; skip < 4; ++skip) {
            std::vector<ElemRank> ranks;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != skip) ranks.push_back(pool[i]);
            SubsumProfile p = subsum_profile(ElementSet(g, ranks), WeightSet::plus_minus());
            CHECK(p.by_length[2].contains_all(target));
        }
    }
}

TEST_CASE("five-element plus-minus profiles match brute force over all signed selections") {
    GroupSpec g = make_group({2, 4});
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ElemRank> pool{0, 1, 2, 3, 4, 5, 6, 7};
        for (std::size_t i = 0; i < 5; ++i) std::swap(pool[i], pool[i + rng.below(8 - i)]);
        ElementSet s(g, std::vector<ElemRank>(pool.begin(), pool.begin() + 5));
        auto fast = subsum_rows(g, s.ranks(), WeightSet::plus_minus(), 5);
        auto slow = naive::profile(g, s.ranks(), WeightSet::plus_minus());
        for (std::size_t k = 0; k <= 5; ++k) CHECK(fast[k] == slow[k]);
    }
}

TEST_CASE("profile matches naive enumeration over all weight assignments") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint64_t order = 1 + rng.below(20);
        auto types = abelian_group_types(order);
        GroupSpec g = GroupSpec::from_invariant_factors(types[rng.below(types.size())]);
        std::vector<ElemRank> ranks(rng.below(std::min<std::uint64_t>(9, g.order()) + 1));
        for (auto& r : ranks) r = static_cast<ElemRank>(rng.below(g.order()));
        WeightSet w({rng.range(-3, 3), rng.range(-3, 3), 1});
        auto fast = subsum_rows(g, ranks, w, static_cast<std::uint32_t>(ranks.size()));
        auto slow = naive::profile(g, ranks, w);
        REQUIRE(fast.size() == slow.size());
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k] == slow[k]);
    }
}

TEST_CASE("profiles on multi-word groups match naive enumeration") {
    // orders past 64 bits exercise the reference gather translation
    Rng rng(271);
    for (auto factors : {std::vector<std::uint64_t>{100}, {2, 66}, {3, 75}, {12, 12}}) {
        GroupSpec g = make_group(factors);
        REQUIRE(g.word_count() > 1);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<ElemRank> ranks(1 + rng.below(7));
            for (auto& r : ranks) r = static_cast<ElemRank>(rng.below(g.order()));
            WeightSet w = trial % 2 ? WeightSet::plus_minus() : WeightSet({1, 2});
            auto fast = subsum_rows(g, ranks, w, static_cast<std::uint32_t>(ranks.size()));
            auto slow = naive::profile(g, ranks, w);
            for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k] == slow[k]);
        }
    }
}

TEST_CASE("subsums and subsums0") {
    GroupSpec c3 = make_group({3});
    ElementSet s(c3, std::vector<ElemRank>{1, 2});
    CHECK(subsums(s, WeightSet::classic()) == set_of(c3, {0, 1, 2}));
    CHECK(subsums0(ElementSet(c3), WeightSet::classic()) == set_of(c3, {0}));
    CHECK(subsums(ElementSet(c3), WeightSet::classic()) == c3.empty_set());

    // 0 can be absent from the nonempty subsums even though it is always in
    // the 0-augmented set
    GroupSpec c2 = make_group({2});
    ElementSet t(c2, std::vector<ElemRank>{1});
    DenseSet pm = subsums(t, WeightSet::plus_minus());
    CHECK(pm == set_of(c2, {1}));
    CHECK(subsums0(t, WeightSet::plus_minus()) == set_of(c2, {0, 1}));

    // agreement with profile unions on random input
    Rng rng(41);
    GroupSpec g = make_group({2, 6});
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ElemRank> ranks(rng.below(7));
        for (auto& r : ranks) r = static_cast<ElemRank>(rng.below(g.order()));
        GroupSequence q(g, ranks);
        WeightSet w = rng.below(2) ? WeightSet::plus_minus() : WeightSet::classic();
        SubsumProfile p = subsum_profile(q, w);
        CHECK(subsums(q, w) == p.subsums());
        CHECK(subsums0(q, w) == p.subsums0());
        DenseSet su = p.subsums();
        su.set(0);
        CHECK(p.subsums0() == su);
    }
}

TEST_CASE("push_forward images may repeat and operators commute with the map") {
    Decomposition d = make_group_decomposition({2, 4});
    const GroupSpec& g = d.composite();
    // both elements project to e1 under part 0: image is a repeated sequence
    ElementSet s(g, std::vector<GroupElement>{el(g, {1, 0}), el(g, {1, 2})});
    GroupSequence img0 = push_forward(d, 0, s);
    CHECK(img0.size() == 2);
    CHECK(!img0.squarefree());

    GroupSequence img1 = push_forward(d, 1, s);
    CHECK(img1.ranks() == std::vector<ElemRank>{0, 2});

    Rng rng(59);
    const GroupSpec& part = d.parts()[1];
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<ElemRank> ranks(rng.below(6));
        for (auto& r : ranks) r = static_cast<ElemRank>(rng.below(g.order()));
        GroupSequence q(g, ranks);
        GroupSequence fq = push_forward(d, 1, q);
        CHECK(fq.size() == q.size());
        for (const WeightSet& w : {WeightSet::classic(), WeightSet::plus_minus()}) {
            auto lhs = subsum_rows(g, q.ranks(), w, static_cast<std::uint32_t>(q.size()));
            auto rhs = subsum_rows(part, fq.ranks(), w, static_cast<std::uint32_t>(fq.size()));
            for (std::size_t k = 0; k < lhs.size(); ++k) {
                // map each achievable sum through the projection
                DenseSet mapped = part.empty_set();
                for (ElemRank r : lhs[k].to_ranks())
                    mapped.set(part.rank_of(d.project(1, g.element_at(r))));
                CHECK(mapped == rhs[k]);
            }
        }
    }
}

TEST_CASE("plus-minus sum identity holds exhaustively on small groups") {
    for (auto factors : {std::vector<std::uint64_t>{5}, {8}, {12}, {2, 4}, {3, 3}, {2, 2, 2}}) {
        GroupSpec g = make_group(factors);
        CheckResult r = check_pm_sum_identity(g, 50, 1234);
        CHECK(r.pass);
        CHECK(r.cases > 0);
        if (!r.pass) MESSAGE(r.detail);
    }
}
