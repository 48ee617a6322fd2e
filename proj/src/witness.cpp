#include "harborth/witness.hpp"

#include <stdexcept>

namespace harborth {

ElementSet full_cyclic_set(std::uint32_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::uint64_t nn = n;
    return ElementSet::full(make_group(std::span(&nn, 1)));
}

ElementSet lower_bound_witness_pm(std::uint32_t n) {
    if (n < 4 || n % 2) throw std::invalid_argument("construction requires even n >= 4");
    GroupSpec g = make_group({2, 2ull * n});
    auto at = [&](std::uint32_t a, std::uint32_t b) {
        return g.rank_of(g.element(std::vector<std::uint32_t>{a, b}));
    };
    std::vector<ElemRank> ranks;
    for (std::uint32_t i = 1; i <= 2 * n - 2; ++i) ranks.push_back(at(0, i));
    ranks.push_back(at(1, 0));
    ranks.push_back(at(1, 2));
    ranks.push_back(at(1, 4));
    return ElementSet(g, std::move(ranks));
}

ElementSet lower_bound_witness_classic(std::uint32_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("construction requires odd n >= 3");
    GroupSpec g = make_group({2, 2ull * n});
    Decomposition d = chinese_split(g, 2);  // parts C2, C2, Cn
    if (d.part_count() != 3) throw std::logic_error("unexpected split");

    auto one = [&](std::size_t part) {
        GroupElement u = d.parts()[part].zero();
        u.coords[0] = 1;
        return d.embed(part, u);
    };
    GroupElement f1 = one(0), f2 = one(1), e = one(2);
    GroupElement f12 = g.add(f1, f2);

    std::vector<GroupElement> base{g.zero()};
    for (std::uint32_t i = 1; i <= (n - 1) / 2; ++i)
        base.push_back(g.scalar_mul(i, e));

    std::vector<ElemRank> ranks;
    for (const GroupElement& b : base) ranks.push_back(g.rank_of(b));
    for (const GroupElement& b : base) ranks.push_back(g.rank_of(g.add(f12, b)));
    for (const GroupElement& b : base) ranks.push_back(g.rank_of(g.add(f1, g.neg(b))));
    for (const GroupElement& b : base) ranks.push_back(g.rank_of(g.add(f2, g.neg(b))));
    return ElementSet(g, std::move(ranks));
}

ElementSet compose_blocking_witnesses(const ElementSet& witness_h, const ElementSet& witness_k,
                                      const WeightSet& w) {
    const GroupSpec& h = witness_h.group();
    const GroupSpec& k = witness_k.group();
    // When exp(H) | exp(K) the composition is guaranteed blocking; otherwise
    // it is only a candidate and the caller certifies it with
    // verify_blocking.
    if (!is_blocking(witness_h, w, ConstantKind::olson))
        throw std::invalid_argument("H witness admits a weighted zero-subsum");
    if (!is_blocking(witness_k, w, ConstantKind::harborth))
        throw std::invalid_argument("K witness admits a weighted zero-subsum of full exponent length");

    Decomposition d = direct_sum_decomposition(h, k);
    const GroupSpec& g = d.composite();
    std::vector<ElemRank> ranks;
    for (const GroupElement& e : witness_h.elements()) ranks.push_back(g.rank_of(d.embed(0, e)));
    for (const GroupElement& e : witness_k.elements()) ranks.push_back(g.rank_of(d.embed(1, e)));
    return ElementSet(g, std::move(ranks));
}

BlockingCheck verify_blocking(const ElementSet& s, const WeightSet& w, std::uint32_t k) {
    const GroupSpec& g = s.group();
    auto rows = subsum_rows(g, s.ranks(), w, k);
    BlockingCheck out;
    out.k = k;
    out.achievable = rows[k];
    out.blocking = !rows[k].test(0);
    return out;
}

}  // namespace harborth
