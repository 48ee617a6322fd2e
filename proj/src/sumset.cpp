#include "harborth/sumset.hpp"

#include <stdexcept>

namespace harborth {

namespace {

void check_universe(const GroupSpec& g, const DenseSet& a, const DenseSet& b) {
    if (a.universe() != g.order() || b.universe() != g.order())
        throw std::invalid_argument("set universe does not match group order");
}

}  // namespace

DenseSet sumset(const GroupSpec& g, const DenseSet& a, const DenseSet& b) {
    check_universe(g, a, b);
    // shifted-or over the members of the smaller set
    const DenseSet& big = a.count() >= b.count() ? a : b;
    const DenseSet& small = a.count() >= b.count() ? b : a;
    DenseSet out = g.empty_set();
    for (ElemRank t : small.to_ranks()) g.translate_or_words(out.words(), big.words(), t);
    return out;
}

DenseSet restricted_sumset(const GroupSpec& g, const DenseSet& a, const DenseSet& b) {
    check_universe(g, a, b);
    DenseSet out = g.empty_set();
    DenseSet a_minus = g.empty_set();
    for (ElemRank t : b.to_ranks()) {
        a_minus = a;
        if (a_minus.test(t)) a_minus.reset(t);
        g.translate_or_words(out.words(), a_minus.words(), t);
    }
    return out;
}

std::optional<std::pair<GroupElement, GroupElement>> find_pair_with_sum(
    const GroupSpec& g, const DenseSet& a, const DenseSet& b, const GroupElement& target,
    bool restricted) {
    check_universe(g, a, b);
    ElemRank t = g.rank_of(g.element(target.coords));
    for (ElemRank ra = 0; ra < a.universe(); ++ra) {
        if (!a.test(ra)) continue;
        ElemRank rb = g.add_ranks(t, g.neg_rank(ra));
        if (!b.test(rb)) continue;
        if (restricted && ra == rb) continue;
        return std::make_pair(g.element_at(ra), g.element_at(rb));
    }
    return std::nullopt;
}

}  // namespace harborth
