#include "harborth/naive.hpp"

#include <stdexcept>

namespace harborth {
namespace naive {

namespace {

// Walks include/skip and one weight per included element; weighted element
// ranks are resolved up front so the recursion is pure rank addition.
struct Walker {
    const GroupSpec& g;
    const std::vector<std::vector<ElemRank>>& terms;  // [idx][weight] = rank of w*e
    std::vector<DenseSet>& rows;

    void visit(std::size_t idx, std::uint32_t chosen, ElemRank sum) {
        if (idx == terms.size()) {
            rows[chosen].set(sum);
            return;
        }
        visit(idx + 1, chosen, sum);
        for (ElemRank t : terms[idx]) visit(idx + 1, chosen + 1, g.add_ranks(sum, t));
    }
};

}  // namespace

std::vector<DenseSet> profile(const GroupSpec& g, std::span<const ElemRank> elems,
                              const WeightSet& w) {
    if (elems.size() > 20) throw std::invalid_argument("naive profile limited to 20 elements");
    std::vector<std::vector<ElemRank>> terms(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::int64_t wt : w.weights()) terms[i].push_back(g.mul_rank(wt, elems[i]));
    std::vector<DenseSet> rows(elems.size() + 1, g.empty_set());
    Walker{g, terms, rows}.visit(0, 0, 0);
    return rows;
}

DenseSet weighted_sigma(const GroupSpec& g, std::span<const ElemRank> elems, const WeightSet& w) {
    auto rows = profile(g, elems, w);
    return rows[elems.size()];
}

std::uint32_t max_blocking_by_enumeration(const GroupSpec& g, const WeightSet& w,
                                          bool kind_harborth) {
    std::uint64_t n = g.order();
    if (n > 20) throw std::invalid_argument("naive enumeration limited to order 20");
    std::uint32_t best = 0;
    std::vector<ElemRank> members;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        members.clear();
        for (std::uint64_t i = 0; i < n; ++i)
            if (mask >> i & 1) members.push_back(static_cast<ElemRank>(i));
        if (members.size() <= best) continue;
        auto rows = profile(g, members, w);
        bool zero_found = false;
        if (kind_harborth) {
            std::uint32_t k = g.exponent();
            zero_found = k < rows.size() && rows[k].test(0);
        } else {
            for (std::size_t k = 1; k < rows.size() && !zero_found; ++k)
                zero_found = rows[k].test(0);
        }
        if (!zero_found) best = static_cast<std::uint32_t>(members.size());
    }
    return best;
}

}  // namespace naive
}  // namespace harborth
