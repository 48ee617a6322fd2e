#include "harborth/sequence.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace harborth {

WeightSet::WeightSet(std::vector<std::int64_t> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("weight set must be non-empty");
    std::sort(w_.begin(), w_.end());
    w_.erase(std::unique(w_.begin(), w_.end()), w_.end());
}

std::string WeightSet::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) os << ',';
        os << w_[i];
    }
    return os.str();
}

GroupSequence::GroupSequence(GroupSpec group, std::vector<ElemRank> ranks)
    : g_(std::move(group)), r_(std::move(ranks)) {
    for (ElemRank r : r_)
        if (r >= g_.order()) throw std::invalid_argument("element rank out of range");
    std::sort(r_.begin(), r_.end());
}

GroupSequence::GroupSequence(GroupSpec group, std::span<const GroupElement> elems)
    : g_(std::move(group)) {
    r_.reserve(elems.size());
    for (const GroupElement& e : elems) r_.push_back(g_.rank_of(g_.element(e.coords)));
    std::sort(r_.begin(), r_.end());
}

bool GroupSequence::squarefree() const {
    return std::adjacent_find(r_.begin(), r_.end()) == r_.end();
}

std::vector<GroupElement> GroupSequence::elements() const {
    std::vector<GroupElement> out;
    out.reserve(r_.size());
    for (ElemRank r : r_) out.push_back(g_.element_at(r));
    return out;
}

std::vector<ElemRank> GroupSequence::support() const {
    std::vector<ElemRank> out = r_;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ElementSet::ElementSet(GroupSpec group, std::vector<ElemRank> ranks)
    : g_(std::move(group)), r_(std::move(ranks)) {
    for (ElemRank r : r_)
        if (r >= g_.order()) throw std::invalid_argument("element rank out of range");
    std::sort(r_.begin(), r_.end());
    if (std::adjacent_find(r_.begin(), r_.end()) != r_.end())
        throw std::invalid_argument("element set must be squarefree");
}

ElementSet::ElementSet(GroupSpec group, std::span<const GroupElement> elems)
    : g_(std::move(group)) {
    r_.reserve(elems.size());
    for (const GroupElement& e : elems) r_.push_back(g_.rank_of(g_.element(e.coords)));
    std::sort(r_.begin(), r_.end());
    if (std::adjacent_find(r_.begin(), r_.end()) != r_.end())
        throw std::invalid_argument("element set must be squarefree");
}

ElementSet ElementSet::full(const GroupSpec& g) {
    std::vector<ElemRank> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElemRank>(i);
    return ElementSet(g, std::move(all));
}

bool ElementSet::contains(ElemRank r) const {
    return std::binary_search(r_.begin(), r_.end(), r);
}

std::vector<GroupElement> ElementSet::elements() const {
    std::vector<GroupElement> out;
    out.reserve(r_.size());
    for (ElemRank r : r_) out.push_back(g_.element_at(r));
    return out;
}

// ---- sums -------------------------------------------------------------------

namespace {

GroupElement sigma_ranks(const GroupSpec& g, std::span<const ElemRank> ranks) {
    ElemRank acc = 0;
    for (ElemRank r : ranks) acc = g.add_ranks(acc, r);
    return g.element_at(acc);
}

}  // namespace

GroupElement sigma(const GroupSequence& s) { return sigma_ranks(s.group(), s.ranks()); }
GroupElement sigma(const ElementSet& s) { return sigma_ranks(s.group(), s.ranks()); }

namespace {

std::vector<ElemRank> map_ranks(const GroupSpec& g, std::span<const ElemRank> ranks,
                                const std::function<ElemRank(ElemRank)>& f) {
    std::vector<ElemRank> out;
    out.reserve(ranks.size());
    for (ElemRank r : ranks) out.push_back(f(r));
    (void)g;
    return out;
}

}  // namespace

ElementSet translate(const GroupElement& g, const ElementSet& s) {
    const GroupSpec& G = s.group();
    ElemRank t = G.rank_of(G.element(g.coords));
    return ElementSet(G, map_ranks(G, s.ranks(), [&](ElemRank r) { return G.add_ranks(r, t); }));
}

GroupSequence translate(const GroupElement& g, const GroupSequence& s) {
    const GroupSpec& G = s.group();
    ElemRank t = G.rank_of(G.element(g.coords));
    return GroupSequence(G, map_ranks(G, s.ranks(), [&](ElemRank r) { return G.add_ranks(r, t); }));
}

ElementSet negate_seq(const ElementSet& s) {
    const GroupSpec& G = s.group();
    return ElementSet(G, map_ranks(G, s.ranks(), [&](ElemRank r) { return G.neg_rank(r); }));
}

GroupSequence negate_seq(const GroupSequence& s) {
    const GroupSpec& G = s.group();
    return GroupSequence(G, map_ranks(G, s.ranks(), [&](ElemRank r) { return G.neg_rank(r); }));
}

ElementSet difference(const ElementSet& a, const ElementSet& b) {
    if (!(a.group() == b.group())) throw std::invalid_argument("group mismatch");
    std::vector<ElemRank> out;
    std::set_difference(a.ranks().begin(), a.ranks().end(), b.ranks().begin(), b.ranks().end(),
                        std::back_inserter(out));
    return ElementSet(a.group(), std::move(out));
}

ElementSet dilate(std::int64_t k, const ElementSet& a) {
    const GroupSpec& G = a.group();
    std::vector<ElemRank> out;
    out.reserve(a.size());
    for (ElemRank r : a.ranks()) out.push_back(G.mul_rank(k, r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return ElementSet(G, std::move(out));
}

std::vector<ElemRank> weighted_images(const GroupSpec& g, ElemRank e, const WeightSet& w) {
    std::vector<ElemRank> out;
    out.reserve(w.weights().size());
    for (std::int64_t wt : w.weights()) out.push_back(g.mul_rank(wt, e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

DenseSet weighted_sigma_ranks(const GroupSpec& g, std::span<const ElemRank> ranks,
                              const WeightSet& w) {
    DenseSet acc = g.empty_set();
    acc.set(0);
    DenseSet next = g.empty_set();
    for (ElemRank e : ranks) {
        next.clear();
        for (ElemRank t : weighted_images(g, e, w)) g.translate_or_words(next.words(), acc.words(), t);
        std::swap(acc, next);
    }
    return acc;
}

}  // namespace

DenseSet weighted_sigma(const GroupSequence& s, const WeightSet& w) {
    return weighted_sigma_ranks(s.group(), s.ranks(), w);
}
DenseSet weighted_sigma(const ElementSet& s, const WeightSet& w) {
    return weighted_sigma_ranks(s.group(), s.ranks(), w);
}

// ---- subsums ------------------------------------------------------------------

std::vector<DenseSet> subsum_rows(const GroupSpec& g, std::span<const ElemRank> elems,
                                  const WeightSet& w, std::uint32_t kcap) {
    std::vector<DenseSet> rows(kcap + 1, g.empty_set());
    rows[0].set(0);
    std::uint32_t filled = 0;  // highest row that can be non-empty so far
    for (ElemRank e : elems) {
        auto ts = weighted_images(g, e, w);
        std::uint32_t top = std::min(kcap, filled + 1);
        for (std::uint32_t k = top; k >= 1; --k) {
            for (ElemRank t : ts) g.translate_or_words(rows[k].words(), rows[k - 1].words(), t);
        }
        filled = top;
    }
    return rows;
}

SubsumProfile subsum_profile(const GroupSequence& s, const WeightSet& w) {
    return SubsumProfile{s.group(), w,
                         subsum_rows(s.group(), s.ranks(), w,
                                     static_cast<std::uint32_t>(s.size()))};
}

SubsumProfile subsum_profile(const ElementSet& s, const WeightSet& w) {
    return SubsumProfile{s.group(), w,
                         subsum_rows(s.group(), s.ranks(), w,
                                     static_cast<std::uint32_t>(s.size()))};
}

DenseSet SubsumProfile::subsums() const {
    DenseSet acc = group.empty_set();
    for (std::size_t k = 1; k < by_length.size(); ++k) acc |= by_length[k];
    return acc;
}

DenseSet SubsumProfile::subsums0() const {
    DenseSet acc = subsums();
    acc.set(0);
    return acc;
}

namespace {

// Accumulate the nonempty-subsum set directly: fold R -> R u (R u {0}) + w*e.
DenseSet subsums_ranks(const GroupSpec& g, std::span<const ElemRank> ranks, const WeightSet& w) {
    DenseSet r = g.empty_set();
    DenseSet with0 = g.empty_set();
    for (ElemRank e : ranks) {
        with0 = r;
        with0.set(0);
        for (ElemRank t : weighted_images(g, e, w))
            g.translate_or_words(r.words(), with0.words(), t);
    }
    return r;
}

}  // namespace

DenseSet subsums(const GroupSequence& s, const WeightSet& w) {
    return subsums_ranks(s.group(), s.ranks(), w);
}
DenseSet subsums(const ElementSet& s, const WeightSet& w) {
    return subsums_ranks(s.group(), s.ranks(), w);
}

DenseSet subsums0(const GroupSequence& s, const WeightSet& w) {
    DenseSet r = subsums(s, w);
    r.set(0);
    return r;
}
DenseSet subsums0(const ElementSet& s, const WeightSet& w) {
    DenseSet r = subsums(s, w);
    r.set(0);
    return r;
}

GroupSequence push_forward(const GroupSpec& target,
                           const std::function<GroupElement(const GroupElement&)>& phi,
                           const GroupSequence& s) {
    std::vector<ElemRank> ranks;
    ranks.reserve(s.size());
    for (const GroupElement& e : s.elements())
        ranks.push_back(target.rank_of(target.element(phi(e).coords)));
    return GroupSequence(target, std::move(ranks));
}

GroupSequence push_forward(const Decomposition& d, std::size_t part, const GroupSequence& s) {
    return push_forward(d.parts()[part],
                        [&](const GroupElement& e) { return d.project(part, e); }, s);
}

GroupSequence push_forward(const Decomposition& d, std::size_t part, const ElementSet& s) {
    return push_forward(d, part, s.as_sequence());
}

}  // namespace harborth
