#include "harborth/checks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "harborth/naive.hpp"
#include "harborth/rng.hpp"
#include "harborth/sumset.hpp"
#include "harborth/witness.hpp"

namespace harborth {

namespace {

void fail(CheckResult& r, const std::string& what) {
    ++r.failures;
    r.pass = false;
    if (r.detail.empty()) r.detail = what;
}

std::string seq_str(const GroupSpec& g, const std::vector<ElemRank>& ranks) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) os << ' ';
        const GroupElement e = g.element_at(ranks[i]);
        os << '(';
        for (std::size_t c = 0; c < e.coords.size(); ++c) {
            if (c) os << ',';
            os << e.coords[c];
        }
        os << ')';
    }
    os << "]";
    return os.str();
}

// sigma_{v,w}(S) must equal v*sigma(S) + (w-v) * subsums0(S, classic).
bool two_weight_identity_holds(const GroupSpec& g, const GroupSequence& s, std::int64_t v,
                               std::int64_t w) {
    DenseSet lhs = weighted_sigma(s, WeightSet({v, w}));
    DenseSet sub0 = subsums0(s, WeightSet::classic());
    DenseSet rhs = g.dilate_set(w - v, sub0);
    ElemRank shift = g.rank_of(g.scalar_mul(v, sigma(s)));
    rhs = g.translate_set(rhs, shift);
    return lhs == rhs;
}

void check_identity_on(CheckResult& r, const GroupSpec& g, const std::vector<ElemRank>& ranks,
                       Rng& rng) {
    GroupSequence s(g, ranks);
    ++r.cases;
    // plus-minus identity
    DenseSet lhs = weighted_sigma(s, WeightSet::plus_minus());
    DenseSet sub0 = subsums0(s, WeightSet::classic());
    DenseSet rhs = g.translate_set(g.dilate_set(2, sub0), g.neg_rank(g.rank_of(sigma(s))));
    if (!(lhs == rhs)) {
        fail(r, "pm identity fails on " + seq_str(g, ranks) + " over " + g.to_string());
        return;
    }
    // odd order: full-size image and the support lower bound
    if (g.order() % 2 == 1) {
        std::size_t supp_nonzero = 0;
        std::vector<ElemRank> uniq = ranks;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (ElemRank x : uniq)
            if (x != 0) ++supp_nonzero;
        if (lhs.count() != sub0.count() || lhs.count() < 1 + supp_nonzero) {
            fail(r, "odd-order cardinality fails on " + seq_str(g, ranks) + " over " +
                        g.to_string());
            return;
        }
    }
    // a random distinct weight pair
    std::int64_t v = rng.range(-5, 5);
    std::int64_t w = rng.range(-5, 5);
    if (v == w) w += 1;
    if (!two_weight_identity_holds(g, s, v, w))
        fail(r, "two-weight identity fails on " + seq_str(g, ranks) + " over " + g.to_string());
}

}  // namespace

CheckResult check_pm_sum_identity(const GroupSpec& g, std::uint64_t samples, std::uint64_t seed) {
    CheckResult r;
    Rng rng(seed);
    const std::uint64_t n = g.order();
    if (n <= 12) {
        // all multisets of size <= 4
        std::vector<ElemRank> s;
        for (std::uint64_t a = 0; a <= n; ++a) {
            for (std::uint64_t b = a; b <= n; ++b) {
                for (std::uint64_t c = b; c <= n; ++c) {
                    for (std::uint64_t d = c; d <= n; ++d) {
                        s.clear();
                        // index n encodes "absent"
                        for (std::uint64_t x : {a, b, c, d})
                            if (x < n) s.push_back(static_cast<ElemRank>(x));
                        check_identity_on(r, g, s, rng);
                    }
                }
            }
        }
    }
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::vector<ElemRank> s(rng.below(9));
        for (ElemRank& x : s) x = static_cast<ElemRank>(rng.below(n));
        check_identity_on(r, g, s, rng);
    }
    return r;
}

namespace {

DenseSet random_subset_of_size(const GroupSpec& g, std::uint64_t size, Rng& rng) {
    std::uint64_t n = g.order();
    std::vector<ElemRank> pool(n);
    for (std::uint64_t i = 0; i < n; ++i) pool[i] = static_cast<ElemRank>(i);
    for (std::uint64_t i = 0; i < size; ++i) {
        std::uint64_t j = i + rng.below(n - i);
        std::swap(pool[i], pool[j]);
    }
    DenseSet s = g.empty_set();
    for (std::uint64_t i = 0; i < size; ++i) s.set(pool[i]);
    return s;
}

void check_cover_pair(CheckResult& r, const GroupSpec& g, const DenseSet& a, const DenseSet& b) {
    const std::uint64_t n = g.order();
    const std::uint64_t t = g.p_rank(2);
    const std::uint64_t ca = a.count(), cb = b.count();
    if (ca == 0 || cb == 0) return;
    DenseSet full = g.full_set();
    if (ca + cb >= n + 1) {
        ++r.cases;
        if (!(sumset(g, a, b) == full)) fail(r, "sumset threshold fails over " + g.to_string());
    }
    if (ca + cb >= n + 1 + (std::uint64_t{1} << t)) {
        ++r.cases;
        if (!(restricted_sumset(g, a, b) == full))
            fail(r, "restricted sumset threshold fails over " + g.to_string());
    }
}

void check_pair_lookup(CheckResult& r, const GroupSpec& g, const DenseSet& a, const DenseSet& b,
                       ElemRank target, bool restricted) {
    ++r.cases;
    DenseSet cover = restricted ? restricted_sumset(g, a, b) : sumset(g, a, b);
    auto pair = find_pair_with_sum(g, a, b, g.element_at(target), restricted);
    if (pair.has_value() != cover.test(target)) {
        fail(r, "find_pair presence disagrees with membership over " + g.to_string());
        return;
    }
    if (pair) {
        const auto& [x, y] = *pair;
        ElemRank rx = g.rank_of(x), ry = g.rank_of(y);
        bool ok = a.test(rx) && b.test(ry) && g.add_ranks(rx, ry) == target &&
                  (!restricted || rx != ry);
        if (!ok) fail(r, "find_pair returned an invalid pair over " + g.to_string());
    }
}

}  // namespace

CheckResult check_coverage_thresholds(const GroupSpec& g, std::uint64_t samples,
                                      std::uint64_t seed) {
    CheckResult r;
    Rng rng(seed);
    const std::uint64_t n = g.order();
    if (n <= 8) {
        for (std::uint64_t ma = 1; ma < (std::uint64_t{1} << n); ++ma) {
            for (std::uint64_t mb = 1; mb < (std::uint64_t{1} << n); ++mb) {
                DenseSet a = g.empty_set(), b = g.empty_set();
                for (std::uint64_t i = 0; i < n; ++i) {
                    if (ma >> i & 1) a.set(static_cast<ElemRank>(i));
                    if (mb >> i & 1) b.set(static_cast<ElemRank>(i));
                }
                check_cover_pair(r, g, a, b);
            }
        }
    }
    const std::uint64_t t = g.p_rank(2);
    for (std::uint64_t i = 0; i < samples; ++i) {
        // pair meeting the plain threshold
        std::uint64_t sa = 1 + rng.below(n);
        std::uint64_t sb_min = n + 1 > sa ? n + 1 - sa : 1;
        if (sb_min <= n) {
            std::uint64_t sb = sb_min + rng.below(n - sb_min + 1);
            check_cover_pair(r, g, random_subset_of_size(g, sa, rng),
                             random_subset_of_size(g, sb, rng));
        }
        // pair meeting the restricted threshold, when reachable
        std::uint64_t need = n + 1 + (std::uint64_t{1} << t);
        if (need <= 2 * n) {
            std::uint64_t lo = need > n ? need - n : 1;
            std::uint64_t sa2 = lo + rng.below(n - lo + 1);
            std::uint64_t sb2_min = need - sa2;
            std::uint64_t sb2 = sb2_min + rng.below(n - sb2_min + 1);
            check_cover_pair(r, g, random_subset_of_size(g, sa2, rng),
                             random_subset_of_size(g, sb2, rng));
        }
        // pair lookup on arbitrary sets
        DenseSet a = random_subset_of_size(g, 1 + rng.below(n), rng);
        DenseSet b = random_subset_of_size(g, 1 + rng.below(n), rng);
        check_pair_lookup(r, g, a, b, static_cast<ElemRank>(rng.below(n)), rng.below(2) == 1);
    }
    return r;
}

CheckResult check_direct_sum_bound(std::uint64_t order_max, const WeightSet& w,
                                   const SearchOptions& opts) {
    CheckResult r;
    std::map<std::string, std::uint64_t> memo;
    auto constant_of = [&](const GroupSpec& g) {
        auto it = memo.find(g.to_string());
        if (it != memo.end()) return it->second;
        ConstantReport rep = harborth_constant(g, w, opts);
        if (!rep.complete) throw BudgetExceeded(rep.lower_bound);
        memo[g.to_string()] = rep.value;
        return rep.value;
    };
    for (std::uint64_t oh = 2; oh <= order_max / 2; ++oh) {
        for (const auto& hf : abelian_group_types(oh)) {
            GroupSpec h = GroupSpec::from_invariant_factors(hf);
            for (std::uint64_t ok = 2; oh * ok <= order_max; ++ok) {
                for (const auto& kf : abelian_group_types(ok)) {
                    GroupSpec k = GroupSpec::from_invariant_factors(kf);
                    if (k.exponent() % h.exponent() != 0) continue;
                    ++r.cases;
                    DirectSumBound b = lower_bound_direct_sum(h, k, w, opts);
                    std::uint64_t value = constant_of(b.composite);
                    if (value < b.bound) {
                        fail(r, "bound exceeds constant for " + h.to_string() + " + " +
                                    k.to_string());
                        continue;
                    }
                    if (b.witness.size() != b.bound - 1 ||
                        !verify_blocking(b.witness, w, b.composite.exponent()).blocking)
                        fail(r, "composed witness fails for " + h.to_string() + " + " +
                                    k.to_string());
                }
            }
        }
    }
    return r;
}

CheckResult check_even_cover_exhaustive(std::uint32_t n, const SearchBudget& budget) {
    CheckResult r;
    EvenCoverReport rep = check_even_cover(n, budget);
    r.cases = rep.candidates;
    r.failures = rep.counterexamples;
    r.pass = rep.counterexamples == 0;
    if (!r.pass) {
        std::ostringstream os;
        os << "counterexample of length " << rep.first_counterexample.size() << " for n=" << n;
        r.detail = os.str();
    }
    return r;
}

CheckResult check_extremal_classification(std::uint64_t order_max, const WeightSet& w,
                                          const SearchOptions& opts) {
    if (!w.is_classic() && !w.is_plus_minus())
        throw std::invalid_argument("classification is characterized for weights 1 and -1,1");
    CheckResult r;
    std::vector<std::string> computed;
    for (const auto& [g, value] : classify_extremal(order_max, w, opts))
        computed.push_back(g.to_string());

    std::vector<std::string> predicted;
    for (std::uint64_t n = 1; n <= order_max; ++n) {
        for (const auto& chain : abelian_group_types(n)) {
            GroupSpec g = GroupSpec::from_invariant_factors(chain);
            bool extremal;
            if (w.is_classic())
                extremal = g.is_elementary_2() || (g.is_cyclic() && !g.is_trivial() && n % 2 == 0);
            else
                extremal = g.is_elementary_2() || (g.is_cyclic() && n % 4 == 2);
            if (extremal) predicted.push_back(g.to_string());
        }
    }
    std::sort(computed.begin(), computed.end());
    std::sort(predicted.begin(), predicted.end());
    r.cases = predicted.size();
    if (computed != predicted) {
        r.pass = false;
        r.failures = 1;
        std::ostringstream os;
        os << "computed {";
        for (const auto& s : computed) os << ' ' << s;
        os << " } vs characterized {";
        for (const auto& s : predicted) os << ' ' << s;
        os << " }";
        r.detail = os.str();
    }
    return r;
}

CheckResult check_profile_against_naive(std::uint64_t samples, std::uint64_t seed) {
    CheckResult r;
    Rng rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint64_t order = 1 + rng.below(24);
        auto types = abelian_group_types(order);
        GroupSpec g = GroupSpec::from_invariant_factors(types[rng.below(types.size())]);
        std::uint64_t max_size = std::min<std::uint64_t>(10, g.order());
        std::uint64_t size = rng.below(max_size + 1);
        DenseSet sset = random_subset_of_size(g, size, rng);
        std::vector<ElemRank> ranks = sset.to_ranks();

        std::vector<std::int64_t> ws;
        std::uint64_t nw = 1 + rng.below(3);
        while (ws.size() < nw) {
            std::int64_t cand = rng.range(-3, 3);
            if (std::find(ws.begin(), ws.end(), cand) == ws.end()) ws.push_back(cand);
        }
        WeightSet w(ws);

        ++r.cases;
        auto fast = subsum_rows(g, ranks, w, static_cast<std::uint32_t>(ranks.size()));
        auto slow = naive::profile(g, ranks, w);
        bool ok = fast.size() == slow.size();
        for (std::size_t k = 0; ok && k < fast.size(); ++k) ok = fast[k] == slow[k];
        if (!ok)
            fail(r, "profile disagrees with naive enumeration on " + seq_str(g, ranks) +
                        " over " + g.to_string() + " weights " + w.to_string());
    }
    return r;
}

}  // namespace harborth
