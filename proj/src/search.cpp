#include "harborth/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstring>
#include <thread>

#include "harborth/bitkernel.hpp"

namespace harborth {

const char* to_string(ConstantKind k) {
    return k == ConstantKind::harborth ? "harborth" : "olson";
}

bool is_blocking(const ElementSet& s, const WeightSet& w, ConstantKind kind) {
    const GroupSpec& g = s.group();
    if (kind == ConstantKind::harborth) {
        auto rows = subsum_rows(g, s.ranks(), w, g.exponent());
        return !rows[g.exponent()].test(0);
    }
    return !subsums(s, w).test(0);
}

// ---------------------------------------------------------------------------
// DFS engine
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
    const GroupSpec& g;
    ConstantKind kind;
    std::uint32_t n;     // |G|
    std::uint32_t nw;    // words per bit row
    std::uint32_t rows;  // DP rows per level
    std::uint32_t exp;
    // per element rank: coordinates of the distinct values w*e, w in W
    std::vector<std::vector<GroupElement>> wimg;
    const std::vector<bool>* root_allowed = nullptr;

    std::uint64_t max_nodes;
    double max_seconds;
    Clock::time_point t0;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    std::atomic<std::uint32_t> global_best{0};

    Shared(const GroupSpec& group, ConstantKind k, const WeightSet& w, const SearchBudget& b)
        : g(group), kind(k) {
        n = static_cast<std::uint32_t>(g.order());
        nw = static_cast<std::uint32_t>(g.word_count());
        exp = g.exponent();
        rows = kind == ConstantKind::harborth ? exp + 1 : 1;
        wimg.resize(n);
        for (std::uint32_t e = 0; e < n; ++e) {
            for (ElemRank t : weighted_images(g, e, w)) wimg[e].push_back(g.element_at(t));
        }
        max_nodes = b.max_nodes;
        max_seconds = b.max_seconds;
        t0 = Clock::now();
    }

    void raise_best(std::uint32_t v) {
        std::uint32_t cur = global_best.load(std::memory_order_relaxed);
        while (cur < v &&
               !global_best.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
        }
    }

    // Flushes a local node count into the shared counter and polls the budget.
    void account(std::uint64_t batch) {
        std::uint64_t total = nodes.fetch_add(batch, std::memory_order_relaxed) + batch;
        if (total > max_nodes) {
            aborted.store(true, std::memory_order_relaxed);
        } else if (max_seconds > 0 &&
                   std::chrono::duration<double>(Clock::now() - t0).count() > max_seconds) {
            aborted.store(true, std::memory_order_relaxed);
        }
    }
};

struct Local {
    std::uint32_t best = 0;
    std::vector<ElemRank> witness;
    std::uint64_t nodes = 0;
};

class Explorer {
public:
    explicit Explorer(Shared& sh)
        : sh_(sh),
          level_words_(static_cast<std::size_t>(sh.rows) * sh.nw),
          arena_(static_cast<std::size_t>(sh.n + 2) * level_words_, 0),
          scratch_(sh.nw, 0) {}

    // DFS over rank-increasing extensions of `prefix` (which must be
    // blocking). With truncate_depth > 0, sets reaching that size are
    // appended to *frontier instead of being descended into.
    void run(const std::vector<ElemRank>& prefix, Local& out, std::uint32_t truncate_depth,
             std::vector<std::vector<ElemRank>>* frontier) {
        init_level0();
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!extend(static_cast<std::uint32_t>(i), prefix[i]))
                throw std::logic_error("search prefix is not blocking");
        }
        out.best = static_cast<std::uint32_t>(prefix.size());
        out.witness = prefix;
        sh_.raise_best(out.best);

        std::vector<ElemRank> chosen = prefix;
        std::vector<ElemRank> cursor(sh_.n + 2, 0);
        cursor[chosen.size()] = prefix.empty() ? 0 : prefix.back() + 1;
        std::uint64_t batch = 0;

        for (;;) {
            std::uint32_t d = static_cast<std::uint32_t>(chosen.size());
            ElemRank r = cursor[d];
            std::uint32_t needed =
                std::max(sh_.global_best.load(std::memory_order_relaxed), out.best + 1);
            if (r >= sh_.n || d + (sh_.n - r) < needed) {
                if (d == prefix.size()) break;
                chosen.pop_back();
                continue;
            }
            cursor[d] = r + 1;
            if (d == 0 && sh_.root_allowed && !(*sh_.root_allowed)[r]) continue;

            if (++batch >= 1024) {
                sh_.account(batch);
                out.nodes += batch;
                batch = 0;
                if (sh_.aborted.load(std::memory_order_relaxed)) break;
            }
            if (!extend(d, r)) continue;

            if (truncate_depth && d + 1 >= truncate_depth) {
                std::vector<ElemRank> f = chosen;
                f.push_back(r);
                if (f.size() > out.best) {
                    out.best = static_cast<std::uint32_t>(f.size());
                    out.witness = f;
                    sh_.raise_best(out.best);
                }
                frontier->push_back(std::move(f));
                continue;
            }
            chosen.push_back(r);
            if (chosen.size() > out.best) {
                out.best = static_cast<std::uint32_t>(chosen.size());
                out.witness = chosen;
                sh_.raise_best(out.best);
            }
            cursor[chosen.size()] = r + 1;
        }
        sh_.account(batch);
        out.nodes += batch;
    }

private:
    void init_level0() {
        std::fill(arena_.begin(), arena_.begin() + level_words_, 0);
        if (sh_.kind == ConstantKind::harborth) kern::set_bit(&arena_[0], 0);  // row 0 = {0}
    }

    // Extends the profile at `level` (= current set size) by element e into
    // level+1; returns whether the extended set is blocking.
    bool extend(std::uint32_t level, ElemRank e) {
        const std::uint64_t* src = &arena_[static_cast<std::size_t>(level) * level_words_];
        std::uint64_t* dst = &arena_[static_cast<std::size_t>(level + 1) * level_words_];
        std::memcpy(dst, src, level_words_ * sizeof(std::uint64_t));
        const auto& images = sh_.wimg[e];
        if (sh_.kind == ConstantKind::harborth) {
            std::uint32_t top = std::min(sh_.rows - 1, level + 1);
            for (std::uint32_t k = top; k >= 1; --k) {
                std::uint64_t* dk = dst + static_cast<std::size_t>(k) * sh_.nw;
                const std::uint64_t* sk = src + static_cast<std::size_t>(k - 1) * sh_.nw;
                for (const GroupElement& t : images) sh_.g.translate_or_words(dk, sk, t);
            }
            return !kern::test_bit(dst + static_cast<std::size_t>(sh_.exp) * sh_.nw, 0);
        }
        // olson: R' = R u (R u {0}) + w*e
        std::memcpy(scratch_.data(), src, sh_.nw * sizeof(std::uint64_t));
        kern::set_bit(scratch_.data(), 0);
        for (const GroupElement& t : images) sh_.g.translate_or_words(dst, scratch_.data(), t);
        return !kern::test_bit(dst, 0);
    }

    Shared& sh_;
    std::size_t level_words_;
    std::vector<std::uint64_t> arena_;
    std::vector<std::uint64_t> scratch_;
};

void consider(std::uint32_t size, const std::vector<ElemRank>& witness, std::uint32_t& best,
              std::vector<ElemRank>& best_witness, bool& have) {
    if (!have || size > best || (size == best && witness < best_witness)) {
        best = size;
        best_witness = witness;
        have = true;
    }
}

}  // namespace

// GroupSpec::translate_or_words has a coordinate overload used by the engine.

BlockingSearchResult max_blocking_size(const GroupSpec& g, const WeightSet& w, ConstantKind kind,
                                       const SearchOptions& opts) {
    Shared sh(g, kind, w, opts.budget);
    // Memory guard: one DP arena is (n+2) levels of rows x words.
    const std::size_t arena_words =
        static_cast<std::size_t>(sh.n + 2) * sh.rows * sh.nw;
    if (arena_words > (std::size_t{1} << 25))
        throw std::invalid_argument("group too large for blocking-set search");

    std::vector<bool> allowed;
    bool orbit_used = false;
    if (opts.orbit_prune) {
        if (auto reps = orbit_representatives(g)) {
            allowed.assign(sh.n, false);
            for (ElemRank r : *reps) allowed[r] = true;
            sh.root_allowed = &allowed;
            orbit_used = true;
        }
    }

    // Any set of size exp-1 blocks the harborth kind outright, so the search
    // starts from that bound with the first exp-1 ranks as witness.
    std::uint32_t seed_size = 0;
    std::vector<ElemRank> seed_witness;
    if (kind == ConstantKind::harborth) {
        seed_size = std::min(sh.exp - 1, sh.n);
        for (std::uint32_t i = 0; i < seed_size; ++i) seed_witness.push_back(i);
    }
    sh.raise_best(seed_size);

    std::uint32_t best = seed_size;
    std::vector<ElemRank> best_witness = seed_witness;
    bool have = true;

    unsigned workers = std::max(1u, opts.workers);
    bool parallel = workers > 1 && opts.split_depth > 0 && sh.n > opts.split_depth + 2;

    if (!parallel) {
        Explorer ex(sh);
        Local loc;
        ex.run({}, loc, 0, nullptr);
        consider(loc.best, loc.witness, best, best_witness, have);
    } else {
        std::vector<std::vector<ElemRank>> frontier;
        Local exp_loc;
        {
            Explorer ex(sh);
            ex.run({}, exp_loc, opts.split_depth, &frontier);
        }
        consider(exp_loc.best, exp_loc.witness, best, best_witness, have);

        std::atomic<std::size_t> next{0};
        std::vector<Local> task_results(frontier.size());
        auto pump = [&]() {
            Explorer ex(sh);
            for (;;) {
                std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= frontier.size() || sh.aborted.load(std::memory_order_relaxed)) break;
                ex.run(frontier[i], task_results[i], 0, nullptr);
            }
        };
        std::vector<std::thread> pool;
        unsigned nthreads = std::min<std::size_t>(workers, std::max<std::size_t>(frontier.size(), 1));
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(pump);
        for (auto& th : pool) th.join();
        for (const Local& loc : task_results)
            consider(loc.best, loc.witness, best, best_witness, have);
    }

    BlockingSearchResult res;
    res.complete = !sh.aborted.load();
    res.max_size = best;
    res.witness = best_witness;
    res.stats.nodes = sh.nodes.load();
    res.stats.seconds = std::chrono::duration<double>(Clock::now() - sh.t0).count();
    res.stats.workers = parallel ? workers : 1;
    res.stats.strategy = parallel ? "dfs-lex/pool" : "dfs-lex";
    res.stats.orbit_prune = orbit_used;
    res.stats.budget_exceeded = !res.complete;
    return res;
}

ConstantReport compute_constant(const GroupSpec& g, const WeightSet& w, ConstantKind kind,
                                const SearchOptions& opts) {
    BlockingSearchResult r = max_blocking_size(g, w, kind, opts);
    ConstantReport rep;
    rep.kind = kind;
    rep.group = g;
    rep.weights = w;
    rep.complete = r.complete;
    rep.lower_bound = r.max_size + 1;
    rep.stats = r.stats;
    if (r.complete) {
        rep.value = r.max_size + 1;
        rep.witness = ElementSet(g, r.witness);
    } else {
        rep.witness = ElementSet(g, r.witness);
    }
    return rep;
}

ConstantReport harborth_constant(const GroupSpec& g, const WeightSet& w,
                                 const SearchOptions& opts) {
    return compute_constant(g, w, ConstantKind::harborth, opts);
}

ConstantReport olson_constant(const GroupSpec& g, const WeightSet& w, const SearchOptions& opts) {
    return compute_constant(g, w, ConstantKind::olson, opts);
}

// ---------------------------------------------------------------------------
// Known closed forms
// ---------------------------------------------------------------------------

std::optional<std::uint64_t> formula_oracle(const GroupSpec& g, const WeightSet& w) {
    const auto& f = g.invariant_factors();
    const std::uint64_t n = g.order();
    if (w.is_classic()) {
        if (g.is_elementary_2()) return n + 1;
        if (g.is_cyclic()) return n % 2 ? n : n + 1;
        if (f.size() == 2 && f[0] == 2) {
            std::uint64_t m = f[1] / 2;  // G = C2 + C_{2m}
            return m % 2 ? 2 * m + 3 : 2 * m + 2;
        }
        if (f.size() == 2 && f[0] == f[1] && (f[0] == 3 || f[0] == 5 || f[0] == 7))
            return 2 * std::uint64_t{f[0]} - 1;
        if (f.size() == 2 && f[0] == 4 && f[1] == 4) return 9;
        return std::nullopt;
    }
    if (w.is_plus_minus()) {
        if (g.is_elementary_2()) return n + 1;
        if (g.is_cyclic()) return n % 4 == 2 ? n + 1 : n;
        if (f.size() == 2 && f[0] == 2) {
            std::uint64_t m = f[1] / 2;
            return m <= 2 ? 5 : 2 * m + 2;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Direct-sum lower bound
// ---------------------------------------------------------------------------

DirectSumBound lower_bound_direct_sum(const GroupSpec& h, const GroupSpec& k, const WeightSet& w,
                                      const SearchOptions& opts) {
    if (k.exponent() % h.exponent() != 0)
        throw std::invalid_argument("direct-sum bound requires exp(H) | exp(K)");
    ConstantReport oh = olson_constant(h, w, opts);
    if (!oh.complete) throw BudgetExceeded(oh.lower_bound);
    ConstantReport gk = harborth_constant(k, w, opts);
    if (!gk.complete) throw BudgetExceeded(gk.lower_bound);

    Decomposition d = direct_sum_decomposition(h, k);
    const GroupSpec& G = d.composite();
    std::vector<ElemRank> ranks;
    for (const GroupElement& e : oh.witness.elements())
        ranks.push_back(G.rank_of(d.embed(0, e)));
    for (const GroupElement& e : gk.witness.elements())
        ranks.push_back(G.rank_of(d.embed(1, e)));

    DirectSumBound out;
    out.composite = G;
    out.olson_h = oh.value;
    out.harborth_k = gk.value;
    out.bound = oh.value + gk.value - 1;
    out.witness = ElementSet(G, std::move(ranks));
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive even-cover check over C2 + C2 + Cn
// ---------------------------------------------------------------------------

EvenCoverReport check_even_cover(std::uint32_t n, const SearchBudget& budget) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    std::vector<std::uint64_t> factors{2, 2, n};
    GroupSpec g = make_group(factors);
    Decomposition d = make_group_decomposition(factors);
    const std::uint32_t N = static_cast<std::uint32_t>(g.order());  // 4n
    const std::uint32_t len = 2 * n + 2;
    const std::uint32_t kcap = 2 * n;
    const std::uint32_t nw = static_cast<std::uint32_t>(g.word_count());
    const std::size_t level_words = static_cast<std::size_t>(kcap + 1) * nw;

    std::vector<std::uint64_t> arena((len + 1) * level_words, 0);
    kern::set_bit(&arena[0], 0);

    // index of the C2+C2 coordinates among the decomposition parts (the
    // trailing Cn part vanishes when n = 1)
    const std::size_t two_parts = d.part_count() >= 2 ? 2 : d.part_count();

    EvenCoverReport rep;
    std::vector<ElemRank> chosen;
    std::vector<ElemRank> cursor(len + 2, 0);
    std::vector<ElemRank> sums{0};  // running sum per level
    std::uint64_t nodes = 0;
    auto t0 = Clock::now();

    for (;;) {
        std::uint32_t depth = static_cast<std::uint32_t>(chosen.size());
        ElemRank r = cursor[depth];
        if (r >= N || depth + (N - r) < len) {
            if (chosen.empty()) break;
            chosen.pop_back();
            sums.pop_back();
            continue;
        }
        cursor[depth] = r + 1;
        if (++nodes > budget.max_nodes ||
            (budget.max_seconds > 0 && (nodes & 4095) == 0 &&
             std::chrono::duration<double>(Clock::now() - t0).count() > budget.max_seconds))
            throw BudgetExceeded(0);

        // extend DP rows
        const std::uint64_t* src = &arena[static_cast<std::size_t>(depth) * level_words];
        std::uint64_t* dst = &arena[static_cast<std::size_t>(depth + 1) * level_words];
        std::memcpy(dst, src, level_words * sizeof(std::uint64_t));
        std::uint32_t top = std::min(kcap, depth + 1);
        const GroupElement te = g.element_at(r);
        for (std::uint32_t k = top; k >= 1; --k) {
            g.translate_or_words(dst + static_cast<std::size_t>(k) * nw,
                                 src + static_cast<std::size_t>(k - 1) * nw, te);
        }

        ElemRank sum = g.add_ranks(sums.back(), r);
        if (depth + 1 == len) {
            auto tuple = d.forward(g.element_at(sum));
            bool pi1_nonzero = false;
            for (std::size_t p = 0; p < two_parts; ++p)
                if (tuple[p] != d.parts()[p].zero()) pi1_nonzero = true;
            if (pi1_nonzero) {
                ++rep.candidates;
                bool has_zero = kern::test_bit(dst + static_cast<std::size_t>(kcap) * nw, 0);
                if (!has_zero) {
                    ++rep.counterexamples;
                    if (rep.first_counterexample.empty()) {
                        std::vector<ElemRank> ce = chosen;
                        ce.push_back(r);
                        for (ElemRank x : ce) rep.first_counterexample.push_back(g.element_at(x));
                    }
                }
            }
            continue;  // do not descend past the target length
        }
        chosen.push_back(r);
        sums.push_back(sum);
        cursor[chosen.size()] = r + 1;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Group type enumeration and extremal classification
// ---------------------------------------------------------------------------

namespace {

void chains_rec(std::uint64_t remaining, std::uint64_t prev, std::vector<std::uint64_t>& acc,
                std::vector<std::vector<std::uint64_t>>& out) {
    if (remaining == 1) {
        out.push_back(acc);
        return;
    }
    for (std::uint64_t d = std::max<std::uint64_t>(prev, 2); d <= remaining; ++d) {
        if (remaining % d || d % prev) continue;
        acc.push_back(d);
        chains_rec(remaining / d, d, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::uint64_t>> abelian_group_types(std::uint64_t order) {
    std::vector<std::vector<std::uint64_t>> out;
    if (order == 0) return out;
    std::vector<std::uint64_t> acc;
    chains_rec(order, 1, acc, out);
    return out;
}

std::vector<std::pair<GroupSpec, std::uint64_t>> classify_extremal(std::uint64_t order_max,
                                                                   const WeightSet& w,
                                                                   const SearchOptions& opts) {
    std::vector<std::pair<GroupSpec, std::uint64_t>> out;
    for (std::uint64_t n = 1; n <= order_max; ++n) {
        for (const auto& chain : abelian_group_types(n)) {
            GroupSpec g = GroupSpec::from_invariant_factors(chain);
            ConstantReport r = harborth_constant(g, w, opts);
            if (!r.complete) throw BudgetExceeded(r.lower_bound);
            if (r.value == n + 1) out.emplace_back(g, r.value);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Automorphism orbits
// ---------------------------------------------------------------------------

std::optional<std::vector<ElemRank>> orbit_representatives(const GroupSpec& g) {
    const std::uint64_t n = g.order();
    if (n > 64) return std::nullopt;
    const std::uint32_t r = g.rank();
    if (r == 0) return std::vector<ElemRank>{0};

    // candidate images of generator i: the elements killed by n_i
    std::vector<std::vector<ElemRank>> cand(r);
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        std::uint32_t ni = g.invariant_factors()[i];
        for (std::uint32_t x = 0; x < n; ++x)
            if (ni % g.order_of(g.element_at(x)) == 0) cand[i].push_back(x);
        total *= cand[i].size();
        if (total > 300'000) return std::nullopt;
    }

    std::vector<ElemRank> min_image(n);
    for (std::uint32_t x = 0; x < n; ++x) min_image[x] = x;

    std::vector<std::size_t> idx(r, 0);
    std::vector<ElemRank> phi(n);
    for (;;) {
        // evaluate the endomorphism determined by the chosen images
        std::uint64_t seen = 0;
        for (std::uint32_t x = 0; x < n; ++x) {
            GroupElement cx = g.element_at(x);
            ElemRank acc = 0;
            for (std::uint32_t i = 0; i < r; ++i) {
                if (!cx.coords[i]) continue;
                acc = g.add_ranks(acc, g.mul_rank(cx.coords[i], cand[i][idx[i]]));
            }
            phi[x] = acc;
            seen |= std::uint64_t{1} << acc;
        }
        if (static_cast<std::uint64_t>(std::popcount(seen)) == n) {
            for (std::uint32_t x = 0; x < n; ++x)
                min_image[x] = std::min(min_image[x], phi[x]);
        }
        std::uint32_t i = 0;
        while (i < r && ++idx[i] == cand[i].size()) idx[i++] = 0;
        if (i == r) break;
    }

    std::vector<ElemRank> reps;
    for (std::uint32_t x = 0; x < n; ++x)
        if (min_image[x] == x) reps.push_back(x);
    return reps;
}

}  // namespace harborth
