#include "harborth/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace harborth {

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;

std::uint64_t checked_product(std::span<const std::uint64_t> xs) {
    std::uint64_t p = 1;
    for (std::uint64_t x : xs) {
        if (x == 0 || p > kMaxOrder / x) throw std::invalid_argument("group order too large");
        p *= x;
    }
    return p;
}

// prime-power factorization by trial division; inputs are <= 2^32
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        std::uint32_t e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 0;
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw std::invalid_argument("not invertible");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// The element of Z_n congruent to 1 mod q and 0 mod n/q; requires q | n with
// gcd(q, n/q) = 1.
std::uint64_t crt_idempotent(std::uint64_t q, std::uint64_t n) {
    std::uint64_t m = n / q;
    if (q == 1) return 0;
    return (m % n) * mod_inverse(m % q, q) % n;
}

}  // namespace

struct GroupSpec::Data {
    std::vector<std::uint32_t> factors;  // invariant chain, ascending
    std::vector<std::uint64_t> strides;  // strides[i] = prod of factors[i+1..]
    std::uint64_t order = 1;
    std::uint32_t exponent = 1;

    // Single-word translation plan: per coordinate stage, per shift amount,
    // the masks realizing a block-local rotate. Only built when the order
    // fits in one machine word; larger groups use the reference gather.
    struct Rot {
        std::uint32_t lshift;
        std::uint32_t rshift;
        std::uint64_t keep;
        std::uint64_t wrap;
    };
    std::vector<std::vector<Rot>> rot;

    void init_derived() {
        std::size_t r = factors.size();
        strides.assign(r, 1);
        for (std::size_t i = r; i-- > 0;) {
            strides[i] = (i + 1 < r) ? strides[i + 1] * factors[i + 1] : 1;
        }
        order = 1;
        for (std::uint32_t f : factors) order *= f;
        exponent = factors.empty() ? 1 : factors.back();
        if (order <= 64) build_rot_plan();
    }

    void build_rot_plan() {
        std::size_t r = factors.size();
        rot.resize(r);
        auto low_mask = [](std::uint32_t bits) {
            return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
        };
        for (std::size_t i = 0; i < r; ++i) {
            std::uint64_t stride = strides[i];
            std::uint64_t span = stride * factors[i];
            rot[i].resize(factors[i]);
            for (std::uint32_t t = 1; t < factors[i]; ++t) {
                std::uint32_t s = static_cast<std::uint32_t>(t * stride);
                std::uint64_t wrap = 0, keep = 0;
                for (std::uint64_t base = 0; base < order; base += span) {
                    wrap |= low_mask(s) << base;
                    keep |= (low_mask(static_cast<std::uint32_t>(span)) ^ low_mask(s)) << base;
                }
                rot[i][t] = {s, static_cast<std::uint32_t>(span - s), keep, wrap};
            }
        }
    }

    std::uint64_t translate_word(std::uint64_t x, const GroupElement& t) const {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            std::uint32_t ti = t.coords[i];
            if (!ti) continue;
            const Rot& m = rot[i][ti];
            x = ((x << m.lshift) & m.keep) | ((x >> m.rshift) & m.wrap);
        }
        return x;
    }
};

GroupSpec::GroupSpec() {
    auto d = std::make_shared<Data>();
    d->init_derived();
    d_ = std::move(d);
}

GroupSpec GroupSpec::from_invariant_factors(std::span<const std::uint64_t> factors) {
    auto d = std::make_shared<Data>();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw std::invalid_argument("invariant factor must be >= 2");
        if (i + 1 < factors.size() && factors[i + 1] % factors[i] != 0)
            throw std::invalid_argument("invariant factors must form a divisibility chain");
        d->factors.push_back(static_cast<std::uint32_t>(factors[i]));
    }
    checked_product(factors);
    d->init_derived();
    return GroupSpec(std::move(d));
}

const std::vector<std::uint32_t>& GroupSpec::invariant_factors() const { return d_->factors; }
std::uint64_t GroupSpec::order() const { return d_->order; }
std::uint32_t GroupSpec::exponent() const { return d_->exponent; }
std::uint32_t GroupSpec::rank() const { return static_cast<std::uint32_t>(d_->factors.size()); }

std::uint32_t GroupSpec::p_rank(std::uint64_t p) const {
    std::uint32_t c = 0;
    for (std::uint32_t f : d_->factors)
        if (f % p == 0) ++c;
    return c;
}

bool GroupSpec::is_elementary_2() const {
    return rank() >= 1 && std::all_of(d_->factors.begin(), d_->factors.end(),
                                      [](std::uint32_t f) { return f == 2; });
}

GroupElement GroupSpec::zero() const {
    return GroupElement{std::vector<std::uint32_t>(rank(), 0)};
}

GroupElement GroupSpec::element(std::span<const std::uint32_t> coords) const {
    if (coords.size() != rank()) throw std::invalid_argument("coordinate length mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] >= d_->factors[i]) throw std::invalid_argument("coordinate out of range");
    return GroupElement{{coords.begin(), coords.end()}};
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
    if (a.coords.size() != rank() || b.coords.size() != rank())
        throw std::invalid_argument("coordinate length mismatch");
    GroupElement out = zero();
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        std::uint32_t n = d_->factors[i];
        out.coords[i] = (a.coords[i] + b.coords[i]) % n;
    }
    return out;
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
    if (a.coords.size() != rank()) throw std::invalid_argument("coordinate length mismatch");
    GroupElement out = zero();
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        std::uint32_t n = d_->factors[i];
        out.coords[i] = a.coords[i] ? n - a.coords[i] : 0;
    }
    return out;
}

GroupElement GroupSpec::scalar_mul(std::int64_t k, const GroupElement& a) const {
    if (a.coords.size() != rank()) throw std::invalid_argument("coordinate length mismatch");
    GroupElement out = zero();
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        std::uint64_t n = d_->factors[i];
        std::uint64_t kk = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(n)) +
                                                       static_cast<std::int64_t>(n)) %
                                                      static_cast<std::int64_t>(n));
        out.coords[i] = static_cast<std::uint32_t>(a.coords[i] * kk % n);
    }
    return out;
}

std::uint64_t GroupSpec::order_of(const GroupElement& a) const {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        std::uint64_t n = d_->factors[i];
        std::uint64_t oi = n / std::gcd<std::uint64_t>(n, a.coords[i]);
        ord = std::lcm(ord, oi);
    }
    return ord;
}

ElemRank GroupSpec::rank_of(const GroupElement& a) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < a.coords.size(); ++i) r += a.coords[i] * d_->strides[i];
    return static_cast<ElemRank>(r);
}

GroupElement GroupSpec::element_at(ElemRank r) const {
    GroupElement out = zero();
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        out.coords[i] = static_cast<std::uint32_t>((r / d_->strides[i]) % d_->factors[i]);
    }
    return out;
}

ElemRank GroupSpec::add_ranks(ElemRank a, ElemRank b) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < d_->factors.size(); ++i) {
        std::uint64_t n = d_->factors[i], s = d_->strides[i];
        out += ((a / s) % n + (b / s) % n) % n * s;
    }
    return static_cast<ElemRank>(out);
}

ElemRank GroupSpec::neg_rank(ElemRank a) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < d_->factors.size(); ++i) {
        std::uint64_t n = d_->factors[i], s = d_->strides[i];
        std::uint64_t c = (a / s) % n;
        out += (c ? n - c : 0) * s;
    }
    return static_cast<ElemRank>(out);
}

ElemRank GroupSpec::mul_rank(std::int64_t k, ElemRank a) const {
    return rank_of(scalar_mul(k, element_at(a)));
}

std::vector<GroupElement> GroupSpec::enumerate_elements() const {
    std::vector<GroupElement> out;
    out.reserve(order());
    for (std::uint64_t r = 0; r < order(); ++r) out.push_back(element_at(static_cast<ElemRank>(r)));
    return out;
}

DenseSet GroupSpec::full_set() const {
    DenseSet s = empty_set();
    for (std::uint64_t r = 0; r < order(); ++r) s.set(static_cast<ElemRank>(r));
    return s;
}

std::size_t GroupSpec::word_count() const { return kern::words_for_bits(order()); }

void GroupSpec::translate_or_words_ref(std::uint64_t* dst, const std::uint64_t* src,
                                       ElemRank t) const {
    std::size_t nw = word_count();
    for (std::size_t w = 0; w < nw; ++w) {
        std::uint64_t bits = src[w];
        while (bits) {
            std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(bits));
            bits &= bits - 1;
            ElemRank from = static_cast<ElemRank>(w * 64 + b);
            kern::set_bit(dst, add_ranks(from, t));
        }
    }
}

void GroupSpec::translate_or_words(std::uint64_t* dst, const std::uint64_t* src,
                                   ElemRank t) const {
    if (!d_->rot.empty() || d_->factors.empty()) {
        dst[0] |= d_->translate_word(src[0], element_at(t));
        return;
    }
    translate_or_words_ref(dst, src, t);
}

void GroupSpec::translate_or_words(std::uint64_t* dst, const std::uint64_t* src,
                                   const GroupElement& t) const {
    if (!d_->rot.empty() || d_->factors.empty()) {
        dst[0] |= d_->translate_word(src[0], t);
        return;
    }
    translate_or_words_ref(dst, src, rank_of(t));
}

DenseSet GroupSpec::translate_set(const DenseSet& s, ElemRank t) const {
    DenseSet out = empty_set();
    translate_or_words(out.words(), s.words(), t);
    return out;
}

DenseSet GroupSpec::dilate_set(std::int64_t k, const DenseSet& s) const {
    DenseSet out = empty_set();
    for (std::uint64_t r = 0; r < order(); ++r)
        if (s.test(static_cast<ElemRank>(r))) out.set(mul_rank(k, static_cast<ElemRank>(r)));
    return out;
}

DenseSet GroupSpec::negate_set(const DenseSet& s) const {
    DenseSet out = empty_set();
    for (std::uint64_t r = 0; r < order(); ++r)
        if (s.test(static_cast<ElemRank>(r))) out.set(neg_rank(static_cast<ElemRank>(r)));
    return out;
}

std::string GroupSpec::to_string() const {
    if (d_->factors.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < d_->factors.size(); ++i) {
        if (i) os << ',';
        os << d_->factors[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

Decomposition::Decomposition(GroupSpec composite, std::vector<GroupSpec> parts,
                             std::vector<std::vector<GroupElement>> part_gen_images,
                             std::vector<std::vector<GroupElement>> comp_gen_images)
    : composite_(std::move(composite)),
      parts_(std::move(parts)),
      part_gen_images_(std::move(part_gen_images)),
      comp_gen_images_(std::move(comp_gen_images)) {
    // Both maps are homomorphisms, so checking they invert each other on
    // generators verifies the isomorphism everywhere.
    for (std::uint32_t i = 0; i < composite_.rank(); ++i) {
        GroupElement e = composite_.zero();
        e.coords[i] = 1;
        if (backward(forward(e)) != e)
            throw std::logic_error("decomposition maps are not inverse");
    }
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        for (std::uint32_t c = 0; c < parts_[j].rank(); ++c) {
            GroupElement e = parts_[j].zero();
            e.coords[c] = 1;
            GroupElement img = embed(j, e);
            auto t = forward(img);
            for (std::size_t k = 0; k < parts_.size(); ++k) {
                const GroupElement& expect = (k == j) ? e : parts_[k].zero();
                if (t[k] != expect)
                    throw std::logic_error("decomposition maps are not inverse");
            }
        }
    }
}

std::vector<GroupElement> Decomposition::forward(const GroupElement& g) const {
    if (g.coords.size() != composite_.rank())
        throw std::invalid_argument("coordinate length mismatch");
    std::vector<GroupElement> out;
    out.reserve(parts_.size());
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        GroupElement acc = parts_[j].zero();
        for (std::size_t i = 0; i < g.coords.size(); ++i) {
            if (!g.coords[i]) continue;
            acc = parts_[j].add(acc, parts_[j].scalar_mul(g.coords[i], comp_gen_images_[i][j]));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

GroupElement Decomposition::backward(std::span<const GroupElement> tuple) const {
    if (tuple.size() != parts_.size()) throw std::invalid_argument("tuple length mismatch");
    GroupElement acc = composite_.zero();
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        for (std::size_t c = 0; c < tuple[j].coords.size(); ++c) {
            if (!tuple[j].coords[c]) continue;
            acc = composite_.add(
                acc, composite_.scalar_mul(tuple[j].coords[c], part_gen_images_[j][c]));
        }
    }
    return acc;
}

GroupElement Decomposition::project(std::size_t part, const GroupElement& g) const {
    if (part >= parts_.size()) throw std::out_of_range("decomposition part index");
    return forward(g)[part];
}

GroupElement Decomposition::embed(std::size_t part, const GroupElement& h) const {
    if (part >= parts_.size()) throw std::out_of_range("decomposition part index");
    if (h.coords.size() != parts_[part].rank())
        throw std::invalid_argument("coordinate length mismatch");
    GroupElement acc = composite_.zero();
    for (std::size_t c = 0; c < h.coords.size(); ++c) {
        if (!h.coords[c]) continue;
        acc = composite_.add(acc, composite_.scalar_mul(h.coords[c], part_gen_images_[part][c]));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// make_group / chinese_split
// ---------------------------------------------------------------------------

namespace {

struct Assembly {
    std::vector<std::uint32_t> canonical;  // ascending invariant chain
    // one entry per prime-power instance of the input factors
    struct Piece {
        std::uint64_t q;          // p^e
        std::size_t given_part;   // index into the (kept) input factor list
        std::size_t canon_index;  // index into the ascending canonical chain
    };
    std::vector<Piece> pieces;
    std::vector<std::uint64_t> kept_factors;  // input factors > 1, in order
};

Assembly assemble(std::span<const std::uint64_t> factors) {
    for (std::uint64_t f : factors)
        if (f < 1) throw std::invalid_argument("cyclic factor must be >= 1");
    checked_product(factors);

    Assembly a;
    struct Inst {
        std::uint64_t p;
        std::uint32_t e;
        std::size_t part;
    };
    std::vector<Inst> insts;
    for (std::uint64_t f : factors) {
        if (f == 1) continue;
        std::size_t part = a.kept_factors.size();
        a.kept_factors.push_back(f);
        for (auto [p, e] : factorize(f)) insts.push_back({p, e, part});
    }

    // Per prime, hand the largest powers to the largest canonical factor.
    std::map<std::uint64_t, std::vector<std::size_t>> by_prime;  // prime -> inst indices
    for (std::size_t i = 0; i < insts.size(); ++i) by_prime[insts[i].p].push_back(i);
    std::size_t rank = 0;
    for (auto& [p, idx] : by_prime) {
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            return insts[x].e != insts[y].e ? insts[x].e > insts[y].e
                                            : insts[x].part < insts[y].part;
        });
        rank = std::max(rank, idx.size());
    }
    std::vector<std::uint64_t> slots(rank, 1);  // slot 0 = largest factor
    std::vector<std::pair<std::size_t, std::size_t>> placed;  // (inst, slot)
    for (auto& [p, idx] : by_prime) {
        for (std::size_t s = 0; s < idx.size(); ++s) {
            slots[s] *= ipow(insts[idx[s]].p, insts[idx[s]].e);
            placed.emplace_back(idx[s], s);
        }
    }
    for (std::size_t s = 0; s < rank; ++s)
        a.canonical.push_back(static_cast<std::uint32_t>(slots[rank - 1 - s]));
    for (auto [inst, slot] : placed) {
        a.pieces.push_back(
            {ipow(insts[inst].p, insts[inst].e), insts[inst].part, rank - 1 - slot});
    }
    return a;
}

}  // namespace

GroupSpec make_group(std::span<const std::uint64_t> factors) {
    Assembly a = assemble(factors);
    std::vector<std::uint64_t> canon(a.canonical.begin(), a.canonical.end());
    return GroupSpec::from_invariant_factors(canon);
}

GroupSpec make_group(std::initializer_list<std::uint64_t> factors) {
    return make_group(std::span<const std::uint64_t>(factors.begin(), factors.size()));
}

Decomposition make_group_decomposition(std::span<const std::uint64_t> factors) {
    Assembly a = assemble(factors);
    std::vector<std::uint64_t> canon(a.canonical.begin(), a.canonical.end());
    GroupSpec g = GroupSpec::from_invariant_factors(canon);

    std::vector<GroupSpec> parts;
    for (std::uint64_t f : a.kept_factors)
        parts.push_back(GroupSpec::from_invariant_factors(std::span(&f, 1)));

    // Image of the part-j generator in G: sum over the prime-power pieces of
    // factor j of the matching idempotent multiple of the canonical generator.
    std::vector<std::vector<GroupElement>> part_gen(parts.size(),
                                                    std::vector<GroupElement>{});
    std::vector<GroupElement> part_gen_acc(parts.size(), g.zero());
    // Image of canonical generator e_i in the direct sum of the parts.
    std::vector<std::vector<GroupElement>> comp_gen(g.rank());
    for (std::uint32_t i = 0; i < g.rank(); ++i) {
        comp_gen[i].reserve(parts.size());
        for (const auto& p : parts) comp_gen[i].push_back(p.zero());
    }

    for (const auto& piece : a.pieces) {
        std::uint64_t n_i = g.invariant_factors()[piece.canon_index];
        std::uint64_t f_j = a.kept_factors[piece.given_part];
        std::uint64_t eps_canon = crt_idempotent(piece.q, n_i);
        std::uint64_t eps_part = crt_idempotent(piece.q, f_j);
        GroupElement& acc = part_gen_acc[piece.given_part];
        acc.coords[piece.canon_index] = static_cast<std::uint32_t>(
            (acc.coords[piece.canon_index] + eps_canon) % n_i);
        GroupElement& pc = comp_gen[piece.canon_index][piece.given_part];
        pc.coords[0] = static_cast<std::uint32_t>((pc.coords[0] + eps_part) % f_j);
    }
    for (std::size_t j = 0; j < parts.size(); ++j) part_gen[j].push_back(part_gen_acc[j]);

    return Decomposition(g, std::move(parts), std::move(part_gen), std::move(comp_gen));
}

Decomposition make_group_decomposition(std::initializer_list<std::uint64_t> factors) {
    return make_group_decomposition(std::span<const std::uint64_t>(factors.begin(), factors.size()));
}

Decomposition chinese_split(const GroupSpec& g, std::uint64_t m) {
    if (m < 1 || g.exponent() % m != 0 || std::gcd<std::uint64_t>(m, g.exponent() / m) != 1)
        throw std::invalid_argument("chinese_split requires a unitary divisor of the exponent");

    std::vector<GroupSpec> parts;
    std::vector<std::vector<GroupElement>> part_gen;
    std::vector<std::vector<GroupElement>> comp_gen(g.rank());

    struct Slot {
        std::size_t part;
        std::uint64_t q;  // part order, as a unitary divisor of n_i
    };
    std::vector<std::vector<Slot>> slots_of(g.rank());

    for (std::uint32_t i = 0; i < g.rank(); ++i) {
        std::uint64_t n = g.invariant_factors()[i];
        std::uint64_t a = std::gcd(n, m);
        std::uint64_t b = n / a;
        for (std::uint64_t q : {a, b}) {
            if (q == 1) continue;
            std::uint64_t qq = q;
            slots_of[i].push_back({parts.size(), q});
            parts.push_back(GroupSpec::from_invariant_factors(std::span(&qq, 1)));
        }
    }
    for (std::uint32_t i = 0; i < g.rank(); ++i) {
        comp_gen[i].reserve(parts.size());
        for (const auto& p : parts) comp_gen[i].push_back(p.zero());
    }
    part_gen.resize(parts.size());
    for (std::uint32_t i = 0; i < g.rank(); ++i) {
        std::uint64_t n = g.invariant_factors()[i];
        for (const Slot& s : slots_of[i]) {
            GroupElement img = g.zero();
            img.coords[i] = static_cast<std::uint32_t>(crt_idempotent(s.q, n));
            part_gen[s.part].push_back(img);
            comp_gen[i][s.part].coords[0] = static_cast<std::uint32_t>(1 % s.q);
        }
    }
    return Decomposition(g, std::move(parts), std::move(part_gen), std::move(comp_gen));
}

Decomposition direct_sum_decomposition(const GroupSpec& h, const GroupSpec& k) {
    std::vector<std::uint64_t> concat;
    for (std::uint32_t f : h.invariant_factors()) concat.push_back(f);
    for (std::uint32_t f : k.invariant_factors()) concat.push_back(f);
    Decomposition fine = make_group_decomposition(concat);
    const GroupSpec& g = fine.composite();

    std::vector<GroupSpec> parts{h, k};
    std::vector<std::vector<GroupElement>> part_gen(2);
    for (std::uint32_t c = 0; c < h.rank(); ++c) {
        GroupElement unit = fine.parts()[c].zero();
        unit.coords[0] = 1;
        part_gen[0].push_back(fine.embed(c, unit));
    }
    for (std::uint32_t c = 0; c < k.rank(); ++c) {
        std::size_t j = h.rank() + c;
        GroupElement unit = fine.parts()[j].zero();
        unit.coords[0] = 1;
        part_gen[1].push_back(fine.embed(j, unit));
    }

    std::vector<std::vector<GroupElement>> comp_gen(g.rank());
    for (std::uint32_t i = 0; i < g.rank(); ++i) {
        GroupElement e = g.zero();
        e.coords[i] = 1;
        auto tuple = fine.forward(e);
        GroupElement h_part = h.zero(), k_part = k.zero();
        for (std::uint32_t c = 0; c < h.rank(); ++c) h_part.coords[c] = tuple[c].coords[0];
        for (std::uint32_t c = 0; c < k.rank(); ++c)
            k_part.coords[c] = tuple[h.rank() + c].coords[0];
        comp_gen[i] = {std::move(h_part), std::move(k_part)};
    }
    return Decomposition(g, std::move(parts), std::move(part_gen), std::move(comp_gen));
}

GroupSpec parse_group(const std::string& text) {
    std::vector<std::uint64_t> factors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad group syntax: '" + text + "'");
        std::uint64_t f = 0;
        try {
            f = std::stoull(tok);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("cyclic factor out of range: '" + tok + "'");
        }
        if (f == 0) throw std::invalid_argument("cyclic factor must be >= 1");
        factors.push_back(f);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return make_group(factors);
}

}  // namespace harborth
