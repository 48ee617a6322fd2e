#pragma once

// Finite abelian groups in invariant-factor form. A group is a chain
// n_1 | n_2 | ... | n_r of cyclic orders; elements are coordinate vectors of
// residues. The canonical rank of an element is its position in
// lexicographic coordinate order; that rank indexes every bit vector in the
// rest of the library and breaks every tie the search has to break.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harborth/dense_set.hpp"

namespace harborth {

struct GroupElement {
    std::vector<std::uint32_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class GroupSpec {
public:
    // Trivial group.
    GroupSpec();

    // Construct directly from an invariant-factor chain (each >= 2, each
    // dividing the next). Throws std::invalid_argument if the chain is bad.
    static GroupSpec from_invariant_factors(std::span<const std::uint64_t> factors);

    const std::vector<std::uint32_t>& invariant_factors() const;
    std::uint64_t order() const;
    std::uint32_t exponent() const;
    std::uint32_t rank() const;
    std::uint32_t p_rank(std::uint64_t p) const;
    bool is_trivial() const { return order() == 1; }

    // True iff every invariant factor equals 2 and the rank is positive.
    bool is_elementary_2() const;
    bool is_cyclic() const { return rank() <= 1; }

    // ---- element arithmetic ----
    GroupElement zero() const;
    GroupElement element(std::span<const std::uint32_t> coords) const;  // validates ranges
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement scalar_mul(std::int64_t k, const GroupElement& a) const;
    std::uint64_t order_of(const GroupElement& a) const;

    // ---- canonical ranks ----
    ElemRank rank_of(const GroupElement& a) const;
    GroupElement element_at(ElemRank r) const;
    ElemRank add_ranks(ElemRank a, ElemRank b) const;
    ElemRank neg_rank(ElemRank a) const;
    ElemRank mul_rank(std::int64_t k, ElemRank a) const;

    // All |G| elements in lexicographic coordinate order.
    std::vector<GroupElement> enumerate_elements() const;

    // ---- set-level helpers over canonical ranks ----
    DenseSet empty_set() const { return DenseSet(static_cast<std::uint32_t>(order())); }
    DenseSet full_set() const;
    // {x + t : x in s}
    DenseSet translate_set(const DenseSet& s, ElemRank t) const;
    // {k x : x in s}; may shrink
    DenseSet dilate_set(std::int64_t k, const DenseSet& s) const;
    DenseSet negate_set(const DenseSet& s) const;

    // dst |= (src translated by t), on raw word arrays of this group's width.
    // Uses the single-word rotate kernel when the order fits in one word,
    // otherwise the reference gather.
    void translate_or_words(std::uint64_t* dst, const std::uint64_t* src, ElemRank t) const;
    // Same with the translation already in coordinates (skips the decompose).
    void translate_or_words(std::uint64_t* dst, const std::uint64_t* src,
                            const GroupElement& t) const;

    // Reference gather path, any width; kept callable for equivalence tests.
    void translate_or_words_ref(std::uint64_t* dst, const std::uint64_t* src, ElemRank t) const;

    std::size_t word_count() const;

    // Comma-separated normalized factor list, "1" for the trivial group.
    std::string to_string() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.invariant_factors() == b.invariant_factors();
    }

private:
    struct Data;
    explicit GroupSpec(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;

    friend GroupSpec make_group(std::span<const std::uint64_t> factors);
};

// A direct-sum decomposition G = G_1 + ... + G_s, realized by a pair of
// mutually inverse homomorphisms given on generators. Construction verifies
// the two maps are inverse on generators, which suffices for homomorphisms.
class Decomposition {
public:
    Decomposition(GroupSpec composite, std::vector<GroupSpec> parts,
                  std::vector<std::vector<GroupElement>> part_gen_images,
                  std::vector<std::vector<GroupElement>> comp_gen_images);

    const GroupSpec& composite() const { return composite_; }
    const std::vector<GroupSpec>& parts() const { return parts_; }
    std::size_t part_count() const { return parts_.size(); }

    // g -> (g_1, ..., g_s)
    std::vector<GroupElement> forward(const GroupElement& g) const;
    // (g_1, ..., g_s) -> g
    GroupElement backward(std::span<const GroupElement> tuple) const;
    // component i of forward(g); a group homomorphism G -> G_i
    GroupElement project(std::size_t part, const GroupElement& g) const;
    // backward of (0, ..., h, ..., 0) with h in part i
    GroupElement embed(std::size_t part, const GroupElement& h) const;

private:
    GroupSpec composite_;
    std::vector<GroupSpec> parts_;
    std::vector<std::vector<GroupElement>> part_gen_images_;  // [part][coord] -> composite elt
    std::vector<std::vector<GroupElement>> comp_gen_images_;  // [comp coord][part] -> part elt
};

// Canonical invariant-factor form of the direct sum of the given cyclic
// orders. Factors of 1 are dropped; coprime parts merge. Rejects entries < 1.
GroupSpec make_group(std::span<const std::uint64_t> factors);
GroupSpec make_group(std::initializer_list<std::uint64_t> factors);

// The isomorphism between make_group(factors) and the direct sum of the given
// cyclic groups, with one part per factor > 1.
Decomposition make_group_decomposition(std::span<const std::uint64_t> factors);
Decomposition make_group_decomposition(std::initializer_list<std::uint64_t> factors);

// Split every cyclic factor of G into its m-part and the coprime rest.
// Requires m | exp(G) and gcd(m, exp(G)/m) = 1.
Decomposition chinese_split(const GroupSpec& g, std::uint64_t m);

// The canonical form of H + K together with the two-part decomposition
// realizing it.
Decomposition direct_sum_decomposition(const GroupSpec& h, const GroupSpec& k);

// "2,8" -> C2+C8. Rejects empty/non-numeric/zero entries.
GroupSpec parse_group(const std::string& text);

}  // namespace harborth
