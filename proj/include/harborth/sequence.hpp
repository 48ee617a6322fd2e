#pragma once

// Squarefree sequences (sets) and general sequences over a group, with the
// weighted sum and subsum operators. Achievable-sum sets come back as
// DenseSet bit vectors indexed by canonical rank; the per-length subsum
// computation is a dynamic program whose state is one bit vector per chosen
// length.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "harborth/dense_set.hpp"
#include "harborth/group.hpp"

namespace harborth {

class WeightSet {
public:
    // Deduplicates and sorts; rejects an empty list.
    explicit WeightSet(std::vector<std::int64_t> weights);

    static WeightSet classic() { return WeightSet({1}); }
    static WeightSet plus_minus() { return WeightSet({1, -1}); }

    const std::vector<std::int64_t>& weights() const { return w_; }
    bool is_classic() const { return w_ == std::vector<std::int64_t>{1}; }
    bool is_plus_minus() const { return w_ == std::vector<std::int64_t>{-1, 1}; }

    std::string to_string() const;  // "-1,1"

    friend bool operator==(const WeightSet&, const WeightSet&) = default;

private:
    std::vector<std::int64_t> w_;
};

// A sequence over a group, stored as sorted canonical ranks; repeats allowed.
class GroupSequence {
public:
    explicit GroupSequence(GroupSpec group) : g_(std::move(group)) {}
    GroupSequence(GroupSpec group, std::vector<ElemRank> ranks);
    GroupSequence(GroupSpec group, std::span<const GroupElement> elems);

    const GroupSpec& group() const { return g_; }
    const std::vector<ElemRank>& ranks() const { return r_; }
    std::size_t size() const { return r_.size(); }
    bool squarefree() const;
    std::vector<GroupElement> elements() const;
    // distinct elements of the sequence
    std::vector<ElemRank> support() const;

    friend bool operator==(const GroupSequence&, const GroupSequence&) = default;

private:
    GroupSpec g_;
    std::vector<ElemRank> r_;  // sorted, repeats allowed
};

// A squarefree sequence: distinct elements in canonical rank order.
class ElementSet {
public:
    explicit ElementSet(GroupSpec group) : g_(std::move(group)) {}
    // Throws on duplicates.
    ElementSet(GroupSpec group, std::vector<ElemRank> ranks);
    ElementSet(GroupSpec group, std::span<const GroupElement> elems);

    static ElementSet full(const GroupSpec& g);

    const GroupSpec& group() const { return g_; }
    const std::vector<ElemRank>& ranks() const { return r_; }
    std::size_t size() const { return r_.size(); }
    bool contains(ElemRank r) const;
    std::vector<GroupElement> elements() const;
    GroupSequence as_sequence() const { return GroupSequence(g_, r_); }
    DenseSet as_dense() const { return DenseSet::of_ranks(static_cast<std::uint32_t>(g_.order()), r_); }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

private:
    GroupSpec g_;
    std::vector<ElemRank> r_;  // sorted, distinct
};

// ---- sums -----------------------------------------------------------------

GroupElement sigma(const GroupSequence& s);
GroupElement sigma(const ElementSet& s);

ElementSet translate(const GroupElement& g, const ElementSet& s);
GroupSequence translate(const GroupElement& g, const GroupSequence& s);
ElementSet negate_seq(const ElementSet& s);
GroupSequence negate_seq(const GroupSequence& s);

// Elements of a not in b. With b a subset of a this is the complement
// sequence of b within a.
ElementSet difference(const ElementSet& a, const ElementSet& b);

// {k a : a in A}; may shrink.
ElementSet dilate(std::int64_t k, const ElementSet& a);

// The set of all full-length W-weighted sums; {0} for the empty sequence.
DenseSet weighted_sigma(const GroupSequence& s, const WeightSet& w);
DenseSet weighted_sigma(const ElementSet& s, const WeightSet& w);

// ---- subsums ----------------------------------------------------------------

// by_length[k] = the W-weighted subsums of length exactly k, for k in
// [0, |S|]; by_length[0] = {0} by the empty-selection convention.
struct SubsumProfile {
    GroupSpec group;
    WeightSet weights;
    std::vector<DenseSet> by_length;

    // Union over k >= 1; the exported subsum set excludes the empty selection.
    DenseSet subsums() const;
    // Union over k >= 0, i.e. subsums() with 0 adjoined.
    DenseSet subsums0() const;
};

SubsumProfile subsum_profile(const GroupSequence& s, const WeightSet& w);
SubsumProfile subsum_profile(const ElementSet& s, const WeightSet& w);

// Direct accumulations (cheaper than a full profile).
DenseSet subsums(const GroupSequence& s, const WeightSet& w);
DenseSet subsums(const ElementSet& s, const WeightSet& w);
DenseSet subsums0(const GroupSequence& s, const WeightSet& w);
DenseSet subsums0(const ElementSet& s, const WeightSet& w);

// Per-length DP capped at length kcap: returns rows 0..kcap where row k is
// the W-weighted subsums of S of length exactly k. Rows past |S| are empty.
std::vector<DenseSet> subsum_rows(const GroupSpec& g, std::span<const ElemRank> elems,
                                  const WeightSet& w, std::uint32_t kcap);

// Image sequence under a map; length is preserved, repeats may appear.
GroupSequence push_forward(const GroupSpec& target,
                           const std::function<GroupElement(const GroupElement&)>& phi,
                           const GroupSequence& s);
GroupSequence push_forward(const Decomposition& d, std::size_t part, const GroupSequence& s);
GroupSequence push_forward(const Decomposition& d, std::size_t part, const ElementSet& s);

// Deduplicated ranks of {w*e : w in W} for one element.
std::vector<ElemRank> weighted_images(const GroupSpec& g, ElemRank e, const WeightSet& w);

}  // namespace harborth
