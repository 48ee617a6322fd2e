#pragma once

// Explicit extremal constructions certifying the lower bounds, plus an
// independent re-check harness that recomputes achievable sums from scratch
// rather than trusting the search engine's incremental state.

#include <cstdint>

#include "harborth/search.hpp"
#include "harborth/sequence.hpp"

namespace harborth {

// T = {0, e, 2e, ..., (n-1)e} over Cn, the unique squarefree sequence of
// full length.
ElementSet full_cyclic_set(std::uint32_t n);

// Over C2 + C_{2n}, n even, n >= 4: the set T u R with T = {i e2 : 1 <= i <=
// 2n-2} and R = {e1, e1 + 2 e2, e1 + 4 e2}. Has size 2n+1 and admits no
// plus-minus weighted zero-subsum of length 2n.
ElementSet lower_bound_witness_pm(std::uint32_t n);

// Over C2 + C_{2n} = <f1> + <f2> + <e> (n odd, n >= 3, ord f_i = 2,
// ord e = n): the set B u (f1+f2+B) u (f1-B) u (f2-B) with
// B = {0, e, ..., ((n-1)/2) e}. Has size 2n+2, sum zero, and no classic
// zero-sum subset of size 2n.
ElementSet lower_bound_witness_classic(std::uint32_t n);

// Concatenation of an Olson-blocking set over H and a Harborth-blocking set
// over K inside H + K. Blocking-ness of the two inputs is verified, not
// assumed. The result is guaranteed blocking when exp(H) | exp(K); otherwise
// certify it with verify_blocking.
ElementSet compose_blocking_witnesses(const ElementSet& witness_h, const ElementSet& witness_k,
                                      const WeightSet& w);

// From-scratch certification: recomputes the length-k weighted subsums of S
// and reports whether 0 is absent.
struct BlockingCheck {
    bool blocking = false;
    std::uint32_t k = 0;
    DenseSet achievable;  // the full set of length-k weighted subsums
};
BlockingCheck verify_blocking(const ElementSet& s, const WeightSet& w, std::uint32_t k);

}  // namespace harborth
