#ifndef SYSCODES_SEARCH_H
#define SYSCODES_SEARCH_H

#include <cstddef>

#include "syscodes/gf2.h"

namespace syscodes {

/// Outcome of a bounded minimum-weight search. When `found` is false no vector
/// of weight <= the requested bound qualifies and `weight` is 0.
struct SearchResult {
    bool found = false;
    size_t weight = 0;
    BitVector witness;
};

/// Minimum Hamming weight of x in Z2^n with `constraints` x = 0 and x outside
/// the row space of `excluded`. Enumerates supports by ascending weight; for a
/// fixed weight the lexicographically first qualifying support is the witness.
SearchResult min_weight_outside(const BitMatrix &constraints, const BitMatrix &excluded, size_t max_weight);

/// Symplectic analogue over Z2^{2n} in (x | z) layout: minimum Pauli weight
/// (positions where x or z is set) of e with twisted product zero against every
/// row of `checks` and e outside the row space of `excluded`.
///
/// For each candidate support the constraint system is restricted to the 2w
/// coordinates of that support and its kernel basis is tested for membership,
/// so the work per support is one small elimination rather than 3^w words.
SearchResult min_symplectic_weight_outside(const BitMatrix &checks, const BitMatrix &excluded, size_t max_weight);

}  // namespace syscodes

#endif
