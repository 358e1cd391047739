#pragma once

#include <bit>
#include <cstdint>

namespace gencal {

/// Index subsets of {1..n} are stored as bitmasks: bit i-1 <-> index i.
using mask_t = std::uint32_t;

inline int popcount(mask_t m) { return std::popcount(m); }

/// Number of transpositions needed to merge the ordered tuples I and J,
/// i.e. pairs (i in I, j in J) with j < i.  Assumes I & J == 0.
inline int merge_swaps(mask_t I, mask_t J) {
  int swaps = 0;
  mask_t a = I;
  while (a) {
    mask_t low = a & (a - 1);
    int i = std::countr_zero(a ^ low);  // lowest set bit position of a
    swaps += popcount(J & ((mask_t(1) << i) - 1));
    a = low;
  }
  return swaps;
}

/// Sign of e^I ^ e^J -> e^(I|J) for disjoint I, J.
inline int wedge_sign(mask_t I, mask_t J) {
  return (merge_swaps(I, J) & 1) ? -1 : +1;
}

/// Sign of e_i -| e^K, i.e. (-1)^(number of elements of K below i).
/// Assumes bit (i) set in K; i is a 0-based bit position.
inline int contract_sign(int bit, mask_t K) {
  return (popcount(K & ((mask_t(1) << bit) - 1)) & 1) ? -1 : +1;
}

/// hat involution sign on degree p: (-1)^(p(p+1)/2).
inline int hat_sign(int p) { return ((p * (p + 1) / 2) & 1) ? -1 : +1; }

/// tilde involution sign on degree p: (-1)^p.
inline int tilde_sign(int p) { return (p & 1) ? -1 : +1; }

/// Sign of the reversal anti-automorphism on degree p: (-1)^(p(p-1)/2).
inline int reverse_sign(int p) { return ((p * (p - 1) / 2) & 1) ? -1 : +1; }

}  // namespace gencal
