#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "knotmosaic/natural.hpp"

namespace knotmosaic {

// Length-2^p vector of exact naturals indexed by boundary-state index.
struct CountVector {
  int p = 0;
  std::vector<Natural> entries;

  static CountVector ones(int p);

  friend bool operator==(const CountVector&, const CountVector&) = default;
};

// Big-integer operation tally for the matrix-free engine.
struct OpCounter {
  std::uint64_t additions = 0;
  std::uint64_t shifts = 0;
};

// (X_k v, O_k v) without materialising X_k or O_k. The block recurrence is
// applied bottom-up as a butterfly over index bits 0..k-1: merging two
// halves a, b of a block gives
//
//   X v = (X a + O b, O a + X b),   O v = (O a + X b, X a + 4 O b),
//
// so each level costs three additions and one shift per pair.
// Throws InvalidInput when v.p != k or the entry count is not 2^k.
std::pair<CountVector, CountVector> apply_split(int k, const CountVector& v,
                                                OpCounter* counter = nullptr);

// (X_k + O_k) v.
CountVector apply_operator(int k, const CountVector& v, OpCounter* counter = nullptr);

// Same result as count_dense(m, n), iterating the operator on the all-ones
// vector n-2 times. Throws InvalidInput if m or n is below 1.
Natural count_matrixfree(int m, int n, OpCounter* counter = nullptr);

}  // namespace knotmosaic
