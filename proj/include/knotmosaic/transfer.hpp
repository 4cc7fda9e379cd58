#pragma once

#include <vector>

#include "knotmosaic/natural.hpp"
#include "knotmosaic/state_matrix.hpp"

namespace knotmosaic {

// Column transfer matrices split by whether the bottom tile of the column
// carries a bottom connection point: x (no) and o (yes).
struct SplitPair {
  StateMatrix x;
  StateMatrix o;
};

// Block recurrence from the 1x1 seeds X_0 = O_0 = [1]:
//
//   X_{k+1} = | X_k  O_k |     O_{k+1} = | O_k  X_k   |
//             | O_k  X_k |               | X_k  4 O_k |
//
// The quadrant is chosen by the new bottom tile: the upper-left quadrant has
// no left or right connection point, the lower-right has both, and the
// four-tile choice for an all-sides cell is the factor 4.
SplitPair build_split(int p);

// Same recurrence continued from an arbitrary seed pair up to order p.
SplitPair build_split_from(const SplitPair& seed, int p);

// N^(p,1) = X_p + O_p.
StateMatrix column_matrix(int p);

StateMatrix mat_add(const StateMatrix& a, const StateMatrix& b);
StateMatrix mat_mul(const StateMatrix& a, const StateMatrix& b);

enum class PowerMethod { kRepeated, kBinary };

// a^0 is the identity of side 2^p.
StateMatrix mat_power(const StateMatrix& a, int exponent,
                      PowerMethod method = PowerMethod::kRepeated);

Natural grand_sum(const StateMatrix& a);

// N^(p,q) = (X_p + O_p)^q, counting suitably connected (p,q)-mosaics by
// left and right boundary state.
StateMatrix state_matrix(int p, int q);

// Number of knot (m,n)-mosaics, 2 * ||(X_{m-2} + O_{m-2})^{n-2}||, with
// min(m,n) = 1 giving 1. Throws InvalidInput if m or n is below 1 or if
// m - 2 exceeds StateMatrix::kMaxP.
Natural count_dense(int m, int n);

// count_dense(m, n) for n = 1..max_n, sharing one sequence of matrix powers.
std::vector<Natural> count_dense_series(int m, int max_n);

// Closed forms for thin mosaics: 1, 2^(n-1), and (2/5)(9 * 6^(n-2) + 1).
// Throws InvalidInput for m outside {1,2,3}, n < 1, or m = 3 with n < 2.
Natural closed_form(int m, int n);

// 2^((m-3)(n-3)) <= 275 d / (2 (9*6^(m-2)+1) (9*6^(n-2)+1)) <= (22/5)^((m-3)(n-3)),
// in exact rational arithmetic. Throws InvalidInput if m or n is below 3.
bool bounds_check(int m, int n, const Natural& d);

}  // namespace knotmosaic
