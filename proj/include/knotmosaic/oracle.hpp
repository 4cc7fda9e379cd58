#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "knotmosaic/mosaic.hpp"
#include "knotmosaic/natural.hpp"
#include "knotmosaic/state_matrix.hpp"

// Brute-force enumeration of mosaics. Shares nothing with the transfer or
// matrix-free engines beyond the tile table, so it can be used to check them.
namespace knotmosaic::oracle {

struct EnumBudget {
  // Cap on m * n for full enumerations.
  std::uint64_t max_cells = 12;
  // Cap on backtracking nodes (tile placements) per search.
  std::uint64_t max_nodes = 200'000'000;
};

// Return false to stop the enumeration early.
using MosaicVisitor = std::function<bool(const Mosaic&)>;

// Visits every suitably connected (p,q)-mosaic exactly once, ordered
// row-major by cell and ascending by tile id. Returns the number visited.
// Throws BudgetExceeded if p * q > budget.max_cells or the node cap is hit.
std::uint64_t enumerate_suitably_connected(int p, int q, const EnumBudget& budget,
                                           const MosaicVisitor& visit);

// As above, restricted to knot mosaics (no connection points on the outer
// boundary).
std::uint64_t enumerate_knot_mosaics(int m, int n, const EnumBudget& budget,
                                     const MosaicVisitor& visit);

// Empirical X_p / O_p split of all suitably connected (p,1)-mosaics.
struct Tally {
  int p;
  StateMatrix x_counts;
  StateMatrix o_counts;
};

Tally oracle_split_matrices(int p, const EnumBudget& budget = {});

// Entry (i, j) counts suitably connected (p,q)-mosaics with l-state index i
// and r-state index j.
StateMatrix oracle_state_matrix(int p, int q, const EnumBudget& budget = {});

Natural oracle_knot_count(int m, int n, const EnumBudget& budget = {});

// Every knot (m+2, n+2)-mosaic whose interior equals `inner`, found by
// searching the border cells. Only budget.max_nodes applies.
// Throws InvalidInput if `inner` is not suitably connected.
std::vector<Mosaic> complete_to_knot(const Mosaic& inner, const EnumBudget& budget = {});

}  // namespace knotmosaic::oracle
