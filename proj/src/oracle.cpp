#include "knotmosaic/oracle.hpp"

#include <optional>
#include <string>

#include "knotmosaic/errors.hpp"

namespace knotmosaic::oracle {
namespace {

enum class Need : std::uint8_t { kAny, kAbsent, kPresent };

bool satisfies(Need need, bool has) {
  return need == Need::kAny || (need == Need::kPresent) == has;
}

Need need_from(bool has) { return has ? Need::kPresent : Need::kAbsent; }

// Row-major backtracking fill of a grid. Cells listed in `fixed` keep their
// tile; the others range over all eleven tiles. Each placement is checked
// against the left and top neighbours, against fixed right and lower
// neighbours, and, for closed grids, against the outer boundary.
class GridSearch {
 public:
  GridSearch(int rows, int cols, bool closed, std::vector<std::optional<Tile>> fixed,
             std::uint64_t max_nodes)
      : rows_(rows),
        cols_(cols),
        closed_(closed),
        fixed_(std::move(fixed)),
        max_nodes_(max_nodes),
        grid_(rows, cols) {
    if (fixed_.empty()) fixed_.resize(static_cast<std::size_t>(rows) * cols);
  }

  std::uint64_t run(const MosaicVisitor& visit) {
    visited_ = 0;
    nodes_ = 0;
    stopped_ = false;
    place(0, visit);
    return visited_;
  }

 private:
  const std::optional<Tile>& fixed_at(int i, int j) const {
    return fixed_[static_cast<std::size_t>(i) * cols_ + j];
  }

  void place(int cell, const MosaicVisitor& visit) {
    if (cell == rows_ * cols_) {
      ++visited_;
      if (!visit(grid_)) stopped_ = true;
      return;
    }
    const int i = cell / cols_;
    const int j = cell % cols_;

    Need left = Need::kAny;
    Need top = Need::kAny;
    Need right = Need::kAny;
    Need bottom = Need::kAny;
    if (j > 0) {
      left = need_from(connection_points(grid_.at(i, j - 1)).right());
    } else if (closed_) {
      left = Need::kAbsent;
    }
    if (i > 0) {
      top = need_from(connection_points(grid_.at(i - 1, j)).bottom());
    } else if (closed_) {
      top = Need::kAbsent;
    }
    if (j + 1 < cols_) {
      if (const auto& f = fixed_at(i, j + 1)) right = need_from(connection_points(*f).left());
    } else if (closed_) {
      right = Need::kAbsent;
    }
    if (i + 1 < rows_) {
      if (const auto& f = fixed_at(i + 1, j)) bottom = need_from(connection_points(*f).top());
    } else if (closed_) {
      bottom = Need::kAbsent;
    }

    const auto& pinned = fixed_at(i, j);
    const int first = pinned ? pinned->id() : 0;
    const int last = pinned ? pinned->id() : Tile::kCount - 1;
    for (int id = first; id <= last && !stopped_; ++id) {
      const Tile tile = tile_unchecked(id);
      const SideSet sides = connection_points(tile);
      if (!satisfies(left, sides.left()) || !satisfies(top, sides.top()) ||
          !satisfies(right, sides.right()) || !satisfies(bottom, sides.bottom())) {
        continue;
      }
      if (++nodes_ > max_nodes_) {
        throw BudgetExceeded("enumeration exceeded the node budget of " +
                             std::to_string(max_nodes_));
      }
      grid_.set(i, j, tile);
      place(cell + 1, visit);
    }
  }

  int rows_;
  int cols_;
  bool closed_;
  std::vector<std::optional<Tile>> fixed_;
  std::uint64_t max_nodes_;
  Mosaic grid_;
  std::uint64_t visited_ = 0;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

void check_size(int m, int n, const EnumBudget& budget) {
  if (m < 1 || n < 1) {
    throw InvalidInput("mosaic dimensions must be positive, got " + std::to_string(m) + "x" +
                       std::to_string(n));
  }
  const auto cells = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n);
  if (cells > budget.max_cells) {
    throw BudgetExceeded("enumeration of " + std::to_string(m) + "x" + std::to_string(n) +
                         " needs " + std::to_string(cells) + " cells, budget allows " +
                         std::to_string(budget.max_cells));
  }
}

}  // namespace

std::uint64_t enumerate_suitably_connected(int p, int q, const EnumBudget& budget,
                                           const MosaicVisitor& visit) {
  check_size(p, q, budget);
  return GridSearch(p, q, false, {}, budget.max_nodes).run(visit);
}

std::uint64_t enumerate_knot_mosaics(int m, int n, const EnumBudget& budget,
                                     const MosaicVisitor& visit) {
  check_size(m, n, budget);
  return GridSearch(m, n, true, {}, budget.max_nodes).run(visit);
}

Tally oracle_split_matrices(int p, const EnumBudget& budget) {
  if (p < 1) throw InvalidInput("split tallies need p >= 1");
  Tally tally{p, StateMatrix(p), StateMatrix(p)};
  enumerate_suitably_connected(p, 1, budget, [&](const Mosaic& column) {
    const auto i = l_state(column).index();
    const auto j = r_state(column).index();
    auto& target = has_bottom_cp(column) ? tally.o_counts : tally.x_counts;
    ++target(i, j);
    return true;
  });
  return tally;
}

StateMatrix oracle_state_matrix(int p, int q, const EnumBudget& budget) {
  if (p < 1 || q < 1) throw InvalidInput("state matrices need p, q >= 1");
  StateMatrix counts(p);
  enumerate_suitably_connected(p, q, budget, [&](const Mosaic& mosaic) {
    ++counts(l_state(mosaic).index(), r_state(mosaic).index());
    return true;
  });
  return counts;
}

Natural oracle_knot_count(int m, int n, const EnumBudget& budget) {
  std::uint64_t count = 0;
  enumerate_knot_mosaics(m, n, budget, [&](const Mosaic& mosaic) {
    if (is_knot_mosaic(mosaic)) ++count;
    return true;
  });
  return Natural(static_cast<unsigned long>(count));
}

std::vector<Mosaic> complete_to_knot(const Mosaic& inner, const EnumBudget& budget) {
  if (!is_suitably_connected(inner)) {
    throw InvalidInput("inner mosaic is not suitably connected");
  }
  const int rows = inner.rows() + 2;
  const int cols = inner.cols() + 2;
  std::vector<std::optional<Tile>> fixed(static_cast<std::size_t>(rows) * cols);
  for (int i = 0; i < inner.rows(); ++i) {
    for (int j = 0; j < inner.cols(); ++j) {
      fixed[static_cast<std::size_t>(i + 1) * cols + (j + 1)] = inner.at(i, j);
    }
  }
  std::vector<Mosaic> out;
  GridSearch(rows, cols, true, std::move(fixed), budget.max_nodes).run([&](const Mosaic& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace knotmosaic::oracle
