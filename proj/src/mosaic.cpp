#include "knotmosaic/mosaic.hpp"

#include "knotmosaic/errors.hpp"

namespace knotmosaic {
namespace {

// Indexed by tile id. T_7..T_10 share the full side set; they differ only in
// how the strands pair up, which matters for rendering and not for counting.
constexpr std::array<SideSet, Tile::kCount> kTileSides = {
    SideSet(false, false, false, false),  // T_0
    SideSet(true, false, false, true),    // T_1
    SideSet(false, true, false, true),    // T_2
    SideSet(false, true, true, false),    // T_3
    SideSet(true, false, true, false),    // T_4
    SideSet(true, true, false, false),    // T_5
    SideSet(false, false, true, true),    // T_6
    SideSet(true, true, true, true),      // T_7
    SideSet(true, true, true, true),      // T_8
    SideSet(true, true, true, true),      // T_9
    SideSet(true, true, true, true),      // T_10
};

}  // namespace

Tile Tile::from_id(int id) {
  if (id < 0 || id >= kCount) {
    throw InvalidInput("tile id out of range 0..10: " + std::to_string(id));
  }
  return Tile(static_cast<std::uint8_t>(id));
}

SideSet connection_points(Tile tile) { return kTileSides[tile.id()]; }

std::vector<Tile> tiles_matching(bool left, bool right, bool top, bool bottom) {
  const SideSet wanted(left, right, top, bottom);
  std::vector<Tile> out;
  for (int id = 0; id < Tile::kCount; ++id) {
    if (kTileSides[id] == wanted) out.push_back(tile_unchecked(id));
  }
  return out;
}

BoundaryState BoundaryState::from_string(std::string_view bits) {
  if (bits.empty() || bits.size() > 63) {
    throw InvalidInput("boundary state length must be in 1..63");
  }
  for (char c : bits) {
    if (c != 'x' && c != 'o') {
      throw InvalidInput("boundary state may only contain 'x' and 'o': " + std::string(bits));
    }
  }
  return BoundaryState(std::string(bits));
}

BoundaryState BoundaryState::from_index(std::uint64_t index, int length) {
  if (length < 1 || length > 63) throw InvalidInput("boundary state length must be in 1..63");
  if (index >> length) {
    throw InvalidInput("state index " + std::to_string(index) + " does not fit " +
                       std::to_string(length) + " rows");
  }
  std::string bits(length, 'x');
  for (int i = 0; i < length; ++i) {
    if ((index >> i) & 1u) bits[i] = 'o';
  }
  return BoundaryState(std::move(bits));
}

std::uint64_t BoundaryState::index() const {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] == 'o') value |= std::uint64_t{1} << i;
  }
  return value;
}

Mosaic::Mosaic(int rows, int cols) : Mosaic(rows, cols, {}) {}

Mosaic::Mosaic(int rows, int cols, std::vector<Tile> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows < 1 || cols < 1) {
    throw InvalidInput("mosaic dimensions must be positive, got " + std::to_string(rows) + "x" +
                       std::to_string(cols));
  }
  const auto expected = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (cells_.empty()) cells_.assign(expected, Tile{});
  if (cells_.size() != expected) {
    throw InvalidInput("mosaic has " + std::to_string(cells_.size()) + " cells, expected " +
                       std::to_string(expected));
  }
}

Mosaic Mosaic::from_ids(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidInput("mosaic must be non-empty");
  const int n = static_cast<int>(rows.front().size());
  std::vector<Tile> cells;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw InvalidInput("ragged mosaic rows");
    for (int id : row) cells.push_back(Tile::from_id(id));
  }
  return Mosaic(static_cast<int>(rows.size()), n, std::move(cells));
}

Mosaic Mosaic::submosaic(int row, int col, int rows, int cols) const {
  if (row < 0 || col < 0 || rows < 1 || cols < 1 || row + rows > rows_ || col + cols > cols_) {
    throw InvalidInput("submosaic out of range");
  }
  Mosaic out(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) out.set(i, j, at(row + i, col + j));
  }
  return out;
}

std::size_t Mosaic::index(int row, int col) const {
  return static_cast<std::size_t>(row) * static_cast<std::size_t>(cols_) +
         static_cast<std::size_t>(col);
}

bool is_suitably_connected(const Mosaic& mosaic) {
  for (int i = 0; i < mosaic.rows(); ++i) {
    for (int j = 0; j < mosaic.cols(); ++j) {
      const SideSet here = connection_points(mosaic.at(i, j));
      if (j + 1 < mosaic.cols() && here.right() != connection_points(mosaic.at(i, j + 1)).left()) {
        return false;
      }
      if (i + 1 < mosaic.rows() && here.bottom() != connection_points(mosaic.at(i + 1, j)).top()) {
        return false;
      }
    }
  }
  return true;
}

int boundary_connection_points(const Mosaic& mosaic) {
  int count = 0;
  const int last_row = mosaic.rows() - 1;
  const int last_col = mosaic.cols() - 1;
  for (int j = 0; j <= last_col; ++j) {
    count += connection_points(mosaic.at(0, j)).top();
    count += connection_points(mosaic.at(last_row, j)).bottom();
  }
  for (int i = 0; i <= last_row; ++i) {
    count += connection_points(mosaic.at(i, 0)).left();
    count += connection_points(mosaic.at(i, last_col)).right();
  }
  return count;
}

bool is_knot_mosaic(const Mosaic& mosaic) {
  return is_suitably_connected(mosaic) && boundary_connection_points(mosaic) == 0;
}

BoundaryState l_state(const Mosaic& mosaic) {
  std::string bits;
  for (int i = 0; i < mosaic.rows(); ++i) {
    bits += connection_points(mosaic.at(i, 0)).left() ? 'o' : 'x';
  }
  return BoundaryState::from_string(bits);
}

BoundaryState r_state(const Mosaic& mosaic) {
  std::string bits;
  for (int i = 0; i < mosaic.rows(); ++i) {
    bits += connection_points(mosaic.at(i, mosaic.cols() - 1)).right() ? 'o' : 'x';
  }
  return BoundaryState::from_string(bits);
}

bool has_bottom_cp(const Mosaic& column) {
  if (column.cols() != 1) {
    throw InvalidInput("has_bottom_cp expects a single column, got " +
                       std::to_string(column.cols()) + " columns");
  }
  return connection_points(column.at(column.rows() - 1, 0)).bottom();
}

}  // namespace knotmosaic
