#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotmosaic {

enum class ConnectionSide : std::uint8_t { kLeft, kRight, kTop, kBottom };

inline constexpr std::array<ConnectionSide, 4> kAllSides = {
    ConnectionSide::kLeft, ConnectionSide::kRight, ConnectionSide::kTop, ConnectionSide::kBottom};

// Set of tile edges carrying a connection point, stored as a 4-bit mask.
class SideSet {
 public:
  constexpr SideSet() = default;
  constexpr SideSet(bool left, bool right, bool top, bool bottom)
      : bits_(static_cast<std::uint8_t>((left ? 1 : 0) | (right ? 2 : 0) | (top ? 4 : 0) |
                                        (bottom ? 8 : 0))) {}

  constexpr bool has(ConnectionSide side) const {
    return (bits_ >> static_cast<unsigned>(side)) & 1u;
  }
  constexpr bool left() const { return has(ConnectionSide::kLeft); }
  constexpr bool right() const { return has(ConnectionSide::kRight); }
  constexpr bool top() const { return has(ConnectionSide::kTop); }
  constexpr bool bottom() const { return has(ConnectionSide::kBottom); }

  constexpr int size() const {
    return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1) + ((bits_ >> 3) & 1);
  }
  constexpr std::uint8_t mask() const { return bits_; }

  friend constexpr bool operator==(SideSet, SideSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

// One of the eleven mosaic tiles T_0..T_10.
//
//   T_0       blank
//   T_1..T_4  single arcs joining two adjacent edges: LB, BR, TR, LT
//   T_5, T_6  horizontal and vertical segments
//   T_7, T_8  double arcs: LB+TR and LT+RB
//   T_9       crossing, vertical strand over
//   T_10      crossing, horizontal strand over
class Tile {
 public:
  static constexpr int kCount = 11;

  constexpr Tile() = default;

  // Throws InvalidInput for ids outside 0..10.
  static Tile from_id(int id);

  constexpr int id() const { return id_; }

  friend constexpr bool operator==(Tile, Tile) = default;

 private:
  constexpr explicit Tile(std::uint8_t id) : id_(id) {}
  friend constexpr Tile tile_unchecked(int id);

  std::uint8_t id_ = 0;
};

constexpr Tile tile_unchecked(int id) { return Tile(static_cast<std::uint8_t>(id)); }

SideSet connection_points(Tile tile);

// All tiles whose connection-point set equals the given pattern, ascending id.
std::vector<Tile> tiles_matching(bool left, bool right, bool top, bool bottom);

// Pattern of connection points along one vertical boundary of a mosaic.
// Character i is 'o' when row i (top = 0) has a connection point, else 'x'.
class BoundaryState {
 public:
  // Throws InvalidInput unless bits is a non-empty string over {x, o} of
  // length at most 63.
  static BoundaryState from_string(std::string_view bits);
  static BoundaryState from_index(std::uint64_t index, int length);

  const std::string& bits() const { return bits_; }
  int length() const { return static_cast<int>(bits_.size()); }

  // Sum of 2^i over 0-based rows i holding 'o'; "xxx" -> 0, "oxx" -> 1.
  std::uint64_t index() const;

  friend bool operator==(const BoundaryState&, const BoundaryState&) = default;

 private:
  explicit BoundaryState(std::string bits) : bits_(std::move(bits)) {}

  std::string bits_;
};

inline std::uint64_t state_index(const BoundaryState& state) { return state.index(); }

// An m x n grid of tiles. Coordinates are 0-based here; row 0 is the top row
// and column 0 the leftmost column.
class Mosaic {
 public:
  // All-blank mosaic. Throws InvalidInput unless rows, cols >= 1.
  Mosaic(int rows, int cols);
  // Throws InvalidInput unless cells.size() == rows * cols.
  Mosaic(int rows, int cols, std::vector<Tile> cells);
  // Row-major tile ids; every row must have the same length.
  static Mosaic from_ids(const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Tile at(int row, int col) const { return cells_[index(row, col)]; }
  void set(int row, int col, Tile tile) { cells_[index(row, col)] = tile; }

  const std::vector<Tile>& cells() const { return cells_; }

  // Copy of the sub-grid starting at (row, col).
  Mosaic submosaic(int row, int col, int rows, int cols) const;

  friend bool operator==(const Mosaic&, const Mosaic&) = default;

 private:
  std::size_t index(int row, int col) const;

  int rows_;
  int cols_;
  std::vector<Tile> cells_;
};

bool is_suitably_connected(const Mosaic& mosaic);
bool is_knot_mosaic(const Mosaic& mosaic);

BoundaryState l_state(const Mosaic& mosaic);
BoundaryState r_state(const Mosaic& mosaic);

// Throws InvalidInput if the mosaic has more than one column.
bool has_bottom_cp(const Mosaic& column);

// Number of connection points lying on the outer boundary of the grid.
int boundary_connection_points(const Mosaic& mosaic);

}  // namespace knotmosaic
