#include "knotmosaic/render.hpp"

#include <array>

namespace knotmosaic {
namespace {

using Cell = std::array<const char*, 3>;

constexpr std::array<Cell, Tile::kCount> kCells = {{
    {"   ", "   ", "   "},    // T_0
    {"   ", "-. ", " | "},    // T_1  left-bottom
    {"   ", " .-", " | "},    // T_2  bottom-right
    {" | ", " '-", "   "},    // T_3  top-right
    {" | ", "-' ", "   "},    // T_4  left-top
    {"   ", "---", "   "},    // T_5
    {" | ", " | ", " | "},    // T_6
    {" | ", "-\\-", " | "},   // T_7  left-bottom and top-right arcs
    {" | ", "-/-", " | "},    // T_8  left-top and right-bottom arcs
    {" | ", "-|-", " | "},    // T_9  vertical over
    {" | ", "---", " | "},    // T_10 horizontal over
}};

}  // namespace

std::vector<std::string> render_tile(Tile tile) {
  const Cell& cell = kCells[tile.id()];
  return {cell[0], cell[1], cell[2]};
}

std::string render_mosaic(const Mosaic& mosaic) {
  std::string out;
  for (int i = 0; i < mosaic.rows(); ++i) {
    for (int line = 0; line < 3; ++line) {
      for (int j = 0; j < mosaic.cols(); ++j) out += kCells[mosaic.at(i, j).id()][line];
      out += '\n';
    }
  }
  return out;
}

}  // namespace knotmosaic
