#pragma once

#include <string>
#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

// Each tile becomes a 3x3 character cell. Strands reach the middle of a cell
// edge exactly where the tile has a connection point; at a crossing the
// under-strand is broken by the over-strand's character.
std::vector<std::string> render_tile(Tile tile);
std::string render_mosaic(const Mosaic& mosaic);

}  // namespace knotmosaic
