#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

// "mosaic v1" text format:
//
//   mosaic v1
//   <m> <n>
//   <n tile ids>      (m lines, top row first)
//
// Multi-document streams separate documents with a blank line. A trailing
// `count <N>` line, as written by the enumerate command, ends the stream.

void write_mosaic(std::ostream& out, const Mosaic& mosaic);
std::string format_mosaic(const Mosaic& mosaic);

// Throws InvalidInput on malformed headers, out-of-range tile ids, or a
// dimension mismatch.
Mosaic parse_mosaic(const std::string& text);
std::vector<Mosaic> read_mosaic_documents(std::istream& in);

}  // namespace knotmosaic
