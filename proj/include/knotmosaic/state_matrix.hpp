#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "knotmosaic/natural.hpp"

namespace knotmosaic {

// Dense 2^p x 2^p matrix of exact naturals, row-major. Rows and columns are
// indexed by boundary-state index.
class StateMatrix {
 public:
  static constexpr int kMaxP = 12;

  // Zero matrix of side 2^p. Throws InvalidInput for p outside 0..kMaxP.
  explicit StateMatrix(int p);
  StateMatrix(int p, std::vector<Natural> entries);

  static StateMatrix identity(int p);
  // Row-major small literal; side must be a power of two.
  static StateMatrix from_rows(const std::vector<std::vector<unsigned long>>& rows);

  int p() const { return p_; }
  std::size_t side() const { return side_; }

  Natural& operator()(std::size_t row, std::size_t col) { return entries_[row * side_ + col]; }
  const Natural& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * side_ + col];
  }

  std::span<const Natural> row(std::size_t r) const {
    return {entries_.data() + r * side_, side_};
  }
  const std::vector<Natural>& entries() const { return entries_; }

  StateMatrix transposed() const;

  friend bool operator==(const StateMatrix&, const StateMatrix&) = default;

 private:
  int p_;
  std::size_t side_;
  std::vector<Natural> entries_;
};

// Text dump:
//   statematrix p=<p> kind=<X|O|N>
//   <2^p lines of 2^p space-separated decimal integers>
void write_state_matrix(std::ostream& out, const StateMatrix& m, char kind);
std::string format_state_matrix(const StateMatrix& m, char kind);

struct ParsedStateMatrix {
  StateMatrix matrix;
  char kind;
};
ParsedStateMatrix parse_state_matrix(std::istream& in);

}  // namespace knotmosaic
