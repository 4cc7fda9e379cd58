#include "knotmosaic/state_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {
namespace {

std::size_t checked_side(int p) {
  if (p < 0 || p > StateMatrix::kMaxP) {
    throw InvalidInput("state matrix order p=" + std::to_string(p) + " outside 0.." +
                       std::to_string(StateMatrix::kMaxP));
  }
  return std::size_t{1} << p;
}

}  // namespace

StateMatrix::StateMatrix(int p) : p_(p), side_(checked_side(p)), entries_(side_ * side_) {}

StateMatrix::StateMatrix(int p, std::vector<Natural> entries)
    : p_(p), side_(checked_side(p)), entries_(std::move(entries)) {
  if (entries_.size() != side_ * side_) {
    throw InvalidInput("state matrix p=" + std::to_string(p) + " needs " +
                       std::to_string(side_ * side_) + " entries, got " +
                       std::to_string(entries_.size()));
  }
}

StateMatrix StateMatrix::identity(int p) {
  StateMatrix out(p);
  for (std::size_t i = 0; i < out.side(); ++i) out(i, i) = 1;
  return out;
}

StateMatrix StateMatrix::from_rows(const std::vector<std::vector<unsigned long>>& rows) {
  int p = 0;
  while ((std::size_t{1} << p) < rows.size()) ++p;
  if ((std::size_t{1} << p) != rows.size()) {
    throw InvalidInput("state matrix side must be a power of two");
  }
  std::vector<Natural> entries;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidInput("state matrix must be square");
    for (unsigned long v : r) entries.emplace_back(v);
  }
  return StateMatrix(p, std::move(entries));
}

StateMatrix StateMatrix::transposed() const {
  StateMatrix out(p_);
  for (std::size_t i = 0; i < side_; ++i) {
    for (std::size_t j = 0; j < side_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

void write_state_matrix(std::ostream& out, const StateMatrix& m, char kind) {
  out << "statematrix p=" << m.p() << " kind=" << kind << '\n';
  for (std::size_t i = 0; i < m.side(); ++i) {
    for (std::size_t j = 0; j < m.side(); ++j) {
      if (j > 0) out << ' ';
      out << to_decimal(m(i, j));
    }
    out << '\n';
  }
}

std::string format_state_matrix(const StateMatrix& m, char kind) {
  std::ostringstream out;
  write_state_matrix(out, m, kind);
  return out.str();
}

ParsedStateMatrix parse_state_matrix(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw InvalidInput("empty state matrix dump");
  int p = -1;
  char kind = 0;
  {
    std::istringstream hs(header);
    std::string tag, p_field, kind_field;
    hs >> tag >> p_field >> kind_field;
    if (tag != "statematrix" || !p_field.starts_with("p=") || !kind_field.starts_with("kind=") ||
        kind_field.size() != 6) {
      throw InvalidInput("bad state matrix header: '" + header + "'");
    }
    p = static_cast<int>(parse_natural(p_field.substr(2)).get_si());
    kind = kind_field[5];
    if (kind != 'X' && kind != 'O' && kind != 'N') {
      throw InvalidInput("state matrix kind must be X, O or N");
    }
  }
  const std::size_t side = checked_side(p);
  std::vector<Natural> entries;
  entries.reserve(side * side);
  std::string line;
  for (std::size_t i = 0; i < side; ++i) {
    if (!std::getline(in, line)) throw InvalidInput("state matrix dump truncated");
    std::istringstream ls(line);
    std::string token;
    std::size_t count = 0;
    while (ls >> token) {
      entries.push_back(parse_natural(token));
      ++count;
    }
    if (count != side) throw InvalidInput("state matrix row has wrong length");
  }
  return {StateMatrix(p, std::move(entries)), kind};
}

}  // namespace knotmosaic
