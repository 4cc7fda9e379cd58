#include "knotmosaic/mosaic_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {
namespace {

constexpr std::string_view kHeader = "mosaic v1";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<int> parse_ints(std::string_view line) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    int value = 0;
    const auto token = line.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidInput("not an integer: '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  return values;
}

Mosaic parse_document(const std::vector<std::string_view>& lines) {
  if (lines.empty() || lines[0] != kHeader) {
    throw InvalidInput("expected 'mosaic v1' header");
  }
  if (lines.size() < 2) throw InvalidInput("missing dimension line");
  const auto dims = parse_ints(lines[1]);
  if (dims.size() != 2) throw InvalidInput("dimension line must hold exactly '<m> <n>'");
  const int m = dims[0];
  const int n = dims[1];
  if (m < 1 || n < 1) throw InvalidInput("mosaic dimensions must be positive");
  if (static_cast<int>(lines.size()) - 2 != m) {
    throw InvalidInput("expected " + std::to_string(m) + " rows, found " +
                       std::to_string(lines.size() - 2));
  }
  std::vector<Tile> cells;
  cells.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    const auto ids = parse_ints(lines[2 + i]);
    if (static_cast<int>(ids.size()) != n) {
      throw InvalidInput("row " + std::to_string(i + 1) + " has " + std::to_string(ids.size()) +
                         " tiles, expected " + std::to_string(n));
    }
    for (int id : ids) cells.push_back(Tile::from_id(id));
  }
  return Mosaic(m, n, std::move(cells));
}

}  // namespace

void write_mosaic(std::ostream& out, const Mosaic& mosaic) {
  out << kHeader << '\n' << mosaic.rows() << ' ' << mosaic.cols() << '\n';
  for (int i = 0; i < mosaic.rows(); ++i) {
    for (int j = 0; j < mosaic.cols(); ++j) {
      if (j > 0) out << ' ';
      out << mosaic.at(i, j).id();
    }
    out << '\n';
  }
}

std::string format_mosaic(const Mosaic& mosaic) {
  std::ostringstream out;
  write_mosaic(out, mosaic);
  return out.str();
}

Mosaic parse_mosaic(const std::string& text) {
  std::istringstream in(text);
  auto docs = read_mosaic_documents(in);
  if (docs.size() != 1) {
    throw InvalidInput("expected exactly one mosaic document, found " + std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

std::vector<Mosaic> read_mosaic_documents(std::istream& in) {
  std::vector<Mosaic> docs;
  std::vector<std::string> raw;
  std::string line;
  while (std::getline(in, line)) raw.push_back(line);

  std::vector<std::string_view> current;
  auto flush = [&] {
    if (!current.empty()) docs.push_back(parse_document(current));
    current.clear();
  };
  for (const auto& r : raw) {
    const auto t = trim(r);
    if (t.empty()) {
      flush();
    } else if (current.empty() && t.starts_with("count")) {
      break;
    } else {
      current.push_back(t);
    }
  }
  flush();
  return docs;
}

}  // namespace knotmosaic
