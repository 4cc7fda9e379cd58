#include "knotmosaic/natural.hpp"

#include <algorithm>
#include <cctype>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {

std::string to_decimal(const Natural& value) { return value.get_str(10); }

Natural parse_natural(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidInput("not a decimal natural: '" + std::string(text) + "'");
  }
  return Natural(std::string(text), 10);
}

}  // namespace knotmosaic
