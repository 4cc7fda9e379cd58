#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace knotmosaic {

// Exact arbitrary-precision natural number. All counting paths use this type.
using Natural = mpz_class;

std::string to_decimal(const Natural& value);

// Parses a non-empty string of decimal digits. Throws InvalidInput otherwise.
Natural parse_natural(std::string_view text);

}  // namespace knotmosaic
