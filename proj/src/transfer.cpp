#include "knotmosaic/transfer.hpp"

#include <string>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {
namespace {

void require_same_order(const StateMatrix& a, const StateMatrix& b, const char* op) {
  if (a.p() != b.p()) {
    throw InvalidInput(std::string(op) + ": dimension mismatch (p=" + std::to_string(a.p()) +
                       " vs p=" + std::to_string(b.p()) + ")");
  }
}

// Copies `src` into the quadrant of `dst` at (row0, col0), times `scale`.
void place_block(StateMatrix& dst, const StateMatrix& src, std::size_t row0, std::size_t col0,
                 unsigned long scale) {
  for (std::size_t i = 0; i < src.side(); ++i) {
    for (std::size_t j = 0; j < src.side(); ++j) {
      if (scale == 1) {
        dst(row0 + i, col0 + j) = src(i, j);
      } else {
        dst(row0 + i, col0 + j) = src(i, j) * scale;
      }
    }
  }
}

void check_dims(int m, int n) {
  if (m < 1 || n < 1) {
    throw InvalidInput("mosaic dimensions must be positive, got " + std::to_string(m) + "x" +
                       std::to_string(n));
  }
}

}  // namespace

SplitPair build_split_from(const SplitPair& seed, int p) {
  require_same_order(seed.x, seed.o, "build_split_from");
  if (p < seed.x.p()) {
    throw InvalidInput("cannot build order " + std::to_string(p) + " from a seed of order " +
                       std::to_string(seed.x.p()));
  }
  SplitPair cur = seed;
  for (int k = seed.x.p(); k < p; ++k) {
    const std::size_t h = cur.x.side();
    SplitPair next{StateMatrix(k + 1), StateMatrix(k + 1)};
    place_block(next.x, cur.x, 0, 0, 1);
    place_block(next.x, cur.o, 0, h, 1);
    place_block(next.x, cur.o, h, 0, 1);
    place_block(next.x, cur.x, h, h, 1);
    place_block(next.o, cur.o, 0, 0, 1);
    place_block(next.o, cur.x, 0, h, 1);
    place_block(next.o, cur.x, h, 0, 1);
    place_block(next.o, cur.o, h, h, 4);
    cur = std::move(next);
  }
  return cur;
}

SplitPair build_split(int p) {
  if (p < 0) throw InvalidInput("split order must be non-negative");
  return build_split_from({StateMatrix::identity(0), StateMatrix::identity(0)}, p);
}

StateMatrix column_matrix(int p) {
  const auto split = build_split(p);
  return mat_add(split.x, split.o);
}

StateMatrix mat_add(const StateMatrix& a, const StateMatrix& b) {
  require_same_order(a, b, "mat_add");
  std::vector<Natural> entries(a.entries().size());
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = a.entries()[i] + b.entries()[i];
  return StateMatrix(a.p(), std::move(entries));
}

StateMatrix mat_mul(const StateMatrix& a, const StateMatrix& b) {
  require_same_order(a, b, "mat_mul");
  const std::size_t n = a.side();
  StateMatrix c(a.p());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Natural& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  }
  return c;
}

StateMatrix mat_power(const StateMatrix& a, int exponent, PowerMethod method) {
  if (exponent < 0) throw InvalidInput("matrix exponent must be non-negative");
  if (method == PowerMethod::kRepeated) {
    StateMatrix result = StateMatrix::identity(a.p());
    for (int i = 0; i < exponent; ++i) result = i == 0 ? a : mat_mul(result, a);
    return result;
  }
  StateMatrix result = StateMatrix::identity(a.p());
  StateMatrix base = a;
  bool first = true;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) {
      result = first ? base : mat_mul(result, base);
      first = false;
    }
    if (e > 1) base = mat_mul(base, base);
  }
  return result;
}

Natural grand_sum(const StateMatrix& a) {
  Natural total = 0;
  for (const auto& v : a.entries()) total += v;
  return total;
}

StateMatrix state_matrix(int p, int q) {
  if (p < 1 || q < 1) throw InvalidInput("state_matrix needs p, q >= 1");
  return mat_power(column_matrix(p), q);
}

Natural count_dense(int m, int n) {
  check_dims(m, n);
  if (m == 1 || n == 1) return 1;
  return 2 * grand_sum(mat_power(column_matrix(m - 2), n - 2));
}

std::vector<Natural> count_dense_series(int m, int max_n) {
  check_dims(m, max_n);
  std::vector<Natural> out;
  out.reserve(static_cast<std::size_t>(max_n));
  out.emplace_back(1);
  if (m == 1) {
    out.assign(static_cast<std::size_t>(max_n), Natural(1));
    return out;
  }
  const StateMatrix column = column_matrix(m - 2);
  StateMatrix power = StateMatrix::identity(m - 2);
  for (int n = 2; n <= max_n; ++n) {
    if (n > 2) power = n == 3 ? column : mat_mul(power, column);
    out.push_back(2 * grand_sum(power));
  }
  return out;
}

Natural closed_form(int m, int n) {
  if (m < 1 || m > 3) throw InvalidInput("closed form only exists for m in {1,2,3}");
  if (n < 1 || (m == 3 && n < 2)) throw InvalidInput("closed form needs n >= 1 (n >= 2 for m=3)");
  Natural out;
  switch (m) {
    case 1:
      return 1;
    case 2:
      mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
      return out;
    default:
      mpz_ui_pow_ui(out.get_mpz_t(), 6, static_cast<unsigned long>(n - 2));
      out = 2 * (9 * out + 1);
      // 9 * 6^k + 1 is divisible by 5 since 6^k = 1 (mod 5).
      mpz_divexact_ui(out.get_mpz_t(), out.get_mpz_t(), 5);
      return out;
  }
}

bool bounds_check(int m, int n, const Natural& d) {
  if (m < 3 || n < 3) throw InvalidInput("bounds_check needs m, n >= 3");
  const auto e = static_cast<unsigned long>((m - 3) * (n - 3));
  auto factor = [](int k) {
    Natural f;
    mpz_ui_pow_ui(f.get_mpz_t(), 6, static_cast<unsigned long>(k - 2));
    return Natural(9 * f + 1);
  };
  const Natural denom = 2 * factor(m) * factor(n);
  const Natural numer = 275 * d;
  Natural two_e, five_e, twentytwo_e;
  mpz_ui_pow_ui(two_e.get_mpz_t(), 2, e);
  mpz_ui_pow_ui(five_e.get_mpz_t(), 5, e);
  mpz_ui_pow_ui(twentytwo_e.get_mpz_t(), 22, e);
  const bool lower_ok = two_e * denom <= numer;
  const bool upper_ok = numer * five_e <= twentytwo_e * denom;
  return lower_ok && upper_ok;
}

}  // namespace knotmosaic
