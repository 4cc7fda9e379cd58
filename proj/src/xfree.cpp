#include "knotmosaic/xfree.hpp"

#include <string>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {
namespace {

constexpr int kMaxOrder = 40;

void check_vector(int k, const CountVector& v) {
  if (k < 0 || k > kMaxOrder) throw InvalidInput("operator order out of range");
  if (v.p != k || v.entries.size() != (std::size_t{1} << k)) {
    throw InvalidInput("count vector of order " + std::to_string(v.p) + " with " +
                       std::to_string(v.entries.size()) + " entries does not match order " +
                       std::to_string(k));
  }
}

// On entry x and o both hold v. On exit x = X_k v and o = O_k v.
void butterfly(std::vector<Natural>& x, std::vector<Natural>& o, int k, OpCounter* counter) {
  Natural cross;
  Natural scaled;
  std::uint64_t adds = 0;
  std::uint64_t shifts = 0;
  for (int level = 0; level < k; ++level) {
    const std::size_t half = std::size_t{1} << level;
    for (std::size_t base = 0; base < x.size(); base += 2 * half) {
      for (std::size_t i = base; i < base + half; ++i) {
        const std::size_t j = i + half;
        mpz_ptr xa = x[i].get_mpz_t();
        mpz_ptr oa = o[i].get_mpz_t();
        mpz_ptr xb = x[j].get_mpz_t();
        mpz_ptr ob = o[j].get_mpz_t();
        mpz_add(cross.get_mpz_t(), oa, xb);       // O a + X b
        mpz_mul_2exp(scaled.get_mpz_t(), ob, 2);  // 4 O b
        mpz_add(scaled.get_mpz_t(), scaled.get_mpz_t(), xa);
        mpz_add(xa, xa, ob);  // X a + O b
        mpz_swap(ob, scaled.get_mpz_t());
        mpz_set(oa, cross.get_mpz_t());
        mpz_swap(xb, cross.get_mpz_t());
        adds += 3;
        shifts += 1;
      }
    }
  }
  if (counter) {
    counter->additions += adds;
    counter->shifts += shifts;
  }
}

// v <- (X_k + O_k) v, using `scratch` as the O half.
void apply_operator_in_place(std::vector<Natural>& v, std::vector<Natural>& scratch, int k,
                             OpCounter* counter) {
  scratch.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scratch[i] = v[i];
  butterfly(v, scratch, k, counter);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += scratch[i];
  if (counter) counter->additions += v.size();
}

}  // namespace

CountVector CountVector::ones(int p) {
  if (p < 0 || p > kMaxOrder) throw InvalidInput("count vector order out of range");
  return {p, std::vector<Natural>(std::size_t{1} << p, Natural(1))};
}

std::pair<CountVector, CountVector> apply_split(int k, const CountVector& v, OpCounter* counter) {
  check_vector(k, v);
  CountVector x = v;
  CountVector o = v;
  butterfly(x.entries, o.entries, k, counter);
  return {std::move(x), std::move(o)};
}

CountVector apply_operator(int k, const CountVector& v, OpCounter* counter) {
  check_vector(k, v);
  CountVector out = v;
  std::vector<Natural> scratch;
  apply_operator_in_place(out.entries, scratch, k, counter);
  return out;
}

Natural count_matrixfree(int m, int n, OpCounter* counter) {
  if (m < 1 || n < 1) {
    throw InvalidInput("mosaic dimensions must be positive, got " + std::to_string(m) + "x" +
                       std::to_string(n));
  }
  if (m == 1 || n == 1) return 1;
  const int k = m - 2;
  std::vector<Natural> v = CountVector::ones(k).entries;
  std::vector<Natural> scratch;
  for (int step = 0; step < n - 2; ++step) apply_operator_in_place(v, scratch, k, counter);
  Natural total = 0;
  for (const auto& e : v) total += e;
  return 2 * total;
}

}  // namespace knotmosaic
