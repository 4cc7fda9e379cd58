#include "knotmosaic/verify.hpp"

#include <algorithm>
#include <functional>

#include "knotmosaic/errors.hpp"
#include "knotmosaic/xfree.hpp"

namespace knotmosaic {
namespace {

std::string name_of(const char* what, int a, int b) {
  return std::string(what) + " (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void run_check(VerifyReport& report, std::string name,
               const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    report.checks.push_back(
        {std::move(name), ok ? CheckStatus::kPass : CheckStatus::kMismatch, std::move(detail)});
  } catch (const BudgetExceeded& e) {
    report.checks.push_back({std::move(name), CheckStatus::kBudget, e.what()});
  }
}

class AlgebraicSide {
 public:
  explicit AlgebraicSide(const std::optional<SplitPair>& seed) : seed_(seed) {}

  SplitPair split(int p) const {
    if (seed_ && p >= seed_->x.p()) return build_split_from(*seed_, p);
    return build_split(p);
  }

  StateMatrix state(int p, int q) const {
    const auto s = split(p);
    return mat_power(mat_add(s.x, s.o), q);
  }

  Natural knot_count(int m, int n) const {
    if (m == 1 || n == 1) return 1;
    const auto s = split(m - 2);
    return 2 * grand_sum(mat_power(mat_add(s.x, s.o), n - 2));
  }

 private:
  std::optional<SplitPair> seed_;
};

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::kPass; });
}

bool VerifyReport::any_budget() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::kBudget; });
}

bool VerifyReport::any_mismatch() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::kMismatch; });
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kMismatch:
      return "mismatch";
    case CheckStatus::kBudget:
      return "budget";
  }
  return "unknown";
}

VerifyReport run_verification(const VerifyOptions& options) {
  const bool full = options.level == VerifyLevel::kFull;
  const AlgebraicSide algebra(options.seed);
  const auto& budget = options.budget;
  VerifyReport report;

  const int max_split = full ? 5 : 3;
  for (int p = 1; p <= max_split; ++p) {
    run_check(report, "split p=" + std::to_string(p), [&] {
      const auto tally = oracle::oracle_split_matrices(p, budget);
      const auto s = algebra.split(p);
      const bool x_ok = tally.x_counts == s.x;
      const bool o_ok = tally.o_counts == s.o;
      std::string detail = x_ok && o_ok ? "X and O agree"
                                        : std::string(x_ok ? "" : "X differs ") + (o_ok ? "" : "O differs");
      return std::pair{x_ok && o_ok, detail};
    });
  }

  const int max_pq = full ? 6 : 5;
  for (int p = 1; p < max_pq; ++p) {
    for (int q = 1; p + q <= max_pq; ++q) {
      run_check(report, name_of("state", p, q), [&] {
        const auto empirical = oracle::oracle_state_matrix(p, q, budget);
        const auto algebraic = algebra.state(p, q);
        return std::pair{empirical == algebraic,
                         "grand sums " + to_decimal(grand_sum(empirical)) + " vs " +
                             to_decimal(grand_sum(algebraic))};
      });
    }
  }

  std::vector<std::pair<int, int>> knot_sizes = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  if (full) {
    knot_sizes.emplace_back(3, 4);
    knot_sizes.emplace_back(4, 3);
  }
  for (const auto& [m, n] : knot_sizes) {
    run_check(report, name_of("knots", m, n), [&, m = m, n = n] {
      const Natural empirical = oracle::oracle_knot_count(m, n, budget);
      const Natural algebraic = algebra.knot_count(m, n);
      return std::pair{empirical == algebraic,
                       "oracle " + to_decimal(empirical) + " formula " + to_decimal(algebraic)};
    });
  }

  const int max_m = full ? 10 : 6;
  const int max_n = full ? 12 : 6;
  for (int m = 2; m <= max_m; ++m) {
    run_check(report, "engines m=" + std::to_string(m), [&] {
      const auto dense = count_dense_series(m, max_n);
      for (int n = 2; n <= max_n; ++n) {
        const Natural free = count_matrixfree(m, n);
        if (free != dense[n - 1]) {
          return std::pair{false, "n=" + std::to_string(n) + " dense " + to_decimal(dense[n - 1]) +
                                      " matrixfree " + to_decimal(free)};
        }
      }
      return std::pair{true, "n=2.." + std::to_string(max_n) + " agree"};
    });
  }
  return report;
}

}  // namespace knotmosaic
