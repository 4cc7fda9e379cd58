#include "knotmosaic/transfer.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {
namespace {

StateMatrix M(const std::vector<std::vector<unsigned long>>& rows) {
  return StateMatrix::from_rows(rows);
}

bool is_power_of_four(const Natural& v) {
  if (v <= 0) return false;
  const auto bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  return mpz_popcount(v.get_mpz_t()) == 1 && (bits - 1) % 2 == 0;
}

TEST(BuildSplit, SeedsAndFirstLevels) {
  const auto s0 = build_split(0);
  EXPECT_EQ(s0.x, M({{1}}));
  EXPECT_EQ(s0.o, M({{1}}));

  const auto s1 = build_split(1);
  EXPECT_EQ(s1.x, M({{1, 1}, {1, 1}}));
  EXPECT_EQ(s1.o, M({{1, 1}, {1, 4}}));

  const auto s2 = build_split(2);
  EXPECT_EQ(s2.x, M({{1, 1, 1, 1}, {1, 1, 1, 4}, {1, 1, 1, 1}, {1, 4, 1, 1}}));
  EXPECT_EQ(s2.o, M({{1, 1, 1, 1}, {1, 4, 1, 1}, {1, 1, 4, 4}, {1, 1, 4, 16}}));
}

TEST(BuildSplit, WorkedEntryOfO4) {
  // l-state xoxo (index 10), r-state ooxo (index 11): two four-choice cells.
  EXPECT_EQ(build_split(4).o(10, 11), 16);
}

TEST(BuildSplit, FromSeedContinuesRecurrence) {
  EXPECT_EQ(build_split_from(build_split(2), 5).o, build_split(5).o);
  EXPECT_EQ(build_split_from(build_split(2), 5).x, build_split(5).x);
  EXPECT_THROW(build_split_from(build_split(3), 2), InvalidInput);
  EXPECT_THROW(build_split(-1), InvalidInput);
}

TEST(BuildSplit, SymmetricWithPowerOfFourEntries) {
  for (int p = 0; p <= 6; ++p) {
    const auto s = build_split(p);
    EXPECT_EQ(s.x, s.x.transposed()) << p;
    EXPECT_EQ(s.o, s.o.transposed()) << p;
    for (const auto& v : s.x.entries()) ASSERT_TRUE(is_power_of_four(v)) << p;
    for (const auto& v : s.o.entries()) ASSERT_TRUE(is_power_of_four(v)) << p;
    if (p >= 1) EXPECT_EQ(mat_add(s.x, s.o), state_matrix(p, 1)) << p;
  }
}

TEST(MatrixOps, AddMulPower) {
  const auto s1 = build_split(1);
  EXPECT_EQ(mat_add(s1.x, s1.o), M({{2, 2}, {2, 5}}));
  EXPECT_EQ(mat_power(M({{2, 2}, {2, 5}}), 2), M({{8, 14}, {14, 29}}));
  EXPECT_EQ(mat_mul(M({{1, 2}, {3, 4}}), M({{5, 6}, {7, 8}})), M({{19, 22}, {43, 50}}));
  for (int p = 0; p <= 4; ++p) {
    EXPECT_EQ(mat_power(column_matrix(p), 0), StateMatrix::identity(p));
  }
}

TEST(MatrixOps, BinaryPowerMatchesRepeated) {
  const auto a = column_matrix(3);
  for (int e = 0; e <= 9; ++e) {
    EXPECT_EQ(mat_power(a, e, PowerMethod::kBinary), mat_power(a, e, PowerMethod::kRepeated)) << e;
  }
}

TEST(MatrixOps, DimensionMismatch) {
  EXPECT_THROW(mat_add(StateMatrix(1), StateMatrix(2)), InvalidInput);
  EXPECT_THROW(mat_mul(StateMatrix(2), StateMatrix(1)), InvalidInput);
  EXPECT_THROW(mat_power(StateMatrix(1), -1), InvalidInput);
  EXPECT_THROW(StateMatrix(1, std::vector<Natural>(3)), InvalidInput);
  EXPECT_THROW(StateMatrix(StateMatrix::kMaxP + 1), InvalidInput);
}

TEST(GrandSum, Examples) {
  EXPECT_EQ(grand_sum(M({{2, 2}, {2, 5}})), 11);
  for (int p = 0; p <= 5; ++p) EXPECT_EQ(grand_sum(StateMatrix::identity(p)), 1 << p);
  EXPECT_EQ(grand_sum(column_matrix(2)), 65);
}

TEST(GrandSum, SquareOfSymmetricMatrixIsSumOfSquaredRowSums) {
  for (int p = 1; p <= 5; ++p) {
    const auto a = column_matrix(p);
    Natural expected = 0;
    for (std::size_t i = 0; i < a.side(); ++i) {
      Natural row = 0;
      for (const auto& v : a.row(i)) row += v;
      expected += row * row;
    }
    EXPECT_EQ(grand_sum(mat_mul(a, a)), expected) << p;
  }
  EXPECT_EQ(grand_sum(mat_power(column_matrix(2), 2)), 1297);
}

TEST(StateMatrixOp, Examples) {
  EXPECT_EQ(state_matrix(1, 1), M({{2, 2}, {2, 5}}));
  EXPECT_EQ(state_matrix(1, 2), M({{8, 14}, {14, 29}}));
  EXPECT_EQ(grand_sum(state_matrix(2, 2)), 1297);
  EXPECT_THROW(state_matrix(0, 1), InvalidInput);
  EXPECT_THROW(state_matrix(1, 0), InvalidInput);
}

TEST(CountDense, Examples) {
  EXPECT_EQ(count_dense(4, 4), 2594);
  EXPECT_EQ(count_dense(5, 6), 331745962);
  EXPECT_EQ(count_dense(2, 5), 16);
  EXPECT_EQ(count_dense(1, 1), 1);
  EXPECT_EQ(count_dense(7, 1), 1);
  EXPECT_EQ(count_dense(2, 2), 2);
  EXPECT_EQ(count_dense(5, 2), 16);
  EXPECT_THROW(count_dense(0, 3), InvalidInput);
  EXPECT_THROW(count_dense(3, 0), InvalidInput);
}

TEST(CountDense, SeriesMatchesPointwise) {
  for (int m = 1; m <= 6; ++m) {
    const auto series = count_dense_series(m, 7);
    ASSERT_EQ(series.size(), 7u);
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(series[n - 1], count_dense(m, n)) << m << "," << n;
  }
}

TEST(CountDense, TransposeSymmetry) {
  for (int m = 2; m <= 7; ++m) {
    for (int n = m + 1; n <= 7; ++n) EXPECT_EQ(count_dense(m, n), count_dense(n, m));
  }
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closed_form(1, 9), 1);
  EXPECT_EQ(closed_form(2, 4), 8);
  EXPECT_EQ(closed_form(3, 5), 778);
  EXPECT_EQ(closed_form(3, 3), 22);
  EXPECT_EQ(closed_form(3, 2), 4);
  EXPECT_THROW(closed_form(4, 4), InvalidInput);
  EXPECT_THROW(closed_form(0, 4), InvalidInput);
  EXPECT_THROW(closed_form(3, 1), InvalidInput);
}

TEST(ClosedForm, AgreesWithDenseCount) {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 12; ++n) EXPECT_EQ(count_dense(m, n), closed_form(m, n)) << m << "," << n;
  }
}

TEST(BoundsCheck, Examples) {
  EXPECT_TRUE(bounds_check(3, 3, Natural(22)));
  EXPECT_TRUE(bounds_check(4, 4, Natural(2594)));
  EXPECT_TRUE(bounds_check(6, 6, Natural("101393411126")));
  // Just outside each side at (3,3), where both bounds equal 22.
  EXPECT_FALSE(bounds_check(3, 3, Natural(21)));
  EXPECT_FALSE(bounds_check(3, 3, Natural(23)));
  EXPECT_THROW(bounds_check(2, 3, Natural(4)), InvalidInput);
}

TEST(MatrixDump, FormatAndRoundTrip) {
  EXPECT_EQ(format_state_matrix(build_split(1).o, 'O'), "statematrix p=1 kind=O\n1 1\n1 4\n");
  const auto n = state_matrix(3, 4);
  std::istringstream in(format_state_matrix(n, 'N'));
  const auto parsed = parse_state_matrix(in);
  EXPECT_EQ(parsed.kind, 'N');
  EXPECT_EQ(parsed.matrix, n);

  std::istringstream bad("statematrix p=1 kind=Q\n1 1\n1 1\n");
  EXPECT_THROW(parse_state_matrix(bad), InvalidInput);
  std::istringstream short_row("statematrix p=1 kind=X\n1 1\n1\n");
  EXPECT_THROW(parse_state_matrix(short_row), InvalidInput);
}

}  // namespace
}  // namespace knotmosaic
