#include "knotmosaic/mosaic.hpp"

#include <gtest/gtest.h>

#include <random>

#include "knotmosaic/errors.hpp"

namespace knotmosaic {
namespace {

Tile T(int id) { return Tile::from_id(id); }

TEST(ConnectionPoints, MatchesTileTable) {
  EXPECT_EQ(connection_points(T(0)), SideSet(false, false, false, false));
  EXPECT_EQ(connection_points(T(1)), SideSet(true, false, false, true));
  EXPECT_EQ(connection_points(T(2)), SideSet(false, true, false, true));
  EXPECT_EQ(connection_points(T(3)), SideSet(false, true, true, false));
  EXPECT_EQ(connection_points(T(4)), SideSet(true, false, true, false));
  EXPECT_EQ(connection_points(T(5)), SideSet(true, true, false, false));
  EXPECT_EQ(connection_points(T(6)), SideSet(false, false, true, true));
  for (int id = 7; id <= 10; ++id) {
    EXPECT_EQ(connection_points(T(id)), SideSet(true, true, true, true)) << "T_" << id;
  }
}

TEST(ConnectionPoints, SizesAreZeroTwoOrFour) {
  EXPECT_EQ(connection_points(T(0)).size(), 0);
  for (int id = 1; id <= 6; ++id) EXPECT_EQ(connection_points(T(id)).size(), 2);
  for (int id = 7; id <= 10; ++id) EXPECT_EQ(connection_points(T(id)).size(), 4);
  for (int id = 0; id < Tile::kCount; ++id) EXPECT_EQ(connection_points(T(id)).size() % 2, 0);
}

TEST(Tile, RejectsOutOfRangeIds) {
  EXPECT_THROW(Tile::from_id(-1), InvalidInput);
  EXPECT_THROW(Tile::from_id(11), InvalidInput);
  EXPECT_EQ(Tile::from_id(10).id(), 10);
}

TEST(TilesMatching, Examples) {
  EXPECT_EQ(tiles_matching(true, true, true, true),
            (std::vector<Tile>{T(7), T(8), T(9), T(10)}));
  EXPECT_EQ(tiles_matching(false, false, false, false), std::vector<Tile>{T(0)});
  EXPECT_TRUE(tiles_matching(true, false, false, false).empty());
}

TEST(TilesMatching, PartitionsTheElevenTiles) {
  std::size_t total = 0;
  int even_partial = 0;
  for (int mask = 0; mask < 16; ++mask) {
    const bool l = mask & 1, r = mask & 2, t = mask & 4, b = mask & 8;
    const auto tiles = tiles_matching(l, r, t, b);
    total += tiles.size();
    const int bits = l + r + t + b;
    if (bits % 2 == 1) {
      EXPECT_TRUE(tiles.empty()) << mask;
    } else if (bits == 4) {
      EXPECT_EQ(tiles.size(), 4u);
    } else {
      EXPECT_EQ(tiles.size(), 1u) << mask;
      ++even_partial;
    }
  }
  EXPECT_EQ(total, 11u);
  EXPECT_EQ(even_partial, 7);
}

TEST(SuitablyConnected, Examples) {
  for (int id = 0; id < Tile::kCount; ++id) {
    EXPECT_TRUE(is_suitably_connected(Mosaic::from_ids({{id}})));
  }
  EXPECT_TRUE(is_suitably_connected(Mosaic::from_ids({{5, 4}})));
  EXPECT_FALSE(is_suitably_connected(Mosaic::from_ids({{5, 6}})));
  // Vertical mismatch: T_6 has a bottom point, T_0 has no top point.
  EXPECT_FALSE(is_suitably_connected(Mosaic::from_ids({{6}, {0}})));
  EXPECT_TRUE(is_suitably_connected(Mosaic::from_ids({{6}, {6}})));
}

TEST(KnotMosaic, Examples) {
  EXPECT_TRUE(is_knot_mosaic(Mosaic::from_ids({{0}})));
  EXPECT_FALSE(is_knot_mosaic(Mosaic::from_ids({{9}})));
  EXPECT_TRUE(is_knot_mosaic(Mosaic::from_ids({{2, 1}, {3, 4}})));
  EXPECT_TRUE(is_knot_mosaic(Mosaic::from_ids({{0, 0}, {0, 0}})));
  // Suitably connected but leaking out of the right edge.
  EXPECT_FALSE(is_knot_mosaic(Mosaic::from_ids({{2, 5}, {3, 5}})));
}

TEST(BoundaryStates, LeftAndRight) {
  const auto single = Mosaic::from_ids({{4}});
  EXPECT_EQ(l_state(single).bits(), "o");
  EXPECT_EQ(r_state(single).bits(), "x");

  const auto column = Mosaic::from_ids({{5}, {0}});
  EXPECT_EQ(l_state(column).bits(), "ox");
  EXPECT_EQ(r_state(column).bits(), "ox");

  const Mosaic blank(3, 4);
  EXPECT_EQ(l_state(blank).bits(), "xxx");
  EXPECT_EQ(r_state(blank).bits(), "xxx");
}

TEST(BoundaryStates, IndexConvention) {
  EXPECT_EQ(state_index(BoundaryState::from_string("xxx")), 0u);
  EXPECT_EQ(state_index(BoundaryState::from_string("oxx")), 1u);
  EXPECT_EQ(state_index(BoundaryState::from_string("xoxo")), 10u);
  EXPECT_EQ(state_index(BoundaryState::from_string("ooxo")), 11u);
}

TEST(BoundaryStates, IndexRoundTripsForEveryLength) {
  for (int p = 1; p <= 10; ++p) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << p); ++i) {
      const auto state = BoundaryState::from_index(i, p);
      ASSERT_EQ(state.length(), p);
      ASSERT_EQ(state.index(), i);
      ASSERT_EQ(BoundaryState::from_string(state.bits()), state);
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 63);
    const std::uint64_t mask = p == 64 ? ~0ull : ((std::uint64_t{1} << p) - 1);
    const std::uint64_t i = rng() & mask;
    EXPECT_EQ(BoundaryState::from_index(i, p).index(), i);
  }
}

TEST(BoundaryStates, RejectsBadInput) {
  EXPECT_THROW(BoundaryState::from_string(""), InvalidInput);
  EXPECT_THROW(BoundaryState::from_string("xoz"), InvalidInput);
  EXPECT_THROW(BoundaryState::from_index(8, 3), InvalidInput);
}

TEST(HasBottomCp, Examples) {
  EXPECT_FALSE(has_bottom_cp(Mosaic::from_ids({{0}})));
  EXPECT_TRUE(has_bottom_cp(Mosaic::from_ids({{6}})));
  EXPECT_TRUE(has_bottom_cp(Mosaic::from_ids({{5}, {2}})));
  EXPECT_THROW(has_bottom_cp(Mosaic::from_ids({{0, 0}})), InvalidInput);
}

TEST(Mosaic, RejectsDegenerateOrMismatchedGrids) {
  EXPECT_THROW(Mosaic(0, 3), InvalidInput);
  EXPECT_THROW(Mosaic(2, 0), InvalidInput);
  EXPECT_THROW(Mosaic(2, 2, std::vector<Tile>(3)), InvalidInput);
  EXPECT_THROW(Mosaic::from_ids({{1, 2}, {3}}), InvalidInput);
  EXPECT_THROW(Mosaic::from_ids({{12}}), InvalidInput);
}

TEST(Mosaic, Submosaic) {
  const auto m = Mosaic::from_ids({{0, 2, 1}, {0, 3, 4}});
  EXPECT_EQ(m.submosaic(0, 1, 2, 2), Mosaic::from_ids({{2, 1}, {3, 4}}));
  EXPECT_THROW(m.submosaic(1, 1, 2, 2), InvalidInput);
}

}  // namespace
}  // namespace knotmosaic
