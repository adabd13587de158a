#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>

#include "../oracles/embedding_oracle.hpp"
#include "knots/enumerate.hpp"
#include "knots/planarity.hpp"

using namespace knots;

namespace {

std::vector<Shadow> all_parity_valid(int n) {
  std::vector<Shadow> out;
  std::vector<int> f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 1);
  do {
    out.push_back(Shadow::from_f(f));
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

}  // namespace

TEST(Planarity, ShadowBasics) {
  const Shadow s = Shadow::of(parse_code("1:4 3:6 5:2"));
  EXPECT_EQ(s.crossings(), 3);
  EXPECT_EQ(s.partner(1), 4);
  EXPECT_EQ(s.partner(7), 4);  // wraps
  EXPECT_TRUE(s.parity_valid());
  EXPECT_EQ(s.f(), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(Shadow::from_f(s.f()), s);
}

TEST(Planarity, FromPairsNeedNotBeParityValid) {
  const std::vector<Pair> pairs{{1, 3}, {2, 4}};
  const Shadow s = Shadow::from_pairs(pairs);
  EXPECT_FALSE(s.parity_valid());
}

TEST(Planarity, RealizabilityAgreesWithEmbeddingOracle) {
  for (int n = 1; n <= 6; ++n) {
    int realizable = 0;
    for (const Shadow& s : all_parity_valid(n)) {
      const bool ours = is_realizable(s);
      ASSERT_EQ(ours, oracle::realizable(s)) << "n=" << n << " f-sequence differs";
      realizable += ours;
    }
    EXPECT_GT(realizable, 0);
  }
}

TEST(Planarity, TrefoilLoops) {
  const Shadow s = Shadow::of(parse_code("1:4 3:6 5:2"));
  const auto loops = enumerate_loops(s);
  EXPECT_FALSE(loops.empty());
  for (const Loop& a : loops) {
    for (const Loop& b : loops) {
      if (!loops_share_segment(a, b)) EXPECT_EQ(intersection_parity(s, a, b), 1);
    }
  }
}

TEST(Planarity, SharedSegmentThrows) {
  const Shadow s = Shadow::of(parse_code("1:4 3:6 5:2"));
  const auto loops = enumerate_loops(s);
  EXPECT_THROW(intersection_parity(s, loops[0], loops[0]), SharedSegment);
}

// Euler: a connected plane 4-regular graph with n vertices has n + 2 faces.
TEST(Planarity, FreeLoopsAreFacesOfAdmissibleShadows) {
  for (int n = 3; n <= 7; ++n) {
    for (const Shadow& s : admissible_shadows(n)) {
      const auto faces = free_loops(s);
      EXPECT_EQ(static_cast<int>(faces.size()), n + 2) << "n=" << n;
      int arc_uses = 0;
      for (const Loop& f : faces) {
        EXPECT_EQ(static_cast<int>(f.corners.size()), std::popcount(f.vertices));
        arc_uses += f.length();
      }
      EXPECT_EQ(arc_uses, 2 * s.labels());  // every arc borders two faces
    }
  }
}

TEST(Planarity, LoopArcsListsLabels) {
  Loop l;
  l.arcs = 0b1011;
  EXPECT_EQ(loop_arcs(l, 6), (std::vector<int>{1, 2, 4}));
}
