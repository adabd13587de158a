#include <gtest/gtest.h>

#include <random>

#include "knots/enumerate.hpp"
#include "knots/lattice.hpp"
#include "knots/moves.hpp"

using namespace knots;

namespace {

const Word kSquare{1, 2, 6, 5};
const char* const kTrefoil24 = "1,1,1,2,2,3,6,6,5,5,5,4,4,1,2,2,3,3,3,6,6,5,4,4";

std::vector<Word> polygons_up_to(int max_length) {
  std::vector<Word> out;
  for_each_polygon(max_length, [&](const Word& w) { out.push_back(w); });
  return out;
}

}  // namespace

TEST(Lattice, ParseAndPrint) {
  EXPECT_EQ(parse_polygon("1,2,6,5"), kSquare);
  EXPECT_EQ(polygon_to_string(kSquare), "1,2,6,5");
  EXPECT_THROW(parse_polygon("1,7"), LatticeError);
  EXPECT_THROW(parse_polygon("1,,2"), LatticeError);
  EXPECT_THROW(parse_polygon("a"), LatticeError);
}

TEST(Lattice, Validation) {
  EXPECT_TRUE(is_valid_polygon(kSquare));
  EXPECT_TRUE(is_valid_polygon(parse_polygon(kTrefoil24)));
  const auto back = validate_polygon(parse_polygon("1,6"));
  ASSERT_TRUE(back);
  EXPECT_EQ(back->kind, Violation::Kind::Backtrack);
  EXPECT_EQ(validate_polygon(parse_polygon("1,2,6"))->kind, Violation::Kind::Unbalanced);
  EXPECT_EQ(validate_polygon(Word{})->kind, Violation::Kind::Empty);
  // Two unit squares sharing a vertex.
  const auto twice = validate_polygon(parse_polygon("1,2,6,5,6,5,1,2"));
  ASSERT_TRUE(twice);
  EXPECT_EQ(twice->kind, Violation::Kind::SelfIntersection);
  EXPECT_EQ(twice->first, 1);
  EXPECT_EQ(twice->last, 4);
}

TEST(Lattice, ExchangeIsAnInvolution) {
  for (const Word& w : polygons_up_to(8)) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      const auto once = exchange(w, k);
      if (!once) continue;
      EXPECT_TRUE(is_valid_polygon(*once));
      EXPECT_EQ(exchange(*once, k), w);
    }
  }
  // Equal neighbours: a legal no-op.
  EXPECT_EQ(exchange(parse_polygon("1,1,2,6,6,5"), 0), parse_polygon("1,1,2,6,6,5"));
}

TEST(Lattice, CreateThenAnnihilate) {
  int created = 0;
  for (const Word& w : polygons_up_to(8)) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      for (int d = 1; d <= 6; ++d) {
        const auto up = pair_create(w, k, d);
        if (!up) continue;
        ++created;
        EXPECT_EQ(up->size(), w.size() + 2);
        EXPECT_TRUE(is_valid_polygon(*up));
        EXPECT_EQ(pair_annihilate(*up, k), w);
      }
    }
  }
  EXPECT_GT(created, 0);
  EXPECT_TRUE(pair_create(kSquare, 0, 3));
  EXPECT_FALSE(pair_create(kSquare, 0, 1));  // parallel to the edge
  EXPECT_FALSE(pair_annihilate(kSquare, 0));
}

TEST(Lattice, PreferenceOrder) {
  const Word six = parse_polygon("1,1,2,6,6,5");
  EXPECT_EQ(preferred(kSquare, six), kSquare);
  EXPECT_EQ(preferred(six, kSquare), kSquare);
  EXPECT_EQ(preferred(six, six), six);
  const auto sample = polygons_up_to(8);
  for (const Word& a : sample) {
    EXPECT_FALSE(lattice_less(a, a));
    for (const Word& b : sample) {
      if (rotation_min(a) == rotation_min(b)) continue;
      EXPECT_NE(lattice_less(a, b), lattice_less(b, a));
    }
  }
  EXPECT_EQ(rotation_min(parse_polygon("6,5,1,2")), kSquare);
}

TEST(Lattice, ReduceRectangleToSquare) {
  const LatticeReduction r = reduce_lattice(parse_polygon("1,1,1,2,6,6,6,5"), 8, 100000);
  EXPECT_EQ(r.best, kSquare);
  EXPECT_FALSE(r.exhausted);
  const LatticeReduction fixed = reduce_lattice(kSquare, 4, 100);
  EXPECT_EQ(fixed.best, kSquare);
  EXPECT_EQ(reduce_lattice(fixed.best, 4, 100).best, kSquare);
}

TEST(Lattice, TrefoilDoesNotShrink) {
  const Word t = parse_polygon(kTrefoil24);
  const LatticeReduction r = reduce_lattice(t, 24, 20000);
  EXPECT_EQ(r.best.size(), 24u);
  const LatticeReduction tiny = reduce_lattice(t, 24, 10);
  EXPECT_TRUE(tiny.exhausted);
}

TEST(Lattice, ProjectionOfSquareIsUnknot) {
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) EXPECT_TRUE(project_to_code(kSquare, a).empty());
}

TEST(Lattice, TrefoilProjectsToTrefoil) {
  const Word t = parse_polygon(kTrefoil24);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    const PairCode c = project_to_code(t, a);
    EXPECT_EQ(canonical_relabel(simplify(c)), parse_code("1:4 3:6 5:2"));
  }
}

TEST(Lattice, ProjectionAgreesAcrossExchanges) {
  std::mt19937 rng(3);
  const auto sample = polygons_up_to(10);
  for (int trial = 0; trial < 300; ++trial) {
    const Word& w = sample[rng() % sample.size()];
    const std::size_t k = rng() % w.size();
    const auto moved = exchange(w, k);
    if (!moved) continue;
    for (Axis a : {Axis::X, Axis::Z}) {
      EXPECT_EQ(canonical_relabel(simplify(project_to_code(w, a))),
                canonical_relabel(simplify(project_to_code(*moved, a))));
    }
  }
}

TEST(Lattice, PolygonCountsUpToTen) {
  std::array<int, 11> counts{};
  for_each_polygon(10, [&](const Word& w) {
    ASSERT_TRUE(is_valid_polygon(w));
    ++counts[w.size()];
  });
  EXPECT_EQ(counts[4], 3);
  EXPECT_EQ(counts[6], 22);
  EXPECT_EQ(counts[8], 207);
  EXPECT_EQ(counts[10], 2412);
}

TEST(Lattice, SmallPolygonsAreUnknots) {
  for_each_polygon(10, [](const Word& w) {
    EXPECT_TRUE(simplify(project_to_code(w, Axis::Z)).empty()) << polygon_to_string(w);
  });
}

TEST(Lattice, TrefoilSurvivesEveryExchange) {
  const Word t = parse_polygon(kTrefoil24);
  int legal = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto moved = exchange(t, k);
    if (!moved || *moved == t) continue;
    ++legal;
    EXPECT_EQ(canonical_relabel(simplify(project_to_code(*moved, Axis::Z))), parse_code("1:4 3:6 5:2"));
  }
  EXPECT_GT(legal, 0);
}
