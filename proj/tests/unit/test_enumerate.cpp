#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "../oracles/fox_oracle.hpp"
#include "knots/enumerate.hpp"

using namespace knots;

namespace {

// All perfect matchings of 1..2n, by recursion on the smallest free label.
void matchings(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
  const auto free_it = std::find(partner.begin() + 1, partner.end(), 0);
  if (free_it == partner.end()) {
    out.push_back(partner);
    return;
  }
  const int x = static_cast<int>(free_it - partner.begin());
  for (int y = x + 1; y < static_cast<int>(partner.size()); ++y) {
    if (partner[static_cast<std::size_t>(y)] != 0) continue;
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
    matchings(partner, out);
    partner[static_cast<std::size_t>(x)] = 0;
    partner[static_cast<std::size_t>(y)] = 0;
  }
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Determinants of the prime knots with 3..8 crossings, in table order.
const std::map<int, std::multiset<long long>> kDeterminants{
    {3, {3}},
    {4, {5}},
    {5, {5, 7}},
    {6, {9, 11, 13}},
    {7, {7, 11, 13, 15, 17, 19, 21}},
    {8, {13, 17, 17, 19, 21, 23, 23, 25, 25, 27, 27, 29, 29, 31, 33, 35, 37, 45, 3, 9, 15}},
};

}  // namespace

TEST(Enumerate, ShadowCursorWalksAllPermutations) {
  int count = 0;
  for (auto cur = std::optional<ShadowCursor>(first_shadow(5)); cur; cur = next_shadow(*cur)) ++count;
  EXPECT_EQ(count, 120);
  EXPECT_EQ(first_shadow(3).f, (std::vector<int>{1, 2, 3}));
}

TEST(Enumerate, ParityCountsMatchBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
    std::vector<std::vector<int>> all;
    matchings(partner, all);
    std::set<std::string> normalized;
    long long parity_valid = 0;
    for (const auto& h : all) {
      bool ok = true;
      for (int x = 1; x <= 2 * n; x += 2) ok &= h[static_cast<std::size_t>(x)] % 2 == 0;
      if (!ok) continue;
      ++parity_valid;
      for (unsigned roles = 0; roles < (1u << n); ++roles) {
        std::vector<Passage> seq(static_cast<std::size_t>(2 * n));
        int c = 0;
        for (int x = 1; x <= 2 * n; x += 2) {
          const bool odd_over = (roles >> c) & 1u;
          seq[static_cast<std::size_t>(x - 1)] = {c, odd_over};
          seq[static_cast<std::size_t>(h[static_cast<std::size_t>(x)] - 1)] = {c, !odd_over};
          ++c;
        }
        normalized.insert(to_string(PairCode::from_passages(seq)));
      }
    }
    EXPECT_EQ(parity_valid, factorial(n));
    EXPECT_EQ(parity_valid * (1ll << n), (1ll << n) * factorial(n));
    EXPECT_EQ(static_cast<long long>(normalized.size()), (1ll << (n - 1)) * factorial(n));

    std::set<std::string> generated;
    for (auto cur = std::optional<ShadowCursor>(first_shadow(n)); cur; cur = next_shadow(*cur)) {
      for (const PairCode& c : assignments(Shadow::from_f(cur->f))) generated.insert(to_string(c));
    }
    EXPECT_EQ(generated, normalized);
  }
}

TEST(Enumerate, AssignmentBits) {
  EXPECT_EQ(assignment_bits(0), (std::vector<std::string>{""}));
  EXPECT_EQ(assignment_bits(3), (std::vector<std::string>{"000", "001", "010", "011"}));
  EXPECT_EQ(assignment_bits(6).size(), 32u);
  const Shadow s = Shadow::of(parse_code("1:4 3:6 5:2"));
  EXPECT_EQ(code_from_assignment(s, "000"), parse_code("1:4 3:6 5:2"));
}

TEST(Enumerate, AdmissibilityTests) {
  EXPECT_EQ(shadow_admissible(Shadow::of(parse_code("1:4 3:6 5:2"))), ShadowTest::Admissible);
  EXPECT_EQ(shadow_admissible(Shadow::of(parse_code("1:2"))), ShadowTest::Kink);
  const PairCode granny = connected_sum(parse_code("1:4 3:6 5:2"), parse_code("1:4 3:6 5:2"));
  EXPECT_EQ(shadow_admissible(Shadow::of(granny)), ShadowTest::Composite);
  EXPECT_EQ(to_string(ShadowTest::NotRealizable), "not-realizable");
}

TEST(Enumerate, ShadowCountsThroughEight) {
  const std::vector<long long> expected{1, 1, 2, 3, 10, 27};
  for (int n = 3; n <= 8; ++n) {
    EXPECT_EQ(static_cast<long long>(admissible_shadows(n).size()), expected[static_cast<std::size_t>(n - 3)]) << n;
  }
}

TEST(Enumerate, SurvivorCountsThroughEight) {
  const Catalog c = enumerate_knots(8);
  std::vector<long long> survivors;
  for (const SummaryRow& r : c.summary) survivors.push_back(r.survivors);
  EXPECT_EQ(survivors, (std::vector<long long>{1, 0, 0, 1, 1, 2, 3, 7, 21}));
  EXPECT_EQ(c.records.size(), 36u);
  for (const KnotRecord& r : c.records) EXPECT_EQ(r.status, "ok");
}

TEST(Enumerate, SerialAndParallelAgree) {
  EnumerateOptions opt;
  opt.workers = 3;
  const Catalog par = enumerate_knots(7, opt);
  const Catalog ser = enumerate_knots_serial(7, opt);
  ASSERT_EQ(par.records.size(), ser.records.size());
  for (std::size_t i = 0; i < par.records.size(); ++i) {
    EXPECT_EQ(par.records[i].code, ser.records[i].code);
    EXPECT_EQ(par.records[i].shadow_id, ser.records[i].shadow_id);
    EXPECT_EQ(par.records[i].assignment_bits, ser.records[i].assignment_bits);
  }
}

// Survivors are prime, reduced, realizable, preferred, and have the
// determinants of the tabulated knots.
TEST(Enumerate, SurvivorsPassIndependentChecks) {
  const Catalog c = enumerate_knots(8);
  std::map<int, std::multiset<long long>> dets;
  for (const KnotRecord& r : c.records) {
    if (r.n == 0) continue;
    EXPECT_FALSE(r1_site(r.code) || r2_site(r.code)) << to_string(r.code);
    EXPECT_FALSE(is_composite(r.code));
    EXPECT_TRUE(is_realizable(Shadow::of(r.code)));
    EXPECT_EQ(canonical_relabel(r.code), r.code);
    EXPECT_EQ(r3_orbit(r.code).members.front(), r.code);
    dets[r.n].insert(oracle::determinant(r.code));
  }
  for (const auto& [n, expected] : kDeterminants) EXPECT_EQ(dets[n], expected) << "n=" << n;
}

TEST(Enumerate, UpBudgetZeroAgreesThroughEight) {
  EnumerateOptions opt;
  opt.reduce.up_budget = 0;
  const Catalog c = enumerate_knots(8, opt);
  std::vector<long long> survivors;
  for (const SummaryRow& r : c.summary) survivors.push_back(r.survivors);
  EXPECT_EQ(survivors, (std::vector<long long>{1, 0, 0, 1, 1, 2, 3, 7, 21}));
}

TEST(Enumerate, ReduceToPreferred) {
  EXPECT_TRUE(reduce_to_preferred(parse_code("1:4 3:6 5:2")).keep);
  EXPECT_TRUE(reduce_to_preferred(PairCode{}).keep);
  const ReduceOutcome kink = reduce_to_preferred(parse_code("1:2"));
  EXPECT_FALSE(kink.keep);
  EXPECT_TRUE(kink.representative.empty());
  ReduceOptions bad;
  bad.up_budget = 2;
  EXPECT_THROW(reduce_to_preferred(parse_code("1:4 3:6 5:2"), bad), std::invalid_argument);
}

TEST(Enumerate, OrbitBudgetExhaustionNamesTheShadow) {
  EnumerateOptions opt;
  opt.reduce.orbit_budget = 1;
  try {
    enumerate_knots(7, opt);
    FAIL() << "expected budget exhaustion";
  } catch (const EnumerationError& e) {
    EXPECT_TRUE(e.budget_exhausted());
    EXPECT_GE(e.shadow_id(), 0);
    EXPECT_LE(e.crossings(), 7);
  }
}
