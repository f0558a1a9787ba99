#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cutpaste/metrics.hpp"
#include "support.hpp"

using namespace cutpaste;
using testing_support::Gen;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

struct Expect {
  int begin, end;
  SegmentKind kind;
  Orientation orientation;
};

void expect_segments(const Permutation& p, Mode mode, const std::vector<Expect>& want) {
  const auto d = decompose(p, mode);
  ASSERT_EQ(d.segments.size(), want.size());
  for (std::size_t s = 0; s < want.size(); ++s) {
    EXPECT_EQ(d.segments[s].begin, want[s].begin);
    EXPECT_EQ(d.segments[s].end, want[s].end);
    EXPECT_EQ(d.segments[s].kind, want[s].kind);
    EXPECT_EQ(d.segments[s].orientation, want[s].orientation);
  }
}

constexpr auto B = SegmentKind::Block;
constexpr auto S = SegmentKind::Singleton;
constexpr auto Inc = Orientation::Increasing;
constexpr auto Dec = Orientation::Decreasing;
constexpr auto None = Orientation::None;

}  // namespace

TEST(Decompose, Examples) {
  expect_segments(P({3, 4, 5, 1, 2}), Mode::Circular, {{0, 5, B, Inc}});
  expect_segments(P({3, 4, 5, 1, 2}), Mode::Linear, {{0, 3, B, Inc}, {3, 5, B, Inc}});
  expect_segments(Permutation::identity(5), Mode::Linear, {{0, 5, B, Inc}});
  expect_segments(P({2, 4, 1, 3}), Mode::Linear, {{0, 1, S, None}, {1, 2, S, None}, {2, 3, S, None}, {3, 4, S, None}});
  // succ(4) = 1 joins the middle pair.
  expect_segments(P({2, 4, 1, 3}), Mode::Circular, {{0, 1, S, None}, {1, 3, B, Inc}, {3, 4, S, None}});
  // 1 then 4 wraps downward, so the whole list is one decreasing block.
  expect_segments(P({2, 1, 4, 3}), Mode::Circular, {{0, 4, B, Dec}});
  expect_segments(P({2, 1, 4, 3}), Mode::Linear, {{0, 2, B, Dec}, {2, 4, B, Dec}});
  expect_segments(P({1, 2, 4, 3, 5}), Mode::Linear, {{0, 2, B, Inc}, {2, 4, B, Dec}, {4, 5, S, None}});
  expect_segments(P({2, 1, 5, 3, 4}), Mode::Circular, {{0, 3, B, Dec}, {3, 5, B, Inc}});
  expect_segments(P({1, 4, 2, 3}), Mode::Linear, {{0, 1, S, None}, {1, 2, S, None}, {2, 4, B, Inc}});
}

TEST(Decompose, PropertiesOnRandomInputs) {
  Gen g(31);
  for (int rep = 0; rep < 2000; ++rep) {
    const int n = g.uniform(1, 30);
    const auto v = g.permutation(n);
    for (Mode mode : {Mode::Circular, Mode::Linear}) {
      const auto d = decompose(v, mode);
      int at = 0;
      for (std::size_t s = 0; s < d.segments.size(); ++s) {
        const Segment& seg = d.segments[s];
        ASSERT_EQ(seg.begin, at);
        ASSERT_EQ(seg.is_block(), seg.length() >= 2);
        for (int t = seg.begin; t < seg.end; ++t) ASSERT_EQ(d.segment_of[static_cast<std::size_t>(t)], static_cast<int>(s));
        for (int t = seg.begin; t + 1 < seg.end; ++t) {
          const int want = seg.orientation == Orientation::Increasing ? successor(v[t], n, mode) : predecessor(v[t], n, mode);
          ASSERT_EQ(v[static_cast<std::size_t>(t) + 1], want);
        }
        at = seg.end;
      }
      ASSERT_EQ(at, n);
      // Maximality: a boundary never joins two values that would continue the block.
      for (std::size_t s = 0; s + 1 < d.segments.size(); ++s) {
        const Segment& a = d.segments[s];
        const Segment& b = d.segments[s + 1];
        const int x = v[static_cast<std::size_t>(a.end - 1)];
        const int y = v[static_cast<std::size_t>(b.begin)];
        if (!a.is_block() && !b.is_block()) ASSERT_FALSE(consecutive(x, y, n, mode));
        if (a.is_block()) {
          const int cont = a.orientation == Orientation::Increasing ? successor(x, n, mode) : predecessor(x, n, mode);
          ASSERT_NE(y, cont);
        }
      }
    }
  }
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(Permutation::identity(6), Mode::Circular).value, 3);
  EXPECT_EQ(weight(Permutation::identity(6), Mode::Linear).value, 3);
  EXPECT_EQ(weight(P({2, 4, 1, 3}), Mode::Linear).value, 8);
  EXPECT_EQ(weight(P({2, 4, 1, 3}), Mode::Circular).value, 7);
  EXPECT_EQ(weight(P({1, 3, 5, 2, 4}), Mode::Circular).value, 10);
  EXPECT_EQ(weight(P({2, 1, 4, 3}), Mode::Linear).value, 6);
  EXPECT_EQ(weight(P({2, 1, 4, 3}), Mode::Circular).value, 3);
  EXPECT_EQ(weight(P({2, 1, 4, 3, 5}), Mode::Circular).value, 8);
  EXPECT_EQ(weight(P({3, 4, 5, 1, 2}), Mode::Circular).value, 3);
  EXPECT_EQ(weight(P({3, 4, 5, 1, 2}), Mode::Linear).value, 6);
}

TEST(Weight, StaysInRange) {
  Gen g(4);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = g.uniform(2, 40);
    const auto v = g.permutation(n);
    for (Mode mode : {Mode::Circular, Mode::Linear}) {
      const int w = weight(v, mode).value;
      ASSERT_GE(w, 3);
      ASSERT_LE(w, 2 * n);
    }
  }
}

TEST(Gain, Examples) {
  // Swapping [2 1] and [4 3] gives the single block [4 3 2 1].
  EXPECT_GE(gain(P({2, 1, 4, 3}), {0, 2, 4, Variant::Swap}, Mode::Linear), 3);
  EXPECT_LE(gain(Permutation::identity(5), Move::reverse(0, 5), Mode::Circular), 0);
  // Absorbing: singleton 3 joins the block 1 2.
  EXPECT_EQ(gain(P({3, 1, 2, 5, 4}), {0, 1, 3, Variant::Swap}, Mode::Linear), 2);
  EXPECT_EQ(gain(P({1, 2, 4, 5, 3}), {2, 4, 5, Variant::Swap}, Mode::Linear), 5);
  EXPECT_EQ(gain(P({1, 2, 5, 4, 3}), Move::reverse(2, 5), Mode::Linear), 3);
}

TEST(Parity, Examples) {
  EXPECT_EQ(parity_adjacencies(Permutation::identity(4)), 5);
  EXPECT_EQ(parity_adjacencies(P({2, 4, 1, 3})), 1);
  EXPECT_EQ(parity_adjacencies(P({2, 4, 1, 3, 5})), 2);
  Gen g(6);
  for (int rep = 0; rep < 500; ++rep) {
    const auto v = g.permutation(g.uniform(1, 25));
    ASSERT_EQ(parity_adjacencies(P(v)), testing_support::count_parity(v));
  }
}

TEST(Certificate, Examples) {
  const auto id = certify_lower_bound(Permutation::identity(6));
  EXPECT_EQ(id.best, 0);
  const auto c4 = certify_lower_bound(P({2, 4, 1, 3}));
  EXPECT_EQ(c4.parity_bound, 2);
  EXPECT_EQ(c4.adjacency_bound, 2);
  EXPECT_EQ(c4.best, 2);
  EXPECT_EQ(certify_lower_bound(P({2, 4, 1, 3, 5})).parity_bound, 2);
  EXPECT_EQ(certify_lower_bound(P({5, 4, 3, 2, 1})).adjacency_bound, 1);
}

TEST(ParityDelta, AtMostTwo) {
  EXPECT_EQ(max_parity_delta(P({2, 4, 1, 3})), 2);
  EXPECT_LE(max_parity_delta(Permutation::identity(6)), 0);
  for (int n = 1; n <= 6; ++n) {
    testing_support::for_each_permutation(n, [](const std::vector<int>& v) { ASSERT_LE(max_parity_delta(P(v)), 2); });
  }
}

TEST(Witnesses, EvenBeforeOdd) {
  EXPECT_EQ(even_before_odd(4), P({2, 4, 1, 3}));
  EXPECT_EQ(even_before_odd(5), P({2, 4, 1, 3, 5}));
  EXPECT_EQ(even_before_odd(1), P({1}));
  for (int n = 2; n <= 30; ++n) EXPECT_EQ(parity_adjacencies(even_before_odd(n)), min_parity_adjacencies(n));
}

TEST(Witnesses, CountMatchesExhaustiveSearch) {
  for (int n = 2; n <= 8; ++n) {
    const int least = min_parity_adjacencies(n);
    std::uint64_t found = 0;
    int observed_min = n + 2;
    testing_support::for_each_permutation(n, [&](const std::vector<int>& v) {
      const int c = testing_support::count_parity(v);
      observed_min = std::min(observed_min, c);
      found += c == least;
    });
    EXPECT_EQ(observed_min, least) << n;
    EXPECT_EQ(witness_count(n), found) << n;
  }
}

TEST(Witnesses, ExhaustiveListing) {
  const auto w4 = hard_witnesses(4, 100, 0);
  EXPECT_EQ(w4.size(), witness_count(4));
  EXPECT_NE(std::find(w4.begin(), w4.end(), P({2, 4, 1, 3})), w4.end());
  EXPECT_TRUE(std::is_sorted(w4.begin(), w4.end()));
  const auto w2 = hard_witnesses(2, 10, 0);
  EXPECT_NE(std::find(w2.begin(), w2.end(), P({2, 1})), w2.end());
  for (const auto& p : hard_witnesses(3, 10, 0)) EXPECT_EQ(parity_adjacencies(p), 2);
}

TEST(Witnesses, SampledAreDistinctValidAndSeeded) {
  for (int n : {5, 9, 14, 41}) {
    const auto a = hard_witnesses(n, 3, 1);
    const auto b = hard_witnesses(n, 3, 1);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.size(), std::min<std::uint64_t>(3, witness_count(n)));
    std::set<std::vector<int>> distinct;
    for (const auto& p : a) {
      EXPECT_EQ(parity_adjacencies(p), min_parity_adjacencies(n));
      distinct.insert(p.vector());
    }
    EXPECT_EQ(distinct.size(), a.size());
  }
}

TEST(Witnesses, SamplingCoversTheFamilyUniformly) {
  // Draw one witness per seed; each of the n=5 family should appear about
  // 1000 times.
  std::map<std::vector<int>, int> hits;
  const int draws = 1000 * static_cast<int>(witness_count(5));
  for (int seed = 0; seed < draws; ++seed) hits[hard_witnesses(5, 1, static_cast<std::uint64_t>(seed)).front().vector()]++;
  EXPECT_EQ(hits.size(), witness_count(5));
  for (const auto& [p, h] : hits) {
    EXPECT_GT(h, 800);
    EXPECT_LT(h, 1200);
  }
}
