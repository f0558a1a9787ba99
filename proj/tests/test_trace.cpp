#include <gtest/gtest.h>

#include <sstream>

#include "cutpaste/sorter.hpp"
#include "cutpaste/trace.hpp"
#include "support.hpp"

using namespace cutpaste;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

}  // namespace

TEST(Replay, Examples) {
  EXPECT_EQ(replay(Trace(P({1, 2, 3}))), P({1, 2, 3}));

  Trace one(P({3, 4, 5, 1, 2}));
  one.moves.push_back({0, 3, 5, Variant::Swap});
  EXPECT_EQ(replay(one), Permutation::identity(5));

  Trace twice(P({2, 1}));
  twice.moves = {Move::reverse(0, 2), Move::reverse(0, 2)};
  EXPECT_EQ(replay(twice), P({2, 1}));
}

TEST(Replay, ReportsOffendingMoveIndex) {
  Trace t(Permutation::identity(4));
  t.moves = {Move::reverse(0, 4), {0, 1, 2, Variant::Swap}, {0, 2, 6, Variant::Swap}};
  try {
    replay(t);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Replay, PrefixThenSuffixEqualsWhole) {
  testing_support::Gen g(17);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = g.uniform(2, 15);
    Trace whole(P(g.permutation(n)));
    const int len = g.uniform(0, 8);
    for (int t = 0; t < len; ++t) whole.moves.push_back(g.move(n));
    const auto cut = static_cast<std::size_t>(g.uniform(0, len));
    Trace prefix(whole.initial);
    prefix.moves.assign(whole.moves.begin(), whole.moves.begin() + static_cast<long>(cut));
    Trace suffix(replay(prefix));
    suffix.moves.assign(whole.moves.begin() + static_cast<long>(cut), whole.moves.end());
    ASSERT_EQ(replay(suffix), replay(whole));
  }
}

TEST(TraceText, GoldenFormat) {
  Trace t(P({3, 4, 5, 1, 2}));
  t.moves.push_back({0, 3, 5, Variant::Swap});
  t.steps.push_back({0, 1, StepCategory::Closing, 2});
  EXPECT_EQ(format_trace(t), "n 5\ninit 3 4 5 1 2\n# step closing gain=2\nmove 0 3 5 swap\n");
}

TEST(TraceText, RoundTripsSorterOutput) {
  testing_support::Gen g(2);
  for (int rep = 0; rep < 100; ++rep) {
    const auto p = P(g.permutation(g.uniform(1, 25)));
    for (Algorithm a : {Algorithm::Basic, Algorithm::Refined, Algorithm::Insertion, Algorithm::Monotone}) {
      const Trace t = sort_with(a, p).trace;
      const Trace back = parse_trace(format_trace(t));
      ASSERT_EQ(back.initial, t.initial);
      ASSERT_EQ(back.moves, t.moves);
      ASSERT_EQ(back.steps, t.steps);
    }
  }
}

TEST(TraceText, AllVariantNames) {
  const Trace t = parse_trace("n 4\ninit 1 2 3 4\nmove 0 1 2 swap\nmove 0 1 3 swaprl\nmove 1 2 4 swaprr\nmove 0 4 4 rev\n");
  ASSERT_EQ(t.moves.size(), 4u);
  EXPECT_EQ(t.moves[1].variant, Variant::SwapRevLeft);
  EXPECT_EQ(t.moves[2].variant, Variant::SwapRevRight);
  EXPECT_EQ(t.moves[3], Move::reverse(0, 4));
  EXPECT_TRUE(t.steps.empty());
}

TEST(TraceText, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::optional<std::size_t> {
    try {
      parse_trace(text);
    } catch (const InputError& e) {
      return e.position();
    }
    return std::nullopt;
  };
  EXPECT_EQ(line_of("n 3\ninit 1 2 3\nmove 0 1 9 swap\n"), 3u);
  EXPECT_EQ(line_of("n 3\ninit 1 2 3\n# note\nmove 0 1 2 sideways\n"), 4u);
  EXPECT_EQ(line_of("n 3\ninit 1 2 2\n"), 2u);
  EXPECT_EQ(line_of("init 1 2 3\n"), 1u);
  EXPECT_EQ(line_of("n 3\nmove 0 1 2 swap\n"), 2u);
  EXPECT_EQ(line_of("n 3\ninit 1 2 3\nmove 0 2 3 rev\n"), 3u);
  EXPECT_THROW(parse_trace("n 3\n"), InputError);
  EXPECT_THROW(parse_trace("n 3\ninit 1 2\n"), InputError);
}
