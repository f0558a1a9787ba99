#include <algorithm>
#include <set>

#include "cutpaste/sorter.hpp"
#include "segment_move.hpp"

namespace cutpaste {

using detail::segment_move;

namespace {

// longest[t] = length of the longest increasing subsequence starting at t.
std::vector<int> longest_from(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> longest(v.size());
  // best[len-1] = largest first value over increasing runs of length len to
  // the right; strictly decreasing in len.
  std::vector<int> best;
  for (int t = n - 1; t >= 0; --t) {
    const int x = v[static_cast<std::size_t>(t)];
    auto it = std::partition_point(best.begin(), best.end(), [x](int b) { return b > x; });
    const auto len = static_cast<std::size_t>(it - best.begin());
    longest[static_cast<std::size_t>(t)] = static_cast<int>(len) + 1;
    if (len == best.size()) best.push_back(x);
    else best[len] = std::max(best[len], x);
  }
  return longest;
}

// Lexicographically smallest position list of a longest increasing subsequence.
std::vector<int> greedy_positions(const std::vector<int>& v) {
  const auto longest = longest_from(v);
  int need = longest.empty() ? 0 : *std::max_element(longest.begin(), longest.end());
  std::vector<int> out;
  int last = 0;
  for (std::size_t t = 0; t < v.size() && need > 0; ++t) {
    if (longest[t] == need && (out.empty() || v[t] > last)) {
      out.push_back(static_cast<int>(t) + 1);
      last = v[t];
      --need;
    }
  }
  return out;
}

int position_of(const std::vector<int>& v, int value) {
  return static_cast<int>(std::find(v.begin(), v.end(), value) - v.begin());
}

void record(SortResult& r, std::vector<int>& v, const Move& m, StepCategory c) {
  r.trace.steps.push_back({r.trace.moves.size(), 1, c, 0});
  r.trace.moves.push_back(m);
  ++r.category_histogram[c];
  apply_move_inplace(v, m);
}

SortResult finish(SortResult r, Algorithm a, const std::vector<int>& v) {
  r.move_count = static_cast<int>(r.trace.moves.size());
  r.bound = sort_bound(a, r.trace.initial.size());
  if (!is_identity(v)) throw InvariantError("baseline sorter did not reach the identity", r.trace.initial.vector());
  return r;
}

}  // namespace

MonotoneSubsequence longest_monotone(const Permutation& p) {
  const auto inc = greedy_positions(p.vector());
  std::vector<int> flipped = p.vector();
  for (int& x : flipped) x = p.size() + 1 - x;
  const auto dec = greedy_positions(flipped);
  if (dec.size() > inc.size()) return {Orientation::Decreasing, dec};
  return {Orientation::Increasing, inc};
}

SortResult sort_insertion(const Permutation& p) {
  SortResult r{Trace(p), 0, 0, {}};
  std::vector<int> v = p.vector();
  for (int t = 1; t < p.size(); ++t) {
    const int x = v[static_cast<std::size_t>(t)];
    const auto slot = static_cast<int>(std::upper_bound(v.begin(), v.begin() + t, x) - v.begin());
    if (slot == t) continue;
    record(r, v, segment_move(t, t + 1, slot, false), StepCategory::Block);
  }
  return finish(std::move(r), Algorithm::Insertion, v);
}

SortResult sort_monotone(const Permutation& p) {
  SortResult r{Trace(p), 0, 0, {}};
  std::vector<int> v = p.vector();
  const auto lm = longest_monotone(p);
  const bool increasing = lm.orientation == Orientation::Increasing;

  std::set<int> placed;
  std::vector<bool> keep(static_cast<std::size_t>(p.size()) + 1, false);
  for (int pos : lm.positions) {
    placed.insert(p.at(pos));
    keep[static_cast<std::size_t>(p.at(pos))] = true;
  }

  for (int x : p.values()) {
    if (keep[static_cast<std::size_t>(x)]) continue;
    // Increasing: after the largest placed value below x, else before the
    // smallest above it. Decreasing mirrors this.
    auto above = placed.upper_bound(x);
    const bool has_above = above != placed.end();
    const bool has_below = above != placed.begin();
    int dest;
    if (increasing) {
      dest = has_below ? position_of(v, *std::prev(above)) + 1 : position_of(v, *above);
    } else {
      dest = has_above ? position_of(v, *above) + 1 : position_of(v, *std::prev(above));
    }
    const int at = position_of(v, x);
    if (dest != at && dest != at + 1) record(r, v, segment_move(at, at + 1, dest, false), StepCategory::Block);
    placed.insert(x);
  }
  if (!increasing && p.size() >= 2) record(r, v, Move::reverse(0, p.size()), StepCategory::Closing);
  return finish(std::move(r), Algorithm::Monotone, v);
}

}  // namespace cutpaste
