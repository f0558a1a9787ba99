#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cutpaste/metrics.hpp"
#include "cutpaste/permutation.hpp"
#include "cutpaste/trace.hpp"

namespace cutpaste {

/// A broken internal guarantee (a case with no applicable move, or a measured
/// gain below its category's floor). Always a bug; carries the input that
/// triggered it so the run can be reproduced.
class InvariantError : public std::logic_error {
 public:
  InvariantError(const std::string& what, std::vector<int> offending)
      : std::logic_error(what), offending_(std::move(offending)) {}
  const std::vector<int>& offending() const { return offending_; }

 private:
  std::vector<int> offending_;
};

enum class Algorithm { Basic, Refined, Insertion, Monotone };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view text);

/// Guaranteed move bound: floor(2n/3)+1, floor(2n/3), n-1, n-ceil(sqrt n)+1.
int sort_bound(Algorithm a, int n);

/// Smallest L with L*L >= n.
int ceil_sqrt(int n);

struct SortStep {
  std::vector<Move> moves;
  StepCategory category = StepCategory::Block;
  int claimed_gain = 0;  // thirds, measured on the input of the step
};

struct SortResult {
  Trace trace;
  int move_count = 0;
  int bound = 0;
  std::map<StepCategory, int> category_histogram;
};

/// One main-loop step for a permutation that starts with an increasing block
/// (starting at value 1 in Linear mode) and is not yet a single block.
/// Case order: block move, bonus move, block move around B,
/// absorbing move followed by an extra bonus move. The measured gain is
/// checked against the category floor; shortfalls throw InvariantError.
SortStep plan_step(const Permutation& p, Mode mode);

/// At most floor(2n/3)+1 moves using the circular value convention.
SortResult sort_basic(const Permutation& p);

/// At most floor(2n/3) moves: keeps 1 in front and never needs the final
/// rotation.
SortResult sort_refined(const Permutation& p);

/// At most n-1 moves.
SortResult sort_insertion(const Permutation& p);

/// Grows a longest monotone subsequence; at most n - L + 1 moves.
SortResult sort_monotone(const Permutation& p);

SortResult sort_with(Algorithm a, const Permutation& p);

struct MonotoneSubsequence {
  Orientation orientation = Orientation::Increasing;
  std::vector<int> positions;  // 1-based, ascending
};

/// Maximum-length increasing or decreasing subsequence. Ties prefer
/// increasing, then the lexicographically smallest position sequence.
MonotoneSubsequence longest_monotone(const Permutation& p);

}  // namespace cutpaste
