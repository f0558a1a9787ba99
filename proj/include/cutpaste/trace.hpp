#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cutpaste/permutation.hpp"

namespace cutpaste {

enum class StepCategory {
  Opening,
  Block,
  Bonus,
  ExtraBonus,
  AbsorbingPair,
  Closing,
  SpecialOpening,
};

std::string_view to_string(StepCategory c);
std::optional<StepCategory> parse_category(std::string_view text);

/// Groups `count` consecutive moves starting at `first_move` into one sorter step.
struct StepAnnotation {
  std::size_t first_move = 0;
  std::size_t count = 0;
  StepCategory category = StepCategory::Block;
  int gain_thirds = 0;

  friend bool operator==(const StepAnnotation&, const StepAnnotation&) = default;
};

struct Trace {
  Permutation initial;
  std::vector<Move> moves;
  std::vector<StepAnnotation> steps;  // optional; empty for hand-written traces

  explicit Trace(Permutation init) : initial(std::move(init)) {}
};

/// Folds apply_move over the trace. An illegal move throws InputError whose
/// position is the 1-based index of the offending move.
Permutation replay(const Trace& t);

/// Text form:
///   n <n>
///   init <v1> ... <vn>
///   # step <category> gain=<thirds>
///   move <i> <j> <k> <swap|swaprl|swaprr|rev>
/// Lines starting with '#' are comments; `# step` comments are read back as
/// annotations when present.
void write_trace(std::ostream& os, const Trace& t);
std::string format_trace(const Trace& t);

/// Throws InputError with the 1-based line number of the first malformed line.
Trace read_trace(std::istream& is);
Trace parse_trace(std::string_view text);

}  // namespace cutpaste
