#pragma once

#include "cutpaste/permutation.hpp"

namespace cutpaste::detail {

// Moves positions [s, e) (0-based) to cut point d, which lies outside (s, e),
// optionally reversing the moved string. d == s or d == e means in place.
inline Move segment_move(int s, int e, int d, bool reversed) {
  if (d == s || d == e) return Move::reverse(s, e);
  if (d < s) return {d, s, e, reversed ? Variant::SwapRevRight : Variant::Swap};
  return {s, e, d, reversed ? Variant::SwapRevLeft : Variant::Swap};
}

}  // namespace cutpaste::detail
