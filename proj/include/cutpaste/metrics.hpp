#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cutpaste/permutation.hpp"

namespace cutpaste {

/// Which values count as consecutive. Circular treats n and 1 as neighbours.
enum class Mode { Circular, Linear };

enum class SegmentKind { Block, Singleton };
enum class Orientation { Increasing, Decreasing, None };

/// Positions are 0-based and half-open: [begin, end).
struct Segment {
  int begin = 0;
  int end = 0;
  SegmentKind kind = SegmentKind::Singleton;
  Orientation orientation = Orientation::None;

  int length() const { return end - begin; }
  bool is_block() const { return kind == SegmentKind::Block; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct BlockDecomposition {
  Mode mode = Mode::Circular;
  std::vector<Segment> segments;
  std::vector<int> segment_of;  // position -> index into segments

  int block_count() const;
  int singleton_count() const;
};

/// successor(v) under the mode, or 0 when it does not exist (linear, v == n).
int successor(int v, int n, Mode mode);
/// predecessor(v) under the mode, or 0 when it does not exist (linear, v == 1).
int predecessor(int v, int n, Mode mode);
bool consecutive(int u, int v, int n, Mode mode);

BlockDecomposition decompose(std::span<const int> values, Mode mode);
BlockDecomposition decompose(const Permutation& p, Mode mode);

/// Weight in thirds: 3 per block plus 2 per singleton.
struct WeightThirds {
  int value = 0;
  friend auto operator<=>(const WeightThirds&, const WeightThirds&) = default;
};

WeightThirds weight(std::span<const int> values, Mode mode);
WeightThirds weight(const Permutation& p, Mode mode);

/// Consecutive positions holding consecutive values under the mode, no sentinels.
int mode_adjacencies(std::span<const int> values, Mode mode);

/// Opposite-parity neighbours in 0, pi_1, ..., pi_n, n+1.
int parity_adjacencies(const Permutation& p);

/// weight(p) - weight(apply_move(p, m)), in thirds.
int gain(const Permutation& p, const Move& m, Mode mode);

struct BoundCertificate {
  int adjacency_bound = 0;  // ceil((n+1 - adjacencies) / 3)
  int parity_bound = 0;     // ceil((n+1 - parity_adjacencies) / 2)
  int best = 0;
};

BoundCertificate certify_lower_bound(const Permutation& p);

/// Largest parity-adjacency increase over all canonical moves.
int max_parity_delta(const Permutation& p);

/// All even values ascending, then all odd values ascending.
Permutation even_before_odd(int n);

/// Minimum attainable parity-adjacency count: 1 for even n, 2 for odd n (n >= 2).
int min_parity_adjacencies(int n);

/// Number of permutations attaining min_parity_adjacencies(n), saturating at UINT64_MAX.
std::uint64_t witness_count(int n);

/// Permutations attaining the minimum parity-adjacency count. Every witness
/// has the shape evens|odds (n even) or evens|odds|evens (n odd). When the
/// total count fits within `limit` they are all listed in lexicographic order;
/// otherwise `limit` distinct witnesses are drawn uniformly with Rng(seed),
/// in draw order.
std::vector<Permutation> hard_witnesses(int n, std::size_t limit, std::uint64_t seed);

}  // namespace cutpaste
