#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cutpaste {

/// Raised for malformed user input: bad permutations, illegal moves, bad traces.
/// `position()` is the 1-based token, move or line index of the first offense
/// when one is known.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what, std::optional<std::size_t> position = std::nullopt)
      : std::invalid_argument(what), position_(position) {}
  std::optional<std::size_t> position() const { return position_; }

 private:
  std::optional<std::size_t> position_;
};

/// A bijective arrangement of 1..n. Immutable after construction.
class Permutation {
 public:
  /// Validates bijectivity onto {1..n}; throws InputError naming the first bad index.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  std::span<const int> values() const { return values_; }
  const std::vector<int>& vector() const { return values_; }

  /// 1-based access, matching the usual pi_1..pi_n subscripting.
  int at(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

enum class Variant : std::uint8_t {
  Swap,          // X B A Y
  SwapRevLeft,   // X B rev(A) Y
  SwapRevRight,  // X rev(B) A Y
  Reverse,       // X rev(A) Y, encoded with j == k
};

std::string_view to_string(Variant v);
/// Accepts the trace keywords swap, swaprl, swaprr, rev.
std::optional<Variant> parse_variant(std::string_view text);

/// Three cut points (gaps 0..n between positions) plus the form to apply.
/// With X = [1,i], A = (i,j], B = (j,k], Y = (k,n].
struct Move {
  int i = 0;
  int j = 0;
  int k = 0;
  Variant variant = Variant::Swap;

  static Move reverse(int i, int k) { return {i, k, k, Variant::Reverse}; }

  friend bool operator==(const Move&, const Move&) = default;
};

/// True iff the cut points are legal for length n: 0 <= i < j < k <= n for the
/// swap forms, i < k == j with k - i >= 2 for Reverse.
bool is_legal(const Move& m, int n);

/// Throws InputError when !is_legal(m, p.size()).
Permutation apply_move(const Permutation& p, const Move& m);

/// In-place variant on a raw value buffer; no validation beyond is_legal.
void apply_move_inplace(std::vector<int>& values, const Move& m);

/// Canonical move set: swap forms for i < j < k, then Reverse for k - i >= 2.
std::vector<Move> enumerate_moves(int n);

/// 3*C(n+1,3) + C(n+1,2) - n.
std::size_t canonical_move_count(int n);

/// Pairs {v, v+1} in consecutive positions of 0, pi_1, ..., pi_n, n+1.
int adjacencies(const Permutation& p);

bool is_identity(const Permutation& p);
bool is_identity(std::span<const int> values);

Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);
std::string format_values(std::span<const int> values);

/// Seeded generator with a fixed, portable bounded draw. The standard
/// distributions are implementation-defined, so they are not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound): rejects raw draws below (2^64 mod bound), then
  /// reduces modulo bound.
  std::uint64_t below(std::uint64_t bound);

  /// Fisher-Yates: for t = size-1 down to 1, swap slot t with slot below(t+1).
  void shuffle(std::span<int> values);

 private:
  std::mt19937_64 engine_;
};

/// Identity shuffled by Rng(seed).shuffle.
Permutation random_permutation(int n, std::uint64_t seed);

}  // namespace cutpaste
