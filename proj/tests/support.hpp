#pragma once

// Test-side generators and brute-force oracles. Nothing here calls into the
// library's own move or metric code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <vector>

#include "cutpaste/permutation.hpp"

namespace testing_support {

// splitmix64; independent of the library's generator.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Slightly biased for huge bounds; irrelevant at test sizes.
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  std::vector<int> permutation(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    for (int t = n - 1; t > 0; --t) std::swap(v[static_cast<std::size_t>(t)], v[static_cast<std::size_t>(uniform(0, t))]);
    return v;
  }

  // A uniformly chosen canonical move for length n >= 2.
  cutpaste::Move move(int n) {
    for (;;) {
      const int kind = uniform(0, 3);
      if (kind == 3) {
        const int i = uniform(0, n - 2);
        const int k = uniform(i + 2, n);
        return cutpaste::Move::reverse(i, k);
      }
      int c[3] = {uniform(0, n), uniform(0, n), uniform(0, n)};
      std::sort(c, c + 3);
      if (c[0] == c[1] || c[1] == c[2]) continue;
      return {c[0], c[1], c[2], static_cast<cutpaste::Variant>(kind)};
    }
  }

 private:
  std::uint64_t state_;
};

// Rebuilds the result by slicing the four pieces explicitly.
inline std::vector<int> splice(const std::vector<int>& v, const cutpaste::Move& m) {
  auto piece = [&](int a, int b) { return std::vector<int>(v.begin() + a, v.begin() + b); };
  const int n = static_cast<int>(v.size());
  std::vector<int> X = piece(0, m.i), Y = piece(m.k, n), out;
  auto append = [&](std::vector<int> s, bool rev) {
    if (rev) std::reverse(s.begin(), s.end());
    out.insert(out.end(), s.begin(), s.end());
  };
  append(X, false);
  if (m.variant == cutpaste::Variant::Reverse) {
    append(piece(m.i, m.k), true);
  } else {
    const auto A = piece(m.i, m.j), B = piece(m.j, m.k);
    append(B, m.variant == cutpaste::Variant::SwapRevRight);
    append(A, m.variant == cutpaste::Variant::SwapRevLeft);
  }
  append(Y, false);
  return out;
}

inline std::vector<int> extended(const std::vector<int>& v) {
  std::vector<int> e{0};
  e.insert(e.end(), v.begin(), v.end());
  e.push_back(static_cast<int>(v.size()) + 1);
  return e;
}

inline int count_adjacent(const std::vector<int>& v) {
  const auto e = extended(v);
  int c = 0;
  for (std::size_t t = 0; t + 1 < e.size(); ++t) c += std::abs(e[t] - e[t + 1]) == 1;
  return c;
}

inline int count_parity(const std::vector<int>& v) {
  const auto e = extended(v);
  int c = 0;
  for (std::size_t t = 0; t + 1 < e.size(); ++t) c += (e[t] + e[t + 1]) % 2 != 0;
  return c;
}

// Longest monotone subsequence length by trying every subset.
inline int brute_monotone_length(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int t = 0; t < n; ++t)
      if (mask & (1u << t)) s.push_back(v[static_cast<std::size_t>(t)]);
    if (std::is_sorted(s.begin(), s.end()) || std::is_sorted(s.rbegin(), s.rend())) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do f(v);
  while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace testing_support
