#include "cutpaste/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace cutpaste {

int successor(int v, int n, Mode mode) {
  if (v < n) return v + 1;
  return mode == Mode::Circular ? 1 : 0;
}

int predecessor(int v, int n, Mode mode) {
  if (v > 1) return v - 1;
  return mode == Mode::Circular ? n : 0;
}

bool consecutive(int u, int v, int n, Mode mode) {
  return successor(u, n, mode) == v || successor(v, n, mode) == u;
}

int BlockDecomposition::block_count() const {
  return static_cast<int>(std::count_if(segments.begin(), segments.end(), [](const Segment& s) { return s.is_block(); }));
}

int BlockDecomposition::singleton_count() const {
  return static_cast<int>(segments.size()) - block_count();
}

BlockDecomposition decompose(std::span<const int> values, Mode mode) {
  const int n = static_cast<int>(values.size());
  BlockDecomposition d;
  d.mode = mode;
  d.segment_of.resize(values.size());
  int t = 0;
  while (t < n) {
    Segment s{t, t + 1, SegmentKind::Singleton, Orientation::None};
    if (t + 1 < n && consecutive(values[t], values[t + 1], n, mode)) {
      const bool up = successor(values[t], n, mode) == values[t + 1];
      s.kind = SegmentKind::Block;
      s.orientation = up ? Orientation::Increasing : Orientation::Decreasing;
      s.end = t + 2;
      while (s.end < n) {
        const int prev = values[s.end - 1];
        const int next = up ? successor(prev, n, mode) : predecessor(prev, n, mode);
        if (values[s.end] != next) break;
        ++s.end;
      }
    }
    for (int q = s.begin; q < s.end; ++q) d.segment_of[q] = static_cast<int>(d.segments.size());
    d.segments.push_back(s);
    t = s.end;
  }
  return d;
}

BlockDecomposition decompose(const Permutation& p, Mode mode) { return decompose(p.values(), mode); }

WeightThirds weight(std::span<const int> values, Mode mode) {
  const auto d = decompose(values, mode);
  return {3 * d.block_count() + 2 * d.singleton_count()};
}

WeightThirds weight(const Permutation& p, Mode mode) { return weight(p.values(), mode); }

int mode_adjacencies(std::span<const int> values, Mode mode) {
  const int n = static_cast<int>(values.size());
  int count = 0;
  for (int t = 0; t + 1 < n; ++t)
    if (consecutive(values[t], values[t + 1], n, mode)) ++count;
  return count;
}

int parity_adjacencies(const Permutation& p) {
  const int n = p.size();
  const auto v = p.values();
  int count = 0;
  int prev = 0;
  for (int t = 0; t <= n; ++t) {
    const int cur = t < n ? v[static_cast<std::size_t>(t)] : n + 1;
    if ((cur ^ prev) & 1) ++count;
    prev = cur;
  }
  return count;
}

int gain(const Permutation& p, const Move& m, Mode mode) {
  return weight(p, mode).value - weight(apply_move(p, m), mode).value;
}

BoundCertificate certify_lower_bound(const Permutation& p) {
  const int n = p.size();
  BoundCertificate c;
  const int missing_adj = n + 1 - adjacencies(p);
  const int missing_par = n + 1 - parity_adjacencies(p);
  c.adjacency_bound = (missing_adj + 2) / 3;
  c.parity_bound = (missing_par + 1) / 2;
  c.best = std::max(c.adjacency_bound, c.parity_bound);
  return c;
}

int max_parity_delta(const Permutation& p) {
  const int base = parity_adjacencies(p);
  int best = std::numeric_limits<int>::min();
  std::vector<int> work;
  for (const Move& m : enumerate_moves(p.size())) {
    work = p.vector();
    apply_move_inplace(work, m);
    best = std::max(best, parity_adjacencies(Permutation(work)) - base);
  }
  return best == std::numeric_limits<int>::min() ? 0 : best;
}

Permutation even_before_odd(int n) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int x = 2; x <= n; x += 2) v.push_back(x);
  for (int x = 1; x <= n; x += 2) v.push_back(x);
  return Permutation(std::move(v));
}

int min_parity_adjacencies(int n) { return n % 2 == 0 ? 1 : 2; }

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int x = 2; x <= k; ++x) f = saturating_mul(f, static_cast<std::uint64_t>(x));
  return f;
}

std::vector<int> evens_of(int n) {
  std::vector<int> v;
  for (int x = 2; x <= n; x += 2) v.push_back(x);
  return v;
}

std::vector<int> odds_of(int n) {
  std::vector<int> v;
  for (int x = 1; x <= n; x += 2) v.push_back(x);
  return v;
}

// Odd n: evens[0, split) | odds | evens[split, k). Even n ignores split.
Permutation assemble(int n, const std::vector<int>& evens, const std::vector<int>& odds, std::size_t split) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  if (n % 2 == 0) split = evens.size();
  v.insert(v.end(), evens.begin(), evens.begin() + static_cast<std::ptrdiff_t>(split));
  v.insert(v.end(), odds.begin(), odds.end());
  v.insert(v.end(), evens.begin() + static_cast<std::ptrdiff_t>(split), evens.end());
  return Permutation(std::move(v));
}

std::vector<Permutation> all_witnesses(int n) {
  std::vector<Permutation> out;
  auto evens = evens_of(n);
  const std::size_t splits = n % 2 == 0 ? 1 : evens.size() + 1;
  do {
    auto odds = odds_of(n);
    do {
      for (std::size_t s = 0; s < splits; ++s) out.push_back(assemble(n, evens, odds, s));
    } while (std::next_permutation(odds.begin(), odds.end()));
  } while (std::next_permutation(evens.begin(), evens.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t witness_count(int n) {
  const int evens = n / 2;
  const int odds = n - evens;
  std::uint64_t count = saturating_mul(factorial(evens), factorial(odds));
  if (n % 2 == 1) count = saturating_mul(count, static_cast<std::uint64_t>(evens + 1));
  return count;
}

std::vector<Permutation> hard_witnesses(int n, std::size_t limit, std::uint64_t seed) {
  if (n < 1) throw InputError("n must be positive");
  if (limit == 0) return {};
  const std::uint64_t count = witness_count(n);
  if (count <= limit) return all_witnesses(n);

  Rng rng(seed);
  // A pool a few times larger than the request is cheap to list and lets us
  // take a uniform distinct subset without a long rejection tail.
  constexpr std::uint64_t kListable = 1u << 20;
  if (count <= kListable && count <= 4 * static_cast<std::uint64_t>(limit)) {
    auto all = all_witnesses(n);
    std::vector<int> order(all.size());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<Permutation> out;
    for (std::size_t t = 0; t < limit; ++t) out.push_back(all[static_cast<std::size_t>(order[t])]);
    return out;
  }

  std::vector<Permutation> out;
  std::set<Permutation> seen;
  auto evens = evens_of(n);
  auto odds = odds_of(n);
  while (out.size() < limit) {
    rng.shuffle(evens);
    rng.shuffle(odds);
    const std::size_t split = n % 2 == 0 ? 0 : static_cast<std::size_t>(rng.below(evens.size() + 1));
    Permutation p = assemble(n, evens, odds, split);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace cutpaste
