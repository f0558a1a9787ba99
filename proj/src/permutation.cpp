#include "cutpaste/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace cutpaste {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0) throw InputError("permutation is empty");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t t = 0; t < n; ++t) {
    const int v = values_[t];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw InputError("value " + std::to_string(v) + " out of range for n=" + std::to_string(n), t + 1);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw InputError("duplicate value " + std::to_string(v), t + 1);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t t = 0; t < values_.size(); ++t) inv[static_cast<std::size_t>(values_[t] - 1)] = static_cast<int>(t + 1);
  return Permutation(std::move(inv));
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Swap: return "swap";
    case Variant::SwapRevLeft: return "swaprl";
    case Variant::SwapRevRight: return "swaprr";
    case Variant::Reverse: return "rev";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "swap") return Variant::Swap;
  if (text == "swaprl") return Variant::SwapRevLeft;
  if (text == "swaprr") return Variant::SwapRevRight;
  if (text == "rev") return Variant::Reverse;
  return std::nullopt;
}

bool is_legal(const Move& m, int n) {
  if (m.i < 0 || m.k > n) return false;
  if (m.variant == Variant::Reverse) return m.j == m.k && m.k - m.i >= 2;
  return m.i < m.j && m.j < m.k;
}

void apply_move_inplace(std::vector<int>& values, const Move& m) {
  auto first = values.begin();
  auto a = first + m.i;
  auto b = first + m.j;
  auto y = first + m.k;
  switch (m.variant) {
    case Variant::Reverse:
      std::reverse(a, y);
      return;
    case Variant::Swap:
      std::rotate(a, b, y);
      return;
    case Variant::SwapRevLeft:
      std::reverse(a, b);
      std::rotate(a, b, y);
      return;
    case Variant::SwapRevRight:
      std::reverse(b, y);
      std::rotate(a, b, y);
      return;
  }
}

Permutation apply_move(const Permutation& p, const Move& m) {
  if (!is_legal(m, p.size())) {
    std::ostringstream os;
    os << "illegal move " << m.i << ' ' << m.j << ' ' << m.k << ' ' << to_string(m.variant) << " for n=" << p.size();
    throw InputError(os.str());
  }
  std::vector<int> v = p.vector();
  apply_move_inplace(v, m);
  return Permutation(std::move(v));
}

std::size_t canonical_move_count(int n) {
  const auto c = static_cast<std::size_t>(n) + 1;
  const std::size_t triples = c * (c - 1) * (c - 2) / 6;
  const std::size_t pairs = c * (c - 1) / 2;
  return 3 * triples + pairs - static_cast<std::size_t>(n);
}

std::vector<Move> enumerate_moves(int n) {
  std::vector<Move> moves;
  moves.reserve(canonical_move_count(n));
  for (Variant v : {Variant::Swap, Variant::SwapRevLeft, Variant::SwapRevRight}) {
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) moves.push_back({i, j, k, v});
  }
  for (int i = 0; i <= n; ++i)
    for (int k = i + 2; k <= n; ++k) moves.push_back(Move::reverse(i, k));
  return moves;
}

int adjacencies(const Permutation& p) {
  const auto v = p.values();
  const int n = p.size();
  int count = 0;
  int prev = 0;
  for (int t = 0; t <= n; ++t) {
    const int cur = t < n ? v[static_cast<std::size_t>(t)] : n + 1;
    if (cur - prev == 1 || prev - cur == 1) ++count;
    prev = cur;
  }
  return count;
}

bool is_identity(std::span<const int> values) {
  for (std::size_t t = 0; t < values.size(); ++t)
    if (values[t] != static_cast<int>(t + 1)) return false;
  return true;
}

bool is_identity(const Permutation& p) { return is_identity(p.values()); }

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t token = 0;
  std::size_t at = 0;
  while (at < text.size()) {
    while (at < text.size() && (text[at] == ' ' || text[at] == '\t' || text[at] == '\r' || text[at] == '\n')) ++at;
    if (at >= text.size()) break;
    std::size_t end = at;
    while (end < text.size() && !(text[end] == ' ' || text[end] == '\t' || text[end] == '\r' || text[end] == '\n')) ++end;
    ++token;
    int value = 0;
    const auto* b = text.data() + at;
    const auto* e = text.data() + end;
    auto [ptr, ec] = std::from_chars(b, e, value);
    if (ec != std::errc() || ptr != e || value < 1) {
      throw InputError("token '" + std::string(text.substr(at, end - at)) + "' is not a positive integer", token);
    }
    values.push_back(value);
    at = end;
  }
  if (values.empty()) throw InputError("permutation is empty");
  return Permutation(std::move(values));
}

std::string format_values(std::span<const int> values) {
  std::string out;
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (t) out.push_back(' ');
    out += std::to_string(values[t]);
  }
  return out;
}

std::string format_permutation(const Permutation& p) { return format_values(p.values()); }

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

void Rng::shuffle(std::span<int> values) {
  for (std::size_t t = values.size(); t > 1; --t) {
    const auto slot = static_cast<std::size_t>(below(t));
    std::swap(values[t - 1], values[slot]);
  }
}

Permutation random_permutation(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("n must be positive");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  Rng(seed).shuffle(v);
  return Permutation(std::move(v));
}

}  // namespace cutpaste
