#include "cutpaste/oracle.hpp"

#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "cutpaste/metrics.hpp"
#include "cutpaste/sorter.hpp"

namespace cutpaste {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int x = 2; x <= n; ++x) f *= static_cast<std::uint64_t>(x);
  return f;
}

namespace {

std::uint64_t rank_values(const int* v, int n) {
  std::uint64_t r = 0;
  for (int t = 0; t < n; ++t) {
    int smaller = 0;
    for (int u = t + 1; u < n; ++u)
      if (v[u] < v[t]) ++smaller;
    r = r * static_cast<std::uint64_t>(n - t) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

void check_guard(int n, int limit) {
  if (limit > kLongRunOracleLimit) limit = kLongRunOracleLimit;
  if (n > limit) {
    throw ResourceGuardError("exhaustive search refused for n=" + std::to_string(n) + " (limit n<=" + std::to_string(limit) +
                             (limit < kLongRunOracleLimit ? ", n=9 needs --allow-n9)" : ")"));
  }
}

}  // namespace

std::uint64_t rank(const Permutation& p) { return rank_values(p.values().data(), p.size()); }

Permutation unrank(int n, std::uint64_t r) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int t = n - 1; t >= 0; --t) {
    const auto base = static_cast<std::uint64_t>(n - t);
    digits[static_cast<std::size_t>(t)] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) pool[static_cast<std::size_t>(t)] = t + 1;
  std::vector<int> out;
  for (int t = 0; t < n; ++t) {
    const auto at = pool.begin() + digits[static_cast<std::size_t>(t)];
    out.push_back(*at);
    pool.erase(at);
  }
  return Permutation(std::move(out));
}

DistanceTable build_table(int n, int limit, std::size_t witness_cap) {
  if (n < 1) throw InputError("n must be positive");
  check_guard(n, limit);
  const std::uint64_t states = factorial(n);
  constexpr std::uint8_t kUnseen = 0xff;
  DistanceTable t;
  t.n = n;
  t.distances.assign(states, kUnseen);

  const auto moves = enumerate_moves(n);
  // Each move as a gather map: after[x] = before[map[x]].
  std::vector<std::vector<int>> maps;
  maps.reserve(moves.size());
  for (const Move& m : moves) {
    std::vector<int> map(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) map[static_cast<std::size_t>(x)] = x;
    apply_move_inplace(map, m);
    maps.push_back(std::move(map));
  }

  std::vector<std::uint64_t> frontier{0};
  t.distances[0] = 0;
  int depth = 0;
  std::vector<int> cur(static_cast<std::size_t>(n)), next(static_cast<std::size_t>(n));
  while (!frontier.empty()) {
    std::vector<std::uint64_t> upcoming;
    for (std::uint64_t r : frontier) {
      const Permutation p = unrank(n, r);
      for (const auto& map : maps) {
        for (int x = 0; x < n; ++x) next[static_cast<std::size_t>(x)] = p.values()[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])];
        const std::uint64_t nr = rank_values(next.data(), n);
        if (t.distances[nr] == kUnseen) {
          t.distances[nr] = static_cast<std::uint8_t>(depth + 1);
          upcoming.push_back(nr);
        }
      }
    }
    if (upcoming.empty()) break;
    ++depth;
    frontier = std::move(upcoming);
  }
  t.fmax = depth;
  for (std::uint64_t r = 0; r < states; ++r) {
    if (t.distances[r] != t.fmax) continue;
    ++t.witness_total;
    if (t.witnesses.size() < witness_cap) t.witnesses.push_back(unrank(n, r));
  }
  return t;
}

int bfs_distance(const Permutation& p, int limit) {
  check_guard(p.size(), limit);
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const DistanceTable>> cache;
  std::shared_ptr<const DistanceTable> table;
  {
    std::lock_guard lock(mu);
    auto& slot = cache[p.size()];
    if (!slot) slot = std::make_shared<const DistanceTable>(build_table(p.size(), kLongRunOracleLimit, 0));
    table = slot;
  }
  return table->distance(p);
}

void write_table_csv(std::ostream& os, const DistanceTable& t) {
  os << "# n=" << t.n << '\n' << "# fmax=" << t.fmax << '\n' << "rank,distance\n";
  for (std::size_t r = 0; r < t.distances.size(); ++r) os << r << ',' << static_cast<int>(t.distances[r]) << '\n';
}

void write_witnesses(std::ostream& os, const DistanceTable& t) {
  for (const auto& w : t.witnesses) os << format_permutation(w) << '\n';
}

DistanceTable read_table_csv(std::istream& is) {
  DistanceTable t;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line.rfind("# n=", 0) == 0) {
      t.n = std::stoi(line.substr(4));
    } else if (line.rfind("# fmax=", 0) == 0) {
      t.fmax = std::stoi(line.substr(7));
    } else if (line[0] == '#') {
      continue;
    } else if (!header) {
      if (line != "rank,distance") throw InputError("expected header rank,distance", lineno);
      header = true;
    } else {
      const auto comma = line.find(',');
      if (comma == std::string::npos) throw InputError("malformed row", lineno);
      const auto r = std::stoull(line.substr(0, comma));
      if (r != t.distances.size()) throw InputError("rows out of rank order", lineno);
      t.distances.push_back(static_cast<std::uint8_t>(std::stoi(line.substr(comma + 1))));
    }
  }
  if (t.n < 1 || t.distances.size() != factorial(t.n)) throw InputError("table is incomplete");
  for (std::uint64_t r = 0; r < t.distances.size(); ++r) {
    if (t.distances[r] != t.fmax) continue;
    ++t.witness_total;
    t.witnesses.push_back(unrank(t.n, r));
  }
  return t;
}

CertificateReport verify_certificates(const DistanceTable& t) {
  CertificateReport report;
  report.n = t.n;
  for (std::uint64_t r = 0; r < t.distances.size(); ++r) {
    const Permutation p = unrank(t.n, r);
    const int d = t.distances[r];
    const int lower = certify_lower_bound(p).best;
    const int refined = sort_refined(p).move_count;
    ++report.checked;
    if (lower > d || d > refined) report.violations.push_back({p, lower, d, refined});
  }
  report.even_before_odd_distance = t.distance(even_before_odd(t.n));
  report.even_before_odd_ok = report.even_before_odd_distance >= t.n / 2;
  return report;
}

}  // namespace cutpaste
