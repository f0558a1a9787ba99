#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutpaste/permutation.hpp"

namespace cutpaste {

/// Refusal to run an exhaustive search above the configured size.
class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleLimit = 8;
inline constexpr int kLongRunOracleLimit = 9;

/// Lehmer-code rank: sum over t of c_t * (n-1-t)!, where c_t counts later
/// entries smaller than pi_t. The identity has rank 0.
std::uint64_t rank(const Permutation& p);
Permutation unrank(int n, std::uint64_t r);
std::uint64_t factorial(int n);

struct DistanceTable {
  int n = 0;
  std::vector<std::uint8_t> distances;  // indexed by rank
  int fmax = 0;
  std::vector<Permutation> witnesses;  // permutations at distance fmax, rank order
  std::size_t witness_total = 0;       // before any cap

  int distance(const Permutation& p) const { return distances.at(static_cast<std::size_t>(rank(p))); }
};

/// Breadth-first search from the identity over canonical moves. The move set
/// is closed under inversion, so these are also distances to the identity.
/// Throws ResourceGuardError when n > limit or limit > 9.
DistanceTable build_table(int n, int limit = kDefaultOracleLimit, std::size_t witness_cap = 1000);

/// Exact distance; tables are memoised per n.
int bfs_distance(const Permutation& p, int limit = kDefaultOracleLimit);

/// `# n=`, `# fmax=`, then `rank,distance` rows.
void write_table_csv(std::ostream& os, const DistanceTable& t);
DistanceTable read_table_csv(std::istream& is);
void write_witnesses(std::ostream& os, const DistanceTable& t);

struct CertificateViolation {
  Permutation p;
  int lower = 0;
  int distance = 0;
  int refined_moves = 0;
};

struct CertificateReport {
  int n = 0;
  std::size_t checked = 0;
  std::vector<CertificateViolation> violations;
  int even_before_odd_distance = 0;
  bool even_before_odd_ok = true;  // distance >= floor(n/2)

  bool ok() const { return violations.empty() && even_before_odd_ok; }
};

/// For every permutation in the table: certificate <= distance <= refined
/// sort moves; and distance(even_before_odd(n)) >= floor(n/2).
CertificateReport verify_certificates(const DistanceTable& t);

}  // namespace cutpaste
