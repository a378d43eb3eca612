#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sextic {

// Largest supported limit; values stay well inside 64 bits.
inline constexpr std::uint64_t kCensusMaxLimit = 10'000'000'000ULL;

struct CensusConfig {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::uint64_t limit = 1'000'000;
  std::vector<std::uint64_t> grid;  // increasing checkpoints <= limit; empty means {limit}
  unsigned workers = 1;
  // Throws std::invalid_argument on limit < 100, limit > kCensusMaxLimit,
  // non-increasing grid, zero workers, or a form that is not positive definite.
  void validate() const;
};

struct Witness {
  std::int64_t m = 0;
  std::int64_t n = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

// Square-free values g(m, n) < limit over coprime m, n >= 1, each with the
// lexicographically smallest (m, n) attaining it.
using ConductorSet = std::map<std::uint64_t, Witness>;

struct CensusPoint {
  std::uint64_t limit = 0;
  std::uint64_t count = 0;
};

struct CensusReport {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::vector<CensusPoint> counts;
  std::optional<double> slope;  // least squares of log count vs log X over nonzero checkpoints
  std::uint64_t bound_m = 0;    // largest m (and n) scanned
  std::uint64_t pairs_scanned = 0;
  unsigned workers = 1;
  double wall_seconds = 0;
  ConductorSet values;
};

// g(m, n) = (9b m^2 + (4a + 27b) n^2)(m^2 + 3n^2).
unsigned __int128 census_form(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n);

// Largest M with min(9b, 4a + 27b) M^4 < limit; every pair with g < limit has
// max(m, n) <= M.
std::uint64_t census_bound(std::int64_t a, std::int64_t b, std::uint64_t limit);

// Trial division by primes up to the cube root, then an exact square test
// on the cofactor (whose prime factors all exceed the cube root).
std::vector<bool> squarefree_batch(const std::vector<std::uint64_t>& values);

ConductorSet enumerate_conductors(std::int64_t a, std::int64_t b, std::uint64_t limit, unsigned workers = 1);
std::set<std::uint64_t> conductor_values(const ConductorSet& s);

// Least squares slope of log count against log X. Requires at least three
// points with nonzero counts.
double growth_fit(const std::vector<CensusPoint>& points);

CensusReport run_census(const CensusConfig& config);

// Columns X, count, slope_so_far (blank until two nonzero counts exist).
void write_census_csv(std::ostream& os, const CensusReport& report);

}  // namespace sextic
