#include "sextic/census.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "sextic/factor.hpp"

namespace sextic {

namespace {

using u128 = unsigned __int128;

bool is_perfect_square(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v;
}

std::uint64_t icbrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(v)));
  while (r > 0 && r * r * r > v) --r;
  while ((r + 1) * (r + 1) * (r + 1) <= v) ++r;
  return r;
}

bool squarefree_one(std::uint64_t v, const std::vector<std::uint32_t>& primes) {
  if (v == 0) return false;
  const std::uint64_t lim = icbrt(v);
  if (lim > primes.back()) return is_squarefree(BigInt(std::to_string(v)));
  for (std::uint32_t p : primes) {
    if (p > lim) break;
    if (v % p == 0) {
      v /= p;
      if (v % p == 0) return false;
    }
  }
  return v == 1 || !is_perfect_square(v);
}

std::optional<double> slope_of(const std::vector<CensusPoint>& points) {
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : points) {
    if (p.count > 0) xy.emplace_back(std::log(static_cast<double>(p.limit)), std::log(static_cast<double>(p.count)));
  }
  if (xy.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (const auto& [x, y] : xy) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(xy.size());
  my /= static_cast<double>(xy.size());
  double sxy = 0, sxx = 0;
  for (const auto& [x, y] : xy) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

// Scan m = first, first + stride, ... and return the square-free hits.
ConductorSet scan_stripe(std::int64_t a, std::int64_t b, std::uint64_t limit, std::uint64_t bound,
                         std::uint64_t first, std::uint64_t stride, std::uint64_t& pairs) {
  ConductorSet out;
  std::vector<std::uint64_t> values;
  std::vector<Witness> who;
  for (std::uint64_t m = first; m <= bound; m += stride) {
    for (std::uint64_t n = 1; n <= bound; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      const u128 g = census_form(a, b, static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
      if (g >= limit) continue;
      values.push_back(static_cast<std::uint64_t>(g));
      who.push_back({static_cast<std::int64_t>(m), static_cast<std::int64_t>(n)});
    }
  }
  const auto sf = squarefree_batch(values);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!sf[i]) continue;
    auto [it, inserted] = out.emplace(values[i], who[i]);
    if (!inserted && std::make_pair(who[i].m, who[i].n) < std::make_pair(it->second.m, it->second.n)) {
      it->second = who[i];
    }
  }
  return out;
}

}  // namespace

void CensusConfig::validate() const {
  if (limit < 100) throw std::invalid_argument("census: limit must be at least 100");
  if (limit > kCensusMaxLimit) throw std::invalid_argument("census: limit above 1e10 is not supported");
  if (workers == 0) throw std::invalid_argument("census: workers must be positive");
  if (b <= 0 || 4 * a + 27 * b <= 0) {
    throw std::invalid_argument("census: 9b m^2 + (4a + 27b) n^2 must be positive definite (b > 0, 4a + 27b > 0)");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] > limit) throw std::invalid_argument("census: grid checkpoint exceeds the limit");
    if (i > 0 && grid[i] <= grid[i - 1]) throw std::invalid_argument("census: grid must be increasing");
  }
}

unsigned __int128 census_form(std::int64_t a, std::int64_t b, std::int64_t m, std::int64_t n) {
  using i128 = __int128;
  const i128 M = m, N = n;
  const i128 q = 9 * i128(b) * M * M + (4 * i128(a) + 27 * i128(b)) * N * N;
  const i128 c = M * M + 3 * N * N;
  const i128 g = q * c;
  if (g < 0) throw std::domain_error("census_form: negative value");
  return static_cast<u128>(g);
}

std::uint64_t census_bound(std::int64_t a, std::int64_t b, std::uint64_t limit) {
  const std::int64_t c = std::min<std::int64_t>(9 * b, 4 * a + 27 * b);
  if (c <= 0) throw std::invalid_argument("census_bound: form is not positive definite");
  std::uint64_t M = 0;
  while (true) {
    const u128 next = M + 1;
    if (u128(c) * next * next * next * next >= limit) break;
    ++M;
  }
  return M;
}

std::vector<bool> squarefree_batch(const std::vector<std::uint64_t>& values) {
  const auto& primes = small_primes();
  std::vector<bool> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = squarefree_one(values[i], primes);
  return out;
}

ConductorSet enumerate_conductors(std::int64_t a, std::int64_t b, std::uint64_t limit, unsigned workers) {
  CensusConfig cfg;
  cfg.a = a;
  cfg.b = b;
  cfg.limit = limit;
  cfg.workers = workers;
  return run_census(cfg).values;
}

std::set<std::uint64_t> conductor_values(const ConductorSet& s) {
  std::set<std::uint64_t> out;
  for (const auto& kv : s) out.insert(kv.first);
  return out;
}

double growth_fit(const std::vector<CensusPoint>& points) {
  const auto nonzero = std::count_if(points.begin(), points.end(), [](const CensusPoint& p) { return p.count > 0; });
  if (nonzero < 3) throw std::invalid_argument("growth_fit: need at least three nonzero checkpoints");
  const auto s = slope_of(points);
  if (!s) throw std::invalid_argument("growth_fit: checkpoints do not span a range of X");
  return *s;
}

CensusReport run_census(const CensusConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  small_primes();  // build the shared table before threads start

  CensusReport report;
  report.a = config.a;
  report.b = config.b;
  report.workers = config.workers;
  report.bound_m = census_bound(config.a, config.b, config.limit);

  const unsigned w = config.workers;
  std::vector<ConductorSet> parts(w);
  std::vector<std::uint64_t> pairs(w, 0);
  if (w == 1) {
    parts[0] = scan_stripe(config.a, config.b, config.limit, report.bound_m, 1, 1, pairs[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned i = 0; i < w; ++i) {
      threads.emplace_back([&, i] {
        parts[i] = scan_stripe(config.a, config.b, config.limit, report.bound_m, 1 + i, w, pairs[i]);
      });
    }
    for (auto& t : threads) t.join();
  }
  // The merge keeps the smallest witness, so the result does not depend on
  // the partition.
  for (unsigned i = 0; i < w; ++i) {
    report.pairs_scanned += pairs[i];
    for (const auto& [v, wit] : parts[i]) {
      auto [it, inserted] = report.values.emplace(v, wit);
      if (!inserted && std::make_pair(wit.m, wit.n) < std::make_pair(it->second.m, it->second.n)) it->second = wit;
    }
  }

  std::vector<std::uint64_t> grid = config.grid;
  if (grid.empty()) grid.push_back(config.limit);
  for (std::uint64_t x : grid) {
    const auto count = static_cast<std::uint64_t>(
        std::distance(report.values.begin(), report.values.lower_bound(x)));
    report.counts.push_back({x, count});
  }
  const auto nonzero =
      std::count_if(report.counts.begin(), report.counts.end(), [](const CensusPoint& p) { return p.count > 0; });
  if (nonzero >= 3) report.slope = slope_of(report.counts);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_census_csv(std::ostream& os, const CensusReport& report) {
  os << "X,count,slope_so_far\n";
  std::vector<CensusPoint> seen;
  for (const auto& p : report.counts) {
    seen.push_back(p);
    os << p.limit << ',' << p.count << ',';
    if (const auto s = slope_of(seen)) os << *s;
    os << '\n';
  }
}

}  // namespace sextic
