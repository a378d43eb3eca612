#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sextic/census.hpp"

using namespace sextic;

TEST_CASE("census form and bound") {
  CHECK(census_form(1, 1, 2, 1) == 469);
  CHECK(census_form(1, 1, 1, 1) == 160);
  const std::uint64_t M = census_bound(1, 1, 1'000'000);
  // min(9b, 4a + 27b) = 9: 9 M^4 < 10^6 <= 9 (M + 1)^4.
  CHECK(9 * M * M * M * M < 1'000'000);
  CHECK(9 * (M + 1) * (M + 1) * (M + 1) * (M + 1) >= 1'000'000);
}

TEST_CASE("square-free batch") {
  CHECK(squarefree_batch({469, 160, 1}) == std::vector<bool>{true, false, true});
  CHECK(squarefree_batch({4}) == std::vector<bool>{false});
  CHECK(squarefree_batch({1000003ULL * 999983ULL}) == std::vector<bool>{true});
  CHECK(squarefree_batch({1000003ULL * 1000003ULL}) == std::vector<bool>{false});
  CHECK(squarefree_batch({9'999'999'967ULL}) == std::vector<bool>{true});  // prime
  // Agreement with naive trial division on a range.
  std::vector<std::uint64_t> vals;
  for (std::uint64_t v = 1; v <= 5000; ++v) vals.push_back(v);
  const auto got = squarefree_batch(vals);
  for (std::uint64_t v = 1; v <= 5000; ++v) {
    bool sf = true;
    for (std::uint64_t d = 2; d * d <= v; ++d) sf = sf && v % (d * d) != 0;
    CHECK(got[v - 1] == sf);
  }
}

TEST_CASE("enumerated conductors") {
  const ConductorSet s500 = enumerate_conductors(1, 1, 500);
  REQUIRE(s500.count(469));
  CHECK(s500.at(469) == Witness{2, 1});
  CHECK_FALSE(enumerate_conductors(1, 1, 200).count(160));
  for (const auto& [v, w] : enumerate_conductors(1, 1, 100'000)) {
    CHECK(census_form(1, 1, w.m, w.n) == v);
    CHECK(v < 100'000);
  }
}

TEST_CASE("parallel and serial enumeration agree") {
  const ConductorSet serial = enumerate_conductors(2, 3, 2'000'000, 1);
  const ConductorSet parallel = enumerate_conductors(2, 3, 2'000'000, 4);
  CHECK(serial == parallel);
  CHECK(conductor_values(serial).size() == serial.size());
}

TEST_CASE("growth fit") {
  std::vector<CensusPoint> sqrt_pts, lin_pts;
  for (std::uint64_t X : {10'000ULL, 100'000ULL, 1'000'000ULL}) {
    sqrt_pts.push_back({X, static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(X))))});
    lin_pts.push_back({X, X});
  }
  CHECK(growth_fit(sqrt_pts) == doctest::Approx(0.5).epsilon(0.02));
  CHECK(growth_fit(lin_pts) == doctest::Approx(1.0));
  CHECK_THROWS(growth_fit({{100, 1}, {1000, 2}}));
  CHECK_THROWS(growth_fit({{100, 0}, {1000, 2}, {10000, 5}}));
}

TEST_CASE("census report") {
  CensusConfig cfg;
  cfg.limit = 1'000'000;
  cfg.grid = {10'000, 100'000, 1'000'000};
  const CensusReport r = run_census(cfg);
  REQUIRE(r.counts.size() == 3);
  CHECK(r.counts[0].count <= r.counts[1].count);
  CHECK(r.counts[1].count <= r.counts[2].count);
  REQUIRE(r.slope.has_value());
  CHECK(*r.slope >= 0.4);
  CHECK(*r.slope <= 0.6);
  CHECK(r.values.size() == r.counts[2].count);

  std::ostringstream csv;
  write_census_csv(csv, r);
  const std::string text = csv.str();
  CHECK(text.rfind("X,count,slope_so_far\n", 0) == 0);
  CHECK(text.find("\n10000,") != std::string::npos);
}

TEST_CASE("census config validation") {
  CensusConfig cfg;
  cfg.limit = 50;
  CHECK_THROWS(cfg.validate());
  cfg.limit = kCensusMaxLimit + 1;
  CHECK_THROWS(cfg.validate());
  cfg.limit = 1000;
  cfg.grid = {500, 400};
  CHECK_THROWS(cfg.validate());
  cfg.grid = {};
  cfg.workers = 0;
  CHECK_THROWS(cfg.validate());
  cfg.workers = 1;
  cfg.a = -7;  // 4a + 27b = -1
  CHECK_THROWS(cfg.validate());
  cfg.a = 1;
  CHECK_NOTHROW(cfg.validate());
}
