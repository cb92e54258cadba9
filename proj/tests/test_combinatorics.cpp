#include <doctest.h>

#include <cmath>

#include "entbound/combinatorics.hpp"
#include "oracles.hpp"

using namespace entbound;

TEST_CASE("sector_dim counts occupation configurations") {
  CHECK(sector_dim(3, 1, Statistics::Fermionic) == 3);
  CHECK(sector_dim(7, 0, Statistics::Fermionic) == 1);
  CHECK(sector_dim(7, 0, Statistics::Bosonic) == 1);
  CHECK(sector_dim(2, 3, Statistics::Bosonic) == 4);  // (3,0),(2,1),(1,2),(0,3)
  CHECK(sector_dim(3, 5, Statistics::Fermionic) == 0);
  CHECK_THROWS_AS(sector_dim(0, 1, Statistics::Fermionic), std::domain_error);
  CHECK_THROWS_AS(sector_dim(3, -1, Statistics::Bosonic), std::domain_error);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((SystemSpec{6, 0, 2, Statistics::Fermionic}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((SystemSpec{6, 7, 2, Statistics::Fermionic}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((SystemSpec{4, 2, 5, Statistics::Fermionic}.validate()),
                  std::invalid_argument);
  CHECK_NOTHROW((SystemSpec{4, 2, 5, Statistics::Bosonic}.validate()));
}

TEST_CASE("sector_table examples") {
  auto t = sector_table({6, 3, 2, Statistics::Fermionic});
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].d == 1);
  CHECK(t.rows[1].d == 3);
  CHECK(t.rows[2].d == 1);

  auto trivial = sector_table({2, 1, 0, Statistics::Fermionic});
  REQUIRE(trivial.rows.size() == 1);
  CHECK(trivial.rows[0].n_a == 0);
  CHECK(trivial.rows[0].d == 1);

  auto t8 = sector_table({8, 4, 3, Statistics::Fermionic});
  REQUIRE(t8.rows.size() == 4);
  CHECK(t8.rows[0].d == 1);
  CHECK(t8.rows[1].d == 4);
  CHECK(t8.rows[2].d == 4);
  CHECK(t8.rows[3].d == 1);
}

TEST_CASE("closed-system bound examples") {
  CHECK(closed_system_bound({6, 3, 2, Statistics::Fermionic}) ==
        doctest::Approx(std::log(5.0)).epsilon(1e-12));
  CHECK(closed_system_bound({8, 4, 3, Statistics::Fermionic}) ==
        doctest::Approx(std::log(10.0)).epsilon(1e-12));
  CHECK(closed_system_bound({4, 4, 4, Statistics::Bosonic}) == doctest::Approx(0.0));

  // published vector for L=10, n=5, one decimal
  const double expected[] = {0.7, 1.4, 2.1, 2.8, 3.5, 2.8, 2.1, 1.4, 0.7};
  for (int M = 1; M <= 9; ++M) {
    const double b = closed_system_bound({10, M, 5, Statistics::Fermionic});
    CHECK(std::round(b * 10.0) / 10.0 == doctest::Approx(expected[M - 1]));
  }
}

TEST_CASE("general bound examples") {
  CHECK(general_bound({6, 3, 2, Statistics::Fermionic}) ==
        doctest::Approx(std::log(7.0)).epsilon(1e-12));
  CHECK(general_bound({2, 1, 0, Statistics::Fermionic}) == doctest::Approx(0.0));
  CHECK(general_bound({8, 4, 3, Statistics::Fermionic}) ==
        doctest::Approx(std::log(15.0)).epsilon(1e-12));
}

TEST_CASE("closed bound matches brute-force enumeration up to L=12") {
  for (int L = 1; L <= 12; ++L)
    for (int M = 1; M <= L; ++M)
      for (long n = 0; n <= L; ++n) {
        const double bound = closed_system_bound({L, M, n, Statistics::Fermionic});
        const long count = oracles::brute_force_min_dim_sum_fermionic(L, M, n);
        CHECK(bound == doctest::Approx(std::log(double(count))).epsilon(1e-12));
      }
}

TEST_CASE("bosonic bound matches brute-force enumeration on small systems") {
  for (int L = 2; L <= 6; ++L)
    for (int M = 1; M <= L; ++M)
      for (long n = 0; n <= 5; ++n) {
        const double bound = closed_system_bound({L, M, n, Statistics::Bosonic});
        const long count = oracles::brute_force_min_dim_sum_bosonic(L, M, n);
        CHECK(bound == doctest::Approx(std::log(double(count))).epsilon(1e-12));
      }
}

TEST_CASE("fermionic symmetries of the bound") {
  for (int L = 2; L <= 12; ++L)
    for (int M = 1; M < L; ++M)
      for (long n = 0; n <= L; ++n) {
        const double b = closed_system_bound({L, M, n, Statistics::Fermionic});
        CHECK(b == doctest::Approx(closed_system_bound({L, L - M, n, Statistics::Fermionic}))
                       .epsilon(1e-12));
        CHECK(b == doctest::Approx(closed_system_bound({L, M, L - n, Statistics::Fermionic}))
                       .epsilon(1e-12));
      }
}

TEST_CASE("closed bound never exceeds the general bound") {
  for (int L = 2; L <= 12; ++L)
    for (int M = 1; M <= L; ++M)
      for (long n = 0; n <= 6; ++n) {
        for (auto stats : {Statistics::Fermionic, Statistics::Bosonic}) {
          if (stats == Statistics::Fermionic && n > L) continue;
          SystemSpec spec{L, M, n, stats};
          CHECK(closed_system_bound(spec) <= general_bound(spec) + 1e-12);
        }
      }
}

TEST_CASE("bosonic bound strictly dominates for large L, M > 1") {
  for (int L : {10, 12, 14})
    for (int M : {2, 3})
      for (long n : {2L, 3L}) {
        SystemSpec spec{L, M, n, Statistics::Bosonic};
        CHECK(closed_system_bound(spec) < general_bound(spec) - 1e-9);
      }
}

TEST_CASE("maximally entangled number distribution") {
  auto dist = max_ent_number_distribution({13, 4, 3, Statistics::Fermionic});
  double sum = 0.0;
  for (const auto& [na, p] : dist) {
    CHECK(p > 0.0);
    sum += p;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mean_subsystem_particles({13, 4, 3, Statistics::Fermionic}) ==
        doctest::Approx(19.0 / 12.0).epsilon(1e-12));
  CHECK(mean_subsystem_particles({8, 4, 3, Statistics::Fermionic}) ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(mean_subsystem_particles({9, 4, 3, Statistics::Fermionic}) ==
        doctest::Approx(17.0 / 11.0).epsilon(1e-12));

  auto forced = max_ent_number_distribution({2, 1, 2, Statistics::Fermionic});
  REQUIRE(forced.size() == 1);
  CHECK(forced[0].first == 1);
  CHECK(forced[0].second == doctest::Approx(1.0));
}

TEST_CASE("flattening threshold and flattened bound") {
  CHECK(flattening_threshold(4, 3) == 10);
  CHECK(flattening_threshold(1, 1) == 2);
  CHECK(flattening_threshold(5, 4) == 15);

  CHECK(flattened_bound(4, 3) == doctest::Approx(std::log(12.0)).epsilon(1e-12));
  CHECK(flattened_bound(4, 4) == doctest::Approx(4.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(flattened_bound(1, 1) == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  // past the threshold the closed bound is constant in L and equals the
  // flattened value
  for (int M = 1; M <= 5; ++M)
    for (long n = 0; n <= 6; ++n) {
      const long threshold = flattening_threshold(M, n);
      const double flat = flattened_bound(M, n);
      for (long L = threshold; L <= threshold + 4; ++L) {
        CHECK(closed_system_bound({static_cast<int>(L), M, n, Statistics::Fermionic}) ==
              doctest::Approx(flat).epsilon(1e-12));
      }
    }
}

TEST_CASE("edge collapse: M = L or n = 0 gives bound 0") {
  for (int L : {2, 5, 9}) {
    CHECK(closed_system_bound({L, L, 2, Statistics::Fermionic}) == doctest::Approx(0.0));
    CHECK(closed_system_bound({L, 1, 0, Statistics::Fermionic}) == doctest::Approx(0.0));
    CHECK(closed_system_bound({L, L, 2, Statistics::Bosonic}) == doctest::Approx(0.0));
  }
}

TEST_CASE("entropy corollaries") {
  auto [cond, mi] = entropy_corollaries({6, 3, 2, Statistics::Fermionic});
  CHECK(cond == doctest::Approx(-std::log(5.0)).epsilon(1e-12));
  CHECK(mi == doctest::Approx(2.0 * std::log(5.0)).epsilon(1e-12));

  auto zero = entropy_corollaries({2, 1, 0, Statistics::Fermionic});
  CHECK(zero.first == doctest::Approx(0.0));
  CHECK(zero.second == doctest::Approx(0.0));

  auto big = entropy_corollaries({8, 4, 3, Statistics::Fermionic});
  CHECK(big.first == doctest::Approx(-std::log(10.0)).epsilon(1e-12));
  CHECK(big.second == doctest::Approx(2.0 * std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("log_big handles values far beyond double range") {
  BigInt x = 1;
  for (int i = 0; i < 500; ++i) x *= 1000;  // 10^1500
  CHECK(log_big(x) == doctest::Approx(1500.0 * std::log(10.0)).epsilon(1e-12));
}
