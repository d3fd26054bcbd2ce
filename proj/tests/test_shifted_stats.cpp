#include "shortint/shifted_stats.hpp"

#include <cmath>

#include "doctest.h"

using namespace shortint;

TEST_CASE("power_threshold snaps exact integer powers") {
  CHECK(power_threshold(100000, 0.4) == 100);  // 10^2 exactly
  CHECK(power_threshold(100, 0.5) == 10);
  CHECK(power_threshold(100, 0.25) == 4);  // 3.162... rounds up
  CHECK(power_threshold(20, 0.4) == 4);    // 3.314...
}

TEST_CASE("middle_divisor_census counts divisors in the window") {
  // T = 20, eta = 0.1: window [20^0.4, 20^0.6] ~ [3.31, 6.03], integer range {4,5,6}
  auto c = middle_divisor_census(20, 0.1);
  CHECK(c.total == 8);
  CHECK(c.flagged == 6);
  for (const auto& row : c.rows) {
    if (row.p == 2 || row.p == 3) CHECK_FALSE(row.flag);
    if (row.p == 11) {
      CHECK(row.flag);
      CHECK(row.statistic == 1);  // only 5 divides 10 inside {4,5,6}
    }
    if (row.p == 13) CHECK(row.statistic == 2);  // 4 and 6 divide 12
  }
  // degenerate window around sqrt(20): no integer in [4.47, 4.47]
  auto none = middle_divisor_census(20, 1e-12);
  CHECK(none.flagged == 0);
}

TEST_CASE("middle divisor fraction shrinks with the window") {
  auto wide = middle_divisor_census(500, 0.2);
  auto narrow = middle_divisor_census(500, 0.05);
  CHECK(narrow.flagged <= wide.flagged);
  CHECK(wide.flagged <= wide.total);
}

TEST_CASE("smooth_part pinned examples") {
  CHECK(smooth_part_of_shifted(13, 3) == 4);
  CHECK(smooth_part_of_shifted(13, 5) == 12);
  CHECK(smooth_part_of_shifted(3, 2) == 1);
  // squarefree reading multiplies each prime once
  CHECK(smooth_part(factorize(12), 5, false) == 6);
  CHECK(smooth_part(factorize(12), 5, true) == 12);
  CHECK_THROWS_AS((void)smooth_part(factorize(12), 1), std::invalid_argument);
}

TEST_CASE("smooth_part_census splits p-1 into smooth and rough parts") {
  auto c = smooth_part_census(200, 0.3, 0.5);
  CHECK(c.total == 46);
  u64 bound = power_threshold(200, 0.3);
  u64 cutoff = u64(std::floor(std::pow(200.0, 0.5)));
  for (const auto& row : c.rows) {
    auto f = factorize(row.p - 1);
    u64 part = 1;
    for (auto [q, e] : f.factors)
      if (q < bound)
        for (int i = 0; i < e; ++i) part *= q;
    CHECK(row.statistic == part);
    CHECK(row.flag == (part > cutoff));
    // smooth part divides p-1 and the quotient has no small prime factor
    CHECK((row.p - 1) % part == 0);
    u64 rough = (row.p - 1) / part;
    for (auto [q, e] : factorize(rough).factors) CHECK(q >= bound);
  }
}

TEST_CASE("large_prime_divisor_count pinned examples") {
  CHECK(large_prime_divisor_count(factorize(30), 3) == 2);
  CHECK(large_prime_divisor_count(factorize(30), 7) == 0);
  CHECK(large_prime_divisor_count(factorize(2), 2) == 1);
}

TEST_CASE("numdiv census respects the stated bound formula") {
  double alpha = 0.2, beta = 0.6, lambda = 1.5;
  auto c = large_prime_divisor_census(3000, alpha, beta, lambda);
  double bound = 2 * lambda * std::log(beta / alpha) / (1 - beta) + 1 / beta;
  u64 thr = power_threshold(3000, alpha);
  for (const auto& row : c.rows) {
    CHECK(row.statistic == large_prime_divisor_count(factorize(row.p - 1), thr));
    CHECK(row.flag == (double(row.statistic) > bound));
  }
  CHECK_THROWS_AS((void)large_prime_divisor_census(100, 0.5, 0.4, 1.0), std::invalid_argument);
}

TEST_CASE("square_divisor_census pinned example and hard bound") {
  auto c = square_divisor_census(100, 0.25);
  CHECK(c.flagged == 4);
  std::vector<u64> flagged;
  for (const auto& row : c.rows)
    if (row.flag) flagged.push_back(row.p);
  CHECK(flagged == std::vector<u64>{17, 37, 73, 97});

  CHECK(square_divisor_census(100, 0.95).flagged == 0);

  for (double alpha : {0.3, 0.4, 0.5}) {
    auto cc = square_divisor_census(1000, alpha);
    CHECK(double(cc.flagged) <= 2.0 * std::pow(1000.0, 1.0 - alpha));
  }
}

TEST_CASE("mertens window gap is small at scale") {
  auto w = mertens_window(1000000, 0.2, 0.5);
  CHECK(w.log_ratio == doctest::Approx(std::log(2.5)));
  CHECK(std::fabs(w.gap) <= 0.3);
}

TEST_CASE("censuses are deterministic and worker independent") {
  auto a = middle_divisor_census(300, 0.15, 1);
  auto b = middle_divisor_census(300, 0.15, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].p == b.rows[i].p);
    CHECK(a.rows[i].statistic == b.rows[i].statistic);
    CHECK(a.rows[i].flag == b.rows[i].flag);
  }
}

TEST_CASE("census parameter validation") {
  CHECK_THROWS_AS((void)middle_divisor_census(100, 0.6), std::invalid_argument);
  CHECK_THROWS_AS((void)square_divisor_census(100, 0.0), std::invalid_argument);
  Budget tight;
  tight.sieve_limit = 50;
  CHECK_THROWS_AS((void)square_divisor_census(1000, 0.3, 1, tight), BudgetError);
}
