#include "shortint/multindep.hpp"

#include "doctest.h"
#include "shortint/rng.hpp"

using namespace shortint;

TEST_CASE("greedy_independent pinned examples") {
  auto s1 = greedy_independent(2, 4);
  CHECK(s1.elements == std::vector<u64>{2, 3, 5});
  CHECK(s1.witness_primes == std::vector<u64>{2, 3, 5});

  auto s2 = greedy_independent(8, 4);
  CHECK(s2.elements == std::vector<u64>{8, 9, 11});
  CHECK(s2.witness_primes == std::vector<u64>{2, 3, 11});

  CHECK(greedy_independent(2, 1).elements == std::vector<u64>{2});
  CHECK_THROWS_AS((void)greedy_independent(1, 4), std::invalid_argument);
}

TEST_CASE("witness primes divide their element and no later one") {
  for (u64 a : {2ull, 100ull, 1000003ull})
    for (u64 m : {8ull, 40ull}) {
      auto set = greedy_independent(a, m);
      REQUIRE(set.elements.size() == set.witness_primes.size());
      for (size_t i = 0; i < set.elements.size(); ++i) {
        CHECK(set.elements[i] % set.witness_primes[i] == 0);
        for (size_t j = i + 1; j < set.elements.size(); ++j)
          CHECK(set.elements[j] % set.witness_primes[i] != 0);
      }
    }
}

TEST_CASE("independence_rank pinned examples") {
  std::vector<u64> a{2, 3, 5};
  CHECK(independence_rank(a) == 3);
  std::vector<u64> b{2, 4};
  CHECK(independence_rank(b) == 1);
  std::vector<u64> c{6, 10, 15};
  CHECK(independence_rank(c) == 3);
  std::vector<u64> d{1, 1};
  CHECK(independence_rank(d) == 0);
  std::vector<u64> e{12, 18, 6};  // 12 * 18 = 6^2 * 6 -> dependent
  CHECK(independence_rank(e) == 2);
  std::vector<u64> empty;
  CHECK(independence_rank(empty) == 0);
}

TEST_CASE("greedy output is multiplicatively independent") {
  for (u64 a : {2ull, 1000000ull})
    for (u64 m : {16ull, 64ull, 100ull}) {
      auto set = greedy_independent(a, m);
      CHECK(independence_rank(set.elements) == int(set.elements.size()));
    }
}

TEST_CASE("covered_run_length pinned examples") {
  std::vector<u64> q23{2, 3};
  CHECK(covered_run_length(q23, 1, 100) == 3);
  std::vector<u64> q2{2};
  CHECK(covered_run_length(q2, 1, 100) == 1);
  std::vector<u64> q235{2, 3, 5};
  CHECK(covered_run_length(q235, 1, 1000) == 5);
  std::vector<u64> q7{7};
  CHECK(covered_run_length(q7, 8, 13) == 0);  // no multiple of 7 in the window
}

TEST_CASE("covered run length is monotone in the prime set") {
  SplitMix64 rng(86);
  std::vector<u64> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<u64> qs;
    for (u64 q : primes)
      if (rng.below(2)) qs.push_back(q);
    if (qs.empty()) qs.push_back(2);
    u64 base = covered_run_length(qs, 1, 2000);
    qs.push_back(29);
    CHECK(covered_run_length(qs, 1, 2000) >= base);
  }
}

TEST_CASE("window budget guard") {
  Budget tight;
  tight.enumeration = 100;
  std::vector<u64> q{2};
  CHECK_THROWS_AS((void)covered_run_length(q, 1, 1000, tight), BudgetError);
  CHECK_THROWS_AS((void)greedy_independent(2, 1000, tight), BudgetError);
}
