#include "shortint/multindep.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <map>

#include "shortint/arith.hpp"

namespace shortint {

IndependentSet greedy_independent(u64 a, u64 m, const Budget& budget) {
  require(a >= 2, "greedy_independent: a must be >= 2");
  require(m >= 1, "greedy_independent: m must be >= 1");
  check_budget(m <= budget.enumeration, "greedy_independent: window exceeds cap");
  IndependentSet set;
  for (u64 x = a; x < a + m; ++x) {
    if (x == 1) continue;
    bool covered = false;
    for (u64 q : set.witness_primes)
      if (x % q == 0) {
        covered = true;
        break;
      }
    if (covered) continue;
    set.elements.push_back(x);
    set.witness_primes.push_back(factorize(x, budget).factors.front().first);
  }
  return set;
}

int independence_rank(std::span<const u64> elements, const Budget& budget) {
  std::map<u64, size_t> prime_col;
  std::vector<Factorization> facts;
  facts.reserve(elements.size());
  for (u64 e : elements) {
    require(e >= 1, "independence_rank: elements must be >= 1");
    facts.push_back(factorize(e, budget));
    for (auto [q, ex] : facts.back().factors) prime_col.emplace(q, 0);
  }
  size_t col = 0;
  for (auto& [q, idx] : prime_col) idx = col++;
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& f : facts) {
    std::vector<mpz_class> row(prime_col.size(), 0);
    for (auto [q, ex] : f.factors) row[prime_col[q]] = ex;
    rows.push_back(std::move(row));
  }
  // fraction-free row echelon over the integers
  int rank = 0;
  size_t ncols = prime_col.size();
  for (size_t c = 0; c < ncols && rank < int(rows.size()); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      mpz_class f1 = rows[rank][c], f2 = rows[i][c];
      for (size_t j = c; j < ncols; ++j) rows[i][j] = rows[i][j] * f1 - rows[rank][j] * f2;
    }
    ++rank;
  }
  return rank;
}

u64 covered_run_length(std::span<const u64> primes, u64 lo, u64 hi, const Budget& budget) {
  require(lo <= hi, "covered_run_length: empty window");
  check_budget(hi - lo + 1 <= budget.enumeration, "covered_run_length: window exceeds cap");
  u64 best = 0, run = 0;
  for (u64 n = lo; n <= hi; ++n) {
    bool covered = false;
    for (u64 q : primes)
      if (q != 0 && n % q == 0) {
        covered = true;
        break;
      }
    run = covered ? run + 1 : 0;
    best = std::max(best, run);
    if (n == hi) break;  // guard u64 wrap at hi = 2^64-1
  }
  return best;
}

}  // namespace shortint
