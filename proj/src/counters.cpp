#include "shortint/counters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "shortint/parallel.hpp"

namespace shortint {

namespace {

mpz_class mpz_from_u128(u128 v) {
  mpz_class hi = u64(v >> 64);
  mpz_class lo = u64(v);
  return (hi << 64) + lo;
}

// residues of x+s over x in [1,h] with zero factors dropped
std::vector<u64> allowed_factors(const PrimeContext& ctx, u64 h, u64 s) {
  std::vector<u64> f;
  f.reserve(h);
  s %= ctx.p;
  for (u64 x = 1; x <= h; ++x) {
    u64 v = (x + s) % ctx.p;
    if (v != 0) f.push_back(v);
  }
  return f;
}

using Bins = std::vector<std::pair<u64, u64>>;  // (value, multiplicity), sorted

Bins compact(std::vector<std::pair<u64, u64>>& raw) {
  std::sort(raw.begin(), raw.end());
  Bins out;
  for (auto& [v, c] : raw) {
    if (!out.empty() && out.back().first == v)
      out.back().second += c;
    else
      out.emplace_back(v, c);
  }
  return out;
}

// nu-fold multiplicative convolution of the factor multiset, mod p
Bins convolve_mod(const std::vector<u64>& factors, int nu, u64 p) {
  std::vector<std::pair<u64, u64>> raw;
  for (u64 f : factors) raw.emplace_back(f, 1);
  Bins cur = compact(raw);
  for (int round = 1; round < nu; ++round) {
    std::vector<std::pair<u64, u64>> next;
    next.reserve(cur.size() * factors.size());
    for (auto& [v, c] : cur)
      for (u64 f : factors) next.emplace_back(mulmod(v, f, p), c);
    cur = compact(next);
  }
  return cur;
}

void check_histogram_budget(u64 h, int nu, const Budget& budget) {
  check_budget(pow_within(h, nu, budget.histogram_entries),
               "histogram budget exceeded: h^nu > entry cap");
}

}  // namespace

ProductHistogram ProductHistogram::build(const PrimeContext& ctx, u64 h, u64 s, int nu,
                                         const Budget& budget) {
  require(nu >= 1, "histogram: nu must be >= 1");
  require(h >= 1, "histogram: h must be >= 1");
  check_histogram_budget(h, nu, budget);
  ProductHistogram hist;
  auto factors = allowed_factors(ctx, h, s);
  hist.allowed_ = factors.size();
  if (!factors.empty()) hist.bins_ = convolve_mod(factors, nu, ctx.p);
  return hist;
}

u64 ProductHistogram::multiplicity(u64 lambda) const {
  auto it = std::lower_bound(bins_.begin(), bins_.end(), std::make_pair(lambda, u64(0)));
  if (it != bins_.end() && it->first == lambda) return it->second;
  return 0;
}

mpz_class ProductHistogram::sum_squares() const {
  mpz_class acc = 0;
  for (auto& [v, c] : bins_) acc += mpz_from_u128(u128(c) * c);
  return acc;
}

namespace {

// tuples of allowed x-values with product residue and sorted value set;
// only the disjoint mode needs this O(h^nu) expansion
struct Tuple {
  u64 product;
  std::vector<u64> values;  // sorted x's
};

std::vector<Tuple> enumerate_tuples(const PrimeContext& ctx, u64 h, u64 s, int nu) {
  u64 p = ctx.p;
  s %= p;
  std::vector<u64> xs;
  for (u64 x = 1; x <= h; ++x)
    if ((x + s) % p != 0) xs.push_back(x);
  std::vector<Tuple> out;
  if (xs.empty()) return out;
  std::vector<size_t> idx(nu, 0);
  for (;;) {
    Tuple t;
    t.product = 1;
    t.values.reserve(nu);
    for (int j = 0; j < nu; ++j) {
      u64 x = xs[idx[j]];
      t.product = mulmod(t.product, (x + s) % p, p);
      t.values.push_back(x);
    }
    std::sort(t.values.begin(), t.values.end());
    out.push_back(std::move(t));
    int j = nu - 1;
    while (j >= 0 && ++idx[j] == xs.size()) idx[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

bool values_disjoint(const std::vector<u64>& a, const std::vector<u64>& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    a[i] < b[j] ? ++i : ++j;
  }
  return true;
}

}  // namespace

CountResult count_k_congruence(const PrimeContext& ctx, const CountQuery& q,
                               const Budget& budget) {
  require(q.nu >= 1, "count_k_congruence: nu must be >= 1");
  require(q.h >= 1, "count_k_congruence: h must be >= 1");
  CountResult res;
  if (q.mode == CountMode::disjoint) {
    // set-disjoint solutions break the Cauchy factorization; enumerate both
    // sides directly (oracle scale only)
    check_budget(pow_within(q.h, 2 * q.nu, budget.histogram_entries),
                 "count_k_congruence: h^(2 nu) exceeds entry cap");
    auto tuples = enumerate_tuples(ctx, q.h, q.s, q.nu);
    std::stable_sort(tuples.begin(), tuples.end(),
                     [](const Tuple& a, const Tuple& b) { return a.product < b.product; });
    mpz_class total = 0;
    for (size_t lo = 0; lo < tuples.size();) {
      size_t hi = lo;
      while (hi < tuples.size() && tuples[hi].product == tuples[lo].product) ++hi;
      u64 pairs = 0;
      for (size_t i = lo; i < hi; ++i)
        for (size_t j = lo; j < hi; ++j)
          if (values_disjoint(tuples[i].values, tuples[j].values)) ++pairs;
      total += pairs;
      lo = hi;
    }
    res.total = total;
    res.nontrivial = total;  // a permutation pair always shares values
    return res;
  }
  auto hist = ProductHistogram::build(ctx, q.h, q.s, q.nu, budget);
  res.total = hist.sum_squares();
  res.trivial = trivial_count(hist.allowed_values(), q.nu);
  res.nontrivial = res.total - res.trivial;
  return res;
}

mpz_class count_asym(const PrimeContext& ctx, u64 h, u64 s, int nu, u64 lambda,
                     const Budget& budget) {
  lambda %= ctx.p;
  require(lambda != 0, "count_asym: lambda must be nonzero mod p");
  auto hist = ProductHistogram::build(ctx, h, s, nu, budget);
  return hist.multiplicity(lambda);
}

u64 product_set_size(const PrimeContext& ctx, u64 s, u64 h, int nu, const Budget& budget) {
  auto hist = ProductHistogram::build(ctx, h, s, nu, budget);
  return hist.distinct();
}

mpz_class count_k_generalized(const PrimeContext& ctx, const GeneralizedQuery& g,
                              const Budget& budget) {
  require(g.nu >= 1, "count_k_generalized: nu must be >= 1");
  size_t n = 2 * size_t(g.nu);
  require(g.exponents.size() == n && g.lengths.size() == n && g.shifts.size() == n,
          "count_k_generalized: vectors must have length 2*nu");
  for (int e : g.exponents)
    require(e == 1 || e == -1, "count_k_generalized: exponents must be +-1");
  for (u64 hj : g.lengths) require(hj >= 1, "count_k_generalized: lengths must be >= 1");

  // meet in the middle: histogram of the first nu factors, inverse lookup of
  // the last nu
  auto fold = [&](size_t lo, size_t hi) {
    u128 size_bound = 1;
    for (size_t j = lo; j < hi; ++j) {
      size_bound *= g.lengths[j];
      check_budget(size_bound <= budget.histogram_entries,
                   "count_k_generalized: histogram budget exceeded");
    }
    Bins cur{{1, 1}};
    for (size_t j = lo; j < hi; ++j) {
      auto factors = allowed_factors(ctx, g.lengths[j], g.shifts[j]);
      if (g.exponents[j] == -1)
        for (u64& f : factors) f = invmod(f, ctx.p);
      std::vector<std::pair<u64, u64>> next;
      next.reserve(cur.size());
      for (auto& [v, c] : cur)
        for (u64 f : factors) next.emplace_back(mulmod(v, f, ctx.p), c);
      cur = compact(next);
    }
    return cur;
  };
  Bins left = fold(0, g.nu);
  Bins right = fold(g.nu, n);
  mpz_class count = 0;
  for (auto& [v, c] : right) {
    u64 want = invmod(v, ctx.p);
    auto it = std::lower_bound(left.begin(), left.end(), std::make_pair(want, u64(0)));
    if (it != left.end() && it->first == want) count += mpz_from_u128(u128(c) * it->second);
  }
  return count;
}

namespace {

struct RationalFactors {
  std::vector<mpz_class> factors;  // x*r + t for allowed x, ascending in x
  u64 allowed;
};

RationalFactors rational_factors(u64 h, i64 r, i64 t) {
  RationalFactors rf;
  rf.allowed = 0;
  for (u64 x = 1; x <= h; ++x) {
    mpz_class f = mpz_class(static_cast<unsigned long>(x)) * r + t;
    if (f == 0) continue;
    rf.factors.push_back(std::move(f));
    ++rf.allowed;
  }
  return rf;
}

void canonicalize_shift(i64& r, i64& t) {
  require(r >= 1, "count_k_rational: r must be >= 1");
  if (t == 0) {
    r = 1;
    return;
  }
  i64 g = std::gcd(r, t < 0 ? -t : t);
  r /= g;
  t /= g;
}

using BigBins = std::map<mpz_class, u64>;

BigBins convolve_exact(const std::vector<mpz_class>& factors, int nu) {
  BigBins cur;
  for (auto& f : factors) ++cur[f];
  for (int round = 1; round < nu; ++round) {
    BigBins next;
    for (auto& [v, c] : cur)
      for (auto& f : factors) next[v * f] += c;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

CountResult count_k_rational(u64 h, int nu, i64 r, i64 t, CountMode mode,
                             const Budget& budget) {
  require(nu >= 1, "count_k_rational: nu must be >= 1");
  require(h >= 1, "count_k_rational: h must be >= 1");
  canonicalize_shift(r, t);
  check_histogram_budget(h, nu, budget);
  auto rf = rational_factors(h, r, t);
  CountResult res;
  if (mode == CountMode::disjoint) {
    check_budget(pow_within(h, 2 * nu, budget.histogram_entries),
                 "count_k_rational: h^(2 nu) exceeds entry cap");
    // value tuples keyed by exact product
    std::map<mpz_class, std::vector<std::vector<u64>>> groups;
    std::vector<u64> xs;
    for (u64 x = 1; x <= h; ++x)
      if (mpz_class(static_cast<unsigned long>(x)) * r + t != 0) xs.push_back(x);
    if (xs.empty()) return res;
    std::vector<size_t> idx(nu, 0);
    for (;;) {
      mpz_class prod = 1;
      std::vector<u64> vals(nu);
      for (int j = 0; j < nu; ++j) {
        vals[j] = xs[idx[j]];
        prod *= mpz_class(static_cast<unsigned long>(vals[j])) * r + t;
      }
      std::sort(vals.begin(), vals.end());
      groups[prod].push_back(std::move(vals));
      int j = nu - 1;
      while (j >= 0 && ++idx[j] == xs.size()) idx[j--] = 0;
      if (j < 0) break;
    }
    mpz_class total = 0;
    for (auto& [prod, tuples] : groups) {
      u64 pairs = 0;
      for (auto& a : tuples)
        for (auto& b : tuples)
          if (values_disjoint(a, b)) ++pairs;
      total += pairs;
    }
    res.total = total;
    res.nontrivial = total;
    return res;
  }
  if (rf.allowed > 0) {
    BigBins bins = convolve_exact(rf.factors, nu);
    for (auto& [v, c] : bins) res.total += mpz_from_u128(u128(c) * c);
  }
  res.trivial = trivial_count(rf.allowed, nu);
  res.nontrivial = res.total - res.trivial;
  return res;
}

namespace {

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// sum over multiplicity patterns (partitions of nu): the number of multisets
// with that pattern times the squared count of orderings of one of them
void partition_sum(std::vector<int>& parts, int remaining, int max_part, u64 h, int nu,
                   mpz_class& acc) {
  if (remaining == 0) {
    int d = parts.size();
    if (u64(d) > h) return;
    mpz_class ways = 1;
    for (int i = 0; i < d; ++i) ways *= mpz_class(static_cast<unsigned long>(h - i));
    int run = 1;
    for (size_t i = 1; i <= parts.size(); ++i) {
      if (i < parts.size() && parts[i] == parts[i - 1]) {
        ++run;
      } else {
        mpz_divexact(ways.get_mpz_t(), ways.get_mpz_t(), factorial(run).get_mpz_t());
        run = 1;
      }
    }
    mpz_class perms = factorial(nu);
    for (int part : parts) mpz_divexact(perms.get_mpz_t(), perms.get_mpz_t(), factorial(part).get_mpz_t());
    acc += ways * perms * perms;
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    partition_sum(parts, remaining - part, part, h, nu, acc);
    parts.pop_back();
  }
}

}  // namespace

mpz_class trivial_count(u64 h, int nu) {
  require(nu >= 1, "trivial_count: nu must be >= 1");
  if (h == 0) return 0;
  mpz_class acc = 0;
  std::vector<int> parts;
  partition_sum(parts, nu, nu, h, nu, acc);
  return acc;
}

mpz_class mult_table_count(u64 h, const Budget& budget) {
  require(h >= 1, "mult_table_count: h must be >= 1");
  auto phi = totient_table(h, budget);
  u128 acc = 0;
  for (u64 m = 1; m <= h; ++m) {
    u64 q = h / m;
    u64 weight = 2 * u64(phi[m]) - (m == 1 ? 1 : 0);
    acc += u128(q) * q * weight;
  }
  return mpz_from_u128(acc);
}

SCensus exceptional_s_census(const PrimeContext& ctx, u64 h, int nu, double epsilon,
                             int workers, const Budget& budget) {
  require(nu >= 1, "exceptional_s_census: nu must be >= 1");
  require(epsilon >= 0, "exceptional_s_census: epsilon must be >= 0");
  u64 per_s = 0;
  check_budget(pow_within(h, nu, budget.histogram_entries, &per_s) &&
                   u128(per_s) * ctx.p <= budget.enumeration,
               "exceptional_s_census: p * h^nu exceeds sweep budget");
  SCensus census;
  census.band = std::pow(double(h), double(nu) - epsilon / 2.0);
  census.rows.resize(ctx.p);
  parallel_for(ctx.p, workers, [&](u64 s) {
    CountResult r = count_k_congruence(ctx, {nu, h, s, CountMode::all}, budget);
    bool flag = mpz_cmp_d(r.nontrivial.get_mpz_t(), census.band) > 0;
    census.rows[s] = SCensusRow{s, std::move(r.total), std::move(r.trivial),
                                std::move(r.nontrivial), flag};
  });
  census.exceptional_count = 0;
  for (auto& row : census.rows)
    if (row.exceptional) ++census.exceptional_count;
  return census;
}

}  // namespace shortint
