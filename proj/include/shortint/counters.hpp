#pragma once

#include <gmpxx.h>

#include <vector>

#include "shortint/arith.hpp"

namespace shortint {

enum class CountMode { all, disjoint, nontrivial };

// Query for the two-sided counters. In the congruence case the shift is a
// residue s; the rational counter takes a reduced fraction t/r instead.
struct CountQuery {
  int nu = 1;
  u64 h = 1;
  u64 s = 0;
  CountMode mode = CountMode::all;
};

struct GeneralizedQuery {
  int nu = 1;
  std::vector<int> exponents;  // in {-1,+1}, length 2*nu
  std::vector<u64> lengths;    // length 2*nu, each >= 1
  std::vector<u64> shifts;     // length 2*nu
};

struct CountResult {
  mpz_class total = 0;
  mpz_class trivial = 0;
  mpz_class nontrivial = 0;
};

// Multiplicity histogram of nu-fold products prod (x_i + s) mod p over
// x_i in [1,h], with every x such that x + s = 0 mod p removed up front.
// One histogram serves count_k_congruence, count_asym and product_set_size
// for the same (p,h,s,nu).
class ProductHistogram {
 public:
  static ProductHistogram build(const PrimeContext& ctx, u64 h, u64 s, int nu,
                                const Budget& budget = {});

  u64 multiplicity(u64 lambda) const;  // Q(lambda)
  mpz_class sum_squares() const;       // sum over lambda of Q(lambda)^2
  u64 distinct() const { return bins_.size(); }
  u64 allowed_values() const { return allowed_; }
  const std::vector<std::pair<u64, u64>>& bins() const { return bins_; }

 private:
  std::vector<std::pair<u64, u64>> bins_;  // (residue, multiplicity), sorted
  u64 allowed_ = 0;                        // |{x in [1,h] : x+s != 0 mod p}|
};

// Number of 2*nu-tuples with prod (x_i+s) = prod (y_i+s) != 0 mod p.
CountResult count_k_congruence(const PrimeContext& ctx, const CountQuery& q,
                               const Budget& budget = {});

// Number of 2*nu-tuples with prod (x_j+s_j)^{e_j} = 1 mod p, no zero factor.
mpz_class count_k_generalized(const PrimeContext& ctx, const GeneralizedQuery& g,
                              const Budget& budget = {});

// Number of nu-tuples with prod (x_i+s) = lambda mod p, all factors nonzero.
mpz_class count_asym(const PrimeContext& ctx, u64 h, u64 s, int nu, u64 lambda,
                     const Budget& budget = {});

// Equation counterpart over the integers with shift t/r: counts 2*nu-tuples
// with equal exact products prod (x_i*r + t). The fraction is canonicalized
// (gcd divided out) before counting.
CountResult count_k_rational(u64 h, int nu, i64 r, i64 t,
                             CountMode mode = CountMode::all,
                             const Budget& budget = {});

// Number of pairs (x,y) in [1,h]^{2nu} where y is a permutation of x.
mpz_class trivial_count(u64 h, int nu);

// Multiplication-table count N(h): quadruples uv = xy in [1,h]^4, via the
// coprime parametrization N(h) = sum_m floor(h/m)^2 (2 phi(m) - [m=1]).
mpz_class mult_table_count(u64 h, const Budget& budget = {});

// Cardinality of { prod a_i mod p : a_i in {x+s : 1<=x<=h}, a_i != 0 }.
u64 product_set_size(const PrimeContext& ctx, u64 s, u64 h, int nu,
                     const Budget& budget = {});

struct SCensusRow {
  u64 s;
  mpz_class total, trivial, nontrivial;
  bool exceptional;
};

struct SCensus {
  std::vector<SCensusRow> rows;  // one per s in [0, p), ascending
  double band;                   // h^(nu - eps/2)
  u64 exceptional_count;
};

// Nontrivial counts for every shift s in F_p; flags s whose nontrivial count
// exceeds the band h^(nu - eps/2).
SCensus exceptional_s_census(const PrimeContext& ctx, u64 h, int nu, double epsilon,
                             int workers = 1, const Budget& budget = {});

}  // namespace shortint
