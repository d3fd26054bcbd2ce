#include "shortint/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "shortint/arith.hpp"

using namespace shortint;

namespace {

bool in_gamma(const LatticeBox& box, const Triple& t) {
  u64 p = box.p, s = box.s % box.p;
  auto norm = [&](i64 v) { return u64(((v % i64(p)) + i64(p))) % p; };
  u64 val = (mulmod(norm(t.u), mulmod(s, s, p), p) + mulmod(norm(t.v), s, p) + norm(t.w)) % p;
  return val == 0;
}

std::vector<Triple> triple_loop_relations(const LatticeBox& box) {
  i64 ub = 3 * i64(box.h), vb = 3 * i64(box.h) * i64(box.h);
  i64 wb = i64(box.h) * i64(box.h) * i64(box.h);
  std::vector<Triple> out;
  for (i64 u = -ub; u <= ub; ++u)
    for (i64 v = -vb; v <= vb; ++v)
      for (i64 w = -wb; w <= wb; ++w) {
        Triple t{u, v, w};
        if ((u || v || w) && in_gamma(box, t)) out.push_back(t);
      }
  return out;
}

// dilation needed to capture (u,v,w), over common denominator 3h^3
i64 dilation_num(const LatticeBox& box, const Triple& t) {
  i64 h = i64(box.h);
  return std::max({std::abs(t.u) * h * h, std::abs(t.v) * h, 3 * std::abs(t.w)});
}

// independent route: sorted sweep inserting rows into an exact echelon basis
struct EchelonBasis {
  std::vector<std::array<mpz_class, 3>> rows;
  bool insert(const Triple& t) {
    std::array<mpz_class, 3> row{t.u, t.v, t.w};
    for (auto& b : rows) {
      int lead = 0;
      while (lead < 3 && b[lead] == 0) ++lead;
      if (lead == 3 || row[lead] == 0) continue;
      mpz_class f1 = b[lead], f2 = row[lead];
      for (int j = 0; j < 3; ++j) row[j] = row[j] * f1 - b[j] * f2;
    }
    if (row[0] == 0 && row[1] == 0 && row[2] == 0) return false;
    rows.push_back(row);
    return true;
  }
};

std::array<Frac, 3> oracle_minima(const LatticeBox& box, u64 region) {
  i64 ub = 3 * i64(box.h) * i64(region);
  i64 vb = 3 * i64(box.h) * i64(box.h) * i64(region);
  i64 wb = i64(box.h) * i64(box.h) * i64(box.h) * i64(region);
  std::vector<std::pair<i64, Triple>> cands;
  for (i64 u = -ub; u <= ub; ++u)
    for (i64 v = -vb; v <= vb; ++v) {
      // walk the w residue class directly
      i64 p = i64(box.p);
      u64 s = box.s % box.p;
      u64 um = u64(((u % p) + p)) % box.p, vm = u64(((v % p) + p)) % box.p;
      u64 val = (mulmod(um, mulmod(s, s, box.p), box.p) + mulmod(vm, s, box.p)) % box.p;
      i64 cls = i64((box.p - val) % box.p);
      i64 w = cls - ((cls + wb) / p) * p;
      for (; w <= wb; w += p) {
        if (u == 0 && v == 0 && w == 0) continue;
        Triple t{u, v, w};
        cands.emplace_back(dilation_num(box, t), t);
      }
    }
  std::sort(cands.begin(), cands.end(), [](auto& a, auto& b) { return a.first < b.first; });
  EchelonBasis basis;
  std::array<Frac, 3> lambda;
  size_t found = 0;
  i64 den = 3 * i64(box.h) * i64(box.h) * i64(box.h);
  for (auto& [key, t] : cands) {
    if (basis.insert(t)) {
      i64 g = std::gcd(key, den);
      lambda[found++] = Frac{key / g, den / g};
      if (found == 3) break;
    }
  }
  REQUIRE(found == 3);
  return lambda;
}

}  // namespace

TEST_CASE("small_quadratic_relations fixed counts") {
  CHECK(small_quadratic_relations({5, 1, 1}).size() == 30);
  CHECK(small_quadratic_relations({7, 0, 1}).size() == 48);
  // p far above h^3: W = 0 is forced, (U,V) free
  CHECK(small_quadratic_relations({1000003, 0, 1}).size() == 48);
}

TEST_CASE("small_quadratic_relations matches the triple loop") {
  for (u64 p : sieve_primes(100))
    for (u64 h : {1ull, 2ull})
      for (u64 s = 0; s < p; ++s) {
        LatticeBox box{p, s, h};
        auto fast = small_quadratic_relations(box);
        auto slow = triple_loop_relations(box);
        auto key = [](const Triple& t) { return std::tuple(t.u, t.v, t.w); };
        std::sort(fast.begin(), fast.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
        std::sort(slow.begin(), slow.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
        CHECK(fast == slow);
        for (auto& t : fast) CHECK(in_gamma(box, t));
      }
}

TEST_CASE("successive minima pinned examples") {
  auto m1 = successive_minima({5, 1, 1});
  CHECK(m1.lambda[0] == Frac{1, 3});
  CHECK(m1.lambda[1] == Frac{1, 1});
  CHECK(m1.lambda[2] == Frac{1, 1});

  auto m2 = successive_minima({7, 0, 1}, 8);
  CHECK(m2.lambda[0] == Frac{1, 3});
  CHECK(m2.lambda[1] == Frac{1, 3});
  CHECK(m2.lambda[2] == Frac{7, 1});
}

TEST_CASE("witnesses lie in the lattice, in lambda_i D, and are independent") {
  for (u64 p : {5ull, 7ull, 11ull, 31ull})
    for (u64 s = 0; s < p; s += 2)
      for (u64 h : {1ull, 2ull}) {
        LatticeBox box{p, s, h};
        auto rep = successive_minima(box, p);
        i64 den = 3 * i64(h) * i64(h) * i64(h);
        for (int i = 0; i < 3; ++i) {
          CHECK(in_gamma(box, rep.witness[i]));
          // dilation(witness) == lambda_i exactly
          CHECK(dilation_num(box, rep.witness[i]) * rep.lambda[i].den ==
                rep.lambda[i].num * den);
          if (i) {
            // ascending
            CHECK(rep.lambda[i - 1].num * rep.lambda[i].den <=
                  rep.lambda[i].num * rep.lambda[i - 1].den);
          }
        }
        auto& w = rep.witness;
        i128 det = i128(w[0].u) * (i128(w[1].v) * w[2].w - i128(w[1].w) * w[2].v) -
                   i128(w[0].v) * (i128(w[1].u) * w[2].w - i128(w[1].w) * w[2].u) +
                   i128(w[0].w) * (i128(w[1].u) * w[2].v - i128(w[1].v) * w[2].u);
        CHECK(det != 0);
      }
}

TEST_CASE("successive minima agree with the sweep oracle") {
  for (u64 p : sieve_primes(50))
    for (u64 h : {1ull, 2ull})
      for (u64 s = 0; s < p; ++s) {
        LatticeBox box{p, s, h};
        auto rep = successive_minima(box, p);
        u64 region = u64((rep.lambda[2].num + rep.lambda[2].den - 1) / rep.lambda[2].den);
        auto expect = oracle_minima(box, std::max<u64>(region, 1));
        for (int i = 0; i < 3; ++i) CHECK(rep.lambda[i] == expect[i]);
      }
}

TEST_CASE("lambda cap failure raises") {
  // s = 0, h = 1: the third minimum is p, far past a cap of 2
  CHECK_THROWS_AS((void)successive_minima({101, 0, 1}, 2), BudgetError);
}

TEST_CASE("point count bound prod(2i/lambda_i + 1)") {
  for (u64 p : {3ull, 5ull, 7ull, 11ull})
    for (u64 h : {1ull, 2ull})
      for (u64 s = 0; s < p; ++s) {
        LatticeBox box{p, s, h};
        u64 points = lattice_points_in_box(box);
        auto rep = successive_minima(box, p);
        mpq_class rhs = 1;
        for (int i = 0; i < 3; ++i) {
          // 2i/lambda_i + 1 with lambda_i = num/den
          mpq_class term(2 * (i + 1) * rep.lambda[i].den, rep.lambda[i].num);
          term.canonicalize();
          rhs *= term + 1;
        }
        CHECK(mpq_class(points) <= rhs);
      }
}

TEST_CASE("rational_reconstruct pinned examples") {
  auto r1 = rational_reconstruct(34, 101, 5, 10);
  REQUIRE(r1.has_value());
  CHECK(*r1 == std::pair<i64, i64>{3, 1});

  auto r2 = rational_reconstruct(50, 101, 4, 4);
  REQUIRE(r2.has_value());
  CHECK(*r2 == std::pair<i64, i64>{2, -1});

  auto r3 = rational_reconstruct(1, 11, 2, 2);
  REQUIRE(r3.has_value());
  CHECK(*r3 == std::pair<i64, i64>{1, 1});

  CHECK(rational_reconstruct(0, 101, 5, 10) == std::pair<i64, i64>{1, 0});
  CHECK_THROWS_AS((void)rational_reconstruct(34, 101, 10, 10), std::invalid_argument);
}

TEST_CASE("fraction instrumentation finds planted small fractions") {
  // s = (p+1)/2 satisfies 2s = 1 mod p
  u64 p = 10007, s = (p + 1) / 2;
  LatticeBox box{p, s, 3};
  auto triples = small_quadratic_relations(box);
  REQUIRE(!triples.empty());
  auto inst = fraction_instrumentation(box, triples.size());
  CHECK(inst.r == 2);
  CHECK(inst.t == 1);
  CHECK(inst.r_ratio > 0);
  // the reported pair really satisfies r s = t mod p
  i64 lhs = i64(mulmod(u64(inst.r), s, p));
  i64 rhs = ((inst.t % i64(p)) + i64(p)) % i64(p);
  CHECK(lhs == rhs);
  // s = 0 degenerates to the pair (1, 0)
  auto zero = fraction_instrumentation({10007, 0, 2}, 10);
  CHECK(zero.r == 1);
  CHECK(zero.t == 0);
}

TEST_CASE("rational_reconstruct matches exhaustive box search") {
  for (u64 p : sieve_primes(2000)) {
    if (p < 11) continue;  // no room for positive bounds under 2RT < p
    u64 R = std::min<u64>(5, (p - 1) / 4), T = std::max<u64>(1, p / (4 * R + 1));
    REQUIRE(2 * R * T < p);
    for (u64 s = 0; s < p; ++s) {
      // oracle: at most one signed representative per r
      std::vector<std::pair<i64, i64>> hits;
      for (u64 r = 1; r <= R; ++r) {
        u64 t0 = mulmod(r, s, p);
        i64 t;
        if (t0 <= T)
          t = i64(t0);
        else if (p - t0 <= T)
          t = -i64(p - t0);
        else
          continue;
        if (std::gcd(i64(r), t < 0 ? -t : t) == 1) hits.emplace_back(i64(r), t);
      }
      CHECK(hits.size() <= 1);
      auto got = rational_reconstruct(s, p, R, T);
      if (hits.empty()) {
        CHECK_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        CHECK(*got == hits[0]);
      }
    }
  }
}
