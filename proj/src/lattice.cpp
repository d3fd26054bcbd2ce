#include "shortint/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shortint/arith.hpp"

namespace shortint {

namespace {

struct BoxGeom {
  u64 p, s, h;
  i64 ub, vb, wb;  // half-widths 3h, 3h^2, h^3
  u64 s2;          // s^2 mod p

  explicit BoxGeom(const LatticeBox& box) : p(box.p), s(box.s % box.p), h(box.h) {
    require(box.p >= 2, "lattice: p must be >= 2");
    require(box.h >= 1, "lattice: h must be >= 1");
    require(box.h <= 1'000'000, "lattice: h too large for exact i64 keys");
    ub = i64(3 * h);
    vb = i64(3 * h * h);
    wb = i64(h * h * h);
    s2 = mulmod(s, s, p);
  }

  // residue class that w must lie in for (u,v,w) in Gamma
  u64 w_class(i64 u, i64 v) const {
    u64 um = u64(((u % i64(p)) + i64(p))) % p;
    u64 vm = u64(((v % i64(p)) + i64(p))) % p;
    u64 val = (mulmod(um, s2, p) + mulmod(vm, s, p)) % p;
    return (p - val) % p;  // w = -(u s^2 + v s) mod p
  }

  // visit every w in [-wcap, wcap] with w = cls mod p
  template <class F>
  void each_w(u64 cls, i64 wcap, F&& fn) const {
    i64 w = i64(cls);
    w -= ((w + wcap) / i64(p)) * i64(p);
    while (w < -wcap) w += i64(p);
    for (; w <= wcap; w += i64(p)) fn(w);
  }
};

i64 iabs(i64 v) { return v < 0 ? -v : v; }

// dilation key over the common denominator 3h^3:
// max(|u|/3h, |v|/3h^2, |w|/h^3) = max(|u| h^2, |v| h, 3|w|) / (3 h^3)
i64 key_num(const BoxGeom& g, i64 u, i64 v, i64 w) {
  i64 a = iabs(u) * i64(g.h) * i64(g.h);
  i64 b = iabs(v) * i64(g.h);
  i64 c = 3 * iabs(w);
  return std::max({a, b, c});
}

i128 det3(const Triple& a, const Triple& b, const Triple& c) {
  return i128(a.u) * (i128(b.v) * c.w - i128(b.w) * c.v) -
         i128(a.v) * (i128(b.u) * c.w - i128(b.w) * c.u) +
         i128(a.w) * (i128(b.u) * c.v - i128(b.v) * c.u);
}

bool independent_of(const std::vector<Triple>& chosen, const Triple& c) {
  if (chosen.empty()) return true;
  if (chosen.size() == 1) {
    const Triple& a = chosen[0];
    return i128(a.v) * c.w != i128(a.w) * c.v || i128(a.u) * c.w != i128(a.w) * c.u ||
           i128(a.u) * c.v != i128(a.v) * c.u;
  }
  return det3(chosen[0], chosen[1], c) != 0;
}

}  // namespace

std::vector<Triple> small_quadratic_relations(const LatticeBox& box, const Budget& budget) {
  BoxGeom g(box);
  check_budget(u128(2 * g.ub + 1) * u128(2 * g.vb + 1) <= budget.enumeration,
               "small_quadratic_relations: (U,V) enumeration exceeds cap");
  std::vector<Triple> out;
  for (i64 u = -g.ub; u <= g.ub; ++u)
    for (i64 v = -g.vb; v <= g.vb; ++v) {
      u64 cls = g.w_class(u, v);
      g.each_w(cls, g.wb, [&](i64 w) {
        if (u == 0 && v == 0 && w == 0) return;
        out.push_back({u, v, w});
      });
    }
  return out;
}

u64 lattice_points_in_box(const LatticeBox& box, const Budget& budget) {
  BoxGeom g(box);
  check_budget(u128(2 * g.ub + 1) * u128(2 * g.vb + 1) <= budget.enumeration,
               "lattice_points_in_box: enumeration exceeds cap");
  u64 count = 0;
  for (i64 u = -g.ub; u <= g.ub; ++u)
    for (i64 v = -g.vb; v <= g.vb; ++v) {
      u64 cls = g.w_class(u, v);
      g.each_w(cls, g.wb, [&](i64) { ++count; });
    }
  return count;
}

MinimaReport successive_minima(const LatticeBox& box, u64 lambda_cap, const Budget& budget) {
  BoxGeom g(box);
  require(lambda_cap >= 1, "successive_minima: lambda_cap must be >= 1");
  struct Cand {
    i64 key;
    Triple t;
  };
  for (u64 shell = 1;; shell = std::min(shell * 2, lambda_cap)) {
    i64 ub = g.ub * i64(shell), vb = g.vb * i64(shell), wb = g.wb * i64(shell);
    check_budget(u128(2 * ub + 1) * u128(2 * vb + 1) <= budget.enumeration,
                 "successive_minima: enumeration exceeds cap");
    std::vector<Cand> cands;
    for (i64 u = -ub; u <= ub; ++u)
      for (i64 v = -vb; v <= vb; ++v) {
        u64 cls = g.w_class(u, v);
        g.each_w(cls, wb, [&](i64 w) {
          if (u == 0 && v == 0 && w == 0) return;
          cands.push_back({key_num(g, u, v, w), {u, v, w}});
        });
      }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.key != b.key) return a.key < b.key;
      if (a.t.u != b.t.u) return a.t.u < b.t.u;
      if (a.t.v != b.t.v) return a.t.v < b.t.v;
      return a.t.w < b.t.w;
    });
    std::vector<Triple> chosen;
    std::vector<i64> keys;
    for (const Cand& c : cands) {
      if (independent_of(chosen, c.t)) {
        chosen.push_back(c.t);
        keys.push_back(c.key);
        if (chosen.size() == 3) break;
      }
    }
    if (chosen.size() == 3) {
      MinimaReport rep;
      i64 den = 3 * i64(g.h) * i64(g.h) * i64(g.h);
      for (int i = 0; i < 3; ++i) {
        i64 gg = std::gcd(keys[i], den);
        rep.lambda[i] = Frac{keys[i] / gg, den / gg};
        rep.witness[i] = chosen[i];
      }
      return rep;
    }
    if (shell >= lambda_cap)
      throw BudgetError("successive_minima: fewer than 3 independent vectors within lambda cap");
  }
}

std::optional<std::pair<i64, i64>> rational_reconstruct(u64 s, u64 p, u64 r_bound,
                                                        u64 t_bound) {
  require(p >= 2, "rational_reconstruct: p must be >= 2");
  require(r_bound >= 1 && t_bound >= 1, "rational_reconstruct: bounds must be positive");
  require(u128(2) * r_bound * t_bound < p,
          "rational_reconstruct: need 2 * r_bound * t_bound < p for uniqueness");
  s %= p;
  // remainder sequence a_i = v_i * s (mod p), truncated at the first a_i <= t_bound
  i64 a0 = i64(p), a1 = i64(s);
  i64 v0 = 0, v1 = 1;
  while (a1 > i64(t_bound)) {
    i64 q = a0 / a1;
    i64 a2 = a0 - q * a1;
    i64 v2 = v0 - q * v1;
    a0 = a1;
    a1 = a2;
    v0 = v1;
    v1 = v2;
  }
  i64 r = v1 < 0 ? -v1 : v1;
  i64 t = v1 < 0 ? -a1 : a1;
  if (r == 0 || u64(r) > r_bound) return std::nullopt;
  if (std::gcd(r, t < 0 ? -t : t) != 1) return std::nullopt;
  return std::make_pair(r, t);
}

FractionInstrumentation fraction_instrumentation(const LatticeBox& box, u64 relation_count) {
  require(box.p >= 2, "fraction_instrumentation: p must be >= 2");
  require(relation_count >= 1, "fraction_instrumentation: need T >= 1");
  double h = double(box.h), sqrt_T = std::sqrt(double(relation_count));
  double r_scale = sqrt_T / std::pow(h, 1.5), t_scale = sqrt_T / std::pow(h, 2.5);
  FractionInstrumentation best{};
  double best_score = -1;
  auto consider = [&](i64 a, i64 v) {
    if (v == 0) return;
    i64 r = v < 0 ? -v : v, t = v < 0 ? -a : a;
    double score = std::max(double(r) * r_scale, std::abs(double(t)) * t_scale);
    if (best_score < 0 || score < best_score) {
      best_score = score;
      best.r = r;
      best.t = t;
      best.r_ratio = double(r) * r_scale;
      best.t_ratio = std::abs(double(t)) * t_scale;
    }
  };
  i64 a0 = i64(box.p), a1 = i64(box.s % box.p), v0 = 0, v1 = 1;
  consider(a1, v1);
  while (a1 > 0) {
    i64 q = a0 / a1;
    i64 a2 = a0 - q * a1, v2 = v0 - q * v1;
    a0 = a1;
    a1 = a2;
    v0 = v1;
    v1 = v2;
    if (a1 == 0) break;
    consider(a1, v1);
  }
  double p = double(box.p);
  double hypothesis = std::max({h, std::pow(h, 4) / std::sqrt(p), std::pow(h, 6) / p});
  best.hypothesis_ratio = double(relation_count) / hypothesis;
  return best;
}

}  // namespace shortint
