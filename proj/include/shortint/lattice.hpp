#pragma once

#include <array>
#include <optional>
#include <vector>

#include "shortint/budget.hpp"

namespace shortint {

// The body D = {|u| <= 3h, |v| <= 3h^2, |w| <= h^3} and the lattice
// Gamma = {(u,v,w) : u s^2 + v s + w = 0 mod p}. Gamma has index p in Z^3 and
// always contains (0,0,p).
struct LatticeBox {
  u64 p;
  u64 s;
  u64 h;
};

struct Triple {
  i64 u, v, w;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct Frac {
  i64 num = 0;
  i64 den = 1;  // reduced, den > 0
  friend bool operator==(const Frac&, const Frac&) = default;
};

struct MinimaReport {
  std::array<Frac, 3> lambda;     // ascending successive minima of D wrt Gamma
  std::array<Triple, 3> witness;  // independent vectors, witness[i] in lambda[i]*D
};

// All nonzero lattice triples inside D, by iterating (U,V) and listing the
// in-box representatives of the forced residue class of W.
std::vector<Triple> small_quadratic_relations(const LatticeBox& box,
                                              const Budget& budget = {});

// #(D cap Gamma), origin included (the left side of the point-count bound).
u64 lattice_points_in_box(const LatticeBox& box, const Budget& budget = {});

// Exact successive minima by enumerating expanding dilates of D and greedily
// collecting independent vectors in increasing dilation order. Dilation keys
// are exact rationals; ties break lexicographically on (u,v,w).
MinimaReport successive_minima(const LatticeBox& box, u64 lambda_cap = 8,
                               const Budget& budget = {});

// The unique (r, t) with 0 < r <= r_bound, |t| <= t_bound, gcd(r,t) = 1 and
// r*s = t mod p, when it exists; found by the truncated Euclidean remainder
// sequence on (p, s). Requires 2*r_bound*t_bound < p so the answer is unique.
std::optional<std::pair<i64, i64>> rational_reconstruct(u64 s, u64 p, u64 r_bound,
                                                        u64 t_bound);

// Observed constants for the small-fraction conclusion, given the number T of
// quadratic relations the shift satisfies. Walks every convergent of (p, s)
// and reports the one minimizing max(|r| sqrt(T)/h^1.5, |t| sqrt(T)/h^2.5);
// the implied constants are ineffective, so these are measurements, not
// assertions.
struct FractionInstrumentation {
  i64 r, t;                 // best convergent, r*s = t mod p, r > 0
  double r_ratio;           // |r| sqrt(T) / h^1.5
  double t_ratio;           // |t| sqrt(T) / h^2.5
  double hypothesis_ratio;  // T / max(h, h^4/sqrt(p), h^6/p)
};

FractionInstrumentation fraction_instrumentation(const LatticeBox& box, u64 relation_count);

}  // namespace shortint
