#include "shortint/order_scan.hpp"

#include <cmath>
#include <optional>

#include "shortint/parallel.hpp"
#include "shortint/rng.hpp"

namespace shortint {

namespace {

u64 order_from_factors(u64 a, u64 p, const Factorization& pm1) {
  u64 d = p - 1;
  for (auto [q, e] : pm1.factors) {
    for (int i = 0; i < e; ++i) {
      if (d % q == 0 && powmod(a, d / q, p) == 1)
        d /= q;
      else
        break;
    }
  }
  return d;
}

std::optional<std::pair<u64, u64>> interval_max(u64 p, const Factorization& pm1, u64 start,
                                                u64 m) {
  u64 best = 0, arg = 0;
  bool found = false;
  for (u64 j = 0; j < m; ++j) {
    u64 xi = (start + j) % p;
    if (xi == 0) continue;
    u64 ord = order_from_factors(xi, p, pm1);
    // ties resolve to the smallest attaining residue (scan order can wrap)
    if (!found || ord > best || (ord == best && xi < arg)) {
      best = ord;
      arg = xi;
      found = true;
    }
  }
  if (!found) return std::nullopt;
  return std::make_pair(best, arg);
}

}  // namespace

OrderRecord interval_max_order(const PrimeContext& ctx, u64 start, u64 m) {
  require(m >= 1, "interval_max_order: m must be >= 1");
  auto r = interval_max(ctx.p, ctx.p_minus_1, start, m);
  require(r.has_value(), "interval_max_order: interval is empty after removing 0 mod p");
  return OrderRecord{ctx.p, start, m, r->first, r->second};
}

PairOrder consecutive_pair_order(const PrimeContext& ctx, u64 s) {
  s %= ctx.p;
  require(s != 0 && s + 1 != ctx.p, "consecutive_pair_order: s and s+1 must be nonzero mod p");
  PairOrder po{};
  po.ord_s = mult_order(s, ctx);
  po.ord_s1 = mult_order((s + 1) % ctx.p, ctx);
  po.max_order = std::max(po.ord_s, po.ord_s1);
  po.ord3_flag = po.ord_s == 3;
  return po;
}

double ThresholdSpec::eval(u64 p, u64 T, u64 m) const {
  switch (kind) {
    case Kind::p_pow:
      return std::pow(double(p), param);
    case Kind::T_pow:
      return std::pow(double(T), param);
    case Kind::erdos_murty:
      return std::pow(double(T), 1.0 - std::pow(double(m), -1.0 / param));
    case Kind::sqrt_hT:
      return std::sqrt(double(m) * double(T));
  }
  return 0;
}

namespace {

std::string trim_zeros(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string ThresholdSpec::label() const {
  switch (kind) {
    case Kind::p_pow:
      return "ppow" + trim_zeros(param) + ".v1";
    case Kind::T_pow:
      return "tpow" + trim_zeros(param) + ".v1";
    case Kind::erdos_murty:
      return "em" + trim_zeros(param) + ".v1";
    case Kind::sqrt_hT:
      return "sqrtht.v1";
  }
  return "";
}

ThresholdSpec ThresholdSpec::parse(const std::string& text) {
  auto num_after = [&](size_t pos) {
    require(pos < text.size(), "threshold: missing parameter in '" + text + "'");
    size_t used = 0;
    double v = std::stod(text.substr(pos), &used);
    require(pos + used == text.size(), "threshold: trailing junk in '" + text + "'");
    return v;
  };
  if (text == "psqrt") return {Kind::p_pow, 0.5};
  if (text == "sqrtht") return {Kind::sqrt_hT, 0};
  if (text.rfind("ppow:", 0) == 0) return {Kind::p_pow, num_after(5)};
  if (text.rfind("tpow:", 0) == 0) return {Kind::T_pow, num_after(5)};
  if (text.rfind("em:", 0) == 0) {
    double mu = num_after(3);
    require(mu > 0, "threshold: em requires mu > 0");
    return {Kind::erdos_murty, mu};
  }
  throw std::invalid_argument("threshold: unknown spec '" + text + "'");
}

OrderSweepReport order_sweep(u64 T, u64 m, const AnchorSpec& anchor,
                             std::span<const ThresholdSpec> thresholds, int workers,
                             const Budget& budget) {
  require(m >= 1, "order_sweep: m must be >= 1");
  auto primes = sieve_primes(T, budget);
  SmallFactorSieve sieve(T, budget);
  OrderSweepReport report;
  for (const auto& t : thresholds) report.threshold_labels.push_back(t.label());
  std::vector<std::optional<OrderSweepRow>> rows(primes.size());
  parallel_for(primes.size(), workers, [&](u64 i) {
    u64 p = primes[i];
    u64 start = anchor.random ? SplitMix64(anchor.seed, p).next() % p : anchor.fixed;
    auto r = interval_max(p, sieve.factorize(p - 1), start, m);
    if (!r) return;
    OrderSweepRow row{p, r->first, r->second, {}};
    row.exceeded.reserve(thresholds.size());
    for (const auto& t : thresholds)
      row.exceeded.push_back(double(row.max_order) > t.eval(p, T, m));
    rows[i] = std::move(row);
  });
  report.exceptional_counts.assign(thresholds.size(), 0);
  for (auto& row : rows) {
    if (!row) {
      ++report.skipped;
      continue;
    }
    for (size_t k = 0; k < thresholds.size(); ++k)
      if (!row->exceeded[k]) ++report.exceptional_counts[k];
    report.rows.push_back(std::move(*row));
  }
  return report;
}

}  // namespace shortint
