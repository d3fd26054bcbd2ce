// shortint: exact counters and censuses for multiplicative congruences with
// variables from short intervals, plus the lattice, polynomial, divisor and
// multiplicative-order utilities around them. Every subcommand emits one CSV
// report; identical invocations produce identical bytes.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "shortint/arith.hpp"
#include "shortint/config.hpp"
#include "shortint/counters.hpp"
#include "shortint/csv.hpp"
#include "shortint/lattice.hpp"
#include "shortint/multindep.hpp"
#include "shortint/order_scan.hpp"
#include "shortint/poly.hpp"
#include "shortint/shifted_stats.hpp"

using namespace shortint;

namespace {

struct ParamDef {
  std::string key;
  std::string help;
  bool required = false;
  std::string def;  // default value when not required
};

struct Args {
  std::map<std::string, std::string> kv;

  const std::string& raw(const std::string& key) const { return kv.at(key); }
  bool has(const std::string& key) const { return kv.count(key) > 0; }

  u64 get_u64(const std::string& key) const {
    const std::string& s = raw(key);
    try {
      size_t used = 0;
      unsigned long long v = std::stoull(s, &used);
      if (used != s.size() || s[0] == '-') throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("parameter '" + key + "': expected unsigned integer, got '" + s + "'");
    }
  }
  i64 get_i64(const std::string& key) const {
    const std::string& s = raw(key);
    try {
      size_t used = 0;
      long long v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("parameter '" + key + "': expected integer, got '" + s + "'");
    }
  }
  int get_int(const std::string& key) const {
    i64 v = get_i64(key);
    if (v < -(1ll << 30) || v > (1ll << 30))
      throw std::invalid_argument("parameter '" + key + "': out of range");
    return int(v);
  }
  double get_real(const std::string& key) const {
    const std::string& s = raw(key);
    try {
      size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw std::invalid_argument("parameter '" + key + "': expected real number, got '" + s + "'");
    }
  }
  std::vector<i64> get_i64_list(const std::string& key) const {
    std::vector<i64> out;
    std::istringstream in(raw(key));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        size_t used = 0;
        out.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("parameter '" + key + "': bad list element '" + tok + "'");
      }
    }
    if (out.empty()) throw std::invalid_argument("parameter '" + key + "': empty list");
    return out;
  }
  std::vector<u64> get_u64_list(const std::string& key) const {
    std::vector<u64> out;
    for (i64 v : get_i64_list(key)) {
      if (v < 0) throw std::invalid_argument("parameter '" + key + "': negative list element");
      out.push_back(u64(v));
    }
    return out;
  }
  CountMode get_mode(const std::string& key) const {
    const std::string& s = raw(key);
    if (s == "all") return CountMode::all;
    if (s == "disjoint") return CountMode::disjoint;
    if (s == "nontrivial") return CountMode::nontrivial;
    throw std::invalid_argument("parameter '" + key + "': expected all|disjoint|nontrivial");
  }
};

struct Subcommand {
  std::string name;
  std::string help;
  std::vector<ParamDef> params;
  std::function<CsvReport(const Args&, const Budget&, int workers)> run;
};

const std::vector<ParamDef> kCommonParams = {
    {"out", "output CSV path (default: stdout)"},
    {"config", "read 'key = value' defaults from this file; flags override"},
    {"workers", "worker threads for sweeps", false, "1"},
    {"seed", "seed echoed into the header (sampled experiments)", false, "0"},
    {"budget-entries", "histogram entry cap override"},
    {"budget-sieve", "sieve table cap override"},
    {"time-hint", "advisory wall-clock budget in seconds, echoed only"},
};

std::string z(const mpz_class& v) { return v.get_str(); }
std::string frac_str(const Frac& f) {
  return f.den == 1 ? std::to_string(f.num) : std::to_string(f.num) + "/" + std::to_string(f.den);
}

std::string echo_line(const Subcommand& sub, const Args& args) {
  std::string s;
  for (const auto& p : sub.params) {
    if (p.key == "out" || p.key == "config") continue;
    if (args.has(p.key)) s += (s.empty() ? "" : " ") + p.key + "=" + args.raw(p.key);
  }
  return s;
}

IntPolynomial poly_from_arg(const Args& args, const std::string& key) {
  std::vector<mpz_class> c;
  std::istringstream in(args.raw(key));
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      c.emplace_back(tok);
    } catch (...) {
      throw std::invalid_argument("parameter '" + key + "': bad coefficient '" + tok + "'");
    }
  }
  return IntPolynomial(std::move(c));
}

std::vector<Subcommand> build_subcommands() {
  std::vector<Subcommand> subs;

  subs.push_back({"count-k",
                  "solutions of (x1+s)...(xnu+s) = (y1+s)...(ynu+s) != 0 mod p",
                  {{"p", "prime modulus", true},
                   {"h", "interval length", true},
                   {"s", "shift", true},
                   {"nu", "factors per side", true},
                   {"mode", "all|disjoint|nontrivial", false, "all"}},
                  [](const Args& a, const Budget& b, int) {
                    auto ctx = PrimeContext::make(a.get_u64("p"), b);
                    CountQuery q{a.get_int("nu"), a.get_u64("h"), a.get_u64("s"), a.get_mode("mode")};
                    CountResult r = count_k_congruence(ctx, q, b);
                    CsvReport rep;
                    rep.schema = "count-k/v1";
                    rep.columns = {"p", "h", "s", "nu", "mode", "total", "trivial", "nontrivial"};
                    rep.rows = {std::to_string(ctx.p) + "," + a.raw("h") + "," + std::to_string(q.s) +
                                "," + a.raw("nu") + "," + a.raw("mode") + "," + z(r.total) + "," +
                                z(r.trivial) + "," + z(r.nontrivial)};
                    return rep;
                  }});

  subs.push_back({"count-k-gen",
                  "solutions of prod (x_j+s_j)^(e_j) = 1 mod p over 2*nu variables",
                  {{"p", "prime modulus", true},
                   {"nu", "half the variable count", true},
                   {"e", "2*nu exponents in {-1,1}, comma separated", true},
                   {"hvec", "2*nu interval lengths", true},
                   {"svec", "2*nu shifts", true}},
                  [](const Args& a, const Budget& b, int) {
                    auto ctx = PrimeContext::make(a.get_u64("p"), b);
                    GeneralizedQuery g;
                    g.nu = a.get_int("nu");
                    for (i64 e : a.get_i64_list("e")) g.exponents.push_back(int(e));
                    g.lengths = a.get_u64_list("hvec");
                    g.shifts = a.get_u64_list("svec");
                    mpz_class c = count_k_generalized(ctx, g, b);
                    CsvReport rep;
                    rep.schema = "count-k-gen/v1";
                    rep.columns = {"p", "nu", "count"};
                    rep.rows = {std::to_string(ctx.p) + "," + a.raw("nu") + "," + z(c)};
                    return rep;
                  }});

  subs.push_back({"count-asym",
                  "solutions of (x1+s)...(xnu+s) = lambda mod p",
                  {{"p", "prime modulus", true},
                   {"h", "interval length", true},
                   {"s", "shift", true},
                   {"nu", "factor count", true},
                   {"lambda", "target residues, nonzero, comma separated", true}},
                  [](const Args& a, const Budget& b, int) {
                    auto ctx = PrimeContext::make(a.get_u64("p"), b);
                    auto lambdas = a.get_u64_list("lambda");
                    // one histogram serves every requested lambda
                    auto hist = ProductHistogram::build(ctx, a.get_u64("h"), a.get_u64("s"),
                                                        a.get_int("nu"), b);
                    CsvReport rep;
                    rep.schema = "count-asym/v1";
                    rep.columns = {"p", "h", "s", "nu", "lambda", "count"};
                    for (u64 lam : lambdas) {
                      require(lam % ctx.p != 0, "parameter 'lambda': must be nonzero mod p");
                      rep.rows.push_back(std::to_string(ctx.p) + "," + a.raw("h") + "," +
                                         a.raw("s") + "," + a.raw("nu") + "," +
                                         std::to_string(lam) + "," +
                                         std::to_string(hist.multiplicity(lam % ctx.p)));
                    }
                    return rep;
                  }});

  subs.push_back({"count-rational",
                  "equal exact products prod (x_i r + t) = prod (y_i r + t) != 0",
                  {{"h", "interval length", true},
                   {"nu", "factors per side", true},
                   {"r", "shift denominator, >= 1", true},
                   {"t", "shift numerator", true},
                   {"mode", "all|disjoint|nontrivial", false, "all"}},
                  [](const Args& a, const Budget& b, int) {
                    i64 r = a.get_i64("r"), t = a.get_i64("t");
                    CountResult res =
                        count_k_rational(a.get_u64("h"), a.get_int("nu"), r, t, a.get_mode("mode"), b);
                    if (t != 0) {
                      i64 g = std::gcd(r, t < 0 ? -t : t);
                      r /= g;
                      t /= g;
                    } else {
                      r = 1;
                    }
                    CsvReport rep;
                    rep.schema = "count-rational/v1";
                    rep.columns = {"h", "nu", "r", "t", "mode", "total", "trivial", "nontrivial"};
                    rep.rows = {a.raw("h") + "," + a.raw("nu") + "," + std::to_string(r) + "," +
                                std::to_string(t) + "," + a.raw("mode") + "," + z(res.total) + "," +
                                z(res.trivial) + "," + z(res.nontrivial)};
                    return rep;
                  }});

  subs.push_back({"trivial-count",
                  "pairs (x,y) in [1,h]^(2 nu) with y a permutation of x",
                  {{"h", "interval length", true}, {"nu", "tuple length", true}},
                  [](const Args& a, const Budget&, int) {
                    mpz_class c = trivial_count(a.get_u64("h"), a.get_int("nu"));
                    CsvReport rep;
                    rep.schema = "trivial-count/v1";
                    rep.columns = {"h", "nu", "count"};
                    rep.rows = {a.raw("h") + "," + a.raw("nu") + "," + z(c)};
                    return rep;
                  }});

  subs.push_back({"mult-table",
                  "multiplication table count N(h): quadruples uv = xy in [1,h]^4",
                  {{"h", "interval length", true}},
                  [](const Args& a, const Budget& b, int) {
                    u64 h = a.get_u64("h");
                    mpz_class n = mult_table_count(h, b);
                    CsvReport rep;
                    rep.schema = "mult-table/v1";
                    rep.columns = {"h", "count"};
                    rep.rows = {a.raw("h") + "," + z(n)};
                    if (h >= 2) {
                      double nd = mpz_get_d(n.get_mpz_t());
                      double main = (12.0 / (M_PI * M_PI)) * double(h) * double(h) * std::log(double(h));
                      rep.aggregates.emplace_back("main_term_ratio", fmt_real(nd / main));
                      rep.aggregates.emplace_back(
                          "kappa_hat", fmt_real((nd - main) / (double(h) * double(h))));
                    }
                    return rep;
                  }});

  subs.push_back({"census-s",
                  "nontrivial counts for every shift s in F_p, flagging the band breakers",
                  {{"p", "prime modulus", true},
                   {"h", "interval length", true},
                   {"nu", "factors per side", true},
                   {"eps", "band exponent: flag when nontrivial > h^(nu-eps/2)", true}},
                  [](const Args& a, const Budget& b, int workers) {
                    auto ctx = PrimeContext::make(a.get_u64("p"), b);
                    SCensus c = exceptional_s_census(ctx, a.get_u64("h"), a.get_int("nu"),
                                                     a.get_real("eps"), workers, b);
                    CsvReport rep;
                    rep.schema = "census-s/v1";
                    rep.columns = {"s", "total", "trivial", "nontrivial", "exceptional"};
                    for (const auto& row : c.rows)
                      rep.rows.push_back(std::to_string(row.s) + "," + z(row.total) + "," +
                                         z(row.trivial) + "," + z(row.nontrivial) + "," +
                                         (row.exceptional ? "1" : "0"));
                    rep.aggregates.emplace_back("band", fmt_real(c.band));
                    rep.aggregates.emplace_back("exceptional", fmt_ratio(c.exceptional_count, ctx.p));
                    return rep;
                  }});

  subs.push_back({"product-set",
                  "cardinality of the nu-fold product set of {x+s : 1<=x<=h} mod p",
                  {{"p", "prime modulus", true},
                   {"s", "shift", true},
                   {"h", "interval length", true},
                   {"nu", "product length", true}},
                  [](const Args& a, const Budget& b, int) {
                    auto ctx = PrimeContext::make(a.get_u64("p"), b);
                    u64 size = product_set_size(ctx, a.get_u64("s"), a.get_u64("h"), a.get_int("nu"), b);
                    CsvReport rep;
                    rep.schema = "product-set/v1";
                    rep.columns = {"p", "s", "h", "nu", "size"};
                    rep.rows = {std::to_string(ctx.p) + "," + a.raw("s") + "," + a.raw("h") + "," +
                                a.raw("nu") + "," + std::to_string(size)};
                    return rep;
                  }});

  subs.push_back({"poly-res",
                  "resultant of two integer polynomials (coefficients leading first)",
                  {{"P", "comma separated coefficients", true},
                   {"Q", "comma separated coefficients", true},
                   {"ratio-exponent", "also report |Res| / H^exponent"}},
                  [](const Args& a, const Budget&, int) {
                    IntPolynomial P = poly_from_arg(a, "P"), Q = poly_from_arg(a, "Q");
                    mpz_class r = resultant(P, Q);
                    CsvReport rep;
                    rep.schema = "poly-res/v1";
                    rep.columns = {"resultant"};
                    rep.rows = {z(r)};
                    if (a.has("ratio-exponent"))
                      rep.aggregates.emplace_back(
                          "height_ratio",
                          fmt_real(resultant_height_ratio(P, Q, a.get_real("ratio-exponent"))));
                    return rep;
                  }});

  subs.push_back({"poly-mahler",
                  "logarithmic height and Mahler measure of an integer polynomial",
                  {{"poly", "comma separated coefficients, leading first", true}},
                  [](const Args& a, const Budget&, int) {
                    IntPolynomial p = poly_from_arg(a, "poly");
                    CsvReport rep;
                    rep.schema = "poly-mahler/v1";
                    rep.columns = {"degree", "height", "mahler"};
                    rep.rows = {std::to_string(p.degree()) + "," + fmt_real(height(p)) + "," +
                                fmt_real(mahler_measure(p))};
                    return rep;
                  }});

  subs.push_back({"lattice-minima",
                  "successive minima of the box (3h, 3h^2, h^3) wrt {us^2+vs+w = 0 mod p}",
                  {{"p", "prime modulus", true},
                   {"s", "shift", true},
                   {"h", "scale", true},
                   {"lambda-cap", "largest dilation searched", false, "8"}},
                  [](const Args& a, const Budget& b, int) {
                    LatticeBox box{a.get_u64("p"), a.get_u64("s"), a.get_u64("h")};
                    MinimaReport m = successive_minima(box, a.get_u64("lambda-cap"), b);
                    CsvReport rep;
                    rep.schema = "lattice-minima/v1";
                    rep.columns = {"p", "s", "h", "lambda1", "lambda2", "lambda3",
                                   "u1", "v1", "w1", "u2", "v2", "w2", "u3", "v3", "w3"};
                    std::string row = a.raw("p") + "," + a.raw("s") + "," + a.raw("h");
                    for (int i = 0; i < 3; ++i) row += "," + frac_str(m.lambda[i]);
                    for (int i = 0; i < 3; ++i)
                      row += "," + std::to_string(m.witness[i].u) + "," +
                             std::to_string(m.witness[i].v) + "," + std::to_string(m.witness[i].w);
                    rep.rows = {row};
                    return rep;
                  }});

  subs.push_back({"quad-relations",
                  "nonzero triples |U|<=3h, |V|<=3h^2, |W|<=h^3 with Us^2+Vs+W = 0 mod p",
                  {{"p", "prime modulus", true}, {"s", "shift", true}, {"h", "scale", true}},
                  [](const Args& a, const Budget& b, int) {
                    LatticeBox box{a.get_u64("p"), a.get_u64("s"), a.get_u64("h")};
                    auto triples = small_quadratic_relations(box, b);
                    CsvReport rep;
                    rep.schema = "quad-relations/v1";
                    rep.columns = {"U", "V", "W"};
                    for (const auto& t : triples)
                      rep.rows.push_back(std::to_string(t.u) + "," + std::to_string(t.v) + "," +
                                         std::to_string(t.w));
                    rep.aggregates.emplace_back("count", std::to_string(triples.size()));
                    if (!triples.empty()) {
                      // observed constants for the small-fraction conclusion
                      auto inst = fraction_instrumentation(box, triples.size());
                      rep.aggregates.emplace_back("hypothesis_ratio",
                                                  fmt_real(inst.hypothesis_ratio));
                      rep.aggregates.emplace_back("best_r", std::to_string(inst.r));
                      rep.aggregates.emplace_back("best_t", std::to_string(inst.t));
                      rep.aggregates.emplace_back("r_ratio", fmt_real(inst.r_ratio));
                      rep.aggregates.emplace_back("t_ratio", fmt_real(inst.t_ratio));
                    }
                    return rep;
                  }});

  subs.push_back({"rat-recon",
                  "unique r*s = t mod p with 0 < r <= rbound, |t| <= tbound, gcd(r,t)=1",
                  {{"p", "prime modulus", true},
                   {"s", "residue to reconstruct", true},
                   {"rbound", "denominator bound", true},
                   {"tbound", "numerator bound", true}},
                  [](const Args& a, const Budget&, int) {
                    auto rt = rational_reconstruct(a.get_u64("s"), a.get_u64("p"),
                                                   a.get_u64("rbound"), a.get_u64("tbound"));
                    CsvReport rep;
                    rep.schema = "rat-recon/v1";
                    rep.columns = {"p", "s", "rbound", "tbound", "found", "r", "t"};
                    std::string row = a.raw("p") + "," + a.raw("s") + "," + a.raw("rbound") + "," +
                                      a.raw("tbound");
                    if (rt)
                      row += ",1," + std::to_string(rt->first) + "," + std::to_string(rt->second);
                    else
                      row += ",0,,";
                    rep.rows = {row};
                    return rep;
                  }});

  subs.push_back({"multindep",
                  "greedy multiplicatively independent subset of [a, a+m)",
                  {{"a", "window start, >= 2", true}, {"m", "window length", true}},
                  [](const Args& a, const Budget& b, int) {
                    IndependentSet set = greedy_independent(a.get_u64("a"), a.get_u64("m"), b);
                    CsvReport rep;
                    rep.schema = "multindep/v1";
                    rep.columns = {"x", "witness_prime"};
                    for (size_t i = 0; i < set.elements.size(); ++i)
                      rep.rows.push_back(std::to_string(set.elements[i]) + "," +
                                         std::to_string(set.witness_primes[i]));
                    rep.aggregates.emplace_back("size", std::to_string(set.elements.size()));
                    rep.aggregates.emplace_back(
                        "rank", std::to_string(independence_rank(set.elements, b)));
                    return rep;
                  }});

  subs.push_back({"covered-run",
                  "longest run of consecutive integers divisible by one of the primes",
                  {{"primes", "comma separated primes", true},
                   {"lo", "window start", true},
                   {"hi", "window end, inclusive", true}},
                  [](const Args& a, const Budget& b, int) {
                    auto primes = a.get_u64_list("primes");
                    u64 run = covered_run_length(primes, a.get_u64("lo"), a.get_u64("hi"), b);
                    CsvReport rep;
                    rep.schema = "covered-run/v1";
                    rep.columns = {"lo", "hi", "max_run"};
                    rep.rows = {a.raw("lo") + "," + a.raw("hi") + "," + std::to_string(run)};
                    return rep;
                  }});

  subs.push_back(
      {"shifted-stats",
       "divisor statistics of p-1 over primes p <= T",
       {{"census", "middle|smooth|numdiv|square|mertens", true},
        {"T", "sweep bound", true},
        {"eta", "middle: divisor window exponent half-width"},
        {"alpha", "smooth/numdiv/square/mertens: lower exponent"},
        {"beta", "numdiv/mertens: upper exponent"},
        {"gamma", "smooth: cutoff exponent"},
        {"lambda", "numdiv: census slack factor"},
        {"squarefree", "smooth: 1 = multiply each small prime once", false, "0"}},
       [](const Args& a, const Budget& b, int workers) {
         std::string census = a.raw("census");
         u64 T = a.get_u64("T");
         CsvReport rep;
         rep.schema = "shifted-stats-" + census + "/v1";
         auto need = [&](const char* key) {
           if (!a.has(key))
             throw std::invalid_argument("census '" + census + "' requires parameter '" + key + "'");
         };
         if (census == "mertens") {
           need("alpha"), need("beta");
           MertensWindow w = mertens_window(T, a.get_real("alpha"), a.get_real("beta"), b);
           rep.columns = {"sum", "log_ratio", "gap"};
           rep.rows = {fmt_real(w.prime_reciprocal_sum) + "," + fmt_real(w.log_ratio) + "," +
                       fmt_real(w.gap)};
           return rep;
         }
         ShiftedCensus c;
         if (census == "middle") {
           need("eta");
           c = middle_divisor_census(T, a.get_real("eta"), workers, b);
         } else if (census == "smooth") {
           need("alpha"), need("gamma");
           c = smooth_part_census(T, a.get_real("alpha"), a.get_real("gamma"),
                                  a.get_u64("squarefree") == 0, workers, b);
         } else if (census == "numdiv") {
           need("alpha"), need("beta"), need("lambda");
           c = large_prime_divisor_census(T, a.get_real("alpha"), a.get_real("beta"),
                                          a.get_real("lambda"), workers, b);
         } else if (census == "square") {
           need("alpha");
           c = square_divisor_census(T, a.get_real("alpha"), workers, b);
         } else {
           throw std::invalid_argument("parameter 'census': unknown census '" + census + "'");
         }
         rep.columns = {"p", "statistic", "flag"};
         for (const auto& row : c.rows)
           rep.rows.push_back(std::to_string(row.p) + "," + std::to_string(row.statistic) + "," +
                              (row.flag ? "1" : "0"));
         rep.aggregates.emplace_back("flagged", fmt_ratio(c.flagged, c.total));
         return rep;
       }});

  subs.push_back(
      {"order-scan",
       "per-prime max multiplicative order over the interval [a, a+m)",
       {{"T", "sweep bound", true},
        {"m", "interval length", true},
        {"a", "interval start: an integer, or 'rand' for a seeded per-prime start", true},
        {"threshold", "comma separated: psqrt|ppow:c|tpow:c|em:mu|sqrtht", false, "psqrt"}},
       [](const Args& a, const Budget& b, int workers) {
         std::vector<ThresholdSpec> specs;
         std::istringstream in(a.raw("threshold"));
         std::string tok;
         while (std::getline(in, tok, ',')) specs.push_back(ThresholdSpec::parse(tok));
         AnchorSpec anchor;
         if (a.raw("a") == "rand") {
           anchor.random = true;
           anchor.seed = a.get_u64("seed");
         } else {
           anchor.fixed = a.get_u64("a");
         }
         OrderSweepReport r = order_sweep(a.get_u64("T"), a.get_u64("m"), anchor, specs, workers, b);
         CsvReport rep;
         rep.schema = "order-scan/v1";
         rep.columns = {"p", "max_order", "argmax"};
         for (const auto& label : r.threshold_labels) rep.columns.push_back("exc_" + label);
         for (const auto& row : r.rows) {
           std::string line = std::to_string(row.p) + "," + std::to_string(row.max_order) + "," +
                              std::to_string(row.argmax);
           for (bool ex : row.exceeded) line += ex ? ",0" : ",1";
           rep.rows.push_back(line);
         }
         for (size_t k = 0; k < r.threshold_labels.size(); ++k)
           rep.aggregates.emplace_back("exceptional_" + r.threshold_labels[k],
                                       std::to_string(r.exceptional_counts[k]));
         rep.aggregates.emplace_back("skipped", std::to_string(r.skipped));
         return rep;
       }});

  return subs;
}

void print_usage(const std::vector<Subcommand>& subs) {
  std::cout << "usage: shortint <subcommand> [--key value ...]\n\n"
               "subcommands:\n";
  for (const auto& s : subs) std::cout << "  " << s.name << "\n      " << s.help << "\n";
  std::cout << "\ncommon flags: ";
  for (size_t i = 0; i < kCommonParams.size(); ++i)
    std::cout << (i ? ", " : "") << "--" << kCommonParams[i].key;
  std::cout << "\nrun 'shortint <subcommand> --help' for its parameters\n";
}

void print_sub_usage(const Subcommand& sub) {
  std::cout << "usage: shortint " << sub.name << " [--key value ...]\n  " << sub.help << "\n\n";
  for (const auto& p : sub.params) {
    std::cout << "  --" << p.key << (p.required ? "  (required)" : "") << "\n      " << p.help;
    if (!p.def.empty()) std::cout << " [default: " << p.def << "]";
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  auto subs = build_subcommands();
  for (auto& s : subs)
    for (const auto& c : kCommonParams) s.params.push_back(c);

  if (argc < 2 || std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h") {
    print_usage(subs);
    return argc < 2 ? 1 : 0;
  }
  std::string name = argv[1];
  const Subcommand* sub = nullptr;
  for (const auto& s : subs)
    if (s.name == name) sub = &s;
  if (!sub) {
    std::cerr << "error: unknown subcommand '" << name << "'\n";
    return 1;
  }

  auto find_param = [&](const std::string& key) -> const ParamDef* {
    for (const auto& p : sub->params)
      if (p.key == key) return &p;
    return nullptr;
  };

  Args args;
  for (int i = 2; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--help" || arg == "-h") {
      print_sub_usage(*sub);
      return 0;
    }
    if (arg.rfind("--", 0) != 0)
      throw std::invalid_argument("expected --key, got '" + arg + "'");
    std::string key = arg.substr(2);
    if (!find_param(key)) throw std::invalid_argument("unknown parameter '--" + key + "'");
    if (i + 1 >= argc) throw std::invalid_argument("parameter '--" + key + "' needs a value");
    args.kv[key] = argv[++i];
  }

  // config file values fill anything the command line left unset
  if (args.has("config")) {
    for (const auto& entry : parse_config_file(args.raw("config"))) {
      if (!find_param(entry.key))
        throw std::invalid_argument("config line " + std::to_string(entry.line) +
                                    ": unknown key '" + entry.key + "'");
      args.kv.emplace(entry.key, entry.value);
    }
  }
  for (const auto& p : sub->params) {
    if (!args.has(p.key) && !p.def.empty()) args.kv[p.key] = p.def;
    if (p.required && !args.has(p.key))
      throw std::invalid_argument("missing required parameter '--" + p.key + "'");
  }

  Budget budget = Budget::from_env();
  if (args.has("budget-entries")) budget.histogram_entries = args.get_u64("budget-entries");
  if (args.has("budget-sieve")) budget.sieve_limit = args.get_u64("budget-sieve");
  int workers = args.get_int("workers");
  require(workers >= 1, "parameter 'workers': must be >= 1");

  CsvReport report = sub->run(args, budget, workers);
  report.schema = report.schema.empty() ? sub->name + "/v1" : report.schema;
  report.spec_echo = echo_line(*sub, args);
  if (args.has("out"))
    report.write_atomic(args.raw("out"));
  else
    std::cout << report.to_string();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
