#include "shortint/poly.hpp"

#include <algorithm>
#include <cmath>

namespace shortint {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  c_.erase(c_.begin(), c_.begin() + lead);
}

IntPolynomial IntPolynomial::from_ints(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::eval(const mpz_class& z) const {
  mpz_class acc = 0;
  for (const auto& c : c_) acc = acc * z + c;
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<mpz_class> c(n, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[n - a.c_.size() + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[n - b.c_.size() + i] += b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<mpz_class> c(n, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) c[n - a.c_.size() + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[n - b.c_.size() + i] -= b.c_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial difference_polynomial(std::span<const i64> x, std::span<const i64> y) {
  auto expand = [](std::span<const i64> roots) {
    std::vector<mpz_class> c{1};
    for (i64 r : roots) {
      c.push_back(0);
      for (size_t i = c.size() - 1; i > 0; --i) c[i] += c[i - 1] * r;
    }
    return IntPolynomial(std::move(c));
  };
  return expand(x) - expand(y);
}

mpz_class resultant(const IntPolynomial& P, const IntPolynomial& Q) {
  require(!P.is_zero() && !Q.is_zero(), "resultant: zero polynomial");
  int m = P.degree(), n = Q.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), P.leading().get_mpz_t(), n);
    return r;
  }
  if (n == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), Q.leading().get_mpz_t(), m);
    return r;
  }
  // Sylvester matrix: n shifted copies of P above m shifted copies of Q
  int k = m + n;
  std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[i][i + j] = P.coeffs()[j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = Q.coeffs()[j];

  // Bareiss: one-step fraction-free elimination; every division is exact and
  // the pivots are subresultants, so intermediate growth stays polynomial
  int sign = 1;
  mpz_class prev = 1;
  for (int r = 0; r < k - 1; ++r) {
    if (a[r][r] == 0) {
      int swap_row = -1;
      for (int i = r + 1; i < k; ++i)
        if (a[i][r] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[r], a[swap_row]);
      sign = -sign;
    }
    for (int i = r + 1; i < k; ++i) {
      for (int j = r + 1; j < k; ++j) {
        mpz_class num = a[i][j] * a[r][r] - a[i][r] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][r] = 0;
    }
    prev = a[r][r];
  }
  return sign * a[k - 1][k - 1];
}

namespace {

double log_abs(const mpz_class& v) {
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(std::fabs(mant)) + double(exp2) * std::log(2.0);
}

double to_double(const mpz_class& v) { return mpz_get_d(v.get_mpz_t()); }

}  // namespace

double height(const IntPolynomial& P) {
  require(!P.is_zero(), "height: zero polynomial");
  mpz_class best = 0;
  for (const auto& c : P.coeffs()) {
    mpz_class a = abs(c);
    if (a > best) best = a;
  }
  return log_abs(best);
}

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& P) {
  require(!P.is_zero(), "roots: zero polynomial");
  int d = P.degree();
  std::vector<std::complex<double>> z;
  if (d == 0) return z;
  std::vector<std::complex<double>> c(d + 1);  // monic, leading first
  double lead = to_double(P.leading());
  for (int i = 0; i <= d; ++i) c[i] = to_double(P.coeffs()[i]) / lead;

  double cauchy = 1.0;
  for (int i = 1; i <= d; ++i) cauchy = std::max(cauchy, 1.0 + std::abs(c[i]));
  z.resize(d);
  for (int kk = 0; kk < d; ++kk) {
    double ang = 2.0 * M_PI * kk / d + 0.4;  // offset breaks real-axis symmetry
    z[kk] = cauchy * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  auto eval = [&](std::complex<double> v) {
    std::complex<double> acc = 0;
    for (auto& ci : c) acc = acc * v + ci;
    return acc;
  };
  const int kMaxIters = 800;
  bool settled = false;
  for (int it = 0; it < kMaxIters && !settled; ++it) {
    double max_step = 0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> denom = 1;
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= z[i] - z[j];
      std::complex<double> step = eval(z[i]) / denom;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    settled = max_step < 1e-14;
  }
  // certify by expanding prod (Z - z_i) back into coefficients
  std::vector<std::complex<double>> rec{1.0};
  for (int i = 0; i < d; ++i) {
    rec.push_back(0);
    for (size_t j = rec.size() - 1; j > 0; --j) rec[j] -= rec[j - 1] * z[i];
  }
  double scale = 0, err = 0;
  for (int i = 0; i <= d; ++i) scale = std::max(scale, std::abs(c[i]));
  for (int i = 0; i <= d; ++i) err = std::max(err, std::abs(rec[i] - c[i]));
  if (!(err <= 1e-8 * scale))
    throw ConvergenceError("polynomial_roots: iteration budget exhausted without certified roots");
  return z;
}

double mahler_measure(const IntPolynomial& P) {
  require(!P.is_zero(), "mahler_measure: zero polynomial");
  double m = std::fabs(to_double(P.leading()));
  for (auto& root : polynomial_roots(P)) m *= std::max(1.0, std::abs(root));
  return m;
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& P, const IntPolynomial& D) {
  require(!D.is_zero(), "exact_divide: division by zero polynomial");
  if (P.is_zero()) return IntPolynomial();
  if (P.degree() < D.degree()) return std::nullopt;
  std::vector<mpz_class> rem = P.coeffs();
  int dd = D.degree();
  std::vector<mpz_class> quot(P.degree() - dd + 1);
  for (size_t i = 0; i + dd < rem.size(); ++i) {
    if (!mpz_divisible_p(rem[i].get_mpz_t(), D.leading().get_mpz_t())) return std::nullopt;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), rem[i].get_mpz_t(), D.leading().get_mpz_t());
    quot[i] = q;
    for (int j = 0; j <= dd; ++j) rem[i + j] -= q * D.coeffs()[j];
  }
  for (size_t i = quot.size() - 1 + dd; i < rem.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

bool check_factor_coeff_bounds(const IntPolynomial& P, const IntPolynomial& P1,
                               double A, double h, double C) {
  auto quotient = exact_divide(P, P1);
  require(quotient.has_value(), "check_factor_coeff_bounds: P1 does not divide P");
  for (int j = 0; j <= P1.degree(); ++j) {
    double bound = C * A * std::pow(h, double(j));
    if (mpz_cmpabs_d(P1.coeff_from_top(j).get_mpz_t(), bound) > 0) return false;
  }
  return true;
}

double resultant_height_ratio(const IntPolynomial& P, const IntPolynomial& Q,
                              double exponent) {
  mpz_class res = resultant(P, Q);
  if (res == 0) return 0.0;
  mpz_class big = 0;
  for (const auto& c : P.coeffs()) big = std::max(big, mpz_class(abs(c)));
  for (const auto& c : Q.coeffs()) big = std::max(big, mpz_class(abs(c)));
  double log_ratio = log_abs(res) - exponent * log_abs(big);
  return std::exp(log_ratio);
}

}  // namespace shortint
