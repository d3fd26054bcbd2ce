#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "shortint/budget.hpp"

namespace shortint {

// Dense integer polynomial, leading coefficient first. The zero polynomial is
// the empty coefficient vector (degree -1); difference_polynomial produces it
// for permutation pairs, so it is a first-class value here.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);  // trims leading zeros
  static IntPolynomial from_ints(std::initializer_list<long> coeffs);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const { return c_.front(); }
  // coefficient of Z^(degree-j), i.e. j-th from the leading end
  const mpz_class& coeff_from_top(int j) const { return c_[j]; }

  mpz_class eval(const mpz_class& z) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  std::vector<mpz_class> c_;
};

// R(Z) = prod (Z + x_i) - prod (Z + y_i); the degree-nu terms cancel.
IntPolynomial difference_polynomial(std::span<const i64> x, std::span<const i64> y);

// Determinant of the Sylvester matrix, by fraction-free (Bareiss) elimination;
// zero iff P and Q share a nonconstant factor over Q. Throws on zero input.
mpz_class resultant(const IntPolynomial& P, const IntPolynomial& Q);

// Logarithmic height: log of the largest |coefficient|.
double height(const IntPolynomial& P);

// |leading| * prod max(1, |root|); roots located by simultaneous
// (Durand-Kerner) iteration started on the Cauchy bound circle, with a fixed
// iteration budget and an explicit reconstruction check.
double mahler_measure(const IntPolynomial& P);

std::vector<std::complex<double>> polynomial_roots(const IntPolynomial& P);

// Quotient of P by D when the division is exact over Z[Z], otherwise nullopt.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& P, const IntPolynomial& D);

// True iff P1 divides P exactly and every coefficient v_j of P1 (from the
// leading end) satisfies |v_j| <= C * A * h^j. Throws if P1 does not divide P.
bool check_factor_coeff_bounds(const IntPolynomial& P, const IntPolynomial& P1,
                               double A, double h, double C);

// |Res(P,Q)| / H^exponent, instrumentation for resultant growth experiments;
// H is the largest coefficient magnitude among P and Q.
double resultant_height_ratio(const IntPolynomial& P, const IntPolynomial& Q,
                              double exponent);

}  // namespace shortint
