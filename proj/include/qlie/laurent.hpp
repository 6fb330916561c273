// Exact Laurent polynomials in the formal variable v with v^2 = q, and the
// symmetric q-combinatorics built on them. Exponents are stored in units of
// v so that q^(1/2)-powers stay integral for every root length that occurs.
#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "qlie/ratlin.hpp"

namespace qlie {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long constant) { set(0, BigInt(constant)); }
  explicit LaurentPoly(const BigInt& constant) { set(0, constant); }

  static LaurentPoly monomial(const BigInt& coeff, int vexp);

  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of v^vexp (zero when absent).
  BigInt coeff(int vexp) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  const std::map<int, BigInt>& terms() const { return coeffs_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return coeffs_ != o.coeffs_; }

  // The bar involution v^k -> v^-k.
  LaurentPoly bar() const;

  // Value at v = 1, i.e. the sum of coefficients (the classical limit).
  BigInt at_one() const;

  // Exact evaluation at a nonzero rational v.
  Rational eval_v(const Rational& v) const;
  // Evaluation at v = principal square root of a nonzero complex q.
  std::complex<double> eval_q(std::complex<double> q) const;

  // Canonical text form: terms sorted by descending exponent, printed in the
  // variable q when every v-exponent is even and in v otherwise.
  std::string str() const;

 private:
  void set(int vexp, const BigInt& c);
  std::map<int, BigInt> coeffs_;  // v-exponent -> nonzero coefficient

  friend std::optional<LaurentPoly> try_divide(const LaurentPoly& num,
                                               const LaurentPoly& den);
};

// Exact synthetic division; throws std::domain_error on nonzero remainder and
// std::invalid_argument on a zero divisor.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Same division, returning nullopt instead of throwing when not exact.
std::optional<LaurentPoly> try_divide(const LaurentPoly& num,
                                      const LaurentPoly& den);

// The symmetric quantum integer [m] in base q_i = v^length_sq, where
// length_sq is the squared length (alpha_i, alpha_i) of the attached simple
// root. m may be negative; [-m] = -[m].
LaurentPoly q_number(long m, int length_sq = 2);

// [n]! = prod_{m=1..n} [m]; [0]! = 1. Throws on negative n.
LaurentPoly q_factorial(long n, int length_sq = 2);

// [n]! / ([n-k]! [k]!); requires 0 <= k <= n. Always divides exactly.
LaurentPoly q_binomial(long n, long k, int length_sq = 2);

// Exact square root of a nonnegative rational when one exists.
std::optional<Rational> rational_sqrt(const Rational& x);

// Ratio of Laurent polynomials with a nonzero denominator. Common monomial
// and integer content factors are stripped on construction; equality is
// decided by cross-multiplication.
class QScalar {
 public:
  QScalar() : num_(), den_(1) {}
  QScalar(LaurentPoly num, LaurentPoly den);
  explicit QScalar(LaurentPoly num) : QScalar(std::move(num), LaurentPoly(1)) {}
  explicit QScalar(long constant) : QScalar(LaurentPoly(constant)) {}

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // 1/x; throws std::domain_error on zero.
  QScalar inverse() const;

  // Total exponent span of numerator plus denominator (0 for constants).
  long span() const;

  bool den_eval_zero(const Rational& v) const { return den_.eval_v(v) == 0; }

  QScalar operator+(const QScalar& o) const;
  QScalar operator-(const QScalar& o) const;
  QScalar operator-() const;
  QScalar operator*(const QScalar& o) const;
  QScalar operator/(const QScalar& o) const;  // throws on zero divisor
  bool operator==(const QScalar& o) const;
  bool operator!=(const QScalar& o) const { return !(*this == o); }

  // Exact value at rational v (denominator must not vanish there).
  Rational eval_v(const Rational& v) const;

  // Reduce to a Laurent polynomial; throws if the division is not exact.
  LaurentPoly to_poly() const { return divide_exact(num_, den_); }

  std::string str() const;

 private:
  LaurentPoly num_, den_;
};

}  // namespace qlie
