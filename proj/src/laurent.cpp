#include "qlie/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qlie {

void LaurentPoly::set(int vexp, const BigInt& c) {
  if (c == 0)
    coeffs_.erase(vexp);
  else
    coeffs_[vexp] = c;
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int vexp) {
  LaurentPoly p;
  p.set(vexp, coeff);
  return p;
}

BigInt LaurentPoly::coeff(int vexp) const {
  auto it = coeffs_.find(vexp);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) {
      int e = e1 + e2;
      r.set(e, r.coeff(e) + c1 * c2);
    }
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

BigInt LaurentPoly::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

Rational LaurentPoly::eval_v(const Rational& v) const {
  if (v == 0) throw std::invalid_argument("eval_v: v must be nonzero");
  if (coeffs_.empty()) return Rational(0);
  // Horner over descending exponents, then one power of v for the offset.
  Rational acc = 0;
  int prev = max_exp();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc *= v;
    acc += Rational(it->second);
    prev = it->first;
  }
  int low = min_exp();
  Rational vpow = 1;
  for (int k = 0; k < std::abs(low); ++k) vpow *= v;
  if (low >= 0) return Rational(acc * vpow);
  return Rational(acc / vpow);
}

std::complex<double> LaurentPoly::eval_q(std::complex<double> q) const {
  if (q == std::complex<double>(0.0, 0.0))
    throw std::invalid_argument("eval_q: q must be nonzero");
  std::complex<double> v = std::sqrt(q);
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : coeffs_) s += c.get_d() * std::pow(v, e);
  return s;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  bool all_even = true;
  for (const auto& [e, c] : coeffs_)
    if (e % 2 != 0) all_even = false;
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    int exp = all_even ? it->first / 2 : it->first;
    BigInt c = it->second;
    bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string var = all_even ? "q" : "v";
    if (exp == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str();
      out << var;
      if (exp != 1) out << "^" << exp;
    }
  }
  return out.str();
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& num,
                                      const LaurentPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("divide: zero divisor");
  if (num.is_zero()) return LaurentPoly();
  int na = num.min_exp(), nb = num.max_exp();
  int da = den.min_exp(), db = den.max_exp();
  // Shift both operands to ordinary polynomials and long-divide from the top.
  std::vector<BigInt> p(nb - na + 1), d(db - da + 1);
  for (const auto& [e, c] : num.terms()) p[e - na] = c;
  for (const auto& [e, c] : den.terms()) d[e - da] = c;
  int dp = static_cast<int>(p.size()) - 1, dd = static_cast<int>(d.size()) - 1;
  if (dp < dd) return std::nullopt;
  std::vector<BigInt> quot(dp - dd + 1);
  for (int i = dp - dd; i >= 0; --i) {
    BigInt lead = p[i + dd];
    if (lead == 0) continue;
    BigInt qc, rc;
    mpz_tdiv_qr(qc.get_mpz_t(), rc.get_mpz_t(), lead.get_mpz_t(), d[dd].get_mpz_t());
    if (rc != 0) return std::nullopt;
    quot[i] = qc;
    for (int j = 0; j <= dd; ++j) p[i + j] -= qc * d[j];
  }
  for (const auto& c : p)
    if (c != 0) return std::nullopt;
  LaurentPoly result;
  for (size_t i = 0; i < quot.size(); ++i)
    if (quot[i] != 0) result.set(static_cast<int>(i) + na - da, quot[i]);
  return result;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  std::optional<LaurentPoly> r = try_divide(num, den);
  if (!r) throw std::domain_error("divide_exact: nonzero remainder");
  return *r;
}

LaurentPoly q_number(long m, int length_sq) {
  if (length_sq <= 0) throw std::invalid_argument("q_number: length_sq must be positive");
  if (m == 0) return LaurentPoly();
  long mm = m < 0 ? -m : m;
  LaurentPoly num = LaurentPoly::monomial(1, static_cast<int>(mm) * length_sq) -
                    LaurentPoly::monomial(1, -static_cast<int>(mm) * length_sq);
  LaurentPoly den =
      LaurentPoly::monomial(1, length_sq) - LaurentPoly::monomial(1, -length_sq);
  LaurentPoly r = divide_exact(num, den);
  return m < 0 ? -r : r;
}

LaurentPoly q_factorial(long n, int length_sq) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  LaurentPoly r(1);
  for (long m = 1; m <= n; ++m) r = r * q_number(m, length_sq);
  return r;
}

LaurentPoly q_binomial(long n, long k, int length_sq) {
  if (k < 0 || k > n) throw std::invalid_argument("q_binomial: requires 0 <= k <= n");
  LaurentPoly num = q_factorial(n, length_sq);
  LaurentPoly den = q_factorial(n - k, length_sq) * q_factorial(k, length_sq);
  return divide_exact(num, den);
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  BigInt num = x.get_num(), den = x.get_den();
  BigInt rn, rd;
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

QScalar::QScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("QScalar: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Strip the common monomial v^min and the common integer content.
  int shift = std::min(num_.min_exp(), den_.min_exp());
  BigInt content = 0;
  for (const auto& [e, c] : num_.terms())
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  for (const auto& [e, c] : den_.terms())
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (den_.coeff(den_.max_exp()) < 0) content = -content;
  LaurentPoly factor = LaurentPoly::monomial(content, shift);
  num_ = divide_exact(num_, factor);
  den_ = divide_exact(den_, factor);
  if (std::optional<LaurentPoly> whole = try_divide(num_, den_)) {
    num_ = *whole;
    den_ = LaurentPoly(1);
  }
}

QScalar QScalar::operator+(const QScalar& o) const {
  return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
  return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-() const { return QScalar(-num_, den_); }

QScalar QScalar::operator*(const QScalar& o) const {
  return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
  if (o.is_zero()) throw std::invalid_argument("QScalar: division by zero");
  return QScalar(num_ * o.den_, den_ * o.num_);
}

bool QScalar::operator==(const QScalar& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw std::domain_error("QScalar::inverse: zero");
  return QScalar(den_, num_);
}

long QScalar::span() const {
  long s = 0;
  if (!num_.is_zero()) s += num_.max_exp() - num_.min_exp();
  if (!den_.is_zero()) s += den_.max_exp() - den_.min_exp();
  return s;
}

Rational QScalar::eval_v(const Rational& v) const {
  Rational d = den_.eval_v(v);
  if (d == 0) throw std::domain_error("QScalar::eval_v: denominator vanishes");
  return num_.eval_v(v) / d;
}

std::string QScalar::str() const {
  if (den_ == LaurentPoly(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qlie
