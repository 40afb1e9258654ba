#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace monoid {

using BigInt = boost::multiprecision::cpp_int;

/// Dense polynomial in q with arbitrary-precision integer coefficients.
///
/// coeffs()[i] is the coefficient of q^i. The representation is kept
/// canonical: a nonzero polynomial never has a trailing zero coefficient and
/// the zero polynomial has an empty coefficient list, so structural equality
/// is polynomial equality.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  QPolynomial(std::initializer_list<long long> coeffs);

  static QPolynomial constant(const BigInt& c);
  static QPolynomial monomial(const BigInt& c, std::size_t power);
  /// q^power
  static QPolynomial q_power(std::size_t power) { return monomial(1, power); }
  /// q^power - 1
  static QPolynomial q_power_minus_one(std::size_t power);
  /// q^power + 1
  static QPolynomial q_power_plus_one(std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of q^i; zero past the degree.
  BigInt coeff(std::size_t i) const;

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  QPolynomial pow(unsigned exponent) const;

  /// "c0 + c1*q + c2*q^2 + ..." over the nonzero terms, ascending.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Returns c with a == b * c; throws NonExactDivision when b does not divide a.
QPolynomial div_exact(const QPolynomial& a, const QPolynomial& b);

/// p(q0), exactly.
BigInt eval_big(const QPolynomial& p, const BigInt& q0);

/// The Gaussian binomial [n, r]_Q with Q = q^base_power.
///
/// Built as prod_{i=1..r} (Q^{n-r+i} - 1) / (Q^i - 1) with an exact division
/// after every factor, so each partial result is itself [n-r+i, i]_Q.
/// [n, 0]_Q = 1. Throws IndexOutOfRange when r > n.
QPolynomial gaussian_binomial(unsigned n, unsigned r, unsigned base_power = 1);

bool is_palindromic(const QPolynomial& p);

}  // namespace monoid
