#include "monoid/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "monoid/errors.hpp"

namespace monoid {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPolynomial::QPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial(std::vector<BigInt>{c}); }

QPolynomial QPolynomial::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::q_power_minus_one(std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[0] -= 1;
  v[power] += 1;
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::q_power_plus_one(std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[0] += 1;
  v[power] += 1;
  return QPolynomial(std::move(v));
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

QPolynomial operator-(const QPolynomial& a) {
  QPolynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPolynomial QPolynomial::pow(unsigned exponent) const {
  QPolynomial result = constant(1);
  QPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << mag;
    if (i == 1) os << "*q";
    if (i > 1) os << "*q^" << i;
  }
  return os.str();
}

QPolynomial div_exact(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw NonExactDivision("division by the zero polynomial");
  if (a.is_zero()) return {};
  const int da = a.degree();
  const int db = b.degree();
  if (da < db) {
    throw NonExactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  }
  std::vector<BigInt> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const BigInt& lead = bc.back();
  std::vector<BigInt> quot(static_cast<std::size_t>(da - db + 1));
  for (int k = da - db; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    BigInt t;
    BigInt r;
    boost::multiprecision::divide_qr(top, lead, t, r);
    if (r != 0) {
      throw NonExactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
    }
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= t * bc[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k)] = std::move(t);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; })) {
    throw NonExactDivision("(" + a.to_string() + ") is not divisible by (" + b.to_string() + ")");
  }
  return QPolynomial(std::move(quot));
}

BigInt eval_big(const QPolynomial& p, const BigInt& q0) {
  BigInt acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

QPolynomial gaussian_binomial(unsigned n, unsigned r, unsigned base_power) {
  if (r > n) {
    throw IndexOutOfRange("gaussian_binomial: r=" + std::to_string(r) + " exceeds n=" + std::to_string(n));
  }
  if (base_power == 0) throw IndexOutOfRange("gaussian_binomial: base power must be positive");
  QPolynomial result = QPolynomial::constant(1);
  for (unsigned i = 1; i <= r; ++i) {
    result *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(base_power) * (n - r + i));
    result = div_exact(result, QPolynomial::q_power_minus_one(static_cast<std::size_t>(base_power) * i));
  }
  return result;
}

bool is_palindromic(const QPolynomial& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

}  // namespace monoid
