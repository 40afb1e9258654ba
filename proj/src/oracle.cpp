#include "monoid/oracle.hpp"

#include <string>

#include "monoid/errors.hpp"

namespace monoid::oracle {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeFieldMatrix::PrimeFieldMatrix(int n, std::uint32_t p)
    : PrimeFieldMatrix(n, p, std::vector<std::uint32_t>(static_cast<std::size_t>(n * n), 0)) {}

PrimeFieldMatrix::PrimeFieldMatrix(int n, std::uint32_t p, std::vector<std::uint32_t> entries)
    : n_(n), p_(p), entries_(std::move(entries)) {
  if (!is_prime(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n * n)) {
    throw IndexOutOfRange("matrix entry count does not match n*n");
  }
  for (auto& v : entries_) v %= p;
}

PrimeFieldMatrix PrimeFieldMatrix::identity(int n, std::uint32_t p) {
  PrimeFieldMatrix m(n, p);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^{p-2}
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Rank of a rows x cols matrix, destroying it.
int eliminate(std::vector<std::uint64_t>& a, int rows, int cols, std::uint64_t p) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i * cols + c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<std::size_t>(pivot * cols + j)], a[static_cast<std::size_t>(r * cols + j)]);
    const std::uint64_t inv = inverse_mod(a[static_cast<std::size_t>(r * cols + c)], p);
    for (int i = r + 1; i < rows; ++i) {
      const std::uint64_t f = a[static_cast<std::size_t>(i * cols + c)] * inv % p;
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        auto& x = a[static_cast<std::size_t>(i * cols + j)];
        x = (x + p * p - f * a[static_cast<std::size_t>(r * cols + j)]) % p;
      }
    }
    ++r;
  }
  return r;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t bound) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > bound / base) throw EnumerationTooLarge("enumeration size exceeds bound " + std::to_string(bound));
    v *= base;
  }
  return v;
}

// Advances a base-p odometer; false once it wraps to all zeros.
bool increment(std::vector<std::uint64_t>& digits, std::uint64_t p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

}  // namespace

int rank(const PrimeFieldMatrix& m) {
  std::vector<std::uint64_t> a(m.entries().begin(), m.entries().end());
  return eliminate(a, m.n(), m.n(), m.p());
}

BigInt RankHistogram::total() const {
  BigInt t = 0;
  for (const auto& [r, c] : counts) t += c;
  return t;
}

RankHistogram enumerate_rank_histogram(int n, std::uint32_t p, std::uint64_t bound) {
  if (!is_prime(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  if (n < 0) throw IndexOutOfRange("matrix dimension must be nonnegative");
  checked_power(p, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n), bound);

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(n * n), 0);
  std::vector<std::uint64_t> work;
  do {
    work = digits;
    ++counts[static_cast<std::size_t>(eliminate(work, n, n, p))];
  } while (increment(digits, p));

  RankHistogram h;
  for (int r = 0; r <= n; ++r) h.counts[r] = counts[static_cast<std::size_t>(r)];
  return h;
}

BigInt count_subspaces(int n, int r, std::uint32_t p, std::uint64_t bound) {
  if (!is_prime(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  if (r < 0 || n < 0 || r > n) throw IndexOutOfRange("count_subspaces: need 0 <= r <= n");
  checked_power(p, static_cast<std::uint64_t>(n), 1u << 16);
  checked_power(p, static_cast<std::uint64_t>(r) * static_cast<std::uint64_t>(n), bound);
  if (r == 0) return 1;

  BigInt count = 0;
  std::vector<std::uint64_t> m(static_cast<std::size_t>(r * n), 0);
  auto at = [&](int i, int j) { return m[static_cast<std::size_t>(i * n + j)]; };
  do {
    // Reduced row echelon form with r nonzero rows: strictly increasing pivot
    // columns, pivots equal to 1, zeros left of each pivot and above/below it.
    bool ok = true;
    int last_pivot = -1;
    for (int i = 0; i < r && ok; ++i) {
      int pivot = -1;
      for (int j = 0; j < n; ++j)
        if (at(i, j) != 0) {
          pivot = j;
          break;
        }
      if (pivot <= last_pivot || at(i, pivot) != 1) {
        ok = false;
        break;
      }
      for (int k = 0; k < r; ++k)
        if (k != i && at(k, pivot) != 0) ok = false;
      last_pivot = pivot;
    }
    if (ok) ++count;
  } while (increment(m, p));
  return count;
}

}  // namespace monoid::oracle
