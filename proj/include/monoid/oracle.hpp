#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "monoid/qpoly.hpp"

// Brute-force ground truth over prime fields. Nothing here touches the
// polynomial formulas; it only counts.

namespace monoid::oracle {

inline constexpr std::uint64_t kDefaultMatrixBound = 100'000'000;

/// n x n matrix over the prime field F_p, row-major residues in [0, p).
class PrimeFieldMatrix {
 public:
  /// Throws NonPrimeModulus if p is not prime.
  PrimeFieldMatrix(int n, std::uint32_t p);
  PrimeFieldMatrix(int n, std::uint32_t p, std::vector<std::uint32_t> entries);

  int n() const noexcept { return n_; }
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t at(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  std::uint32_t& at(int i, int j) { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

  static PrimeFieldMatrix identity(int n, std::uint32_t p);

 private:
  int n_;
  std::uint32_t p_;
  std::vector<std::uint32_t> entries_;
};

bool is_prime(std::uint64_t p);

/// Row rank by Gaussian elimination mod p.
int rank(const PrimeFieldMatrix& m);

struct RankHistogram {
  std::map<int, BigInt> counts;
  BigInt total() const;
};

/// Counts all p^{n^2} matrices by rank. Throws EnumerationTooLarge past bound.
RankHistogram enumerate_rank_histogram(int n, std::uint32_t p, std::uint64_t bound = kDefaultMatrixBound);

/// Number of r-dimensional subspaces of F_p^n, by enumerating every r x n
/// matrix and counting those in reduced row echelon form of full rank (each
/// subspace has exactly one such basis). Requires p^n <= 2^16 and
/// p^{rn} <= bound.
BigInt count_subspaces(int n, int r, std::uint32_t p, std::uint64_t bound = kDefaultMatrixBound);

}  // namespace monoid::oracle
