#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "monoid/qpoly.hpp"

namespace monoid {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Cartan type of an irreducible crystallographic root system.
///
/// Construction validates the rank against the family and folds the low-rank
/// coincidences onto one name: B1, C1 -> A1; C2 -> B2; D3 -> A3.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  static CartanType make(Family family, int rank);
  /// Parses "A3", "c4", "E6", ...; throws UnsupportedType on anything else.
  static CartanType parse(std::string_view text);

  std::string name() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

inline constexpr int kMaxRank = 64;

/// A set of simple roots, stored as a bitmask over 1-based indices.
class SimpleSubset {
 public:
  SimpleSubset() = default;
  static SimpleSubset from_mask(std::uint64_t mask) {
    SimpleSubset s;
    s.mask_ = mask;
    return s;
  }
  static SimpleSubset from_indices(const std::vector<int>& indices);
  /// {1, ..., rank}
  static SimpleSubset full(int rank);
  /// Parses "1,3,4" (whitespace tolerated, empty string is the empty set).
  static SimpleSubset parse(std::string_view text);

  bool contains(int index) const noexcept {
    return index >= 1 && index <= kMaxRank && ((mask_ >> (index - 1)) & 1u) != 0;
  }
  void insert(int index);
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  std::uint64_t mask() const noexcept { return mask_; }
  /// Sorted ascending, 1-based.
  std::vector<int> indices() const;
  /// Largest index present, 0 when empty.
  int max_index() const noexcept;
  std::string to_string() const;

  bool subset_of(const SimpleSubset& other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  friend SimpleSubset operator|(SimpleSubset a, SimpleSubset b) { return from_mask(a.mask_ | b.mask_); }
  friend SimpleSubset operator&(SimpleSubset a, SimpleSubset b) { return from_mask(a.mask_ & b.mask_); }
  /// Set difference.
  friend SimpleSubset operator-(SimpleSubset a, SimpleSubset b) { return from_mask(a.mask_ & ~b.mask_); }
  friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// A root as integer coordinates in the basis of simple roots.
using Root = std::vector<int>;

struct Component {
  SimpleSubset nodes;
  CartanType type;
};

/// Root system data for one Cartan type.
///
/// Roots are kept in simple-root coordinates, which makes "supported on X"
/// a coordinate test. cartan(i, j) = <alpha_j, alpha_i^vee> (0-based), so
/// s_i(beta) = beta - (sum_j beta_j cartan(i, j)) alpha_i.
class RootSystemData {
 public:
  static RootSystemData build(const CartanType& type);

  const CartanType& cartan_type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank() + j)]; }
  const std::vector<Root>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
  int num_positive() const noexcept { return static_cast<int>(positive_roots_.size()); }
  /// Squared length of simple root i (1-based), normalized so the shortest is 1.
  int length_squared(int index) const { return lengths_[static_cast<std::size_t>(index - 1)]; }

  /// Dynkin adjacency on 1-based simple-root indices.
  bool adjacent(int i, int j) const;
  /// Simple roots Dynkin-adjacent to at least one member of x.
  SimpleSubset neighbours(const SimpleSubset& x) const;
  SimpleSubset all() const { return SimpleSubset::full(rank()); }

  /// |Phi_X^+|: positive roots supported entirely on X.
  int positive_count_of_subset(const SimpleSubset& x) const;

  /// Dynkin-connected components of X, each classified by diagram shape.
  std::vector<Component> connected_components(const SimpleSubset& x) const;

  /// Throws IndexOutOfRange when x mentions an index outside 1..rank.
  void check_subset(const SimpleSubset& x) const;

  /// Applies the simple reflection s_index (1-based) to beta.
  Root reflect(int index, const Root& beta) const;

 private:
  CartanType type_;
  std::vector<int> cartan_;
  std::vector<int> lengths_;
  std::vector<Root> simple_roots_;
  std::vector<Root> positive_roots_;
};

/// Degrees of the basic polynomial invariants of the Weyl group.
std::vector<int> degrees(const CartanType& type);

/// sum(d_i - 1); equals the number of positive roots.
int positive_root_count(const CartanType& type);

/// prod_i (q^{d_i} - 1) / (q - 1), each factor by exact division.
QPolynomial poincare_product(const CartanType& type);

/// Poincare polynomial of the parabolic subgroup W_X as the product over the
/// components of X; 1 for the empty set.
QPolynomial poincare_product(const RootSystemData& rs, const SimpleSubset& x);

/// prod_i (q^{d_i} - 1) over the components of X, without the (q-1) quotient.
QPolynomial degree_factor_product(const RootSystemData& rs, const SimpleSubset& x);

}  // namespace monoid
