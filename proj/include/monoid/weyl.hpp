#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "monoid/qpoly.hpp"
#include "monoid/rootsystem.hpp"

namespace monoid {

inline constexpr std::uint64_t kDefaultWeylBound = 1'000'000;

/// A Weyl group element acting on the full root list.
///
/// perm[k] is the index of w(beta_k); indices 0..N-1 are the positive roots in
/// RootSystemData order and N..2N-1 their negatives.
struct WeylElement {
  std::vector<std::uint16_t> perm;
  int length = 0;
};

/// Brute-force enumeration of a (parabolic sub)group of a small-rank Weyl group.
class WeylGroup {
 public:
  const RootSystemData& root_system() const noexcept { return *rs_; }
  const std::vector<WeylElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// The simple reflections s_j for j in generating_set(), in index order.
  const std::vector<WeylElement>& generators() const noexcept { return generators_; }
  const SimpleSubset& generating_set() const noexcept { return gens_; }

  /// Index of the element equal to w in elements(), or -1.
  long find(const WeylElement& w) const;

  WeylElement compose(const WeylElement& a, const WeylElement& b) const;  // a after b
  WeylElement identity() const;
  WeylElement inverse(const WeylElement& w) const;
  /// Number of positive roots sent to negative roots.
  int length_of(const std::vector<std::uint16_t>& perm) const;

  friend WeylGroup generate(const RootSystemData& rs, std::uint64_t bound);
  friend WeylGroup parabolic(const WeylGroup& w, const SimpleSubset& j);

 private:
  WeylGroup(const RootSystemData& rs, SimpleSubset gens);
  std::vector<std::uint16_t> key_of(const WeylElement& w) const;
  void close_under_generators(std::uint64_t bound);

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint16_t>& k) const noexcept;
  };

  const RootSystemData* rs_;
  SimpleSubset gens_;
  std::vector<std::vector<std::uint16_t>> simple_reflections_;  // all l of them
  std::vector<WeylElement> generators_;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::vector<std::uint16_t>, std::size_t, KeyHash> index_;
};

/// All of W, by closing the simple reflections under composition. The group
/// keeps a pointer to rs, which must outlive it. Throws GroupTooLarge when
/// |W| = prod d_i exceeds bound.
WeylGroup generate(const RootSystemData& rs, std::uint64_t bound = kDefaultWeylBound);

/// sum over w of q^{l(w)}
QPolynomial length_gen_poly(const WeylGroup& w);

/// The subgroup W_J generated by s_j, j in J; lengths are those of the ambient group.
WeylGroup parabolic(const WeylGroup& w, const SimpleSubset& j);

/// Minimal-length representatives of the left cosets w W_J. Uniqueness of the
/// minimum in every coset is checked, not assumed (InvariantViolation otherwise).
std::vector<WeylElement> min_coset_reps(const WeylGroup& w, const SimpleSubset& j);

/// Every root reachable from the simple roots by simple reflections.
/// Independent of the root-string construction in RootSystemData::build.
std::vector<Root> reflection_closure(const RootSystemData& rs);

}  // namespace monoid
