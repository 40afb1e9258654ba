#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoid/rootsystem.hpp"

namespace monoid {

/// One idempotent e of the cross-section lattice, seen through its type map.
struct LatticeEntry {
  std::string label;
  SimpleSubset lambda_star;     // roots whose reflections commute with e but move it
  SimpleSubset lambda_substar;  // roots whose reflections fix e
  int torus_index_exponent = 0;  // [T : T(e)] = (q-1)^k

  SimpleSubset lambda() const { return lambda_star | lambda_substar; }
  friend bool operator==(const LatticeEntry&, const LatticeEntry&) = default;
};

enum class LatticeOrigin {
  Published,  // J-irreducible instance with a published type map
  RuleDerived,    // J-irreducible rule applied to another (type, J0)
  UserSupplied,   // loaded from external data
};

std::string_view to_string(LatticeOrigin origin);

class CrossSectionLattice {
 public:
  const RootSystemData& root_system() const noexcept { return *rs_; }
  std::shared_ptr<const RootSystemData> root_system_ptr() const noexcept { return rs_; }
  const std::vector<LatticeEntry>& entries() const noexcept { return entries_; }
  LatticeOrigin origin() const noexcept { return origin_; }
  /// Weight support J0 for generated J-irreducible lattices.
  const std::optional<SimpleSubset>& j0() const noexcept { return j0_; }
  /// Dimension of the maximal torus of the unit group; the identity entry's exponent.
  int torus_rank() const noexcept { return torus_rank_; }

  bool is_zero_entry(const LatticeEntry& e) const;
  bool is_identity_entry(const LatticeEntry& e) const;
  const LatticeEntry& zero_entry() const;
  const LatticeEntry& identity_entry() const;

  /// e.g. "C3, J0={1,2} (published)"
  std::string description() const;

  friend CrossSectionLattice make_lattice(std::shared_ptr<const RootSystemData> rs, std::vector<LatticeEntry> entries,
                                          LatticeOrigin origin, std::optional<SimpleSubset> j0);

 private:
  CrossSectionLattice() = default;

  std::shared_ptr<const RootSystemData> rs_;
  std::vector<LatticeEntry> entries_;
  LatticeOrigin origin_ = LatticeOrigin::UserSupplied;
  std::optional<SimpleSubset> j0_;
  int torus_rank_ = 0;
};

/// Validates entries and assembles a lattice; throws InvariantViolation naming
/// the failing entry and rule.
CrossSectionLattice make_lattice(std::shared_ptr<const RootSystemData> rs, std::vector<LatticeEntry> entries,
                                 LatticeOrigin origin, std::optional<SimpleSubset> j0 = std::nullopt);

/// Largest rank for which j_irreducible_lattice enumerates subsets of the simple roots.
inline constexpr int kMaxLatticeRank = 24;

/// Cross-section lattice of the J-irreducible monoid whose dominant weight is
/// annihilated exactly by J0.
///
/// Nonzero entries correspond to the subsets X of the simple roots none of
/// whose connected components lies inside J0; for such X,
///   lambda_star    = X,
///   lambda_substar = { a in J0 \ X : a not adjacent to X },
///   exponent       = |X| + 1.
/// The zero entry (lambda_star empty, lambda_substar everything, exponent 0)
/// is added. Throws InvalidSupport when J0 is all of the simple roots.
CrossSectionLattice j_irreducible_lattice(const RootSystemData& rs, const SimpleSubset& j0);

/// The finite symplectic monoid's lattice for C_l, l >= 2, built from the
/// explicit chain lambda_star = {a_{l-r+1}, ..., a_l}, r = 0..l.
CrossSectionLattice symplectic_lattice(int l);

/// Validated lattice from externally supplied entries.
CrossSectionLattice load_lattice(const RootSystemData& rs, std::vector<LatticeEntry> raw);

/// "last-fundamental" -> all but a_l; "first-fundamental" -> all but a_1.
SimpleSubset preset_j0(const RootSystemData& rs, std::string_view preset);

/// Label used for generated entries: "0", "1", or "e{...}" over lambda_star.
std::string entry_label(const RootSystemData& rs, const LatticeEntry& e);

}  // namespace monoid
