#include "monoid/crosssection.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "monoid/errors.hpp"

namespace monoid {

std::string_view to_string(LatticeOrigin origin) {
  switch (origin) {
    case LatticeOrigin::Published:
      return "published";
    case LatticeOrigin::RuleDerived:
      return "rule-derived, no published type map";
    case LatticeOrigin::UserSupplied:
      return "user-supplied";
  }
  return "?";
}

bool CrossSectionLattice::is_zero_entry(const LatticeEntry& e) const {
  return e.lambda_star.empty() && e.lambda_substar == rs_->all();
}

bool CrossSectionLattice::is_identity_entry(const LatticeEntry& e) const { return e.lambda_star == rs_->all(); }

const LatticeEntry& CrossSectionLattice::zero_entry() const {
  return *std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return is_zero_entry(e); });
}

const LatticeEntry& CrossSectionLattice::identity_entry() const {
  return *std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return is_identity_entry(e); });
}

std::string CrossSectionLattice::description() const {
  std::string out = rs_->cartan_type().name();
  if (j0_) out += ", J0=" + j0_->to_string();
  out += " (" + std::string(to_string(origin_)) + ")";
  return out;
}

CrossSectionLattice make_lattice(std::shared_ptr<const RootSystemData> rs, std::vector<LatticeEntry> entries,
                                 LatticeOrigin origin, std::optional<SimpleSubset> j0) {
  CrossSectionLattice lat;
  lat.rs_ = std::move(rs);
  lat.origin_ = origin;
  lat.j0_ = j0;
  const RootSystemData& r = *lat.rs_;
  const SimpleSubset all = r.all();

  auto violation = [](const LatticeEntry& e, const std::string& rule) {
    return InvariantViolation("lattice entry '" + e.label + "': " + rule);
  };

  std::set<std::string> labels;
  int zeros = 0;
  int identities = 0;
  for (const auto& e : entries) {
    if (e.label.empty()) throw InvariantViolation("lattice entry with empty label");
    if (!labels.insert(e.label).second) throw violation(e, "duplicate label");
    if (!e.lambda_star.subset_of(all) || !e.lambda_substar.subset_of(all)) {
      throw violation(e, "simple-root index outside 1.." + std::to_string(r.rank()));
    }
    if (!(e.lambda_star & e.lambda_substar).empty()) throw violation(e, "lambda_star and lambda_substar intersect");
    if (!(r.neighbours(e.lambda_star) & e.lambda_substar).empty()) {
      throw violation(e, "lambda_substar is Dynkin-adjacent to lambda_star");
    }
    if (e.torus_index_exponent < 0) throw violation(e, "negative torus index exponent");
    if (lat.is_zero_entry(e)) {
      ++zeros;
      if (e.torus_index_exponent != 0) throw violation(e, "zero entry must have torus index exponent 0");
    }
    if (lat.is_identity_entry(e)) {
      ++identities;
      lat.torus_rank_ = e.torus_index_exponent;
    }
  }
  if (zeros != 1) throw InvariantViolation("lattice must contain exactly one zero entry, found " + std::to_string(zeros));
  if (identities != 1) {
    throw InvariantViolation("lattice must contain exactly one identity entry, found " + std::to_string(identities));
  }
  if (lat.torus_rank_ < 1) throw InvariantViolation("identity entry must have a positive torus index exponent");
  for (const auto& e : entries) {
    if (e.torus_index_exponent > lat.torus_rank_) {
      throw violation(e, "torus index exponent exceeds the torus rank " + std::to_string(lat.torus_rank_));
    }
  }
  lat.entries_ = std::move(entries);
  return lat;
}

std::string entry_label(const RootSystemData& rs, const LatticeEntry& e) {
  if (e.lambda_star.empty() && e.lambda_substar == rs.all()) return "0";
  if (e.lambda_star == rs.all()) return "1";
  return "e" + e.lambda_star.to_string();
}

namespace {

bool has_published_type_map(const RootSystemData& rs, const SimpleSubset& j0) {
  const CartanType& t = rs.cartan_type();
  const SimpleSubset all = rs.all();
  SimpleSubset last, first;
  last.insert(t.rank);
  first.insert(1);
  // C2 arrives here normalized to B2.
  if ((t.family == Family::C || (t.family == Family::B && t.rank == 2)) && j0 == all - last) return true;
  return t.family == Family::A && j0 == all - first;
}

}  // namespace

CrossSectionLattice j_irreducible_lattice(const RootSystemData& rs, const SimpleSubset& j0) {
  rs.check_subset(j0);
  const SimpleSubset all = rs.all();
  if (j0 == all) throw InvalidSupport("J0 equals all simple roots; no nonzero minimal idempotent");
  if (rs.rank() > kMaxLatticeRank) {
    throw EnumerationTooLarge("lattice generation supports rank <= " + std::to_string(kMaxLatticeRank));
  }
  const int l = rs.rank();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(l), 0);
  for (int i = 1; i <= l; ++i) adj[static_cast<std::size_t>(i - 1)] = rs.neighbours(SimpleSubset::from_mask(std::uint64_t{1} << (i - 1))).mask();
  const std::uint64_t outside = (all - j0).mask();

  std::vector<LatticeEntry> entries;
  LatticeEntry zero{"", SimpleSubset(), all, 0};
  zero.label = entry_label(rs, zero);
  entries.push_back(zero);

  std::vector<std::uint64_t> accepted;
  for (std::uint64_t x = 0; x <= all.mask(); ++x) {
    // Every component of X meets the complement of J0 iff growing X & ~J0
    // inside X recovers all of X.
    std::uint64_t reach = x & outside;
    while (true) {
      std::uint64_t grown = reach;
      for (std::uint64_t bits = reach; bits != 0; bits &= bits - 1) {
        grown |= adj[static_cast<std::size_t>(std::countr_zero(bits))] & x;
      }
      if (grown == reach) break;
      reach = grown;
    }
    if (reach == x) accepted.push_back(x);
  }
  std::stable_sort(accepted.begin(), accepted.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint64_t x : accepted) {
    const SimpleSubset star = SimpleSubset::from_mask(x);
    LatticeEntry e;
    e.lambda_star = star;
    e.lambda_substar = (j0 - star) - rs.neighbours(star);
    e.torus_index_exponent = star.size() + 1;
    e.label = entry_label(rs, e);
    entries.push_back(std::move(e));
  }
  return make_lattice(std::make_shared<const RootSystemData>(rs), std::move(entries),
                      has_published_type_map(rs, j0) ? LatticeOrigin::Published : LatticeOrigin::RuleDerived, j0);
}

CrossSectionLattice symplectic_lattice(int l) {
  if (l < 2) throw UnsupportedType("symplectic lattice needs l >= 2");
  auto rs = std::make_shared<const RootSystemData>(RootSystemData::build(CartanType::make(Family::C, l)));
  const SimpleSubset all = rs->all();
  SimpleSubset j0 = all;
  j0 = j0 - SimpleSubset::from_indices({l});

  std::vector<LatticeEntry> entries;
  LatticeEntry zero{"", SimpleSubset(), all, 0};
  zero.label = entry_label(*rs, zero);
  entries.push_back(zero);
  for (int r = 0; r <= l; ++r) {
    LatticeEntry e;
    for (int i = l - r + 1; i <= l; ++i) e.lambda_star.insert(i);
    // lambda_substar: {a_1..a_{l-1}} for r = 0, {a_1..a_{l-r-1}} for r <= l-2, empty otherwise.
    const int top = r == 0 ? l - 1 : l - r - 1;
    for (int i = 1; i <= top; ++i) e.lambda_substar.insert(i);
    e.torus_index_exponent = r + 1;
    e.label = entry_label(*rs, e);
    entries.push_back(std::move(e));
  }
  return make_lattice(std::move(rs), std::move(entries), LatticeOrigin::Published, j0);
}

CrossSectionLattice load_lattice(const RootSystemData& rs, std::vector<LatticeEntry> raw) {
  return make_lattice(std::make_shared<const RootSystemData>(rs), std::move(raw), LatticeOrigin::UserSupplied);
}

SimpleSubset preset_j0(const RootSystemData& rs, std::string_view preset) {
  SimpleSubset j0 = rs.all();
  if (preset == "last-fundamental") return j0 - SimpleSubset::from_indices({rs.rank()});
  if (preset == "first-fundamental") return j0 - SimpleSubset::from_indices({1});
  throw ParseError("unknown weight preset '" + std::string(preset) + "'");
}

}  // namespace monoid
