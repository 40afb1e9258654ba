#include "monoid/weyl.hpp"

#include <deque>
#include <map>
#include <set>

#include "monoid/errors.hpp"

namespace monoid {

std::size_t WeylGroup::KeyHash::operator()(const std::vector<std::uint16_t>& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : k) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

WeylGroup::WeylGroup(const RootSystemData& rs, SimpleSubset gens) : rs_(&rs), gens_(gens) {
  std::map<Root, std::uint16_t> lookup;
  std::vector<Root> all;
  for (const Root& r : rs.positive_roots()) all.push_back(r);
  for (const Root& r : rs.positive_roots()) {
    Root neg = r;
    for (auto& c : neg) c = -c;
    all.push_back(std::move(neg));
  }
  for (std::size_t k = 0; k < all.size(); ++k) lookup.emplace(all[k], static_cast<std::uint16_t>(k));
  for (int i = 1; i <= rs.rank(); ++i) {
    std::vector<std::uint16_t> perm(all.size());
    for (std::size_t k = 0; k < all.size(); ++k) {
      auto it = lookup.find(rs.reflect(i, all[k]));
      if (it == lookup.end()) throw InvariantViolation("root list not closed under s_" + std::to_string(i));
      perm[k] = it->second;
    }
    simple_reflections_.push_back(std::move(perm));
  }
  for (int i : gens.indices()) {
    WeylElement s{simple_reflections_[static_cast<std::size_t>(i - 1)], 0};
    s.length = length_of(s.perm);
    generators_.push_back(std::move(s));
  }
}

int WeylGroup::length_of(const std::vector<std::uint16_t>& perm) const {
  const auto n = static_cast<std::uint16_t>(rs_->num_positive());
  int len = 0;
  for (std::uint16_t k = 0; k < n; ++k)
    if (perm[k] >= n) ++len;
  return len;
}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  e.perm.resize(static_cast<std::size_t>(2 * rs_->num_positive()));
  for (std::size_t k = 0; k < e.perm.size(); ++k) e.perm[k] = static_cast<std::uint16_t>(k);
  return e;
}

WeylElement WeylGroup::compose(const WeylElement& a, const WeylElement& b) const {
  WeylElement c;
  c.perm.resize(a.perm.size());
  for (std::size_t k = 0; k < b.perm.size(); ++k) c.perm[k] = a.perm[b.perm[k]];
  c.length = length_of(c.perm);
  return c;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  WeylElement inv;
  inv.perm.resize(w.perm.size());
  for (std::size_t k = 0; k < w.perm.size(); ++k) inv.perm[w.perm[k]] = static_cast<std::uint16_t>(k);
  inv.length = w.length;
  return inv;
}

// An element is determined by the images of the simple roots, which sit at
// positions 0..l-1 of the positive-root list.
std::vector<std::uint16_t> WeylGroup::key_of(const WeylElement& w) const {
  return {w.perm.begin(), w.perm.begin() + rs_->rank()};
}

long WeylGroup::find(const WeylElement& w) const {
  auto it = index_.find(key_of(w));
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

void WeylGroup::close_under_generators(std::uint64_t bound) {
  elements_.clear();
  index_.clear();
  WeylElement e = identity();
  index_.emplace(key_of(e), 0);
  elements_.push_back(std::move(e));
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& s : generators_) {
      WeylElement next = compose(s, elements_[head]);
      auto key = key_of(next);
      if (index_.count(key)) continue;
      if (elements_.size() >= bound) {
        throw GroupTooLarge("Weyl group enumeration exceeded bound " + std::to_string(bound));
      }
      index_.emplace(std::move(key), elements_.size());
      elements_.push_back(std::move(next));
    }
  }
}

WeylGroup generate(const RootSystemData& rs, std::uint64_t bound) {
  std::uint64_t order = 1;
  for (int d : degrees(rs.cartan_type())) {
    order *= static_cast<std::uint64_t>(d);
    if (order > bound) {
      throw GroupTooLarge("|W(" + rs.cartan_type().name() + ")| exceeds enumeration bound " + std::to_string(bound));
    }
  }
  if (2 * rs.num_positive() > 65535) throw GroupTooLarge("root system too large to enumerate");
  WeylGroup w(rs, rs.all());
  w.close_under_generators(bound);
  return w;
}

WeylGroup parabolic(const WeylGroup& w, const SimpleSubset& j) {
  w.root_system().check_subset(j);
  WeylGroup sub(w.root_system(), j);
  sub.close_under_generators(w.size());
  return sub;
}

QPolynomial length_gen_poly(const WeylGroup& w) {
  std::vector<BigInt> c(static_cast<std::size_t>(w.root_system().num_positive() + 1));
  for (const auto& e : w.elements()) c[static_cast<std::size_t>(e.length)] += 1;
  return QPolynomial(std::move(c));
}

std::vector<WeylElement> min_coset_reps(const WeylGroup& w, const SimpleSubset& j) {
  const WeylGroup sub = parabolic(w, j);
  std::vector<bool> seen(w.size(), false);
  std::vector<WeylElement> reps;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    const WeylElement& x = w.elements()[i];
    int best = -1;
    long best_index = -1;
    int ties = 0;
    for (const auto& u : sub.elements()) {
      const WeylElement y = w.compose(x, u);
      const long idx = w.find(y);
      if (idx < 0) throw InvariantViolation("coset element missing from the enumerated group");
      seen[static_cast<std::size_t>(idx)] = true;
      if (best < 0 || y.length < best) {
        best = y.length;
        best_index = idx;
        ties = 1;
      } else if (y.length == best) {
        ++ties;
      }
    }
    if (ties != 1) {
      throw InvariantViolation("coset of W_" + j.to_string() + " has " + std::to_string(ties) +
                               " elements of minimal length");
    }
    reps.push_back(w.elements()[static_cast<std::size_t>(best_index)]);
  }
  return reps;
}

std::vector<Root> reflection_closure(const RootSystemData& rs) {
  std::set<Root> seen(rs.simple_roots().begin(), rs.simple_roots().end());
  std::deque<Root> queue(rs.simple_roots().begin(), rs.simple_roots().end());
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      Root s = rs.reflect(i, r);
      if (seen.insert(s).second) queue.push_back(std::move(s));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace monoid
