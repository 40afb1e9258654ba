#include "monoid/rootsystem.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "monoid/errors.hpp"

namespace monoid {

// ---------------------------------------------------------------------------
// CartanType

CartanType CartanType::make(Family family, int rank) {
  auto bad = [&] {
    return UnsupportedType("unsupported Cartan type " + std::string(1, static_cast<char>(family)) +
                           std::to_string(rank));
  };
  if (rank < 1 || rank > kMaxRank) throw bad();
  switch (family) {
    case Family::A:
      break;
    case Family::B:
    case Family::C:
      if (rank == 1) return {Family::A, 1};
      if (rank == 2) return {Family::B, 2};
      break;
    case Family::D:
      if (rank == 3) return {Family::A, 3};
      if (rank < 3) throw bad();
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw bad();
      break;
    case Family::F:
      if (rank != 4) throw bad();
      break;
    case Family::G:
      if (rank != 2) throw bad();
      break;
    default:
      throw bad();
  }
  return {family, rank};
}

CartanType CartanType::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 2) throw UnsupportedType("cannot parse Cartan type '" + std::string(text) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (std::string_view("ABCDEFG").find(f) == std::string_view::npos) {
    throw UnsupportedType("unknown Cartan family in '" + std::string(text) + "'");
  }
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || rank > 1000) {
      throw UnsupportedType("cannot parse Cartan type '" + std::string(text) + "'");
    }
    rank = rank * 10 + (c - '0');
  }
  return make(static_cast<Family>(f), rank);
}

std::string CartanType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

// ---------------------------------------------------------------------------
// SimpleSubset

SimpleSubset SimpleSubset::from_indices(const std::vector<int>& indices) {
  SimpleSubset s;
  for (int i : indices) s.insert(i);
  return s;
}

SimpleSubset SimpleSubset::full(int rank) {
  if (rank < 0 || rank > kMaxRank) throw IndexOutOfRange("rank out of range: " + std::to_string(rank));
  return from_mask(rank == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rank) - 1));
}

SimpleSubset SimpleSubset::parse(std::string_view text) {
  SimpleSubset s;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int v = 0;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || v > 1000) {
        throw ParseError("bad simple-root index '" + token + "'");
      }
      v = v * 10 + (c - '0');
    }
    s.insert(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      if (token.empty()) throw ParseError("empty entry in simple-root list '" + std::string(text) + "'");
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token.push_back(c);
    }
  }
  flush();
  return s;
}

void SimpleSubset::insert(int index) {
  if (index < 1 || index > kMaxRank) throw IndexOutOfRange("simple-root index out of range: " + std::to_string(index));
  mask_ |= std::uint64_t{1} << (index - 1);
}

int SimpleSubset::size() const noexcept { return std::popcount(mask_); }

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < kMaxRank; ++i)
    if ((mask_ >> i) & 1u) out.push_back(i + 1);
  return out;
}

int SimpleSubset::max_index() const noexcept { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

std::string SimpleSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Degrees and Poincare products

std::vector<int> degrees(const CartanType& type) {
  const int l = type.rank;
  std::vector<int> d;
  switch (type.family) {
    case Family::A:
      for (int i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i <= l - 1; ++i) d.push_back(2 * i);
      d.push_back(l);
      std::sort(d.begin(), d.end());
      break;
    case Family::E:
      if (l == 6) d = {2, 5, 6, 8, 9, 12};
      if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (l == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  return d;
}

int positive_root_count(const CartanType& type) {
  int n = 0;
  for (int d : degrees(type)) n += d - 1;
  return n;
}

QPolynomial poincare_product(const CartanType& type) {
  QPolynomial p = QPolynomial::constant(1);
  const QPolynomial q_minus_one = QPolynomial::q_power_minus_one(1);
  for (int d : degrees(type)) p *= div_exact(QPolynomial::q_power_minus_one(static_cast<std::size_t>(d)), q_minus_one);
  return p;
}

QPolynomial poincare_product(const RootSystemData& rs, const SimpleSubset& x) {
  QPolynomial p = QPolynomial::constant(1);
  for (const auto& c : rs.connected_components(x)) p *= poincare_product(c.type);
  return p;
}

QPolynomial degree_factor_product(const RootSystemData& rs, const SimpleSubset& x) {
  QPolynomial p = QPolynomial::constant(1);
  for (const auto& c : rs.connected_components(x))
    for (int d : degrees(c.type)) p *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(d));
  return p;
}

// ---------------------------------------------------------------------------
// RootSystemData

namespace {

// Bourbaki labelling; cartan(i, j) = <alpha_j, alpha_i^vee>, 0-based.
std::vector<int> cartan_matrix(const CartanType& type) {
  const int l = type.rank;
  std::vector<int> m(static_cast<std::size_t>(l * l), 0);
  auto at = [&](int i, int j) -> int& { return m[static_cast<std::size_t>(i * l + j)]; };
  auto bond = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
  for (int i = 0; i < l; ++i) at(i, i) = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      at(l - 1, l - 2) = -2;  // alpha_l short
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      at(l - 2, l - 1) = -2;  // alpha_l long
      break;
    case Family::D:
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
      bond(l - 3, l - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      at(2, 1) = -2;  // alpha_1, alpha_2 long
      break;
    case Family::G:
      bond(0, 1);
      at(0, 1) = -3;  // alpha_1 short
      break;
  }
  return m;
}

}  // namespace

RootSystemData RootSystemData::build(const CartanType& raw_type) {
  RootSystemData rs;
  rs.type_ = CartanType::make(raw_type.family, raw_type.rank);
  const int l = rs.type_.rank;
  rs.cartan_ = cartan_matrix(rs.type_);

  // Relative squared lengths: |alpha_j|^2 / |alpha_i|^2 = cartan(i,j) / cartan(j,i).
  std::vector<long long> num(static_cast<std::size_t>(l), 0), den(static_cast<std::size_t>(l), 1);
  num[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < l; ++j) {
      if (j == i || rs.cartan(i, j) == 0 || num[static_cast<std::size_t>(j)] != 0) continue;
      num[static_cast<std::size_t>(j)] = num[static_cast<std::size_t>(i)] * rs.cartan(i, j);
      den[static_cast<std::size_t>(j)] = den[static_cast<std::size_t>(i)] * rs.cartan(j, i);
      stack.push_back(j);
    }
  }
  long long common = 1;
  for (int i = 0; i < l; ++i) common = std::lcm(common, den[static_cast<std::size_t>(i)]);
  rs.lengths_.resize(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i)
    rs.lengths_[static_cast<std::size_t>(i)] =
        static_cast<int>(num[static_cast<std::size_t>(i)] * (common / den[static_cast<std::size_t>(i)]));
  const int shortest = *std::min_element(rs.lengths_.begin(), rs.lengths_.end());
  for (auto& v : rs.lengths_) v /= shortest;

  for (int i = 0; i < l; ++i) {
    Root r(static_cast<std::size_t>(l), 0);
    r[static_cast<std::size_t>(i)] = 1;
    rs.simple_roots_.push_back(std::move(r));
  }

  // Positive roots by height via alpha-strings: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0, where p is how far the string extends down.
  std::set<Root> known(rs.simple_roots_.begin(), rs.simple_roots_.end());
  std::vector<Root> layer = rs.simple_roots_;
  rs.positive_roots_ = layer;
  while (!layer.empty()) {
    std::set<Root> next;
    for (const Root& beta : layer) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        Root down = beta;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < l; ++j) pairing += beta[static_cast<std::size_t>(j)] * rs.cartan(i, j);
        if (p - pairing > 0) {
          Root up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          if (!known.count(up)) next.insert(std::move(up));
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const Root& r : layer) {
      known.insert(r);
      rs.positive_roots_.push_back(r);
    }
  }
  return rs;
}

bool RootSystemData::adjacent(int i, int j) const {
  if (i == j || i < 1 || j < 1 || i > rank() || j > rank()) return false;
  return cartan(i - 1, j - 1) != 0;
}

SimpleSubset RootSystemData::neighbours(const SimpleSubset& x) const {
  SimpleSubset out;
  for (int i : x.indices())
    for (int j = 1; j <= rank(); ++j)
      if (adjacent(i, j)) out.insert(j);
  return out;
}

void RootSystemData::check_subset(const SimpleSubset& x) const {
  if (!x.subset_of(all())) {
    throw IndexOutOfRange("simple-root set " + x.to_string() + " not contained in 1.." + std::to_string(rank()) +
                          " for " + type_.name());
  }
}

int RootSystemData::positive_count_of_subset(const SimpleSubset& x) const {
  check_subset(x);
  int count = 0;
  for (const Root& r : positive_roots_) {
    bool inside = true;
    for (int j = 0; j < rank() && inside; ++j)
      if (r[static_cast<std::size_t>(j)] != 0 && !x.contains(j + 1)) inside = false;
    if (inside) ++count;
  }
  return count;
}

Root RootSystemData::reflect(int index, const Root& beta) const {
  const int i = index - 1;
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += beta[static_cast<std::size_t>(j)] * cartan(i, j);
  Root out = beta;
  out[static_cast<std::size_t>(i)] -= pairing;
  return out;
}

namespace {

CartanType classify(const RootSystemData& rs, const std::vector<int>& nodes) {
  const int m = static_cast<int>(nodes.size());
  auto fail = [&](const std::string& why) {
    return ClassificationFailure("cannot classify component " + SimpleSubset::from_indices(nodes).to_string() +
                                 " of " + rs.cartan_type().name() + ": " + why);
  };
  if (m == 1) return CartanType::make(Family::A, 1);

  std::map<int, std::vector<int>> nbrs;
  int edges = 0;
  int triple = 0;
  std::vector<std::pair<int, int>> doubles;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const int i = nodes[static_cast<std::size_t>(a)], j = nodes[static_cast<std::size_t>(b)];
      if (!rs.adjacent(i, j)) continue;
      ++edges;
      nbrs[i].push_back(j);
      nbrs[j].push_back(i);
      const int mult = rs.cartan(i - 1, j - 1) * rs.cartan(j - 1, i - 1);
      if (mult == 2) doubles.emplace_back(i, j);
      if (mult == 3) ++triple;
    }
  }
  if (edges != m - 1) throw fail("diagram is not a tree");
  if (triple > 0) {
    if (m == 2) return CartanType::make(Family::G, 2);
    throw fail("triple bond in a component of rank > 2");
  }
  std::vector<int> branch;
  for (int v : nodes)
    if (nbrs[v].size() >= 3) branch.push_back(v);

  if (branch.empty()) {
    // Path: walk it from one end.
    int start = nodes.front();
    for (int v : nodes)
      if (nbrs[v].size() == 1) {
        start = v;
        break;
      }
    std::vector<int> path{start};
    int prev = 0;
    while (static_cast<int>(path.size()) < m) {
      const int cur = path.back();
      const int nxt = nbrs[cur][0] != prev ? nbrs[cur][0] : nbrs[cur][1];
      prev = cur;
      path.push_back(nxt);
    }
    if (doubles.empty()) return CartanType::make(Family::A, m);
    if (doubles.size() > 1) throw fail("more than one double bond");
    const auto pos = [&](int v) { return static_cast<int>(std::find(path.begin(), path.end(), v) - path.begin()); };
    const int lo = std::min(pos(doubles[0].first), pos(doubles[0].second));
    if (m == 2) return CartanType::make(Family::B, 2);
    if (lo == 0 || lo == m - 2) {
      const int end = lo == 0 ? path[0] : path[static_cast<std::size_t>(m - 1)];
      const int inner = lo == 0 ? path[1] : path[static_cast<std::size_t>(m - 2)];
      return CartanType::make(rs.length_squared(end) < rs.length_squared(inner) ? Family::B : Family::C, m);
    }
    if (m == 4 && lo == 1) return CartanType::make(Family::F, 4);
    throw fail("double bond in the interior of the diagram");
  }

  if (branch.size() > 1 || nbrs[branch[0]].size() != 3) throw fail("unsupported branching");
  if (!doubles.empty()) throw fail("branched diagram with multiple bond");
  std::vector<int> arms;
  for (int first : nbrs[branch[0]]) {
    int len = 1, prev = branch[0], cur = first;
    while (nbrs[cur].size() == 2) {
      const int nxt = nbrs[cur][0] != prev ? nbrs[cur][0] : nbrs[cur][1];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return CartanType::make(Family::D, m);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return CartanType::make(Family::E, m);
  throw fail("branch arms match no Dynkin diagram");
}

}  // namespace

std::vector<Component> RootSystemData::connected_components(const SimpleSubset& x) const {
  check_subset(x);
  std::vector<Component> out;
  SimpleSubset remaining = x;
  while (!remaining.empty()) {
    const int seed = remaining.indices().front();
    std::vector<int> comp{seed}, frontier{seed};
    SimpleSubset seen;
    seen.insert(seed);
    while (!frontier.empty()) {
      const int v = frontier.back();
      frontier.pop_back();
      for (int w : remaining.indices()) {
        if (!seen.contains(w) && adjacent(v, w)) {
          seen.insert(w);
          comp.push_back(w);
          frontier.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back({seen, classify(*this, comp)});
    remaining = remaining - seen;
  }
  return out;
}

}  // namespace monoid
