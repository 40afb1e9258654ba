#include "monoid/verify.hpp"

#include <functional>
#include <sstream>

#include "monoid/crosssection.hpp"
#include "monoid/errors.hpp"
#include "monoid/oracle.hpp"
#include "monoid/orders.hpp"
#include "monoid/weyl.hpp"

namespace monoid {

namespace {

const std::vector<long long> kHCoeffsL2 = {1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1};
const std::vector<long long> kHCoeffsL3 = {1, 1, 1, 2, 2, 3, 4, 4, 4, 5, 5, 5, 5, 4, 4, 4, 3, 2, 2, 1, 1, 1};

QPolynomial from_ll(const std::vector<long long>& v) {
  std::vector<BigInt> c(v.begin(), v.end());
  return QPolynomial(std::move(c));
}

// A check returns an empty string on success, otherwise a diagnostic.
using Check = std::function<std::string()>;

std::vector<CrossSectionLattice> standard_lattices() {
  std::vector<CrossSectionLattice> out;
  for (int l = 1; l <= 3; ++l) {
    const auto rs = RootSystemData::build(CartanType::make(Family::A, l));
    out.push_back(j_irreducible_lattice(rs, preset_j0(rs, "first-fundamental")));
  }
  for (int l = 2; l <= 4; ++l) {
    const auto rs = RootSystemData::build(CartanType::make(Family::C, l));
    out.push_back(j_irreducible_lattice(rs, preset_j0(rs, "last-fundamental")));
  }
  return out;
}

std::string check_h(int l, const std::vector<long long>& expected) {
  const QPolynomial h = h_polynomial(symplectic_order(l).total);
  if (h != from_ll(expected)) return "H = " + h.to_string();
  if (!is_palindromic(h)) return "H not palindromic";
  return {};
}

std::string check_matrix_strata(int n, std::uint32_t p, const EnumerationLimits& limits) {
  const auto hist = oracle::enumerate_rank_histogram(n, p, limits.matrix_bound);
  std::ostringstream err;
  for (int r = 0; r <= n; ++r) {
    const BigInt expected = eval_big(gl_strata(n, r), p);
    const auto it = hist.counts.find(r);
    const BigInt got = it == hist.counts.end() ? BigInt(0) : it->second;
    if (got != expected) err << "rank " << r << ": counted " << got << ", formula " << expected << "; ";
  }
  BigInt all = 1;
  for (int i = 0; i < n * n; ++i) all *= p;
  if (hist.total() != all) err << "total " << hist.total() << " != p^(n^2)";
  return err.str();
}

std::string check_formula_agreement(const CrossSectionLattice& lat, const EnumerationLimits& limits) {
  const auto t31 = order_thm31(lat).total;
  const WeylGroup w = generate(lat.root_system(), limits.weyl_bound);
  const auto t33 = order_thm33(lat, w).total;
  const auto t34 = order_thm34(lat).total;
  const auto t41 = order_thm41(lat).total;
  if (t31 != t33) return "thm31 != thm33";
  if (t31 != t34) return "thm31 != thm34";
  if (t31 != t41) return "thm31 != thm41";
  return {};
}

std::string check_structure(const CrossSectionLattice& lat) {
  const RootSystemData& rs = lat.root_system();
  const QPolynomial unit = unit_group_order(rs, lat.torus_rank());
  for (const auto& rep : {order_thm31(lat), order_thm33(lat), order_thm34(lat), order_thm41(lat)}) {
    const std::string f(formula_name(rep.formula));
    if (rep.term(lat.zero_entry().label)->value != QPolynomial::constant(1)) return f + ": zero term != 1";
    if (rep.term(lat.identity_entry().label)->value != unit) return f + ": identity term != |G|";
    h_polynomial(rep.total);
  }
  return {};
}

std::string check_solomon(const CartanType& t, const EnumerationLimits& limits) {
  const auto rs = RootSystemData::build(t);
  const QPolynomial enumerated = length_gen_poly(generate(rs, limits.weyl_bound));
  const QPolynomial product = poincare_product(t);
  if (enumerated != product) return "enumerated " + enumerated.to_string() + " vs product " + product.to_string();
  return {};
}

std::string check_cosets(const CartanType& t, const EnumerationLimits& limits) {
  const auto rs = RootSystemData::build(t);
  const WeylGroup w = generate(rs, limits.weyl_bound);
  const QPolynomial full = length_gen_poly(w);
  for (std::uint64_t m = 0; m <= rs.all().mask(); ++m) {
    const auto j = SimpleSubset::from_mask(m);
    std::vector<BigInt> c(static_cast<std::size_t>(rs.num_positive() + 1));
    for (const auto& rep : min_coset_reps(w, j)) c[static_cast<std::size_t>(rep.length)] += 1;
    if (QPolynomial(std::move(c)) * length_gen_poly(parabolic(w, j)) != full) return "fails for J=" + j.to_string();
  }
  return {};
}

std::string check_root_counts(const CartanType& t) {
  const auto rs = RootSystemData::build(t);
  std::size_t positives = 0;
  for (const Root& r : reflection_closure(rs)) {
    bool pos = true;
    for (int c : r) pos = pos && c >= 0;
    if (pos) ++positives;
  }
  if (static_cast<int>(positives) != rs.num_positive()) return "reflection closure disagrees with root strings";
  if (rs.num_positive() != positive_root_count(t)) return "|Phi+| != sum(d_i - 1)";
  return {};
}

}  // namespace

std::vector<CheckResult> run_verification(const EnumerationLimits& limits) {
  std::vector<std::pair<std::string, Check>> checks;
  checks.emplace_back("H-polynomial C2 coefficients", [] { return check_h(2, kHCoeffsL2); });
  checks.emplace_back("H-polynomial C3 coefficients", [] { return check_h(3, kHCoeffsL3); });
  for (auto [n, p] : std::vector<std::pair<int, std::uint32_t>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
    checks.emplace_back("rank strata M_" + std::to_string(n) + "(F_" + std::to_string(p) + ")",
                        [n, p, &limits] { return check_matrix_strata(n, p, limits); });
  }
  for (int n = 1; n <= 6; ++n) {
    checks.emplace_back("strata sum to q^" + std::to_string(n * n), [n] {
      QPolynomial sum;
      for (int r = 0; r <= n; ++r) sum += gl_strata(n, r);
      return sum == QPolynomial::q_power(static_cast<std::size_t>(n * n)) ? std::string() : "sum = " + sum.to_string();
    });
  }
  const auto lattices = standard_lattices();
  for (const auto& lat : lattices) {
    checks.emplace_back("formula agreement " + lat.description(),
                        [&lat, &limits] { return check_formula_agreement(lat, limits); });
    checks.emplace_back("zero/identity terms " + lat.description(), [&lat] { return check_structure(lat); });
  }
  for (int l = 2; l <= 6; ++l) {
    checks.emplace_back("symplectic closed form l=" + std::to_string(l), [l] {
      const QPolynomial closed = symplectic_order(l).total;
      if (closed != order_thm41(symplectic_lattice(l)).total) return std::string("closed form != thm41");
      if (!is_palindromic(h_polynomial(closed))) return std::string("H not palindromic");
      return std::string();
    });
  }
  const std::vector<std::pair<Family, int>> solomon = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
                                                       {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3},
                                                       {Family::C, 4}, {Family::D, 4}, {Family::G, 2}, {Family::F, 4}};
  for (auto [f, l] : solomon) {
    const auto t = CartanType::make(f, l);
    checks.emplace_back("Poincare product " + t.name(), [t, &limits] { return check_solomon(t, limits); });
    checks.emplace_back("positive roots " + t.name(), [t] { return check_root_counts(t); });
  }
  for (auto f : {Family::A, Family::B, Family::C}) {
    const auto t = CartanType::make(f, 3);
    checks.emplace_back("coset sums " + t.name(), [t, &limits] { return check_cosets(t, limits); });
  }
  for (std::uint32_t p : {2u, 3u}) {
    for (int n = 0; n <= 4; ++n) {
      checks.emplace_back("subspaces of F_" + std::to_string(p) + "^" + std::to_string(n), [n, p, &limits] {
        std::ostringstream err;
        for (int r = 0; r <= n; ++r) {
          const BigInt counted = oracle::count_subspaces(n, r, p, limits.matrix_bound);
          const BigInt formula = eval_big(gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)), p);
          if (counted != formula) err << "r=" << r << ": " << counted << " vs " << formula << "; ";
        }
        return err.str();
      });
    }
  }

  std::vector<CheckResult> results;
  for (auto& [name, check] : checks) {
    CheckResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace monoid
