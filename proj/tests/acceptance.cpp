// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "monoid/oracle.hpp"
#include "monoid/orders.hpp"
#include "monoid/weyl.hpp"

using namespace monoid;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no time limit
  std::function<std::string()> run;  // empty string on success, otherwise the failure
};

std::string expect(bool ok, const std::string& what) { return ok ? std::string() : what; }

QPolynomial coeffs(std::initializer_list<long long> c) { return QPolynomial(c); }

CrossSectionLattice preset(const std::string& type, const char* which) {
  const auto rs = RootSystemData::build(CartanType::parse(type));
  return j_irreducible_lattice(rs, preset_j0(rs, which));
}

std::vector<CrossSectionLattice> standard_lattices() {
  std::vector<CrossSectionLattice> out;
  for (const char* t : {"A1", "A2", "A3"}) out.push_back(preset(t, "first-fundamental"));
  for (int l = 2; l <= 4; ++l) out.push_back(symplectic_lattice(l));
  return out;
}

std::string h_check(int l, const QPolynomial& want) {
  const auto h = h_polynomial(symplectic_order(l).total);
  return expect(h == want, "got " + h.to_string());
}

std::string matrix_ground_truth() {
  const std::vector<std::pair<int, std::uint32_t>> cases{{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  for (auto [n, p] : cases) {
    const auto hist = oracle::enumerate_rank_histogram(n, p);
    BigInt all = 1;
    for (int i = 0; i < n * n; ++i) all *= p;
    if (hist.total() != all) return "total mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p);
    for (int r = 0; r <= n; ++r) {
      const auto it = hist.counts.find(r);
      const BigInt got = it == hist.counts.end() ? BigInt(0) : it->second;
      if (got != eval_big(gl_strata(n, r), p)) {
        return "rank " + std::to_string(r) + " mismatch at n=" + std::to_string(n) + " p=" + std::to_string(p);
      }
    }
  }
  return {};
}

std::string four_formulas() {
  for (const auto& lat : standard_lattices()) {
    const auto t31 = order_thm31(lat).total;
    const auto w = generate(lat.root_system());
    if (order_thm33(lat, w).total != t31) return "thm33 differs on " + lat.description();
    if (order_thm34(lat).total != t31) return "thm34 differs on " + lat.description();
    if (order_thm41(lat).total != t31) return "thm41 differs on " + lat.description();
  }
  return {};
}

std::string closed_form() {
  for (int l = 2; l <= 6; ++l) {
    if (symplectic_order(l).total != order_thm41(symplectic_lattice(l)).total) {
      return "mismatch at l=" + std::to_string(l);
    }
  }
  return {};
}

std::string solomon() {
  for (const char* t : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "G2"}) {
    const auto rs = RootSystemData::build(CartanType::parse(t));
    if (length_gen_poly(generate(rs)) != poincare_product(rs.cartan_type())) return std::string("mismatch for ") + t;
  }
  return {};
}

std::string coset_sums() {
  for (const char* t : {"A3", "B3", "C3"}) {
    const auto rs = RootSystemData::build(CartanType::parse(t));
    const auto w = generate(rs);
    const auto pw = length_gen_poly(w);
    for (std::uint64_t m = 0; m <= rs.all().mask(); ++m) {
      const auto j = SimpleSubset::from_mask(m);
      QPolynomial reps;
      for (const auto& x : min_coset_reps(w, j)) reps += QPolynomial::q_power(static_cast<std::size_t>(x.length));
      if (reps * length_gen_poly(parabolic(w, j)) != pw) return std::string(t) + " J=" + j.to_string();
    }
  }
  return {};
}

std::string structural() {
  const QPolynomial q_minus_one{-1, 1};
  for (const auto& lat : standard_lattices()) {
    const auto& rs = lat.root_system();
    QPolynomial unit = QPolynomial::q_power(static_cast<std::size_t>(rs.num_positive())) * q_minus_one;
    for (int d : degrees(rs.cartan_type())) unit *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(d));
    for (const auto& r : {order_thm31(lat), order_thm33(lat), order_thm34(lat), order_thm41(lat)}) {
      const std::string where = std::string(formula_name(r.formula)) + " on " + lat.description();
      if (r.term(lat.zero_entry().label)->value != QPolynomial{1}) return "e=0 term not 1 in " + where;
      if (r.term(lat.identity_entry().label)->value != unit) return "e=1 term wrong in " + where;
      h_polynomial(r.total);
    }
  }
  for (int l = 2; l <= 6; ++l) {
    const auto rep = symplectic_order(l);
    if (rep.terms.front().value != QPolynomial{1}) return "e=0 stratum not 1 at l=" + std::to_string(l);
    if (!is_palindromic(h_polynomial(rep.total))) return "H not palindromic at l=" + std::to_string(l);
  }
  return {};
}

std::string subspaces() {
  for (int n = 0; n <= 4; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto want = eval_big(gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)), 2);
      if (oracle::count_subspaces(n, r, 2) != want) return "n=" + std::to_string(n) + " r=" + std::to_string(r);
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "symplectic H-polynomial, l=2", 1.0,
       [] { return h_check(2, coeffs({1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1})); }},
      {2, "symplectic H-polynomial, l=3", 1.0,
       [] { return h_check(3, coeffs({1, 1, 1, 2, 2, 3, 4, 4, 4, 5, 5, 5, 5, 4, 4, 4, 3, 2, 2, 1, 1, 1})); }},
      {3, "matrix-monoid ground truth", 30.0, matrix_ground_truth},
      {4, "four-formula agreement", 10.0, four_formulas},
      {5, "closed-form consistency, l=2..6", 5.0, closed_form},
      {6, "Poincare product from Weyl enumeration", 10.0, solomon},
      {7, "coset-sum identity", 10.0, coset_sums},
      {8, "structural sanity", 0.0, structural},
      {9, "Gaussian binomial oracle", 5.0, subspaces},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string err;
    try {
      err = c.run();
    } catch (const std::exception& e) {
      err = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (err.empty() && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      err = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    const bool ok = err.empty();
    failures += ok ? 0 : 1;
    std::printf("criterion %d: %s  %-40s %.3f s", c.id, ok ? "PASS" : "FAIL", c.title.c_str(), secs);
    if (c.limit_seconds > 0) std::printf(" (limit %.0f s)", c.limit_seconds);
    if (!ok) std::printf("  %s", err.c_str());
    std::printf("\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
