#include <doctest.h>

#include "monoid/errors.hpp"
#include "monoid/oracle.hpp"
#include "monoid/orders.hpp"

using namespace monoid;

namespace {

RootSystemData build(const char* name) { return RootSystemData::build(CartanType::parse(name)); }

CrossSectionLattice preset(const char* type, const char* which) {
  const auto rs = build(type);
  return j_irreducible_lattice(rs, preset_j0(rs, which));
}

const QPolynomial q_minus_one{-1, 1};
const QPolynomial q_plus_one{1, 1};

QPolynomial q_pow(std::size_t n) { return QPolynomial::q_power(n); }

}  // namespace

TEST_CASE("group sizes satisfy the Levi decomposition") {
  for (const char* t : {"A3", "C3", "C4", "G2"}) {
    const auto rs = build(t);
    for (std::uint64_t m = 0; m < rs.all().mask(); ++m) {
      const auto lat = j_irreducible_lattice(rs, SimpleSubset::from_mask(m));
      for (const auto& e : lat.entries()) {
        const auto s = group_sizes(lat, e);
        CHECK(s.size_P == s.size_L * s.size_U);
        CHECK_NOTHROW(div_exact(s.size_L, s.size_K));
        CHECK_NOTHROW(div_exact(s.size_G * s.size_G, isotropy_size(s)));
      }
    }
  }
}

TEST_CASE("isotropy_size") {
  const auto lat = preset("A1", "first-fundamental");
  const auto g = unit_group_order(lat.root_system(), lat.torus_rank());
  const auto& entries = lat.entries();
  CHECK(isotropy_size(group_sizes(lat, lat.identity_entry())) == g);
  CHECK(isotropy_size(group_sizes(lat, lat.zero_entry())) == g * g);
  // Middle entry: orbit = rank-1 matrices in M_2(F_2).
  const auto& middle = entries[1];
  REQUIRE(middle.label == "e{}");
  const auto orbit = div_exact(g * g, isotropy_size(group_sizes(lat, middle)));
  CHECK(eval_big(orbit, 2) == 9);
  CHECK(eval_big(orbit, 2) == oracle::enumerate_rank_histogram(2, 2).counts.at(1));
  CHECK(eval_big(orbit, 3) == oracle::enumerate_rank_histogram(2, 3).counts.at(1));
}

TEST_CASE("order_thm31") {
  const auto a1 = order_thm31(preset("A1", "first-fundamental"));
  CHECK(a1.total == q_pow(4));
  CHECK(a1.formula == Formula::Thm31);
  auto sym = order_thm31(symplectic_lattice(2));
  sym.evaluate_at({2});
  REQUIRE(sym.evaluations.size() == 1);
  CHECK(sym.evaluations[0].second == 2296);
  CHECK(sym.term("0")->value == QPolynomial{1});
}

TEST_CASE("order_thm33") {
  const auto lat = preset("A1", "first-fundamental");
  const auto r = order_thm33(lat);
  const QPolynomial gl2 = QPolynomial::q_power(1) * q_minus_one * QPolynomial{-1, 0, 1};
  CHECK(r.term("1")->value == gl2);
  CHECK(eval_big(gl2, 2) == oracle::enumerate_rank_histogram(2, 2).counts.at(2));
  CHECK(r.term("0")->value == QPolynomial{1});

  // Symplectic l=2, lambda_star = {a2}: N* = 1 and [T:T(e)] = (q-1)^2.
  const auto sym = symplectic_lattice(2);
  const auto& e = sym.entries()[2];
  REQUIRE(e.lambda_star == SimpleSubset::parse("2"));
  CHECK(sym.root_system().positive_count_of_subset(e.lambda_star) == 1);
  CHECK(e.torus_index_exponent == 2);
  const auto t = order_thm33(sym).term(e.label)->value;
  const auto pw = poincare_product(sym.root_system().cartan_type());
  CHECK(t == q_minus_one.pow(2) * q_pow(1) * div_exact(pw, QPolynomial{1, 1}) * pw);

  const auto w = generate(sym.root_system());
  CHECK(order_thm33(sym, w).total == order_thm33(sym).total);
  const auto other = build("A2");
  const auto wrong = generate(other);
  CHECK_THROWS_AS(order_thm33(sym, wrong), InvariantViolation);
}

TEST_CASE("order_thm34") {
  for (int l = 2; l <= 5; ++l) {
    const auto sym = symplectic_lattice(l);
    const auto r = order_thm34(sym);
    QPolynomial expected = q_minus_one;
    for (int i = 1; i <= l; ++i) expected *= QPolynomial::q_power_plus_one(static_cast<std::size_t>(i)).pow(2);
    CHECK(r.term("e{}")->value == expected);
    CHECK(r.term("0")->value == QPolynomial{1});
  }
  CHECK(order_thm34(preset("A2", "first-fundamental")).total == q_pow(9));
  CHECK(order_thm34(preset("A3", "first-fundamental")).total == q_pow(16));
}

TEST_CASE("order_thm41") {
  const auto a1 = order_thm41(preset("A1", "first-fundamental"));
  REQUIRE(a1.terms.size() == 3);
  CHECK(a1.terms[0].value == QPolynomial{1});
  CHECK(a1.terms[1].value == q_minus_one * q_plus_one * q_plus_one);
  CHECK(a1.terms[2].value == q_pow(1) * q_minus_one * QPolynomial{-1, 0, 1});
  CHECK(a1.total == q_pow(4));
  CHECK(eval_big(a1.terms[1].value, 2) + eval_big(a1.terms[2].value, 2) + 1 == 16);

  auto sym = order_thm41(symplectic_lattice(2));
  sym.evaluate_at({2});
  CHECK(sym.evaluations[0].second == 2296);

  for (const char* t : {"C3", "A3", "G2", "F4"}) {
    const auto rs = build(t);
    const auto lat = j_irreducible_lattice(rs, SimpleSubset::parse("1"));
    QPolynomial unit = q_pow(static_cast<std::size_t>(rs.num_positive())) * q_minus_one;
    for (int d : degrees(rs.cartan_type())) unit *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(d));
    CHECK(order_thm41(lat).term("1")->value == unit);
  }
}

TEST_CASE("order_thm41 rejects non-J-irreducible data") {
  const auto sym = symplectic_lattice(2);
  auto raw = sym.entries();
  raw[2].torus_index_exponent = 1;
  const auto bent = load_lattice(sym.root_system(), raw);
  CHECK_THROWS_AS(order_thm41(bent), NotJIrreducible);
  raw = sym.entries();
  raw.back().torus_index_exponent = 4;
  const auto wide = load_lattice(sym.root_system(), raw);
  CHECK_THROWS_AS(order_thm41(wide), NotJIrreducible);
}

TEST_CASE("property: formulas agree on every lattice") {
  std::vector<CrossSectionLattice> lats;
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "C4", "D4", "G2", "F4"}) {
    const auto rs = build(t);
    for (std::uint64_t m = 0; m < rs.all().mask(); ++m) lats.push_back(j_irreducible_lattice(rs, SimpleSubset::from_mask(m)));
  }
  // A hand-built lattice with a larger central torus and a non-chain shape.
  const auto a3 = build("A3");
  lats.push_back(load_lattice(a3, {{"0", SimpleSubset(), a3.all(), 0},
                                   {"x", SimpleSubset::parse("1"), SimpleSubset::parse("3"), 3},
                                   {"y", SimpleSubset::parse("3"), SimpleSubset::parse("1"), 3},
                                   {"z", SimpleSubset(), SimpleSubset(), 2},
                                   {"1", a3.all(), SimpleSubset(), 6}}));
  for (const auto& lat : lats) {
    CAPTURE(lat.description());
    const auto t31 = order_thm31(lat);
    const auto t34 = order_thm34(lat);
    CHECK(t31.total == order_thm33(lat).total);
    CHECK(t31.total == t34.total);
    for (std::size_t i = 0; i < t31.terms.size(); ++i) CHECK(t31.terms[i].value == t34.terms[i].value);
    if (lat.origin() != LatticeOrigin::UserSupplied) CHECK(order_thm41(lat).total == t31.total);
    CHECK(t31.term(lat.zero_entry().label)->value == QPolynomial{1});
    CHECK(t31.term(lat.identity_entry().label)->value == unit_group_order(lat.root_system(), lat.torus_rank()));
    CHECK_NOTHROW(h_polynomial(t31.total));
    auto copy = t34;
    CHECK_NOTHROW(copy.evaluate_at({2, 3, 4, 5}));
  }
}

TEST_CASE("evaluate_at") {
  auto r = order_thm34(symplectic_lattice(2));
  CHECK_THROWS_AS(r.evaluate_at({1}), IndexOutOfRange);
  r.evaluate_at({2, 3});
  CHECK(r.evaluations.size() == 2);
  CHECK(r.evaluations[1].first == 3);
  CHECK(r.evaluations[1].second == eval_big(r.total, 3));

  OrderReport bad;
  bad.terms.push_back({"neg", QPolynomial{-5}});
  CHECK_THROWS_AS(bad.evaluate_at({2}), InvariantViolation);
}

TEST_CASE("report notes") {
  const auto c3 = order_thm34(symplectic_lattice(3));
  CHECK(c3.notes.size() == 1);
  const auto b3 = build("B3");
  const auto rule = order_thm34(j_irreducible_lattice(b3, preset_j0(b3, "last-fundamental")));
  CHECK(rule.notes.size() == 2);
}

TEST_CASE("symplectic_order") {
  auto r = symplectic_order(2);
  r.evaluate_at({2});
  CHECK(r.evaluations[0].second == 2296);
  CHECK(r.terms.size() == 4);
  CHECK(r.terms.front().value == QPolynomial{1});
  for (int l = 2; l <= 6; ++l) {
    const auto rep = symplectic_order(l);
    QPolynomial sum;
    for (int k = 1; k <= l + 1; ++k) sum += symplectic_stratum(l, k);
    CHECK(sum + QPolynomial{1} == rep.total);
    // Top stratum is the unit group: (q-1) q^{l^2} prod (q^{2i}-1).
    QPolynomial top = q_minus_one * q_pow(static_cast<std::size_t>(l * l));
    for (int i = 1; i <= l; ++i) top *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(2 * i));
    CHECK(symplectic_stratum(l, l + 1) == top);
    CHECK(order_thm41(symplectic_lattice(l)).term("1")->value == top);
  }
  CHECK_THROWS_AS(symplectic_order(1), UnsupportedType);
  CHECK_THROWS_AS(symplectic_stratum(3, 5), IndexOutOfRange);
}

TEST_CASE("gl_strata") {
  CHECK(eval_big(gl_strata(2, 1), 2) == 9);
  CHECK(eval_big(gl_strata(2, 2), 2) == 6);
  CHECK(gl_strata(4, 0) == QPolynomial{1});
  CHECK_THROWS_AS(gl_strata(2, 3), IndexOutOfRange);
  for (int n = 0; n <= 6; ++n) {
    QPolynomial sum;
    for (int r = 0; r <= n; ++r) sum += gl_strata(n, r);
    CHECK(sum == q_pow(static_cast<std::size_t>(n * n)));
  }
  // Strata are the per-entry terms of the M_n lattice, in chain order.
  for (int l = 1; l <= 4; ++l) {
    const auto rep = order_thm34(preset(CartanType::make(Family::A, l).name().c_str(), "first-fundamental"));
    for (int r = 0; r <= l + 1; ++r) CHECK(rep.terms[static_cast<std::size_t>(r)].value == gl_strata(l + 1, r));
  }
}

TEST_CASE("h_polynomial") {
  CHECK(h_polynomial(q_pow(4)) == QPolynomial{1, 1, 1, 1});
  CHECK(h_polynomial(symplectic_order(2).total) == QPolynomial{1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1});
  CHECK(h_polynomial(symplectic_order(3).total) ==
        QPolynomial{1, 1, 1, 2, 2, 3, 4, 4, 4, 5, 5, 5, 5, 4, 4, 4, 3, 2, 2, 1, 1, 1});
  CHECK_THROWS_AS(h_polynomial(QPolynomial{1, 0, 0, 0, 1} + QPolynomial{1}), NonExactDivision);
  for (int l = 2; l <= 6; ++l) CHECK(is_palindromic(h_polynomial(symplectic_order(l).total)));
}

TEST_CASE("formula names") {
  CHECK(parse_formula("thm34") == Formula::Thm34);
  CHECK(formula_name(Formula::Thm41) == "thm41");
  CHECK_FALSE(parse_formula("thm32").has_value());
}
