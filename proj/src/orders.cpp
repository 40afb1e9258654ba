#include "monoid/orders.hpp"

#include <algorithm>

#include "monoid/errors.hpp"

namespace monoid {

namespace {

const QPolynomial& q_minus_one() {
  static const QPolynomial p = QPolynomial::q_power_minus_one(1);
  return p;
}

QPolynomial q_pow(int n) { return QPolynomial::q_power(static_cast<std::size_t>(n)); }

QPolynomial coset_sum_from_enumeration(const WeylGroup& w, const SimpleSubset& j) {
  std::vector<BigInt> c(static_cast<std::size_t>(w.root_system().num_positive() + 1));
  for (const auto& rep : min_coset_reps(w, j)) c[static_cast<std::size_t>(rep.length)] += 1;
  return QPolynomial(std::move(c));
}

OrderReport start_report(const CrossSectionLattice& lat, Formula f) {
  OrderReport r;
  r.formula = f;
  r.type = lat.root_system().cartan_type().name();
  r.lattice = lat.description();
  if (lat.origin() == LatticeOrigin::RuleDerived) {
    r.notes.emplace_back("type map from the general J-irreducible rule; not among the published instances");
  }
  bool multiply_laced = false;
  for (const auto& e : lat.entries()) {
    for (const auto& c : lat.root_system().connected_components(e.lambda())) {
      if (c.type.family == Family::B || c.type.family == Family::C) multiply_laced = true;
    }
  }
  if (multiply_laced) {
    r.notes.emplace_back("B_r and C_r components share degrees and root counts; tags are interchangeable here");
  }
  return r;
}

void finish(OrderReport& r) {
  r.total = QPolynomial();
  for (const auto& t : r.terms) r.total += t.value;
}

}  // namespace

std::string_view formula_name(Formula f) {
  switch (f) {
    case Formula::Thm31:
      return "thm31";
    case Formula::Thm33:
      return "thm33";
    case Formula::Thm34:
      return "thm34";
    case Formula::Thm41:
      return "thm41";
    case Formula::Symplectic:
      return "symplectic";
  }
  return "?";
}

std::optional<Formula> parse_formula(std::string_view name) {
  for (Formula f : {Formula::Thm31, Formula::Thm33, Formula::Thm34, Formula::Thm41, Formula::Symplectic}) {
    if (formula_name(f) == name) return f;
  }
  return std::nullopt;
}

QPolynomial unit_group_order(const RootSystemData& rs, int torus_rank) {
  return q_pow(rs.num_positive()) * q_minus_one().pow(static_cast<unsigned>(torus_rank)) *
         poincare_product(rs.cartan_type());
}

GroupSizes group_sizes(const CrossSectionLattice& lat, const LatticeEntry& e) {
  const RootSystemData& rs = lat.root_system();
  const int n = rs.num_positive();
  const int n_e = rs.positive_count_of_subset(e.lambda());
  const int n_sub = rs.positive_count_of_subset(e.lambda_substar);
  const QPolynomial torus = q_minus_one().pow(static_cast<unsigned>(lat.torus_rank()));
  const QPolynomial torus_e = q_minus_one().pow(static_cast<unsigned>(lat.torus_rank() - e.torus_index_exponent));
  const QPolynomial p_we = poincare_product(rs, e.lambda());

  GroupSizes s;
  s.size_G = unit_group_order(rs, lat.torus_rank());
  s.size_P = q_pow(n) * torus * p_we;
  s.size_U = q_pow(n - n_e);
  s.size_L = q_pow(n_e) * torus * p_we;
  s.size_K = q_pow(n_sub) * torus_e * poincare_product(rs, e.lambda_substar);
  return s;
}

QPolynomial isotropy_size(const GroupSizes& sizes) { return sizes.size_P * sizes.size_U * sizes.size_K; }

void OrderReport::evaluate_at(const std::vector<BigInt>& qs) {
  for (const BigInt& q0 : qs) {
    if (q0 < 2) throw IndexOutOfRange("evaluation point q must be at least 2");
    for (const auto& t : terms) {
      if (eval_big(t.value, q0) <= 0) {
        throw InvariantViolation("term '" + t.label + "' is not positive at q=" + q0.str());
      }
    }
    evaluations.emplace_back(q0, eval_big(total, q0));
  }
}

const OrderTerm* OrderReport::term(std::string_view label) const {
  auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.label == label; });
  return it == terms.end() ? nullptr : &*it;
}

OrderReport order_thm31(const CrossSectionLattice& lat) {
  OrderReport r = start_report(lat, Formula::Thm31);
  for (const auto& e : lat.entries()) {
    const GroupSizes s = group_sizes(lat, e);
    r.terms.push_back({e.label, div_exact(s.size_G * s.size_G, isotropy_size(s))});
  }
  finish(r);
  return r;
}

namespace {

OrderReport thm33_impl(const CrossSectionLattice& lat, const WeylGroup* w) {
  OrderReport r = start_report(lat, Formula::Thm33);
  const RootSystemData& rs = lat.root_system();
  const QPolynomial p_w = poincare_product(rs.cartan_type());
  for (const auto& e : lat.entries()) {
    QPolynomial d = div_exact(p_w, poincare_product(rs, e.lambda()));
    QPolynomial d_sub = div_exact(p_w, poincare_product(rs, e.lambda_substar));
    if (w != nullptr) {
      const QPolynomial d_enum = coset_sum_from_enumeration(*w, e.lambda());
      const QPolynomial d_sub_enum = coset_sum_from_enumeration(*w, e.lambda_substar);
      if (d_enum != d || d_sub_enum != d_sub) {
        throw InvariantViolation("entry '" + e.label + "': enumerated coset sums disagree with Poincare quotients");
      }
    }
    const QPolynomial index = q_minus_one().pow(static_cast<unsigned>(e.torus_index_exponent));
    const int n_star = rs.positive_count_of_subset(e.lambda_star);
    r.terms.push_back({e.label, index * q_pow(n_star) * d * d_sub});
  }
  finish(r);
  if (w != nullptr) r.notes.emplace_back("coset sums enumerated in W and matched against Poincare quotients");
  return r;
}

}  // namespace

OrderReport order_thm33(const CrossSectionLattice& lat) { return thm33_impl(lat, nullptr); }

OrderReport order_thm33(const CrossSectionLattice& lat, const WeylGroup& w) {
  if (!(w.root_system().cartan_type() == lat.root_system().cartan_type()) ||
      w.generating_set() != lat.root_system().all()) {
    throw InvariantViolation("Weyl group does not belong to the lattice's root system");
  }
  return thm33_impl(lat, &w);
}

OrderReport order_thm34(const CrossSectionLattice& lat) {
  OrderReport r = start_report(lat, Formula::Thm34);
  const RootSystemData& rs = lat.root_system();
  const QPolynomial p_w = poincare_product(rs.cartan_type());
  const QPolynomial p_w2 = p_w * p_w;
  for (const auto& e : lat.entries()) {
    QPolynomial denom = QPolynomial::constant(1);
    for (const auto& c : rs.connected_components(e.lambda_substar)) {
      const QPolynomial p = poincare_product(c.type);
      denom *= p * p;
    }
    for (const auto& c : rs.connected_components(e.lambda_star)) denom *= poincare_product(c.type);
    const QPolynomial numer = q_minus_one().pow(static_cast<unsigned>(e.torus_index_exponent)) *
                              q_pow(rs.positive_count_of_subset(e.lambda_star)) * p_w2;
    r.terms.push_back({e.label, div_exact(numer, denom)});
  }
  finish(r);
  return r;
}

OrderReport order_thm41(const CrossSectionLattice& lat) {
  const RootSystemData& rs = lat.root_system();
  const int l = rs.rank();
  if (lat.torus_rank() != l + 1) {
    throw NotJIrreducible("torus rank " + std::to_string(lat.torus_rank()) + " differs from l+1 = " +
                          std::to_string(l + 1));
  }
  for (const auto& e : lat.entries()) {
    if (lat.is_zero_entry(e)) continue;
    if (e.torus_index_exponent != e.lambda_star.size() + 1) {
      throw NotJIrreducible("entry '" + e.label + "' has torus index exponent " +
                            std::to_string(e.torus_index_exponent) + ", expected |lambda_star|+1");
    }
  }

  OrderReport r = start_report(lat, Formula::Thm41);
  QPolynomial top = QPolynomial::constant(1);
  for (int d : degrees(rs.cartan_type())) top *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(d));
  top = top * top;

  for (const auto& e : lat.entries()) {
    if (lat.is_zero_entry(e)) {
      r.terms.push_back({e.label, QPolynomial::constant(1)});
      continue;
    }
    QPolynomial numer = q_pow(rs.positive_count_of_subset(e.lambda_star)) * top;
    const QPolynomial sub = degree_factor_product(rs, e.lambda_substar);
    QPolynomial denom = sub * sub * degree_factor_product(rs, e.lambda_star);
    const int exponent = 2 * (e.lambda().size() - l) + 1;
    if (exponent >= 0) {
      numer *= q_minus_one().pow(static_cast<unsigned>(exponent));
    } else {
      denom *= q_minus_one().pow(static_cast<unsigned>(-exponent));
    }
    r.terms.push_back({e.label, div_exact(numer, denom)});
  }
  finish(r);
  return r;
}

QPolynomial gl_strata(int n, int r) {
  if (n < 0 || r < 0 || r > n) {
    throw IndexOutOfRange("gl_strata: need 0 <= r <= n, got n=" + std::to_string(n) + ", r=" + std::to_string(r));
  }
  const QPolynomial g = gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(r));
  QPolynomial p = q_pow(r * (r - 1) / 2) * g * g;
  for (int i = 1; i <= r; ++i) p *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(i));
  return p;
}

QPolynomial symplectic_stratum(int l, int r) {
  if (l < 2) throw UnsupportedType("symplectic monoid needs l >= 2");
  if (r < 0 || r > l + 1) throw IndexOutOfRange("symplectic stratum r must lie in 0..l+1");
  if (r == 0) return QPolynomial::constant(1);
  const QPolynomial g = gaussian_binomial(static_cast<unsigned>(l), static_cast<unsigned>(r - 1), 2);
  QPolynomial p = q_minus_one() * q_pow((r - 1) * (r - 1)) * g * g;
  for (int i = 1; i <= r - 1; ++i) p *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(2 * i));
  for (int i = 1; i <= l - r + 1; ++i) {
    const QPolynomial f = QPolynomial::q_power_plus_one(static_cast<std::size_t>(i));
    p *= f * f;
  }
  return p;
}

OrderReport symplectic_order(int l) {
  if (l < 2) throw UnsupportedType("symplectic monoid needs l >= 2");
  OrderReport rep;
  rep.formula = Formula::Symplectic;
  rep.type = CartanType::make(Family::C, l).name();
  rep.lattice = "symplectic closed form, l=" + std::to_string(l);

  QPolynomial sum;
  for (int r = 0; r <= l; ++r) {
    const QPolynomial g = gaussian_binomial(static_cast<unsigned>(l), static_cast<unsigned>(r), 2);
    QPolynomial t = q_pow(r * r) * g * g;
    for (int i = 1; i <= r; ++i) t *= QPolynomial::q_power_minus_one(static_cast<std::size_t>(2 * i));
    for (int i = 1; i <= l - r; ++i) {
      const QPolynomial f = QPolynomial::q_power_plus_one(static_cast<std::size_t>(i));
      t *= f * f;
    }
    sum += t;
  }
  const QPolynomial closed = QPolynomial::constant(1) + q_minus_one() * sum;

  for (int r = 0; r <= l + 1; ++r) rep.terms.push_back({"M^" + std::to_string(r), symplectic_stratum(l, r)});
  finish(rep);
  if (rep.total != closed) throw InvariantViolation("symplectic strata do not sum to the closed-form order");
  return rep;
}

QPolynomial h_polynomial(const QPolynomial& order_total) {
  return div_exact(order_total - QPolynomial::constant(1), q_minus_one());
}

}  // namespace monoid
