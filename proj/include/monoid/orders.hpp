#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monoid/crosssection.hpp"
#include "monoid/qpoly.hpp"
#include "monoid/weyl.hpp"

namespace monoid {

enum class Formula {
  Thm31,       // orbit sizes |G|^2 / |(G x G)_e|
  Thm33,       // minimal coset representative sums
  Thm34,       // degrees of the component Weyl groups
  Thm41,       // J-irreducible closed form
  Symplectic,  // closed form for the finite symplectic monoid
};

std::string_view formula_name(Formula f);
std::optional<Formula> parse_formula(std::string_view name);

/// Orders of the groups attached to one lattice entry, as polynomials in q.
struct GroupSizes {
  QPolynomial size_G;
  QPolynomial size_P;  // parabolic P(e)
  QPolynomial size_K;  // K(e) = {g : ge = e = eg}
  QPolynomial size_U;  // unipotent radical U(e)
  QPolynomial size_L;  // Levi factor L(e)
};

GroupSizes group_sizes(const CrossSectionLattice& lat, const LatticeEntry& e);

/// |(G x G)_e| = |P(e)| |U(e)| |K(e)|
QPolynomial isotropy_size(const GroupSizes& sizes);

/// |G| = q^N (q-1)^{torus_rank} P_W(q)
QPolynomial unit_group_order(const RootSystemData& rs, int torus_rank);

struct OrderTerm {
  std::string label;
  QPolynomial value;
};

struct OrderReport {
  Formula formula = Formula::Thm31;
  std::string type;
  std::string lattice;
  std::vector<OrderTerm> terms;
  QPolynomial total;
  std::vector<std::pair<BigInt, BigInt>> evaluations;  // (q0, |M| at q0)
  std::vector<std::string> notes;

  /// Appends |M|(q0) for each q0. Throws InvariantViolation if some term is not
  /// a positive integer at q0, IndexOutOfRange if q0 < 2.
  void evaluate_at(const std::vector<BigInt>& qs);
  const OrderTerm* term(std::string_view label) const;
};

OrderReport order_thm31(const CrossSectionLattice& lat);

/// Coset sums as exact quotients P_W / P_{W(e)} and P_W / P_{W_*(e)}.
OrderReport order_thm33(const CrossSectionLattice& lat);
/// Coset sums by enumerating minimal coset representatives in w, each one
/// cross-checked against the quotient route (InvariantViolation on mismatch).
OrderReport order_thm33(const CrossSectionLattice& lat, const WeylGroup& w);

OrderReport order_thm34(const CrossSectionLattice& lat);

/// Requires torus rank l+1 and exponent |lambda_star|+1 on every nonzero
/// entry; throws NotJIrreducible otherwise.
OrderReport order_thm41(const CrossSectionLattice& lat);

/// Finite symplectic monoid of C_l, l >= 2: terms are the rank strata
/// |M^0|, ..., |M^{l+1}|, total from the closed form.
OrderReport symplectic_order(int l);

/// |M^r| of the finite symplectic monoid, r = 0..l+1.
QPolynomial symplectic_stratum(int l, int r);

/// Number of rank-r matrices in M_n(F_q): q^{r(r-1)/2} [n,r]_q^2 prod_{i<=r}(q^i - 1).
QPolynomial gl_strata(int n, int r);

/// H with |M| - 1 = (q - 1) H.
QPolynomial h_polynomial(const QPolynomial& order_total);

}  // namespace monoid
