#pragma once

#include <json.hpp>

#include "monoid/crosssection.hpp"
#include "monoid/orders.hpp"
#include "monoid/qpoly.hpp"

namespace monoid::io {

using nlohmann::json;

/// Ascending coefficients. Values that fit in 64 bits are JSON numbers, larger
/// ones decimal strings.
json poly_to_json(const QPolynomial& p);
/// Accepts numbers and decimal strings; throws ParseError otherwise.
QPolynomial poly_from_json(const json& j);

BigInt bigint_from_json(const json& j);

/// {"type": "C3", "entries": [{"label", "lambda_star", "lambda_substar",
///  "torus_index_exponent"}, ...]} with 1-based simple-root indices.
json lattice_to_json(const CrossSectionLattice& lat);
/// Builds the root system named by "type" and validates the entries.
CrossSectionLattice lattice_from_json(const json& j);

/// {formula, type, lattice, terms: [{label, coeffs}], total_coeffs,
///  evaluations: {"2": "..."}, notes}
json report_to_json(const OrderReport& r);

}  // namespace monoid::io
