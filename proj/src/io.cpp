#include "monoid/io.hpp"

#include <limits>

#include "monoid/errors.hpp"

namespace monoid::io {

json poly_to_json(const QPolynomial& p) {
  json arr = json::array();
  const BigInt lo = std::numeric_limits<std::int64_t>::min();
  const BigInt hi = std::numeric_limits<std::int64_t>::max();
  for (const BigInt& c : p.coeffs()) {
    if (c >= lo && c <= hi) {
      arr.push_back(static_cast<std::int64_t>(c));
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ParseError("not a decimal integer: '" + s + "'");
    }
    return BigInt(s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

QPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of coefficients");
  std::vector<BigInt> c;
  for (const auto& v : j) c.push_back(bigint_from_json(v));
  return QPolynomial(std::move(c));
}

json lattice_to_json(const CrossSectionLattice& lat) {
  json entries = json::array();
  for (const auto& e : lat.entries()) {
    entries.push_back({{"label", e.label},
                       {"lambda_star", e.lambda_star.indices()},
                       {"lambda_substar", e.lambda_substar.indices()},
                       {"torus_index_exponent", e.torus_index_exponent}});
  }
  return {{"type", lat.root_system().cartan_type().name()}, {"entries", entries}};
}

namespace {

SimpleSubset subset_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + " must be an array of simple-root indices");
  SimpleSubset s;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(where + " contains a non-integer");
    const auto i = v.get<std::int64_t>();
    if (i < 1 || i > kMaxRank) throw InvariantViolation(where + ": simple-root index " + std::to_string(i) + " out of range");
    s.insert(static_cast<int>(i));
  }
  return s;
}

}  // namespace

CrossSectionLattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("entries") || !j["type"].is_string() ||
      !j["entries"].is_array()) {
    throw ParseError("lattice JSON needs a string \"type\" and an array \"entries\"");
  }
  const RootSystemData rs = RootSystemData::build(CartanType::parse(j["type"].get<std::string>()));
  std::vector<LatticeEntry> raw;
  for (const auto& je : j["entries"]) {
    if (!je.is_object()) throw ParseError("lattice entry must be an object");
    LatticeEntry e;
    e.label = je.value("label", std::string());
    const std::string where = "entry '" + e.label + "'";
    if (!je.contains("lambda_star") || !je.contains("lambda_substar") || !je.contains("torus_index_exponent")) {
      throw ParseError(where + " lacks lambda_star, lambda_substar or torus_index_exponent");
    }
    e.lambda_star = subset_from_json(je["lambda_star"], where + " lambda_star");
    e.lambda_substar = subset_from_json(je["lambda_substar"], where + " lambda_substar");
    if (!je["torus_index_exponent"].is_number_integer()) throw ParseError(where + ": torus_index_exponent must be an integer");
    e.torus_index_exponent = je["torus_index_exponent"].get<int>();
    raw.push_back(std::move(e));
  }
  return load_lattice(rs, std::move(raw));
}

json report_to_json(const OrderReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back({{"label", t.label}, {"coeffs", poly_to_json(t.value)}});
  json evals = json::object();
  for (const auto& [q0, v] : r.evaluations) evals[q0.str()] = v.str();
  return {{"formula", std::string(formula_name(r.formula))},
          {"type", r.type},
          {"lattice", r.lattice},
          {"terms", terms},
          {"total_coeffs", poly_to_json(r.total)},
          {"evaluations", evals},
          {"notes", r.notes}};
}

}  // namespace monoid::io
