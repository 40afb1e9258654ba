#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monoid/errors.hpp"
#include "monoid/io.hpp"
#include "monoid/limits.hpp"
#include "monoid/orders.hpp"
#include "monoid/verify.hpp"

using namespace monoid;
using monoid::io::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;
constexpr int kExitVerification = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LatticeArgs {
  std::string type;
  std::string preset;
  std::optional<std::string> j0;
  std::string lattice_file;
  std::string format = "table";
};

struct Options {
  LatticeArgs lat;
  std::vector<std::string> q;
  std::string formula = "thm34";
};

void add_lattice_options(CLI::App* cmd, LatticeArgs& a) {
  cmd->add_option("--type", a.type, "Cartan type, e.g. A3, C4, E6");
  auto* preset = cmd->add_option("--preset", a.preset, "last-fundamental | first-fundamental")
                     ->check(CLI::IsMember({"last-fundamental", "first-fundamental"}));
  auto* j0 = cmd->add_option("--j0", a.j0, "simple roots annihilating the weight, e.g. 1,2");
  auto* file = cmd->add_option("--lattice-file", a.lattice_file, "lattice JSON as written by `lattice --format json`");
  preset->excludes(j0)->excludes(file);
  j0->excludes(file);
  cmd->add_option("--format", a.format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
}

void add_q_option(CLI::App* cmd, std::vector<std::string>& q) {
  cmd->add_option("--q", q, "evaluate at q (repeatable, each >= 2)")->allow_extra_args(false);
}

std::vector<BigInt> parse_qs(const std::vector<std::string>& raw) {
  std::vector<BigInt> out;
  for (const auto& s : raw) {
    BigInt v;
    try {
      v = io::bigint_from_json(json(s));
    } catch (const ParseError&) {
      throw UsageError("--q expects an integer, got '" + s + "'");
    }
    if (v < 2) throw UsageError("--q values must be at least 2, got " + s);
    out.push_back(v);
  }
  return out;
}

CrossSectionLattice resolve_lattice(const LatticeArgs& a) {
  if (!a.lattice_file.empty()) {
    std::ifstream in(a.lattice_file);
    if (!in) throw UsageError("cannot open lattice file '" + a.lattice_file + "'");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ParseError(a.lattice_file + ": " + e.what());
    }
    auto lat = io::lattice_from_json(j);
    if (!a.type.empty() && CartanType::parse(a.type).name() != lat.root_system().cartan_type().name()) {
      throw UsageError("--type " + a.type + " does not match the lattice file's type " +
                       lat.root_system().cartan_type().name());
    }
    return lat;
  }
  if (a.type.empty()) throw UsageError("--type is required unless --lattice-file is given");
  if (a.preset.empty() && !a.j0) throw UsageError("one of --preset, --j0, --lattice-file is required");
  const auto rs = RootSystemData::build(CartanType::parse(a.type));
  const SimpleSubset j0 = a.j0 ? SimpleSubset::parse(*a.j0) : preset_j0(rs, a.preset);
  return j_irreducible_lattice(rs, j0);
}

std::string join_coeffs(const QPolynomial& p, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += sep;
    out += p.coeffs()[i].str();
  }
  return out.empty() ? "0" : out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

OrderReport compute(Formula f, const CrossSectionLattice& lat, const EnumerationLimits& limits) {
  switch (f) {
    case Formula::Thm31:
      return order_thm31(lat);
    case Formula::Thm33: {
      try {
        return order_thm33(lat, generate(lat.root_system(), limits.weyl_bound));
      } catch (const GroupTooLarge&) {
        auto r = order_thm33(lat);
        r.notes.push_back("Weyl group above the enumeration bound; coset sums taken as exact quotients");
        return r;
      }
    }
    case Formula::Thm34:
      return order_thm34(lat);
    case Formula::Thm41:
      return order_thm41(lat);
    case Formula::Symplectic:
      break;
  }
  throw UsageError("formula not available for order");
}

void print_report(const OrderReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << io::report_to_json(r).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "label,coeffs";
    for (const auto& [q0, v] : r.evaluations) std::cout << ",q=" << q0;
    std::cout << "\n";
    auto row = [&](const std::string& label, const QPolynomial& p) {
      std::cout << csv_quote(label) << "," << join_coeffs(p);
      for (const auto& [q0, v] : r.evaluations) std::cout << "," << eval_big(p, q0);
      std::cout << "\n";
    };
    for (const auto& t : r.terms) row(t.label, t.value);
    row("total", r.total);
    return;
  }
  std::cout << r.lattice << "  [" << formula_name(r.formula) << "]\n";
  std::size_t width = 5;
  for (const auto& t : r.terms) width = std::max(width, t.label.size());
  for (const auto& t : r.terms) {
    std::cout << "  " << t.label << std::string(width - t.label.size() + 2, ' ') << t.value.to_string() << "\n";
  }
  std::cout << "  total" << std::string(width - 3, ' ') << r.total.to_string() << "\n";
  for (const auto& [q0, v] : r.evaluations) std::cout << "|M|(" << q0 << ") = " << v << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
}

// Returns the first difference between two reports, or empty.
std::string compare_reports(const OrderReport& a, const OrderReport& b) {
  const std::string pair = std::string(formula_name(a.formula)) + " vs " + std::string(formula_name(b.formula));
  for (std::size_t i = 0; i < a.terms.size() && i < b.terms.size(); ++i) {
    if (a.terms[i].value != b.terms[i].value) {
      return pair + ": entry " + a.terms[i].label + " differs (" + a.terms[i].value.to_string() + " vs " +
             b.terms[i].value.to_string() + ")";
    }
  }
  if (a.total != b.total) return pair + ": totals differ";
  return {};
}

int run_order(const Options& o, const EnumerationLimits& limits) {
  const auto qs = parse_qs(o.q);
  const auto lat = resolve_lattice(o.lat);
  if (o.formula != "all") {
    const auto f = parse_formula(o.formula);
    if (!f || *f == Formula::Symplectic) throw UsageError("unknown formula '" + o.formula + "'");
    auto r = compute(*f, lat, limits);
    r.evaluate_at(qs);
    print_report(r, o.lat.format);
    return 0;
  }

  std::vector<OrderReport> reports;
  std::string skipped;
  for (Formula f : {Formula::Thm31, Formula::Thm33, Formula::Thm34, Formula::Thm41}) {
    try {
      reports.push_back(compute(f, lat, limits));
    } catch (const NotJIrreducible& e) {
      skipped = std::string("thm41 skipped: ") + e.what();
    }
  }
  std::vector<std::string> mismatches;
  for (std::size_t i = 1; i < reports.size(); ++i) {
    if (auto d = compare_reports(reports[0], reports[i]); !d.empty()) mismatches.push_back(d);
  }
  for (auto& r : reports) r.evaluate_at(qs);
  const bool agree = mismatches.empty();

  if (o.lat.format == "json") {
    json out = {{"agree", agree}, {"reports", json::array()}, {"mismatches", mismatches}};
    for (const auto& r : reports) out["reports"].push_back(io::report_to_json(r));
    if (!skipped.empty()) out["skipped"] = skipped;
    std::cout << out.dump(2) << "\n";
  } else {
    print_report(reports.back(), o.lat.format);
    if (o.lat.format == "table") {
      if (!skipped.empty()) std::cout << skipped << "\n";
      for (const auto& m : mismatches) std::cout << "MISMATCH " << m << "\n";
      if (agree) std::cout << reports.size() << " formulas agree\n";
    }
  }
  if (!agree) {
    for (const auto& m : mismatches) std::cerr << "error: " << m << "\n";
    return kExitVerification;
  }
  return 0;
}

int run_hpoly(const Options& o) {
  const auto lat = resolve_lattice(o.lat);
  const auto h = h_polynomial(order_thm34(lat).total);
  const bool pal = is_palindromic(h);
  if (o.lat.format == "json") {
    std::cout << json{{"lattice", lat.description()}, {"coeffs", io::poly_to_json(h)}, {"palindromic", pal}}.dump(2)
              << "\n";
  } else if (o.lat.format == "csv") {
    std::cout << "degree,coeff\n";
    for (std::size_t i = 0; i < h.coeffs().size(); ++i) std::cout << i << "," << h.coeffs()[i] << "\n";
  } else {
    std::cout << lat.description() << "\n";
    std::cout << "H(q), " << h.coeffs().size() << " coefficients: " << join_coeffs(h) << "\n";
    std::cout << "palindromic: " << (pal ? "yes" : "no") << "\n";
  }
  return 0;
}

struct Stratum {
  std::string label;
  QPolynomial size;
};

std::vector<Stratum> strata_for(const CrossSectionLattice& lat, std::string& heading) {
  const auto& type = lat.root_system().cartan_type();
  const int l = type.rank;
  std::vector<Stratum> rows;
  const auto rule = [&](const char* preset) {
    return lat.j0() && *lat.j0() == preset_j0(lat.root_system(), preset);
  };
  if (type.family == Family::A && rule("first-fundamental")) {
    heading = "rank strata of M_" + std::to_string(l + 1) + "(F_q)";
    for (int r = 0; r <= l + 1; ++r) rows.push_back({"r=" + std::to_string(r), gl_strata(l + 1, r)});
    return rows;
  }
  const bool symplectic_type = type.family == Family::C || (type.family == Family::B && l == 2);
  if (symplectic_type && rule("last-fundamental")) {
    heading = "rank strata of the symplectic monoid, l=" + std::to_string(l);
    for (int r = 0; r <= l + 1; ++r) rows.push_back({"r=" + std::to_string(r), symplectic_stratum(l, r)});
    return rows;
  }
  heading = "G x G orbit sizes, " + lat.description();
  for (const auto& t : order_thm34(lat).terms) rows.push_back({t.label, t.value});
  return rows;
}

int run_strata(const Options& o) {
  const auto qs = parse_qs(o.q);
  const auto lat = resolve_lattice(o.lat);
  std::string heading;
  const auto rows = strata_for(lat, heading);
  QPolynomial total;
  for (const auto& s : rows) total += s.size;

  if (o.lat.format == "json") {
    json out = {{"description", heading}, {"strata", json::array()}, {"total_coeffs", io::poly_to_json(total)}};
    for (const auto& s : rows) {
      json row = {{"label", s.label}, {"coeffs", io::poly_to_json(s.size)}, {"evaluations", json::object()}};
      for (const auto& q0 : qs) row["evaluations"][q0.str()] = eval_big(s.size, q0).str();
      out["strata"].push_back(row);
    }
    for (const auto& q0 : qs) out["evaluations"][q0.str()] = eval_big(total, q0).str();
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (o.lat.format == "csv") {
    std::cout << "label,coeffs";
    for (const auto& q0 : qs) std::cout << ",q=" << q0;
    std::cout << "\n";
    auto row = [&](const std::string& label, const QPolynomial& p) {
      std::cout << csv_quote(label) << "," << join_coeffs(p);
      for (const auto& q0 : qs) std::cout << "," << eval_big(p, q0);
      std::cout << "\n";
    };
    for (const auto& s : rows) row(s.label, s.size);
    row("total", total);
    return 0;
  }
  std::cout << heading << "\n";
  for (const auto& s : rows) {
    std::cout << "  " << s.label << "  " << s.size.to_string();
    for (const auto& q0 : qs) std::cout << "  [q=" << q0 << ": " << eval_big(s.size, q0) << "]";
    std::cout << "\n";
  }
  std::cout << "  total  " << total.to_string();
  for (const auto& q0 : qs) std::cout << "  [q=" << q0 << ": " << eval_big(total, q0) << "]";
  std::cout << "\n";
  return 0;
}

int run_lattice(const Options& o) {
  const auto lat = resolve_lattice(o.lat);
  if (o.lat.format == "json") {
    std::cout << io::lattice_to_json(lat).dump(2) << "\n";
    return 0;
  }
  if (o.lat.format == "csv") {
    std::cout << "label,lambda_star,lambda_substar,torus_index_exponent\n";
    for (const auto& e : lat.entries()) {
      std::cout << csv_quote(e.label) << "," << csv_quote(e.lambda_star.to_string()) << ","
                << csv_quote(e.lambda_substar.to_string()) << "," << e.torus_index_exponent << "\n";
    }
    return 0;
  }
  std::cout << lat.description() << "\n";
  std::size_t w0 = 5, w1 = 6, w2 = 6;
  for (const auto& e : lat.entries()) {
    w0 = std::max(w0, e.label.size());
    w1 = std::max(w1, e.lambda_star.to_string().size());
    w2 = std::max(w2, e.lambda_substar.to_string().size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::cout << "  " << pad("label", w0) << pad("l*", w1) << pad("l_*", w2) << "[T:T(e)] exponent\n";
  for (const auto& e : lat.entries()) {
    std::cout << "  " << pad(e.label, w0) << pad(e.lambda_star.to_string(), w1)
              << pad(e.lambda_substar.to_string(), w2) << e.torus_index_exponent << "\n";
  }
  return 0;
}

int run_verify(const EnumerationLimits& limits) {
  const auto results = run_verification(limits);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
    failed += r.passed ? 0 : 1;
  }
  if (failed == 0) {
    std::cout << "all checks passed (" << results.size() << ")\n";
    return 0;
  }
  std::cout << failed << " of " << results.size() << " checks failed\n";
  return kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact orders of finite reductive monoids with zero"};
  app.require_subcommand(1);
  Options o;

  auto* order = app.add_subcommand("order", "per-entry orbit sizes and the order |M|");
  add_lattice_options(order, o.lat);
  add_q_option(order, o.q);
  order->add_option("--formula", o.formula, "thm31 | thm33 | thm34 | thm41 | all")
      ->check(CLI::IsMember({"thm31", "thm33", "thm34", "thm41", "all"}));

  auto* hpoly = app.add_subcommand("hpoly", "H(q) with |M| - 1 = (q - 1) H(q)");
  add_lattice_options(hpoly, o.lat);

  auto* strata = app.add_subcommand("strata", "rank strata |M^r| (orbit sizes for other lattices)");
  add_lattice_options(strata, o.lat);
  add_q_option(strata, o.q);

  auto* lattice = app.add_subcommand("lattice", "cross-section lattice with lambda* and lambda_*");
  add_lattice_options(lattice, o.lat);

  auto* verify = app.add_subcommand("verify", "run every oracle cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto limits = EnumerationLimits::from_environment();
    if (order->parsed()) return run_order(o, limits);
    if (hpoly->parsed()) return run_hpoly(o);
    if (strata->parsed()) return run_strata(o);
    if (lattice->parsed()) return run_lattice(o);
    if (verify->parsed()) return run_verify(limits);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
