#include "app.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "k3fm/catalog.hpp"
#include "k3fm/errors.hpp"
#include "k3fm/literals.hpp"
#include "k3fm/serialize.hpp"
#include "k3fm/solver.hpp"
#include "k3fm/stability.hpp"
#include "k3fm/transform.hpp"
#include "k3fm/verify.hpp"

namespace k3fm::cli {

namespace {

struct Options {
  bool json = false;
  std::string surface;

  std::string vector_a;
  std::string vector_b;
  std::string divisor;

  std::string object;
  std::optional<std::int64_t> n;
  std::optional<int> wit;
  std::string convention = "derived";
  bool matrix = false;

  std::int64_t box = 3;
  std::string filters = "all";
  unsigned workers = 1;

  std::string constraints = "C1,C2,C3,C4,C5,C6";
  std::string literal_ch1;
  int bound = 12;

  bool all_suites = false;
  std::vector<std::string> suites;
  std::int64_t n_max = 100;
};

std::optional<Surface> surface_hint(const Options& o) {
  if (o.surface.empty()) return std::nullopt;
  auto s = surface_from_string(o.surface);
  if (!s) throw ParseError("unknown surface '" + o.surface + "' (use X or Xhat)");
  return s;
}

MukaiVector vector_arg(const Options& o, const std::string& text) { return parse_vector(text, surface_hint(o)); }

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& human) {
  if (o.json) {
    out << j.dump() << '\n';
  } else {
    out << human << '\n';
  }
}

void emit_integer(std::ostream& out, const Options& o, std::int64_t value) {
  emit(out, o, Json{{"value", value}}, std::to_string(value));
}

void emit_rational(std::ostream& out, const Options& o, const Rational& value) {
  emit(out, o, Json{{"value", format_rational(value)}}, format_rational(value));
}

std::string human_matrix(const TransformMatrix& t) {
  std::ostringstream s;
  s << to_string(t.convention) << " " << to_string(t.source) << " -> " << to_string(t.target) << '\n';
  for (const auto& row : t.m) {
    s << "  [";
    for (int j = 0; j < 4; ++j) s << (j ? " " : "") << std::setw(4) << row[j];
    s << " ]\n";
  }
  return s.str();
}

std::string human_report(const VerificationReport& report) {
  std::ostringstream s;
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& c : report.claims) {
    ++counts[static_cast<int>(c.status)];
    s << std::left << std::setw(21) << to_string(c.status) << ' ' << std::setw(42) << c.id << ' ' << c.computed;
    if (c.computed != c.expected) s << "  [expected " << c.expected << ']';
    s << '\n';
  }
  s << "overall: " << (report.overall() ? "pass" : "fail") << " (" << report.claims.size() << " claims: "
    << counts[0] << " PASS, " << counts[2] << " ASSUMED, " << counts[3] << " EXPECTED-DISCREPANCY, " << counts[1]
    << " FAIL)";
  return s.str();
}

ConstraintSet parse_constraints(const Options& o) {
  ConstraintSet c;
  std::string_view list = o.constraints;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view name = list.substr(0, comma);
    if (name == "C1") c.isometry = true;
    else if (name == "C2") c.trivial_anchor = true;
    else if (name == "C3") c.point_anchor = true;
    else if (name == "C4") c.degree_flip = true;
    else if (name == "C5") c.chi_flip = true;
    else if (name == "C6") c.paper_rank_ch2_rows = true;
    else if (!name.empty() && name != "none") throw ParseError("unknown constraint '" + std::string(name) + "'");
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (!o.literal_ch1.empty()) {
    c.paper_ch1_row = crossing_rule_from_string(o.literal_ch1);
    if (!c.paper_ch1_row) throw ParseError("--literal-ch1 takes reuse or basischange");
  }
  return c;
}

Json constraint_names(const ConstraintSet& c) {
  Json names = Json::array();
  if (c.isometry) names.push_back("C1");
  if (c.trivial_anchor) names.push_back("C2");
  if (c.point_anchor) names.push_back("C3");
  if (c.degree_flip) names.push_back("C4");
  if (c.chi_flip) names.push_back("C5");
  if (c.paper_rank_ch2_rows) names.push_back("C6");
  if (c.paper_ch1_row) names.push_back("literal-ch1-" + std::string(to_string(*c.paper_ch1_row)));
  return names;
}

void run_transform(std::ostream& out, const Options& o) {
  std::optional<CrossingRule> literal;
  if (o.convention == "paper-reuse") literal = CrossingRule::Reuse;
  else if (o.convention == "paper-basischange") literal = CrossingRule::BasisChange;
  else if (o.convention != "derived") throw ParseError("--convention takes derived, paper-reuse or paper-basischange");

  if (o.matrix) {
    const TransformMatrix t = literal ? paper_literal_matrix(*literal) : derived_matrix();
    const IsometryReport iso = check_isometry(t);
    Json j = matrix_json(t);
    j["isometry"] = isometry_json(iso);
    std::string human = human_matrix(t) + (iso.passed ? "isometry: passed" : "isometry: FAILED");
    for (const auto& d : iso.defects) {
      human += "\n  (" + std::string(basis_label(d.i)) + "," + std::string(basis_label(d.j)) + ") expected " +
               std::to_string(d.expected) + ", got " + std::to_string(d.actual);
    }
    emit(out, o, j, human);
    return;
  }

  MukaiVector v;
  std::optional<WitIndex> wit;
  if (!o.object.empty()) {
    if (!o.vector_a.empty()) throw ParseError("give either a vector literal or --object, not both");
    const auto name = object_name_from_string(o.object);
    if (!name) throw ParseError("unknown catalog object '" + o.object + "'");
    const CatalogObject obj = object(*name, o.n);
    v = obj.vector;
    wit = obj.wit;
  } else {
    if (o.vector_a.empty()) throw ParseError("transform needs a vector literal or --object");
    v = vector_arg(o, o.vector_a);
  }
  if (o.wit) wit = WitIndex(*o.wit);

  if (literal) {
    ChernCharacter ch = phi_paper_literal(to_chern(v), *literal);
    if (wit && wit->value() % 2 == 1) ch = {-ch.ch0, -ch.c1, -ch.ch2};
    Json j = chern_json(ch);
    std::string human = "ch " + format_chern(ch);
    if (wit) {
      j["wit"] = wit->dual().value();
      human += " WIT_" + std::to_string(wit->dual().value());
    }
    j["convention"] = to_string(literal_convention(*literal));
    emit(out, o, j, human + "  [" + std::string(to_string(literal_convention(*literal))) + "]");
    return;
  }

  if (wit) {
    const SheafTransform t = transform_sheaf(v, *wit);
    Json j = vector_json(t.vector);
    j["wit"] = t.wit.value();
    emit(out, o, j, format_vector(t.vector) + " WIT_" + std::to_string(t.wit.value()));
    return;
  }
  const MukaiVector image = phi_derived(v);
  Json j = vector_json(image);
  j["convention"] = to_string(Convention::DerivedConsistent);
  emit(out, o, j, format_vector(image) + "  [derived-consistent]");
}

void run_destab(std::ostream& out, const Options& o) {
  const MukaiVector v = vector_arg(o, o.vector_a);
  const FilterSet filters = FilterSet::parse(o.filters);
  const auto candidates = enumerate_destabilizers(v, o.box, filters, o.workers);

  Json list = Json::array();
  std::ostringstream human;
  human << candidates.size() << " candidate(s) for " << format_vector(v) << " in box " << o.box;
  for (const auto& c : candidates) {
    list.push_back(candidate_json(c));
    human << "\n  sub " << std::left << std::setw(16) << format_vector(c.sub) << " quotient " << std::setw(16)
          << format_vector(c.quotient) << " mu " << format_rational(c.sub_numbers.slope) << " p "
          << format_rational(c.sub_numbers.reduced_chi) << " delta " << c.sub_numbers.delta << '/'
          << c.quotient_numbers.delta;
  }
  Json flags = Json::array();
  if (filters.slope) flags.push_back("slope");
  if (filters.gieseker) flags.push_back("gieseker");
  if (filters.bogomolov_sub) flags.push_back("bogomolov-sub");
  if (filters.bogomolov_quot) flags.push_back("bogomolov-quot");
  if (filters.quot_slope) flags.push_back("quot-slope");
  emit(out, o,
       Json{{"schema_version", kSchemaVersion},
            {"vector", vector_json(v)},
            {"box", o.box},
            {"filters", flags},
            {"candidates", list}},
       human.str());
}

void run_solve(std::ostream& out, const Options& o) {
  const ConstraintSet c = parse_constraints(o);
  const auto solutions = solve_transform(c, o.bound, o.workers);
  Json list = Json::array();
  std::ostringstream human;
  human << solutions.size() << " solution(s) with entries in [-" << o.bound << ", " << o.bound << "]";
  for (const auto& t : solutions) {
    list.push_back(matrix_json(t));
    human << '\n' << human_matrix(t);
  }
  emit(out, o,
       Json{{"schema_version", kSchemaVersion}, {"bound", o.bound}, {"constraints", constraint_names(c)},
            {"solutions", list}},
       human.str());
}

int run_verify(std::ostream& out, const Options& o) {
  if (o.n_max < 0) throw DomainError("--n-max must be non-negative");
  VerificationReport report;
  if (o.all_suites || o.suites.empty()) {
    report = verify_all(o.n_max);
  } else {
    for (const auto& suite : o.suites) {
      if (suite == "constants") report.append(verify_constants());
      else if (suite == "catalog") report.append(verify_catalog_facts(o.n_max));
      else if (suite == "transform") report.append(verify_transform_invariants());
      else if (suite == "hilbert") report.append(verify_hilbert_correspondence(o.n_max));
      else if (suite == "psi") report.append(verify_psi_transform());
      else if (suite == "instanton") report.append(verify_instanton_numerology(o.n_max));
      else throw ParseError("unknown suite '" + suite + "'");
    }
  }
  emit(out, o, report_json(report), human_report(report));
  return report.overall() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Mukai-lattice calculator for the Fourier-Mukai correspondence on reflexive K3 surfaces", "k3fm"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON instead of a human-readable table");
  app.add_option("--surface", o.surface, "Surface (X or Xhat) for literals with a bare 0 divisor");

  auto one_vector = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("vector", o.vector_a, "Mukai vector literal (r, <divisor>, s)")->required();
    return sub;
  };

  auto* pair = app.add_subcommand("pair", "Mukai pairing of two vectors");
  pair->add_option("v", o.vector_a, "first vector")->required();
  pair->add_option("w", o.vector_b, "second vector")->required();
  auto* chi = one_vector("chi", "Euler characteristic r + s");
  auto* dim = one_vector("dim", "moduli dimension v^2 + 2");
  auto* slope_cmd = one_vector("slope", "slope deg(c1)/r");
  auto* ptilde = one_vector("ptilde", "reduced Euler characteristic chi/r");
  auto* delta = one_vector("delta", "Bogomolov discriminant");
  auto* psi_cmd = one_vector("psi", "lattice action of Psi (input on X)");

  auto* transform = app.add_subcommand("transform", "apply the Fourier-Mukai transform");
  transform->add_option("vector", o.vector_a, "Mukai vector literal");
  transform->add_option("--object", o.object, "catalog object: O_X O_p I_W O_W Q_xi Q_p OW_hat IW_hat");
  transform->add_option("--n", o.n, "length n for indexed catalog objects");
  transform->add_option("--wit", o.wit, "WIT index of the input sheaf (applies the sign (-1)^k)");
  transform->add_option("--convention", o.convention, "derived, paper-reuse or paper-basischange");
  transform->add_flag("--matrix", o.matrix, "print the matrix of the chosen convention with its isometry check");

  auto* identify_cmd = app.add_subcommand("identify", "rewrite a divisor in the basis of the other surface");
  identify_cmd->add_option("divisor", o.divisor, "divisor literal (use -- before negative literals)")->required();

  auto* destab = one_vector("destab", "enumerate numerical destabilizer candidates");
  destab->add_option("--box", o.box, "coefficient box for a, b (and s scaled)");
  destab->add_option("--filters", o.filters, "slope,gieseker,bogomolov-sub,bogomolov-quot,quot-slope or all");
  destab->add_option("--workers", o.workers, "worker threads");

  auto* solve = app.add_subcommand("solve-transform", "reconstruct transform matrices from constraints");
  solve->add_option("--constraints", o.constraints, "comma-separated subset of C1..C6");
  solve->add_option("--literal-ch1", o.literal_ch1, "also impose the published ch1 row (reuse or basischange)");
  solve->add_option("--bound", o.bound, "entry bound for unconstrained rows");
  solve->add_option("--workers", o.workers, "worker threads");

  auto* verify = app.add_subcommand("verify", "replay the numerical claims and report");
  verify->add_flag("--all", o.all_suites, "run every suite");
  verify->add_option("--suite", o.suites, "constants, catalog, transform, hilbert, psi, instanton");
  verify->add_option("--n-max", o.n_max, "largest n for the indexed suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (pair->parsed()) {
      emit_integer(out, o, pairing(vector_arg(o, o.vector_a), vector_arg(o, o.vector_b)));
    } else if (chi->parsed()) {
      emit_integer(out, o, euler_chi(vector_arg(o, o.vector_a)));
    } else if (dim->parsed()) {
      emit_integer(out, o, moduli_dim(vector_arg(o, o.vector_a)));
    } else if (slope_cmd->parsed()) {
      emit_rational(out, o, slope(vector_arg(o, o.vector_a)));
    } else if (ptilde->parsed()) {
      emit_rational(out, o, reduced_chi(vector_arg(o, o.vector_a)));
    } else if (delta->parsed()) {
      emit_integer(out, o, bogomolov_delta(vector_arg(o, o.vector_a)));
    } else if (psi_cmd->parsed()) {
      const MukaiVector image = psi(vector_arg(o, o.vector_a));
      Json j = vector_json(image);
      j["convention"] = to_string(Convention::DerivedConsistent);
      emit(out, o, j, format_vector(image));
    } else if (transform->parsed()) {
      run_transform(out, o);
    } else if (identify_cmd->parsed()) {
      const DivisorClass d = identify(parse_divisor(o.divisor, surface_hint(o)));
      emit(out, o, Json{{"divisor", format_divisor(d)}, {"surface", to_string(d.surface)}}, format_divisor(d));
    } else if (destab->parsed()) {
      run_destab(out, o);
    } else if (solve->parsed()) {
      run_solve(out, o);
    } else if (verify->parsed()) {
      return run_verify(out, o);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace k3fm::cli
