#include "su3_cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "su3/groebner.hpp"
#include "su3/hitchin.hpp"
#include "su3/liealg.hpp"
#include "su3/obstruction.hpp"
#include "su3/systems.hpp"
#include "su3/torsion.hpp"

namespace su3::cli {

namespace {

struct Config {
  std::string algebra;
  std::string omega;
  std::string psi;
  std::string alpha;
  std::string metric;
  std::string mode = "coupled";
  double budget_min = 30;
  std::size_t budget_mib = 4096;
  int precision = 64;
  std::string order = "grevlex";
  std::uint64_t seed = 1;
  std::string out;
  std::string emit_ideal;
  std::string vars;
  std::string input;
  std::string pipeline;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// "file:<path>" reads the file, anything else is taken literally.
std::string inline_or_file(const std::string& value) {
  if (value.rfind("file:", 0) == 0) return read_file(value.substr(5));
  return value;
}

LieAlgebra load_algebra(const std::string& value) {
  if (value.empty()) throw ParseError("--algebra is required");
  if (value.rfind("file:", 0) == 0) return parse_algebra(read_file(value.substr(5)));
  if (value.rfind("catalog:", 0) == 0) return catalog_from_spec(value.substr(8));
  return catalog_from_spec(value);
}

Form load_form(const std::string& value, int degree, const char* flag) {
  if (value.empty()) throw ParseError(std::string(flag) + " is required");
  return parse_form(inline_or_file(value), degree);
}

ScalarMatrix load_metric(const std::string& value) {
  if (value.empty() || value == "identity") return ScalarMatrix::identity(kDim);
  if (value == "jensen") return jensen_metric();
  if (value.rfind("file:", 0) == 0) return parse_matrix(read_file(value.substr(5)));
  throw ParseError("unknown metric '" + value + "'");
}

Budget budget_of(const Config& c) { return Budget::minutes(c.budget_min, c.budget_mib); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string indent(const std::string& block) {
  std::string out;
  std::istringstream in(block);
  for (std::string line; std::getline(in, line);) out += "  " + line + "\n";
  return out;
}

void emit(const Config& c, const std::string& report, std::ostream& out) {
  if (c.out.empty()) {
    out << report;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw ParseError("cannot write '" + c.out + "'");
  file << report;
}

void write_ideal(const std::string& path, const std::vector<std::pair<std::string, std::vector<Poly>>>& blocks) {
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write '" + path + "'");
  for (const auto& [label, polys] : blocks) {
    file << "# " << label << "\n";
    for (const auto& p : polys) file << p.to_string() << "\n";
  }
}

// ---------------------------------------------------------------- commands

std::string cmd_validate(const Config& c) {
  const Form omega = load_form(c.omega, 2, "--omega");
  const Form psi = load_form(c.psi, 3, "--psi");
  const SU3Structure s = validate(omega, psi);
  const StructureFlags& f = s.flags();
  std::ostringstream os;
  os << "su3-report v1\ncommand: validate\n";
  os << "omega: " << to_string(omega) << "\n";
  os << "psi_plus: " << to_string(psi) << "\n";
  os << "stable2: " << yes_no(f.stable2) << "\n";
  os << "stable3: " << yes_no(f.stable3) << "\n";
  os << "lambda_negative: " << yes_no(f.lambda_negative) << "\n";
  os << "compatible: " << yes_no(f.compatible) << "\n";
  os << "normalized: " << yes_no(f.normalized) << "\n";
  os << "metric_positive: " << yes_no(f.metric_positive) << "\n";
  os << "valid: " << yes_no(f.all()) << "\n";
  os << "lambda: " << to_string(s.lambda()) << "\n";
  if (f.lambda_negative) {
    os << "psi_minus: " << to_string(s.psi_minus()) << "\n";
    try {
      os << "metric:\n" << indent(to_string(s.metric()));
    } catch (const NotSymmetric&) {
      os << "metric: not symmetric\n";
    }
  }
  if (!c.algebra.empty()) {
    const LieAlgebra l = load_algebra(c.algebra);
    os << "algebra: " << l.name() << "\n";
    os << "half_flat: " << yes_no(is_half_flat(l, omega, psi)) << "\n";
  }
  return os.str();
}

std::string cmd_classify(const Config& c) {
  const LieAlgebra l = load_algebra(c.algebra);
  const Form omega = load_form(c.omega, 2, "--omega");
  const Form psi = load_form(c.psi, 3, "--psi");
  const SU3Structure s = validate(omega, psi);
  const TorsionData t = classify(l, omega, psi);
  std::ostringstream os;
  os << "su3-report v1\ncommand: classify\n";
  os << "algebra: " << l.name() << "\n";
  os << "valid: " << yes_no(s.valid()) << "\n";
  os << "class: " << to_string(t.torsion_class) << "\n";
  if (t.torsion_class != TorsionClass::NotHalfFlat) {
    os << "w1: " << to_string(t.w1) << "\n";
    os << "w2: " << to_string(t.w2) << "\n";
    os << "w3: " << to_string(t.w3) << "\n";
    if (t.coupled_constant) os << "coupled_constant: " << to_string(*t.coupled_constant) << "\n";
    if (t.double_constant) os << "double_constant: " << to_string(*t.double_constant) << "\n";
    os << "quasi_kahler: " << yes_no(t.quasi_kahler) << "\n";
  }
  return os.str();
}

std::string cmd_obstruct(const Config& c) {
  const LieAlgebra given = load_algebra(c.algebra);
  std::optional<Rationalization> rat;
  if (!given.is_rational()) {
    if (given.is_inexact()) throw InexactScalars("the obstruction test needs exact structure constants");
    rat = rationalize(given);
    if (!rat) throw InexactScalars("no rational presentation found for " + given.name());
  }
  const LieAlgebra& l = rat ? rat->algebra : given;
  std::string prefix;
  if (rat) {
    prefix = "presentation: rescaled";
    for (std::size_t i = 0; i < kDim; ++i) {
      prefix += (i ? ", f" : " f") + std::to_string(i + 1) + " = " + to_string(rat->scale[i]) + "*e" +
                std::to_string(i + 1);
    }
    prefix += "\n";
  }
  std::string report;
  if (!c.alpha.empty()) {
    report = format_obstruction(obstruction_test(l, load_form(c.alpha, 1, "--alpha"), c.seed));
  } else if (auto r = obstruction_scan(l, default_alpha_candidates(), c.seed)) {
    report = format_obstruction(*r);
  } else {
    report = "su3-report v1\nalgebra: " + l.name() + "\nobstructed: false\nwitness: no candidate alpha obstructs\n";
  }
  // Keep the header first.
  const std::string header = "su3-report v1\n";
  return header + "command: obstruct\n" + prefix + report.substr(header.size());
}

std::string cmd_groebner(const Config& c) {
  if (c.vars.empty()) throw ParseError("--vars is required");
  if (c.input.empty()) throw ParseError("an input file with one generator per line is required");
  std::vector<std::string> names;
  std::istringstream vs(c.vars);
  for (std::string v; std::getline(vs, v, ',');) {
    if (!v.empty()) names.push_back(v);
  }
  const RingPtr ring = PolyRing::make(names);
  std::vector<Poly> gens;
  std::istringstream in(read_file(c.input));
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    gens.push_back(parse_poly(line, ring));
  }
  const auto gb = buchberger(gens, MonomialOrder::parse(c.order), budget_of(c));
  std::string out;
  for (const auto& p : gb) out += p.to_string() + "\n";
  return out;
}

std::string cmd_pipeline(const Config& c) {
  if (c.pipeline == "thm32") {
    const Thm32Result r = thm32_pipeline(budget_of(c));
    if (!c.emit_ideal.empty()) write_ideal(c.emit_ideal, {{"Q", r.standard.ideal}, {"R", r.jensen.ideal}});
    return format_report(r.standard) + format_report(r.jensen);
  }
  if (c.pipeline == "nonexist") {
    const LieAlgebra l = load_algebra(c.algebra);
    std::optional<MetricTarget> target;
    if (!c.metric.empty()) target = MetricTarget::parse(c.metric);
    const SystemReport r = nonexistence_pipeline(l, parse_pipeline_mode(c.mode), budget_of(c), target);
    if (!c.emit_ideal.empty()) write_ideal(c.emit_ideal, {{"saturated system", r.ideal}});
    return format_report(r);
  }
  throw ParseError("unknown pipeline '" + c.pipeline + "' (thm32 or nonexist)");
}

std::string cmd_catalog(const Config& c) {
  std::ostringstream os;
  os << "su3-report v1\ncommand: catalog\n";
  if (!c.algebra.empty()) {
    const LieAlgebra l = load_algebra(c.algebra);
    os << format_algebra(l);
    return os.str();
  }
  for (const auto& e : catalog_entries()) {
    os << e.name;
    if (!e.parameters.empty()) {
      os << "(";
      for (std::size_t i = 0; i < e.parameters.size(); ++i) os << (i ? "," : "") << e.parameters[i];
      os << ")";
    }
    os << ": " << e.summary << "\n";
    if (!e.range.empty()) os << "  range: " << e.range << "\n";
    for (const auto& [param, labels] : e.presets) {
      for (const auto& [label, value] : labels) {
        os << "  preset " << param << "=" << label << ": " << to_string(value) << "\n";
      }
    }
    const LieAlgebra l = catalog(e.name);
    for (int i = 1; i <= kDim; ++i) os << "  de" << i << " = " << to_string(l.de(i)) << "\n";
  }
  return os.str();
}

std::string cmd_einstein(const Config& c) {
  const LieAlgebra l = load_algebra(c.algebra);
  const ScalarMatrix g = load_metric(c.metric);
  const ScalarMatrix ric = ricci(l, g);
  const auto mu = einstein_check(l, g);
  std::ostringstream os;
  os << "su3-report v1\ncommand: einstein\n";
  os << "algebra: " << l.name() << "\n";
  os << "metric:\n" << indent(to_string(g));
  os << "ricci:\n" << indent(to_string(ric));
  os << "einstein: " << yes_no(mu.has_value()) << "\n";
  if (mu) os << "mu: " << to_string(*mu) << "\n";
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"SU(3)-structures on six-dimensional Lie algebras", "su3"};
  app.require_subcommand(1);

  auto precision = [&](CLI::App* s) {
    s->add_option("--precision", c.precision, "Decimal digits for floats")->check(CLI::Range(32, 100000));
    s->add_option("--out", c.out, "Write the report to this file");
  };
  auto algebra = [&](CLI::App* s) {
    s->add_option("--algebra", c.algebra, "catalog:<name>[,p=v...] or file:<path>");
  };
  auto forms = [&](CLI::App* s) {
    s->add_option("--omega", c.omega, "2-form or file:<path>");
    s->add_option("--psi", c.psi, "3-form or file:<path>");
  };
  auto budget = [&](CLI::App* s) {
    s->add_option("--budget-min", c.budget_min, "Time budget in minutes")->check(CLI::PositiveNumber);
    s->add_option("--budget-mib", c.budget_mib, "Memory budget in MiB")->check(CLI::PositiveNumber);
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check an (omega, psi_plus) pair");
  algebra(validate_cmd);
  forms(validate_cmd);
  precision(validate_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Torsion forms and class of a half-flat pair");
  algebra(classify_cmd);
  forms(classify_cmd);
  precision(classify_cmd);

  auto* obstruct_cmd = app.add_subcommand("obstruct", "Obstruction test for half-flat structures");
  algebra(obstruct_cmd);
  obstruct_cmd->add_option("--alpha", c.alpha, "1-form; default scans e^i and e^i +- e^j");
  obstruct_cmd->add_option("--seed", c.seed, "Seed for the counterexample search");
  precision(obstruct_cmd);

  auto* groebner_cmd = app.add_subcommand("groebner", "Reduced Groebner basis of generators in a file");
  groebner_cmd->add_option("--vars", c.vars, "Comma-separated variable names")->required();
  groebner_cmd->add_option("--order", c.order, "grevlex, lex or block:<k>");
  groebner_cmd->add_option("input", c.input, "File with one generator per line")->required();
  budget(groebner_cmd);
  precision(groebner_cmd);

  auto* pipeline_cmd = app.add_subcommand("pipeline", "thm32 or nonexist elimination pipelines");
  pipeline_cmd->add_option("which", c.pipeline, "thm32 or nonexist")->required();
  algebra(pipeline_cmd);
  pipeline_cmd->add_option("--mode", c.mode, "coupled or halfflat");
  pipeline_cmd->add_option("--metric", c.metric,
                           "identity, proportional_identity, jensen, diag_equal, diagonal or none");
  pipeline_cmd->add_option("--emit-ideal", c.emit_ideal, "Dump the generators to this file");
  budget(pipeline_cmd);
  precision(pipeline_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in algebras or print one");
  algebra(catalog_cmd);
  precision(catalog_cmd);

  auto* einstein_cmd = app.add_subcommand("einstein", "Ricci tensor and Einstein constant");
  algebra(einstein_cmd);
  einstein_cmd->add_option("--metric", c.metric, "identity, jensen or file:<path>");
  precision(einstein_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    DigitsScope digits(c.precision);
    std::string report;
    if (*validate_cmd) report = cmd_validate(c);
    if (*classify_cmd) report = cmd_classify(c);
    if (*obstruct_cmd) report = cmd_obstruct(c);
    if (*groebner_cmd) report = cmd_groebner(c);
    if (*pipeline_cmd) report = cmd_pipeline(c);
    if (*catalog_cmd) report = cmd_catalog(c);
    if (*einstein_cmd) report = cmd_einstein(c);
    emit(c, report, out);
    return kOk;
  } catch (const ResourceBudgetExceeded& e) {
    err << "su3: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const Error& e) {
    err << "su3: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "su3: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"su3"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace su3::cli
