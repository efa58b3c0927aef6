#include "paramat/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "paramat/audit.hpp"
#include "paramat/error.hpp"
#include "paramat/para.hpp"
#include "paramat/report.hpp"
#include "paramat/semantics.hpp"

namespace paramat {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
 public:
  using Error::Error;
};

unsigned parse_arity(std::string_view text, const std::string& selector) {
  unsigned n = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc{} || end != text.data() + text.size()) throw UsageError("bad logic selector '" + selector + "'");
  return n;
}

struct Options {
  std::string logic = "l3";
  unsigned para = 0;
  std::string format = "text";
  Budget budget;
  bool logic_given = false;
};

void add_logic_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--logic", o.logic, "l3 | g3 | k3 | cl2 | ln:<n> | gn:<n> | file:<path>");
  cmd.add_option("--para", o.para, "number of paraconsistentization steps")->check(CLI::Range(0u, kMaxParaDepth));
  cmd.add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
}

void add_budget_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--samples", o.budget.samples, "samples per universal property");
  cmd.add_option("--depth", o.budget.depth, "maximum formula depth");
  cmd.add_option("--letters", o.budget.letters, "letters drawn from p, q, r, ...");
  cmd.add_option("--gamma", o.budget.gamma_size, "maximum premise set size");
  cmd.add_option("--seed", o.budget.seed, "sampling seed");
}

Json valuation_json(const Valuation& v) {
  Json j = Json::object();
  for (const auto& [k, x] : v) j[k] = x.to_string();
  return j;
}

Json set_json(const FormulaSet& s) {
  Json j = Json::array();
  for (const auto& x : s) j.push_back(x.text());
  return j;
}

int cmd_entails(const Options& o, const std::string& gamma_text, const std::string& alpha_text, std::ostream& out) {
  const LogicSpec spec{resolve_logic(o.logic), o.para};
  const FormulaSet gamma = parse_formula_set(gamma_text);
  const Formula alpha = parse_formula(alpha_text);
  Json j;
  j["logic"] = spec.name();
  j["gamma"] = set_json(gamma);
  j["alpha"] = alpha.text();
  bool holds = false;
  std::string detail;
  if (spec.para_depth == 0) {
    const auto r = entails(spec.matrix, gamma, alpha);
    holds = r.holds;
    if (r.countermodel) {
      j["countermodel"] = valuation_json(*r.countermodel);
      detail = "countermodel: " + to_string(*r.countermodel);
    }
  } else if (spec.para_depth == 1) {
    const auto r = para_entails(spec.matrix, gamma, alpha);
    holds = r.holds;
    if (r.witness) {
      j["witness"] = set_json(*r.witness);
      detail = "witness subset: " + r.witness->braced();
    }
  } else {
    holds = logic_entails(spec, gamma, alpha);
  }
  j["holds"] = holds;
  if (o.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << gamma.braced() << (holds ? " entails " : " does not entail ") << alpha.text() << " in " << spec.name()
        << '\n';
    if (!detail.empty()) out << detail << '\n';
  }
  return holds ? kExitOk : kExitNegative;
}

int cmd_classify(const Options& o, const std::string& alpha_text, std::ostream& out) {
  const Matrix m = resolve_logic(o.logic);
  const Formula alpha = parse_formula(alpha_text);
  const Classification c = classify(m, alpha);
  if (o.format == "json")
    out << Json{{"logic", m.name()}, {"formula", alpha.text()}, {"classification", to_string(c)}}.dump(2) << '\n';
  else
    out << to_string(c) << '\n';
  return kExitOk;
}

int cmd_consistent(const Options& o, const std::string& gamma_text, std::ostream& out) {
  const LogicSpec spec{resolve_logic(o.logic), o.para};
  const FormulaSet gamma = parse_formula_set(gamma_text);
  const bool ok = logic_consistent(spec, gamma);
  if (o.format == "json")
    out << Json{{"logic", spec.name()}, {"gamma", set_json(gamma)}, {"consistent", ok}}.dump(2) << '\n';
  else
    out << (ok ? "consistent" : "inconsistent") << '\n';
  return ok ? kExitOk : kExitNegative;
}

int cmd_mss(const Options& o, const std::string& gamma_text, std::ostream& out) {
  const Matrix m = resolve_logic(o.logic);
  const auto sets = maximal_consistent_subsets(m, parse_formula_set(gamma_text));
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& s : sets) j.push_back(set_json(s));
    out << Json{{"logic", m.name()}, {"mss", std::move(j)}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < sets.size(); ++i) out << (i ? "; " : "") << sets[i].braced();
    out << '\n';
  }
  return kExitOk;
}

int cmd_audit(const Options& o, bool as_table, std::ostream& out) {
  o.budget.validate();
  const AuditReport report =
      o.logic_given ? audit_logic(resolve_logic(o.logic), o.budget) : run_table(o.budget);
  if (o.format == "json")
    out << to_json(report) << '\n';
  else
    out << (as_table ? render_table(report) : render_audit(report));
  return report.has_unexpected_discrepancies() ? kExitNegative : kExitOk;
}

int cmd_witnesses(const Options& o, std::ostream& out) {
  const auto report = verify_witness_suite(LogicSpec{resolve_logic(o.logic), 1});
  if (o.format == "json") {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    out << Json{{"logic", report.logic}, {"checks", std::move(checks)}, {"all_passed", report.all_passed()}}.dump(2)
        << '\n';
  } else {
    for (const auto& c : report.checks) out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << '\n';
  }
  return report.all_passed() ? kExitOk : kExitNegative;
}

/// Rows with x and y descending; the ~ column lists f~(y) on the first n rows.
std::string render_matrix(const Matrix& m) {
  std::vector<std::uint8_t> order(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) order[i] = static_cast<std::uint8_t>(m.size() - 1 - i);
  std::size_t w = 3;
  for (const auto& v : m.values()) w = std::max(w, v.to_string().size() + 1);
  const int width = static_cast<int>(w);
  std::ostringstream out;
  out << m.name() << ": values {";
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? ", " : "") << m.value_at(static_cast<std::uint8_t>(i));
  out << "}, designated {";
  const auto d = m.designated();
  for (std::size_t i = 0; i < d.size(); ++i) out << (i ? ", " : "") << d[i];
  out << "}\n";
  out << std::setw(width) << "x" << std::setw(width) << "y" << " |" << std::setw(width) << "~y" << std::setw(width)
      << "|" << std::setw(width) << "&" << std::setw(width) << "->" << '\n';
  out << std::string(2 * w, '-') << "-+" << std::string(4 * w, '-') << '\n';
  std::size_t row = 0;
  for (auto x : order) {
    for (auto y : order) {
      out << std::setw(width) << m.value_at(x).to_string() << std::setw(width) << m.value_at(y).to_string() << " |"
          << std::setw(width) << (row < m.size() ? m.value_at(m.neg_at(y)).to_string() : "");
      for (Connective op : {Connective::Or, Connective::And, Connective::Imp})
        out << std::setw(width) << m.value_at(m.apply_at(op, x, y)).to_string();
      out << '\n';
      ++row;
    }
  }
  return out.str();
}

}  // namespace

Matrix resolve_logic(const std::string& selector) {
  const auto colon = selector.find(':');
  const std::string kind = selector.substr(0, colon);
  if (colon == std::string::npos) {
    for (const auto& name : builtin_names())
      if (name == selector) return builtin(name);
    throw UsageError("unknown logic '" + selector + "'");
  }
  const std::string arg = selector.substr(colon + 1);
  if (kind == "ln") return lukasiewicz(parse_arity(arg, selector));
  if (kind == "gn") return goedel(parse_arity(arg, selector));
  if (kind == "file") {
    std::filesystem::path path(arg);
    if (path.is_relative() && !std::filesystem::exists(path)) {
      if (const char* dir = std::getenv("PARAMAT_MATRIX_PATH"); dir && *dir) {
        const auto candidate = std::filesystem::path(dir) / path;
        if (std::filesystem::exists(candidate)) path = candidate;
      }
    }
    return load_matrix_file(path.string());
  }
  throw UsageError("unknown logic '" + selector + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Many-valued matrix logics and their paraconsistentization", "paramat"};
  app.require_subcommand(1);
  Options o;
  std::string gamma;
  std::string alpha;
  std::string target;

  auto* entails_cmd = app.add_subcommand("entails", "decide GAMMA |= ALPHA");
  add_logic_options(*entails_cmd, o);
  entails_cmd->add_option("gamma", gamma, "comma-separated premises, \"\" for none")->required();
  entails_cmd->add_option("alpha", alpha, "conclusion")->required();

  auto* classify_cmd = app.add_subcommand("classify", "tautology, contradiction or contingent");
  add_logic_options(*classify_cmd, o);
  classify_cmd->add_option("formula", alpha)->required();

  auto* consistent_cmd = app.add_subcommand("consistent", "decide whether GAMMA is consistent");
  add_logic_options(*consistent_cmd, o);
  consistent_cmd->add_option("gamma", gamma)->required();

  auto* mss_cmd = app.add_subcommand("mss", "maximal consistent subsets of GAMMA");
  add_logic_options(*mss_cmd, o);
  mss_cmd->add_option("gamma", gamma)->required();

  auto* audit_cmd = app.add_subcommand("audit", "check every property and list the evidence");
  auto* table_cmd = app.add_subcommand("table", "reproduce the summary table");
  for (auto* cmd : {audit_cmd, table_cmd}) {
    cmd->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    add_budget_options(*cmd, o);
  }
  audit_cmd->add_option("--logic", o.logic, "audit this logic instead of the summary table");

  auto* witnesses_cmd = app.add_subcommand("witnesses", "replay the stored counterexamples");
  add_logic_options(*witnesses_cmd, o);

  auto* matrix_cmd = app.add_subcommand("matrix", "inspect matrices");
  matrix_cmd->require_subcommand(1);
  auto* show_cmd = matrix_cmd->add_subcommand("show", "print truth tables");
  show_cmd->add_option("logic", target, "logic selector")->required();
  auto* list_cmd = matrix_cmd->add_subcommand("list", "list built-in matrices and families");
  auto* validate_cmd = matrix_cmd->add_subcommand("validate", "check a matrix file");
  validate_cmd->add_option("path", target)->required();

  std::vector<const char*> argv{"paramat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  o.logic_given = audit_cmd->count("--logic") > 0;

  try {
    if (*entails_cmd) return cmd_entails(o, gamma, alpha, out);
    if (*classify_cmd) return cmd_classify(o, alpha, out);
    if (*consistent_cmd) return cmd_consistent(o, gamma, out);
    if (*mss_cmd) return cmd_mss(o, gamma, out);
    if (*audit_cmd) return cmd_audit(o, false, out);
    if (*table_cmd) return cmd_audit(o, true, out);
    if (*witnesses_cmd) return cmd_witnesses(o, out);
    if (*show_cmd) {
      out << render_matrix(resolve_logic(target));
      return kExitOk;
    }
    if (*list_cmd) {
      for (const auto& name : builtin_names()) out << name << '\n';
      out << "ln:<n>  n-valued Lukasiewicz, n >= 2\n"
          << "gn:<n>  n-valued Goedel, n >= 2\n"
          << "file:<path>  matrix file (searched in $PARAMAT_MATRIX_PATH)\n";
      return kExitOk;
    }
    if (*validate_cmd) {
      const Matrix m = load_matrix_file(target);
      out << "ok: " << m.name() << " (" << m.size() << " values)\n";
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const MatrixError& e) {
    err << "invalid matrix: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace paramat
