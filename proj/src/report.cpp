#include "paramat/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "paramat/error.hpp"

namespace paramat {

namespace {

using Json = nlohmann::ordered_json;

Json set_json(const FormulaSet& s) {
  Json out = Json::array();
  for (const auto& x : s) out.push_back(x.text());
  return out;
}

FormulaSet set_from(const Json& j) {
  std::vector<Formula> items;
  for (const auto& x : j) items.push_back(parse_formula(x.get<std::string>()));
  return FormulaSet(std::move(items));
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["property"] = to_string(v.property);
  j["logic"] = v.logic;
  j["para_depth"] = v.para_depth;
  j["outcome"] = to_string(v.outcome);
  j["method"] = to_string(v.method);
  if (v.witness) {
    Json w;
    w["description"] = v.witness->description;
    w["gamma"] = set_json(v.witness->gamma);
    w["delta"] = set_json(v.witness->delta);
    Json xs = Json::array();
    for (const auto& x : v.witness->formulas) xs.push_back(x.text());
    w["formulas"] = std::move(xs);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["samples_run"] = v.samples_run;
  j["bounds"] = {{"max_depth", v.bounds.max_depth},
                 {"max_letters", v.bounds.max_letters},
                 {"max_gamma", v.bounds.max_gamma}};
  j["note"] = v.note;
  return j;
}

template <typename T, typename F>
T parse_enum(const Json& j, F from_string, const char* what) {
  const auto parsed = from_string(j.get<std::string>());
  if (!parsed) throw Error(std::string("unknown ") + what + " \"" + j.get<std::string>() + "\"");
  return *parsed;
}

Verdict verdict_from(const Json& j) {
  Verdict v;
  v.property = parse_enum<PropertyId>(j.at("property"), property_from_string, "property");
  v.logic = j.at("logic").get<std::string>();
  v.para_depth = j.at("para_depth").get<unsigned>();
  v.outcome = parse_enum<Outcome>(j.at("outcome"), outcome_from_string, "outcome");
  v.method = parse_enum<Method>(j.at("method"), method_from_string, "method");
  if (const auto& w = j.at("witness"); !w.is_null()) {
    Witness out;
    out.description = w.at("description").get<std::string>();
    out.gamma = set_from(w.at("gamma"));
    out.delta = set_from(w.at("delta"));
    for (const auto& x : w.at("formulas")) out.formulas.push_back(parse_formula(x.get<std::string>()));
    v.witness = std::move(out);
  }
  v.samples_run = j.at("samples_run").get<std::size_t>();
  const auto& b = j.at("bounds");
  v.bounds = Bounds{b.at("max_depth").get<unsigned>(), b.at("max_letters").get<unsigned>(),
                    b.at("max_gamma").get<std::size_t>()};
  v.note = j.at("note").get<std::string>();
  return v;
}

std::string cell_key(PropertyId p, const std::string& logic) { return to_string(p) + "/" + logic; }

const char* mark(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "✓";
    case Outcome::Fails: return "×";
    case Outcome::Undecided: return "?";
  }
  return "?";
}

}  // namespace

std::string to_json(const AuditReport& report) {
  Json j;
  const Budget& b = report.budget;
  j["budget"] = {{"samples", b.samples},
                 {"depth", b.depth},
                 {"letters", b.letters},
                 {"gamma_size", b.gamma_size},
                 {"seed", b.seed}};
  j["columns"] = report.columns;
  j["compared_with_table"] = report.compared_with_table;
  Json grid = Json::object();
  for (const auto& v : report.verdicts) grid[cell_key(v.property, v.logic)] = verdict_json(v);
  j["grid"] = std::move(grid);
  Json ds = Json::array();
  for (const auto& d : report.discrepancies) {
    ds.push_back({{"cell", d.cell()},
                  {"property", to_string(d.property)},
                  {"logic", d.logic},
                  {"published_value", d.published_value},
                  {"computed", to_string(d.computed)},
                  {"evidence", d.evidence},
                  {"replayed", d.replayed},
                  {"known", d.known}});
  }
  j["discrepancies"] = std::move(ds);
  j["unexpected_discrepancies"] = report.has_unexpected_discrepancies();
  return j.dump(2);
}

AuditReport report_from_json(std::string_view document) {
  try {
    const Json j = Json::parse(document);
    AuditReport r;
    const auto& b = j.at("budget");
    r.budget.samples = b.at("samples").get<std::size_t>();
    r.budget.depth = b.at("depth").get<unsigned>();
    r.budget.letters = b.at("letters").get<unsigned>();
    r.budget.gamma_size = b.at("gamma_size").get<std::size_t>();
    r.budget.seed = b.at("seed").get<std::uint64_t>();
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.compared_with_table = j.at("compared_with_table").get<bool>();
    const auto& grid = j.at("grid");
    for (PropertyId p : all_properties()) {
      for (const auto& c : r.columns) {
        const auto key = cell_key(p, c);
        if (!grid.contains(key)) throw Error("grid cell missing: " + key);
        r.verdicts.push_back(verdict_from(grid.at(key)));
      }
    }
    for (const auto& d : j.at("discrepancies")) {
      Discrepancy out;
      out.property = parse_enum<PropertyId>(d.at("property"), property_from_string, "property");
      out.logic = d.at("logic").get<std::string>();
      out.published_value = d.at("published_value").get<bool>();
      out.computed = parse_enum<Outcome>(d.at("computed"), outcome_from_string, "outcome");
      out.evidence = d.at("evidence").get<std::string>();
      out.replayed = d.at("replayed").get<bool>();
      out.known = d.at("known").get<bool>();
      r.discrepancies.push_back(std::move(out));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::string render_table(const AuditReport& report) {
  std::size_t label_width = 0;
  for (PropertyId p : all_properties()) label_width = std::max(label_width, label(p).size());
  std::size_t col_width = 3;
  for (const auto& c : report.columns) col_width = std::max(col_width, c.size() + 2);

  auto flagged = [&](PropertyId p, const std::string& logic) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < report.discrepancies.size(); ++i)
      if (report.discrepancies[i].property == p && report.discrepancies[i].logic == logic) return i + 1;
    return std::nullopt;
  };

  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(label_width)) << "" << " |";
  for (const auto& c : report.columns) out << std::right << std::setw(static_cast<int>(col_width)) << c;
  out << '\n' << std::string(label_width + 1, '-') << '+' << std::string(col_width * report.columns.size(), '-')
      << '\n';
  for (PropertyId p : all_properties()) {
    out << std::left << std::setw(static_cast<int>(label_width)) << label(p) << " |";
    for (std::size_t c = 0; c < report.columns.size(); ++c) {
      const Verdict& v = report.at(p, c);
      std::string cell = mark(v.outcome);
      std::size_t visible = 1;
      if (const auto n = flagged(p, v.logic)) {
        const std::string tag = "[" + std::to_string(*n) + "]";
        cell += tag;
        visible += tag.size();
      }
      out << std::string(col_width > visible ? col_width - visible : 1, ' ') << cell;
    }
    out << '\n';
  }
  out << "✓ holds, × fails, ? undecided within budget\n";
  if (!report.discrepancies.empty()) {
    out << "\nCells differing from the published table:\n";
    for (std::size_t i = 0; i < report.discrepancies.size(); ++i) {
      const auto& d = report.discrepancies[i];
      out << "  [" << i + 1 << "] " << d.cell() << ": table " << (d.published_value ? "✓" : "×")
          << ", computed " << to_string(d.computed) << (d.known ? " (known)" : " (UNEXPECTED)")
          << (d.replayed ? "" : " (evidence did not replay)") << "\n      " << d.evidence << '\n';
    }
  }
  return out.str();
}

std::string render_audit(const AuditReport& report) {
  std::ostringstream out;
  const Budget& b = report.budget;
  out << "budget: samples=" << b.samples << " depth=" << b.depth << " letters=" << b.letters
      << " gamma=" << b.gamma_size << " seed=" << b.seed << '\n';
  for (const auto& v : report.verdicts) {
    out << v.logic << "  " << to_string(v.property) << ": " << to_string(v.outcome) << " (" << to_string(v.method);
    if (v.method == Method::Sampled) out << ", " << v.samples_run << " samples";
    out << ")\n";
    if (v.witness) out << "    " << v.witness->description << '\n';
    if (!v.note.empty()) out << "    note: " << v.note << '\n';
  }
  if (report.compared_with_table) {
    out << report.discrepancies.size() << " cell(s) differ from the published table";
    out << (report.has_unexpected_discrepancies() ? ", some unexpected\n" : ", all known\n");
  }
  return out.str();
}

}  // namespace paramat
