#include "paramat/matrix.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "paramat/error.hpp"

namespace paramat {

Matrix::Matrix(std::string name, std::vector<Value> values, std::vector<Value> designated,
               const UnaryFn& neg, const BinaryFn& disj, const BinaryFn& conj, const BinaryFn& imp)
    : name_(std::move(name)), values_(std::move(values)) {
  if (values_.empty()) throw MatrixError("matrix '" + name_ + "' has no values");
  std::sort(values_.begin(), values_.end());
  if (std::adjacent_find(values_.begin(), values_.end()) != values_.end())
    throw MatrixError("matrix '" + name_ + "' lists a value twice");
  if (values_.size() > 255) throw MatrixError("matrix '" + name_ + "' has more than 255 values");

  designated_.assign(values_.size(), 0);
  for (const Value& d : designated) {
    if (!contains(d)) throw MatrixError("designated value " + d.to_string() + " is not a value of '" + name_ + "'");
    designated_[index_of(d)] = 1;
  }
  const auto n_designated = std::count(designated_.begin(), designated_.end(), 1);
  if (n_designated == 0) throw MatrixError("designated set of '" + name_ + "' is empty");
  if (static_cast<std::size_t>(n_designated) == values_.size())
    throw MatrixError("designated must be proper: '" + name_ + "' designates every value");

  auto closed = [&](const Value& out, const std::string& where) {
    if (!contains(out))
      throw MatrixError("table not closed: " + where + " = " + out.to_string() + " is not a value of '" + name_ + "'");
    return index_of(out);
  };
  const std::size_t n = values_.size();
  neg_.resize(n);
  or_.resize(n * n);
  and_.resize(n * n);
  imp_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_[i] = closed(neg(values_[i]), "neg(" + values_[i].to_string() + ")");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string args = "(" + values_[i].to_string() + "," + values_[j].to_string() + ")";
      or_[i * n + j] = closed(disj(values_[i], values_[j]), "or" + args);
      and_[i * n + j] = closed(conj(values_[i], values_[j]), "and" + args);
      imp_[i * n + j] = closed(imp(values_[i], values_[j]), "imp" + args);
    }
  }
}

std::vector<Value> Matrix::designated() const {
  std::vector<Value> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (designated_[i]) out.push_back(values_[i]);
  return out;
}

bool Matrix::contains(Value v) const { return std::binary_search(values_.begin(), values_.end(), v); }

std::uint8_t Matrix::index_of(Value v) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v)
    throw PreconditionError(v.to_string() + " is not a truth value of '" + name_ + "'");
  return static_cast<std::uint8_t>(it - values_.begin());
}

bool Matrix::is_designated(Value v) const { return designated_at(index_of(v)); }
Value Matrix::neg(Value v) const { return values_[neg_at(index_of(v))]; }
Value Matrix::apply(Connective op, Value a, Value b) const {
  if (op == Connective::Neg) return neg(a);
  return values_[apply_at(op, index_of(a), index_of(b))];
}

const std::vector<std::uint8_t>& Matrix::binary_table(Connective op) const {
  switch (op) {
    case Connective::Or: return or_;
    case Connective::And: return and_;
    case Connective::Imp: return imp_;
    case Connective::Neg: break;
  }
  throw PreconditionError("negation has no binary table");
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.values_ == b.values_ && a.designated_ == b.designated_ && a.neg_ == b.neg_ &&
         a.or_ == b.or_ && a.and_ == b.and_ && a.imp_ == b.imp_;
}

bool has_star_property(const Matrix& m) {
  for (std::uint8_t i = 0; i < m.size(); ++i)
    if (m.designated_at(i) && m.designated_at(m.neg_at(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Built-ins and families

namespace {

Value vmax(Value a, Value b) { return std::max(a, b); }
Value vmin(Value a, Value b) { return std::min(a, b); }

std::vector<Value> evenly_spaced(unsigned n) {
  std::vector<Value> out;
  for (unsigned k = 0; k < n; ++k) out.emplace_back(k, n - 1);
  return out;
}

// Three-valued tables written out in the usual row order: x and y both
// running 1, 1/2, 0. `neg` lists f~(1), f~(1/2), f~(0).
struct ThreeValuedTables {
  std::array<const char*, 3> neg;
  std::array<const char*, 9> disj;
  std::array<const char*, 9> conj;
  std::array<const char*, 9> imp;
};

Matrix from_rows(std::string name, const ThreeValuedTables& t) {
  const std::array<Value, 3> order{Value(1), Value(1, 2), Value(0)};
  auto row = [&](Value x, Value y) {
    const auto ix = std::find(order.begin(), order.end(), x) - order.begin();
    const auto iy = std::find(order.begin(), order.end(), y) - order.begin();
    return static_cast<std::size_t>(ix * 3 + iy);
  };
  auto val = [](const char* s) { return *Rational::parse(s); };
  return Matrix(
      std::move(name), {Value(0), Value(1, 2), Value(1)}, {Value(1)},
      [&](Value x) { return val(t.neg[row(x, x) / 3]); },
      [&](Value x, Value y) { return val(t.disj[row(x, y)]); },
      [&](Value x, Value y) { return val(t.conj[row(x, y)]); },
      [&](Value x, Value y) { return val(t.imp[row(x, y)]); });
}

const ThreeValuedTables kL3{
    {"0", "1/2", "1"},
    {"1", "1", "1", "1", "1/2", "1/2", "1", "1/2", "0"},
    {"1", "1/2", "0", "1/2", "1/2", "0", "0", "0", "0"},
    {"1", "1/2", "0", "1", "1", "1/2", "1", "1", "1"}};

const ThreeValuedTables kG3{
    {"0", "0", "1"},
    {"1", "1", "1", "1", "1/2", "1/2", "1", "1/2", "0"},
    {"1", "1/2", "0", "1/2", "1/2", "0", "0", "0", "0"},
    {"1", "1/2", "0", "1", "1", "0", "1", "1", "1"}};

const ThreeValuedTables kK3{
    {"0", "1/2", "1"},
    {"1", "1", "1", "1", "1/2", "1/2", "1", "1/2", "0"},
    {"1", "1/2", "0", "1/2", "1/2", "0", "0", "0", "0"},
    {"1", "1/2", "0", "1", "1/2", "1/2", "1", "1", "1"}};

}  // namespace

Matrix builtin(std::string_view name) {
  if (name == "l3") return from_rows("L3", kL3);
  if (name == "g3") return from_rows("G3", kG3);
  if (name == "k3") return from_rows("K3", kK3);
  if (name == "cl2") {
    const Value t(1), f(0);
    return Matrix(
        "CL2", {f, t}, {t}, [&](Value x) { return x == t ? f : t; },
        [&](Value x, Value y) { return (x == t || y == t) ? t : f; },
        [&](Value x, Value y) { return (x == t && y == t) ? t : f; },
        [&](Value x, Value y) { return (x == f || y == t) ? t : f; });
  }
  throw MatrixError("unknown built-in matrix '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"l3", "g3", "k3", "cl2"}; }

Matrix lukasiewicz(unsigned n) {
  if (n < 2) throw MatrixError("lukasiewicz(n) needs n >= 2");
  const Value one(1);
  return Matrix(
      "L" + std::to_string(n), evenly_spaced(n), {one}, [&](Value x) { return one - x; }, vmax, vmin,
      [&](Value x, Value y) { return std::min(one, one - x + y); });
}

Matrix goedel(unsigned n) {
  if (n < 2) throw MatrixError("goedel(n) needs n >= 2");
  const Value one(1), zero(0);
  return Matrix(
      "G" + std::to_string(n), evenly_spaced(n), {one}, [&](Value x) { return x == zero ? one : zero; }, vmax,
      vmin, [&](Value x, Value y) { return x <= y ? one : y; });
}

// ---------------------------------------------------------------------------
// Matrix files

namespace {

using nlohmann::json;

Value value_token(const json& j, const std::string& where) {
  if (!j.is_string()) throw MatrixError(where + ": value token must be a string");
  auto v = Rational::parse(j.get<std::string>());
  if (!v) throw MatrixError(where + ": value token '" + j.get<std::string>() + "' is not a rational");
  return *v;
}

std::map<Value, Value> unary_table(const json& j, const std::vector<Value>& values) {
  if (!j.is_object()) throw MatrixError("neg: table must be an object");
  std::map<Value, Value> out;
  for (const auto& [key, val] : j.items()) {
    const Value x = value_token(json(key), "neg key");
    if (!std::binary_search(values.begin(), values.end(), x))
      throw MatrixError("neg: key '" + key + "' is not a declared value");
    out[x] = value_token(val, "neg(" + key + ")");
  }
  for (const Value& x : values)
    if (!out.count(x)) throw MatrixError("table not total: neg missing \"" + x.to_string() + "\"");
  return out;
}

std::map<std::pair<Value, Value>, Value> binary_table(const json& j, const std::string& op,
                                                      const std::vector<Value>& values) {
  if (!j.is_object()) throw MatrixError(op + ": table must be an object");
  std::map<std::pair<Value, Value>, Value> out;
  for (const auto& [key, val] : j.items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw MatrixError(op + ": key '" + key + "' is not of the form x|y");
    const Value x = value_token(json(key.substr(0, bar)), op + " key");
    const Value y = value_token(json(key.substr(bar + 1)), op + " key");
    if (!std::binary_search(values.begin(), values.end(), x) || !std::binary_search(values.begin(), values.end(), y))
      throw MatrixError(op + ": key '" + key + "' mentions an undeclared value");
    out[{x, y}] = value_token(val, op + "(" + key + ")");
  }
  for (const Value& x : values)
    for (const Value& y : values)
      if (!out.count({x, y}))
        throw MatrixError("table not total: " + op + " missing \"" + x.to_string() + "|" + y.to_string() + "\"");
  return out;
}

}  // namespace

Matrix load_matrix(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw MatrixError(std::string("matrix document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MatrixError("matrix document must be a JSON object");
  static const std::set<std::string> kKeys{"name", "values", "designated", "neg", "or", "and", "imp"};
  for (const auto& [key, _] : doc.items())
    if (!kKeys.count(key)) throw MatrixError("unknown key '" + key + "'");
  for (const auto& key : kKeys)
    if (!doc.contains(key)) throw MatrixError("missing key '" + key + "'");
  if (!doc["name"].is_string()) throw MatrixError("name must be a string");
  if (!doc["values"].is_array() || !doc["designated"].is_array())
    throw MatrixError("values and designated must be arrays");

  std::vector<Value> values;
  for (const auto& v : doc["values"]) values.push_back(value_token(v, "values"));
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw MatrixError("values lists a value twice");

  std::vector<Value> designated;
  for (const auto& v : doc["designated"]) {
    const Value d = value_token(v, "designated");
    if (!std::binary_search(values.begin(), values.end(), d))
      throw MatrixError("designated value " + d.to_string() + " is not a declared value");
    designated.push_back(d);
  }

  const auto neg = unary_table(doc["neg"], values);
  const auto disj = binary_table(doc["or"], "or", values);
  const auto conj = binary_table(doc["and"], "and", values);
  const auto imp = binary_table(doc["imp"], "imp", values);
  return Matrix(
      doc["name"].get<std::string>(), values, designated, [&](Value x) { return neg.at(x); },
      [&](Value x, Value y) { return disj.at({x, y}); }, [&](Value x, Value y) { return conj.at({x, y}); },
      [&](Value x, Value y) { return imp.at({x, y}); });
}

Matrix load_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixError("cannot open matrix file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_matrix(buf.str());
}

std::string dump_matrix(const Matrix& m) {
  nlohmann::ordered_json doc;
  doc["name"] = m.name();
  doc["values"] = nlohmann::ordered_json::array();
  for (const Value& v : m.values()) doc["values"].push_back(v.to_string());
  doc["designated"] = nlohmann::ordered_json::array();
  for (const Value& v : m.designated()) doc["designated"].push_back(v.to_string());
  doc["neg"] = nlohmann::ordered_json::object();
  for (const Value& v : m.values()) doc["neg"][v.to_string()] = m.neg(v).to_string();
  for (auto [key, op] : {std::pair{"or", Connective::Or}, {"and", Connective::And}, {"imp", Connective::Imp}}) {
    auto& table = doc[key] = nlohmann::ordered_json::object();
    for (const Value& x : m.values())
      for (const Value& y : m.values()) table[x.to_string() + "|" + y.to_string()] = m.apply(op, x, y).to_string();
  }
  return doc.dump(2) + "\n";
}

}  // namespace paramat
