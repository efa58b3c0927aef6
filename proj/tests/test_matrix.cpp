#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "paramat/error.hpp"
#include "paramat/matrix.hpp"

using namespace paramat;
using oracle::token;

namespace {

void check_printed(const Matrix& m, const oracle::PrintedTable& table) {
  for (const auto& row : table) {
    const Value x = token(row.x);
    const Value y = token(row.y);
    if (*row.neg) CHECK_MESSAGE(m.neg(y) == token(row.neg), m.name(), " ~", row.y);
    CHECK_MESSAGE(m.apply(Connective::Or, x, y) == token(row.disj), m.name(), " ", row.x, "|", row.y);
    CHECK_MESSAGE(m.apply(Connective::And, x, y) == token(row.conj), m.name(), " ", row.x, "&", row.y);
    CHECK_MESSAGE(m.apply(Connective::Imp, x, y) == token(row.imp), m.name(), " ", row.x, "->", row.y);
  }
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string with_replaced(std::string doc, const std::string& from, const std::string& to) {
  const auto at = doc.find(from);
  REQUIRE(at != std::string::npos);
  return doc.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("built-in tables match the printed tables") {
  check_printed(builtin("l3"), oracle::printed_l3());
  check_printed(builtin("g3"), oracle::printed_g3());
  check_printed(builtin("k3"), oracle::printed_k3());
}

TEST_CASE("built-in metadata") {
  const Matrix l3 = builtin("l3");
  CHECK(l3.name() == "L3");
  CHECK(l3.size() == 3);
  CHECK(l3.designated() == std::vector<Value>{Value(1)});
  CHECK(l3.is_designated(Value(1)));
  CHECK_FALSE(l3.is_designated(Value(1, 2)));
  CHECK(builtin("cl2").size() == 2);
  CHECK(builtin_names() == std::vector<std::string>{"l3", "g3", "k3", "cl2"});
  CHECK_THROWS_AS(builtin("lp"), MatrixError);
  CHECK_THROWS_AS(l3.index_of(Value(1, 3)), PreconditionError);
}

TEST_CASE("family members coincide with the built-ins") {
  CHECK(lukasiewicz(3) == builtin("l3"));
  CHECK(goedel(3) == builtin("g3"));
  CHECK(lukasiewicz(2) == builtin("cl2"));
  CHECK(goedel(2) == builtin("cl2"));
  CHECK_FALSE(lukasiewicz(3) == builtin("k3"));
  CHECK_THROWS_AS(lukasiewicz(1), MatrixError);
  CHECK_THROWS_AS(goedel(0), MatrixError);
}

TEST_CASE("Lukasiewicz and Goedel clauses hold pointwise") {
  for (unsigned n = 2; n <= 7; ++n) {
    const Matrix l = lukasiewicz(n);
    const Matrix g = goedel(n);
    CHECK(l.size() == n);
    CHECK(l.name() == "L" + std::to_string(n));
    CHECK(g.name() == "G" + std::to_string(n));
    for (const Value& x : l.values()) {
      CHECK(l.neg(x) == Value(1) - x);
      CHECK(g.neg(x) == (x == Value(0) ? Value(1) : Value(0)));
      for (const Value& y : l.values()) {
        CHECK(l.apply(Connective::Or, x, y) == std::max(x, y));
        CHECK(l.apply(Connective::And, x, y) == std::min(x, y));
        CHECK(l.apply(Connective::Imp, x, y) == std::min(Value(1), Value(1) - x + y));
        CHECK(g.apply(Connective::Imp, x, y) == (x <= y ? Value(1) : y));
        CHECK(g.apply(Connective::Or, x, y) == std::max(x, y));
      }
    }
  }
}

TEST_CASE("shipped matrix files load to the built-ins") {
  for (const auto& name : builtin_names()) {
    const Matrix m = load_matrix_file(std::string(PARAMAT_MATRICES_DIR) + "/" + name + ".matrix");
    CHECK_MESSAGE(m == builtin(name), name);
  }
}

TEST_CASE("dump and load round-trip") {
  for (const Matrix& m : {builtin("l3"), builtin("k3"), goedel(5), lukasiewicz(4)}) {
    const Matrix back = load_matrix(dump_matrix(m));
    CHECK(back == m);
    CHECK(back.name() == m.name());
  }
}

TEST_CASE("loader rejects malformed documents") {
  const std::string good = dump_matrix(builtin("l3"));
  auto error_of = [](const std::string& doc) {
    try {
      load_matrix(doc);
    } catch (const MatrixError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(error_of(with_replaced(good, "\"1/2\": \"1/2\",", "")).find("table not total") != std::string::npos);
  CHECK(error_of(with_replaced(good, "\"designated\": [\n    \"1\"", "\"designated\": [\n    \"1\", \"1/2\", \"0\""))
            .find("designated must be proper") != std::string::npos);
  CHECK(error_of(with_replaced(good, "\"designated\": [\n    \"1\"", "\"designated\": [\n    \"0.5\""))
            .find("is not a rational") != std::string::npos);
  CHECK(error_of(with_replaced(good, "\"name\"", "\"extra\": 1, \"name\"")).find("unknown key") != std::string::npos);
  CHECK(error_of(with_replaced(good, "\"0|0\": \"0\"", "\"0|0\": \"1/3\"")).find("not") != std::string::npos);
  CHECK(!error_of("[1, 2]").empty());
  CHECK(!error_of("{").empty());
  CHECK_THROWS_AS(load_matrix_file("/nonexistent/x.matrix"), MatrixError);
}

TEST_CASE("constructor validation") {
  const auto id = [](Value x) { return x; };
  const auto first = [](Value x, Value) { return x; };
  CHECK_THROWS_AS(Matrix("e", {}, {}, id, first, first, first), MatrixError);
  CHECK_THROWS_AS(Matrix("d", {Value(0), Value(1)}, {}, id, first, first, first), MatrixError);
  CHECK_THROWS_AS(Matrix("u", {Value(0), Value(1)}, {Value(2)}, id, first, first, first), MatrixError);
  CHECK_THROWS_AS(Matrix("c", {Value(0), Value(1)}, {Value(1)}, [](Value) { return Value(1, 2); }, first, first, first),
                  MatrixError);
  CHECK_NOTHROW(Matrix("ok", {Value(0), Value(1)}, {Value(1)}, id, first, first, first));
}

TEST_CASE("condition (*)") {
  for (const auto& name : builtin_names()) CHECK_MESSAGE(has_star_property(builtin(name)), name);
  const Matrix k3 = builtin("k3");
  const Matrix lp("LP", {Value(0), Value(1, 2), Value(1)}, {Value(1, 2), Value(1)},
                  [&](Value x) { return k3.neg(x); },
                  [&](Value x, Value y) { return k3.apply(Connective::Or, x, y); },
                  [&](Value x, Value y) { return k3.apply(Connective::And, x, y); },
                  [&](Value x, Value y) { return k3.apply(Connective::Imp, x, y); });
  CHECK_FALSE(has_star_property(lp));
}
