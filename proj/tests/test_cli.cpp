#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "paramat/cli.hpp"
#include "paramat/error.hpp"

using namespace paramat;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }
}  // namespace

TEST_CASE("entails exit codes") {
  CHECK(run({"entails", "--logic", "l3", "p|q, ~p", "q"}).code == 0);
  CHECK(run({"entails", "--logic", "l3", "--para", "1", "p, ~p", "q"}).code == 1);
  const Run k3 = run({"entails", "--logic", "k3", "", "p -> p"});
  CHECK(k3.code == 1);
  CHECK(k3.out.find("p=1/2") != std::string::npos);
  CHECK(run({"entails", "--logic", "l3", "--para", "2", "p, ~p", "p | q"}).code == 0);
  const Run witness = run({"entails", "--logic", "l3", "--para", "1", "p, ~p", "p | q"});
  CHECK(witness.out.find("witness subset: {p}") != std::string::npos);
}

TEST_CASE("entails JSON output") {
  const Run r = run({"entails", "--logic", "k3", "--format", "json", "", "p -> p"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("holds") == false);
  CHECK(j.at("countermodel").at("p") == "1/2");
  CHECK(j.at("logic") == "K3");
}

TEST_CASE("error exit codes") {
  CHECK(run({"entails", "p &", "q"}).code == 3);
  CHECK(run({"entails", "--logic", "nope", "p", "q"}).code == 2);
  CHECK(run({"entails", "--logic", "ln:x", "p", "q"}).code == 2);
  CHECK(run({"entails", "--para", "3", "p", "q"}).code == 2);
  CHECK(run({"entails", "--format", "xml", "p", "q"}).code == 2);
  CHECK(run({"entails", "p"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"table", "--samples", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify, consistent and mss") {
  CHECK(run({"classify", "--logic", "g3", "p & ~p"}).out == "contradiction\n");
  const Run inc = run({"consistent", "--logic", "l3", "p, ~p"});
  CHECK(inc.out == "inconsistent\n");
  CHECK(inc.code == 1);
  CHECK(run({"consistent", "--logic", "l3", "--para", "1", "p, ~p"}).code == 0);
  CHECK(run({"mss", "--logic", "l3", "p, ~p"}).out == "{p}; {~p}\n");
}

TEST_CASE("matrix subcommands") {
  const Run l3 = run({"matrix", "show", "l3"});
  CHECK(l3.code == 0);
  CHECK(count_lines(l3.out) == 3 + 9);
  CHECK(count_lines(run({"matrix", "show", "gn:4"}).out) == 3 + 16);
  CHECK(run({"matrix", "list"}).out.find("ln:<n>") != std::string::npos);
  CHECK(run({"matrix", "validate", std::string(PARAMAT_MATRICES_DIR) + "/k3.matrix"}).code == 0);

  const auto dir = std::filesystem::temp_directory_path() / "paramat_cli_test";
  std::filesystem::create_directories(dir);
  std::ifstream in(std::string(PARAMAT_MATRICES_DIR) + "/l3.matrix");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string doc = buf.str();
  const std::string entry = "\"1/2\": \"1/2\",";
  doc.erase(doc.find(entry), entry.size());
  const auto partial = dir / "partial.matrix";
  std::ofstream(partial) << doc;
  const Run bad = run({"matrix", "validate", partial.string()});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("table not total") != std::string::npos);
  CHECK(run({"matrix", "validate", (dir / "missing.matrix").string()}).code == 3);
  std::filesystem::remove_all(dir);
}

TEST_CASE("file selectors use the search path") {
  ::setenv("PARAMAT_MATRIX_PATH", PARAMAT_MATRICES_DIR, 1);
  CHECK(resolve_logic("file:g3.matrix") == builtin("g3"));
  CHECK(run({"classify", "--logic", "file:g3.matrix", "p & ~p"}).out == "contradiction\n");
  ::unsetenv("PARAMAT_MATRIX_PATH");
  CHECK_THROWS_AS(resolve_logic("file:g3.matrix"), MatrixError);
  CHECK(resolve_logic("ln:5") == lukasiewicz(5));
}

TEST_CASE("audit output is byte-identical across runs") {
  const std::vector<std::string> args{"audit", "--samples", "30", "--seed", "42", "--format", "json"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out).at("grid").size() == 96);
  const Run table = run({"table", "--samples", "30"});
  CHECK(table.code == 0);
  CHECK(table.out.find("weak transitivity") != std::string::npos);
  const Run other = run({"audit", "--logic", "ln:4", "--samples", "20"});
  CHECK(other.code == 0);
  CHECK(other.out.find("P(L4)") != std::string::npos);
  CHECK(run({"witnesses", "--logic", "k3"}).code == 0);
}
