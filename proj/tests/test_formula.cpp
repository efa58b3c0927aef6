#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "paramat/error.hpp"
#include "paramat/formula.hpp"

using namespace paramat;

TEST_CASE("rendering uses minimal parentheses") {
  CHECK(parse_formula("p | q & r").text() == "p | q & r");
  CHECK(parse_formula("(p | q) & r").text() == "(p | q) & r");
  CHECK(parse_formula("((p))").text() == "p");
  CHECK(parse_formula("~~p").text() == "~~p");
  CHECK(parse_formula("~(p -> p)").text() == "~(p -> p)");
  CHECK(parse_formula("p -> (q -> r)").text() == "p -> q -> r");
  CHECK(parse_formula("(p -> q) -> r").text() == "(p -> q) -> r");
  CHECK(parse_formula("p | (q | r)").text() == "p | (q | r)");
  CHECK(parse_formula("(p | q) | r").text() == "p | q | r");
  CHECK(parse_formula("p&q->r|s").text() == "p & q -> r | s");
}

TEST_CASE("implication associates to the right") {
  const Formula f = parse_formula("p -> q -> r");
  REQUIRE(f.kind() == FormulaKind::Imp);
  CHECK(f.lhs().text() == "p");
  CHECK(f.rhs().text() == "q -> r");
  CHECK(f.depth() == 2);
}

TEST_CASE("unicode connectives are accepted") {
  CHECK(parse_formula("¬p ∨ q").text() == "~p | q");
  CHECK(parse_formula("p ∧ q → r").text() == "p & q -> r");
}

TEST_CASE("parse errors carry the byte position") {
  try {
    parse_formula("p & ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  CHECK_THROWS_AS(parse_formula("p q"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("P"), ParseError);
  CHECK_THROWS_AS(parse_formula("p - q"), ParseError);
  try {
    parse_formula_set("p, q &");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("letter names") {
  CHECK(is_letter_name("p"));
  CHECK(is_letter_name("p1"));
  CHECK(is_letter_name("zA_2"));
  CHECK_FALSE(is_letter_name("1p"));
  CHECK_FALSE(is_letter_name("Pq"));
  CHECK_FALSE(is_letter_name(""));
  CHECK_THROWS_AS(Formula::letter("Q"), ParseError);
}

TEST_CASE("formula sets are canonical") {
  const FormulaSet s = parse_formula_set("q, p, q, ~p");
  CHECK(s.size() == 3);
  CHECK(s.to_string() == "p, q, ~p");
  CHECK(s.braced() == "{p, q, ~p}");
  CHECK(parse_formula_set("").empty());
  CHECK(parse_formula_set("   ").empty());
  CHECK(parse_formula_set(s.to_string()) == s);
  CHECK(s.contains(parse_formula("~p")));
  CHECK(s.without(parse_formula("q")).to_string() == "p, ~p");
  CHECK(s.with(parse_formula("r")).size() == 4);
  CHECK(parse_formula_set("p").is_subset_of(s));
  CHECK(FormulaSet{}.braced() == "{}");
  CHECK(letters(s) == LetterSet{"p", "q"});
}

TEST_CASE("parse inverts render on random formulas") {
  std::mt19937_64 rng(11);
  const LetterSet pool{"p", "q", "r"};
  for (int i = 0; i < 3000; ++i) {
    const Formula f = random_formula(pool, 5, rng);
    const Formula back = parse_formula(f.text());
    CHECK(back == f);
    CHECK(back.depth() == f.depth());
    CHECK(f.depth() <= 5);
  }
}

TEST_CASE("random formulas are a function of the seed") {
  const LetterSet pool{"p", "q"};
  for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(random_formula(pool, 4, seed) == random_formula(pool, 4, seed));
}

TEST_CASE("enumeration counts match the closed form") {
  for (unsigned d = 0; d <= 3; ++d) {
    std::size_t n = 0;
    enumerate_formulas(LetterSet{"p"}, d, [&](const Formula&) { return ++n, true; });
    CHECK(n == oracle::formula_count(1, d));
  }
  CHECK(oracle::formula_count(1, 3) == 19765);
  CHECK(enumerate_formulas(LetterSet{"p", "q"}, 1).size() == 16);
  CHECK(oracle::formula_count(2, 2) == 786);
  CHECK(oracle::formula_count(2, 3) == 1854176);
}

TEST_CASE("enumeration visits distinct formulas in depth order") {
  const auto all = enumerate_formulas(LetterSet{"p", "q"}, 2);
  REQUIRE(all.size() == 786);
  CHECK(std::set<Formula>(all.begin(), all.end()).size() == all.size());
  unsigned last = 0;
  for (const auto& f : all) {
    CHECK(f.depth() >= last);
    last = f.depth();
  }
  CHECK(all.front().text() == "p");
}

TEST_CASE("enumeration stops when the visitor says so") {
  std::size_t n = 0;
  enumerate_formulas(LetterSet{"p"}, 3, [&](const Formula&) { return ++n < 10; });
  CHECK(n == 10);
}
