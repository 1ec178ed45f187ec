#include "doctest.h"

#include "symx/sexpr.hpp"

using namespace symx;

TEST_CASE("name expressions round-trip through the printer") {
  for (const char* src : {
           "(check 2)",
           "(gen n:0)",
           "(gen q:5/2)",
           "(bullet (gen n:0) (gen n:1))",
           "(opair (check 0) (gen n:1))",
           "(raw ((cond ((n:0 0) 1)) (check 1)))",
           "(restrict (gen n:0) (cond ((n:0 0) 1)))",
           "(mix ((cond ((n:0 0) 0)) (check 0)) ((cond ((n:0 0) 1)) (check 1)))",
           "(based (bound 2) (top 1) (pt q:1 0))",
           "(prec dlo)",
       }) {
    CAPTURE(src);
    CHECK(name_to_string(parse_name_str(src)) == src);
  }
}

TEST_CASE("automorphism expressions parse to the right variants") {
  auto perm = parse_automorphism_str("(perm (0 1) (1 0))");
  CHECK(apply_point(perm, OrderPoint::nat(0)) == OrderPoint::nat(1));
  auto pl = parse_automorphism_str("(pl (0 0) (1 2) (3 3))");
  CHECK(apply_point(pl, OrderPoint::rat(Rational(2))) ==
        OrderPoint::rat(Rational(5, 2)));
  CHECK(aut_to_string(pl) == "(pl (0 0) (1 2) (3 3))");
  CHECK(parse_automorphism_str("(id)").is_identity());
  auto prod = parse_automorphism_str("(prod (row 0 (0 1) (1 0)))");
  CHECK(apply_point(prod, OrderPoint::prod(0, 0)) == OrderPoint::prod(0, 1));
  CHECK(apply_point(prod, OrderPoint::prod(1, 0)) == OrderPoint::prod(1, 0));
}

TEST_CASE("conditions and codes round-trip") {
  const char* c = "(cond ((n:0 0) 1) ((n:1 1) 0))";
  CHECK(condition_to_string(parse_condition_str(c)) == c);
  const char* a = "(ascode (s 0 2) (row 0 (1 0 1)) (row 2 (0 0 0)))";
  auto code = parse_ascode_str(a);
  CHECK(code.s == std::set<std::uint64_t>{0, 2});
  CHECK(code.components.at(0).prefix == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(ascode_to_string(code) == a);
}

TEST_CASE("formulas parse with names embedded") {
  auto f = parse_formula_str("(and (elem (check 0) (gen n:0)) (not (eq (check 1) (check 2))))");
  CHECK(formula_to_string(f) ==
        "(and (elem (check 0) (gen n:0)) (not (eq (check 1) (check 2))))");
  CHECK_THROWS_AS((void)parse_formula_str("(implies (eq (check 0) (check 0)))"),
                  ParseError);
}

TEST_CASE("parse errors carry a byte position") {
  try {
    (void)parse_name_str("(bullet (gen n:0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parse_name_str("(nosuch 3)"), ParseError);
  CHECK_THROWS_AS((void)parse_point("x:1"), ParseError);
}
