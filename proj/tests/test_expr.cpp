#include <doctest.h>

#include "support.hpp"
#include "weylkit/expr.hpp"
#include "weylkit/ore.hpp"

using namespace weylkit;

namespace {

const PolyRing kXY({"x", "y"});

}  // namespace

TEST_CASE("evaluation") {
  CHECK(parse_poly("(x+1)^2", kXY) == parse_poly("x^2 + 2*x + 1", kXY));
  CHECK(parse_poly("-x*y + 3/2", kXY) == kXY.constant(Rational(3, 2)) - kXY.var(0) * kXY.var(1));
  CHECK(parse_poly("2 - (x - y)", kXY) == parse_poly("2 - x + y", kXY));
  CHECK(parse_poly_list("x, (x + y)*(x - y), 1", kXY).size() == 3);
}

TEST_CASE("syntax errors carry spans") {
  CHECK_THROWS_AS(parse_poly("x^-1", kXY), ParseError);
  CHECK_THROWS_AS(parse_poly("x +", kXY), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", kXY), ParseError);
  CHECK_THROWS_AS(parse_poly("", kXY), ParseError);
  try {
    parse_poly("x + z", kXY);
    FAIL("undeclared identifier accepted");
  } catch (const ParseError& e) {
    CHECK(e.span().begin == 4);
    CHECK(e.span().end == 5);
  }
}

TEST_CASE("operators parse and normalize") {
  const OreRing a1 = OreRing::weyl(PolyRing::numbered(1));
  CHECK(parse_op("d1*x1", a1) == parse_op("x1*d1 + 1", a1));
}

TEST_CASE("print then parse is a fixed point") {
  const std::vector<std::string> names{"x", "y"};
  for (const char* s : {"x", "-x", "(x + 1)^2", "x*y - 3/4*y^2", "-(x - y)*(x + y)", "2^3*x"}) {
    const ExprPtr e = parse_expr(s, names);
    const std::string once = print_expr(*e);
    const std::string twice = print_expr(*parse_expr(once, names));
    CHECK(once == twice);
    CHECK(evaluate_poly(*e, kXY) == parse_poly(once, kXY));
  }
  testing::Gen gen(3);
  for (int i = 0; i < 50; ++i) {
    const Poly p = gen.poly(kXY, 4, 5);
    CHECK(parse_poly(p.to_string(), kXY) == p);
  }
}
