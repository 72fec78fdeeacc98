#include <doctest.h>

#include "qhforge/expr.hpp"
#include "test_util.hpp"

using namespace qhforge;
using namespace qhtest;
using algebra::AlgebraElement;
using algebra::CoeffMode;

namespace {

RingPtr g24() {
  static RingPtr ring = catalog::make_g24(CoeffMode::lambda_only);
  return ring;
}

}  // namespace

TEST_CASE("element expressions") {
  CHECK(expr::parse_element(g24(), "x2^2") == cls(g24(), "x2^2"));
  CHECK(expr::parse_element(g24(), "x1^2 - 2*x2") ==
        cls(g24(), "x1^2") - cls(g24(), "x2").scaled(Rational(2)));
  CHECK(expr::parse_element(g24(), "x1*x2") == cls(g24(), "x1*x2"));
  CHECK(expr::parse_element(g24(), "(x1^2 - x2)^2") ==
        power(cls(g24(), "x1^2") - cls(g24(), "x2"), 2));
  // Juxtaposition multiplies.
  CHECK(expr::parse_element(g24(), "2x1") == cls(g24(), "x1").scaled(Rational(2)));
  CHECK(expr::parse_element(g24(), "-x2 + x2") == AlgebraElement::zero(g24()));
  CHECK(expr::parse_element(g24(), "3/2*x2*t^4") ==
        scaled_cls(g24(), "x2", sc_t(Rational(3, 2), 4)));
  CHECK(expr::parse_element(g24(), "x2*t^-1/2") ==
        scaled_cls(g24(), "x2", sc_t(1, Rational(-1, 2))));
  CHECK(expr::parse_element(g24(), "1") == AlgebraElement::unit(g24()));
}

TEST_CASE("rendered elements parse back to themselves") {
  std::vector<AlgebraElement> cases = {
      multiply(cls(g24(), "x1"), cls(g24(), "x1*x2")),
      power(cls(g24(), "x2"), 4),
      cls(g24(), "x1^2") - cls(g24(), "x2").scaled(Rational(2)),
      AlgebraElement::unit(g24()).scaled(sc_t(Rational(-3, 2), Rational(1, 2))),
  };
  for (const auto& e : cases) CHECK(expr::parse_element(g24(), algebra::render(e)) == e);
}

TEST_CASE("expression errors") {
  CHECK_THROWS_AS(expr::parse_element(g24(), "y^2"), UnknownGeneratorError);
  CHECK_THROWS_AS(expr::parse_element(g24(), "x1^-1"), ParseError);
  CHECK_THROWS_AS(expr::parse_element(g24(), "x1 +"), ParseError);
  CHECK_THROWS_AS(expr::parse_element(g24(), "(x1"), ParseError);
  CHECK_THROWS_AS(expr::parse_element(g24(), "q^1/2"), ParseError);
  CHECK_THROWS_AS(expr::parse_element(g24(), "x1 $ x2"), ParseError);
  try {
    expr::parse_element(g24(), "x1 + @");
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("scalar expressions") {
  using novikov::NovikovMonomial;
  using novikov::NovikovScalar;
  NovikovScalar s = expr::parse_scalar("3/2*q^-2*t^-2 + t^4");
  NovikovScalar expect(NovikovMonomial::from_qt(-2, -2), Rational(3, 2));
  expect.insert(NovikovMonomial::from_qt(0, 4), 1);
  CHECK(s == expect);
  CHECK(expr::parse_scalar("(1 + t^4)*(1 - t^4)") ==
        NovikovScalar::one() - NovikovScalar(NovikovMonomial::from_qt(0, 8), Rational(1)));
  CHECK_THROWS_AS(expr::parse_scalar("x1"), ParseError);
}

TEST_CASE("rational flags") {
  CHECK(expr::parse_rational("7/2") == Rational(7, 2));
  CHECK(expr::parse_rational("-3") == Rational(-3));
  CHECK_THROWS_AS(expr::parse_rational("a"), ParseError);
  CHECK_THROWS_AS(expr::parse_rational("1/0"), ParseError);
}
