#include <doctest.h>

#include "test_util.hpp"

using namespace qhforge;
using namespace qhtest;
using qhforge::algebra::AlgebraElement;
using qhforge::algebra::CoeffMode;

namespace {

RingPtr g24() {
  static RingPtr ring = catalog::make_g24(CoeffMode::lambda_only);
  return ring;
}

AlgebraElement one_t(Rational t) { return AlgebraElement::unit(g24()).scaled(sc_t(1, std::move(t))); }

}  // namespace

TEST_CASE("quantum products in G(2,4)") {
  AlgebraElement x1 = cls(g24(), "x1");
  AlgebraElement x2 = cls(g24(), "x2");

  CHECK(multiply(x1, x1) == cls(g24(), "x1^2"));
  CHECK(multiply(power(x2, 2), power(x2, 2)) == one_t(8));
  AlgebraElement sigma11 = cls(g24(), "x1^2") - x2;
  CHECK(multiply(x2, sigma11) == one_t(4));
  CHECK(power(sigma11, 2) == power(x2, 2));
  CHECK(power(sigma11, 4) == one_t(8));
  CHECK(power(x1, 3) == multiply(x1, x2).scaled(Rational(2)));
  // x1^4 = 2 x2^2 + 2 t^4 via x1^4 = 2 x1^2 x2 and the degree-4 relation.
  CHECK(power(x1, 4) == power(x2, 2).scaled(Rational(2)) + one_t(4).scaled(Rational(2)));
}

TEST_CASE("power basics") {
  AlgebraElement unit = AlgebraElement::unit(g24());
  CHECK(power(cls(g24(), "x1"), 0) == unit);
  for (long k : {0L, 1L, 5L}) CHECK(power(unit, k) == unit);
  AlgebraElement x2 = cls(g24(), "x2");
  CHECK(power(x2, 3) == multiply(multiply(x2, x2), x2));
  CHECK_THROWS_AS(power(x2, -1), ConstructionError);
}

TEST_CASE("ring mismatch is rejected") {
  RingPtr cp1 = catalog::make_cpn(1, CoeffMode::lambda_only);
  CHECK_THROWS_AS(multiply(cls(g24(), "x1"), cls(cp1, "x")), RingMismatchError);
  // Same catalog id built twice is the same ring.
  RingPtr again = catalog::make_g24(CoeffMode::lambda_only);
  CHECK(multiply(cls(again, "x2"), cls(g24(), "x2")) == cls(g24(), "x2^2"));
}

TEST_CASE("unit detection with kernel witnesses") {
  CHECK(algebra::is_unit(cls(g24(), "x2")).unit);
  CHECK(algebra::is_unit(AlgebraElement::unit(g24())).unit);

  auto check_x1 = algebra::is_unit(cls(g24(), "x1"));
  REQUIRE_FALSE(check_x1.unit);
  REQUIRE(check_x1.witness.has_value());
  AlgebraElement expected = cls(g24(), "x1^2") - cls(g24(), "x2").scaled(Rational(2));
  CHECK(*check_x1.witness == expected);
  CHECK(multiply(cls(g24(), "x1"), *check_x1.witness).is_zero());

  auto check_x1x2 = algebra::is_unit(cls(g24(), "x1*x2"));
  REQUIRE_FALSE(check_x1x2.unit);
  CHECK(*check_x1x2.witness == expected);
  CHECK(multiply(cls(g24(), "x1*x2"), *check_x1x2.witness).is_zero());

  CHECK_THROWS_AS(algebra::is_unit(AlgebraElement::zero(g24())), ZeroElementError);
}

TEST_CASE("inverse") {
  AlgebraElement unit = AlgebraElement::unit(g24());
  CHECK(algebra::inverse(unit) == unit);

  AlgebraElement x2 = cls(g24(), "x2");
  AlgebraElement inv = algebra::inverse(x2);
  CHECK(inv == (cls(g24(), "x1^2") - x2).times_monomial(mono_qt(0, -4)));
  CHECK(multiply(x2, inv) == unit);

  AlgebraElement x2sq = power(x2, 2);
  CHECK(algebra::inverse(x2sq) == x2sq.times_monomial(mono_qt(0, -8)));

  CHECK_THROWS_AS(algebra::inverse(cls(g24(), "x1")), algebra::NotAUnitError);
  try {
    algebra::inverse(cls(g24(), "x1"));
  } catch (const algebra::NotAUnitError& e) {
    CHECK(e.witness == cls(g24(), "x1^2") - cls(g24(), "x2").scaled(Rational(2)));
  }
}

TEST_CASE("a unit whose inverse needs a completion is reported") {
  AlgebraElement a = AlgebraElement::unit(g24()) + one_t(4);
  CHECK(algebra::is_unit(a).unit);
  CHECK_THROWS_AS(algebra::inverse(a), InexactInverseError);
}

TEST_CASE("element order") {
  AlgebraElement unit = AlgebraElement::unit(g24());
  auto r1 = algebra::element_order(unit);
  CHECK(r1.finite);
  CHECK(r1.order == 1);
  CHECK(r1.scalar == NovikovScalar::one());

  auto r2 = algebra::element_order(cls(g24(), "x2"));
  CHECK(r2.order == 4);
  CHECK(r2.scalar == sc_t(1, 8));

  auto r3 = algebra::element_order(cls(g24(), "x1^2") - cls(g24(), "x2"));
  CHECK(r3.order == 4);
  CHECK(r3.scalar == sc_t(1, 8));

  auto r4 = algebra::element_order(power(cls(g24(), "x2"), 2));
  CHECK(r4.order == 2);

  // Minimality: no proper divisor of the reported order works.
  for (const auto& rep : {r2, r3}) {
    for (long d : {1L, 2L}) {
      CHECK_FALSE(power(rep.subject, d).is_unit_multiple());
    }
  }

  CHECK_THROWS_AS(algebra::element_order(cls(g24(), "x1")), algebra::NotAUnitError);
}

TEST_CASE("element order cap is inconclusive, not infinite") {
  // x2 has order 4; a cap below that reports finite = false.
  auto r = algebra::element_order(cls(g24(), "x2"), 3);
  CHECK_FALSE(r.finite);
  CHECK(r.search_cap == 3);
}

TEST_CASE("valuation of elements") {
  AlgebraElement e = scaled_cls(g24(), "x2^2", sc_t(1, 4)) + AlgebraElement::unit(g24());
  CHECK(algebra::valuation(e) == 4);
  CHECK_THROWS_AS(algebra::valuation(AlgebraElement::zero(g24())), ZeroElementError);
}

TEST_CASE("psi and psi_inv") {
  RingPtr uni = catalog::make_g24(CoeffMode::universal);
  RingPtr lam = g24();

  SUBCASE("psi strips q on homogeneous degree-2N elements") {
    AlgebraElement x1q = scaled_cls(uni, "x1", NovikovScalar(mono_qt(1, 5), Rational(1)));
    AlgebraElement img = algebra::psi(x1q, lam);
    CHECK(img == scaled_cls(lam, "x1", sc_t(1, 5)));
  }
  SUBCASE("psi_inv supplies q^{N - deg/2}") {
    AlgebraElement x2 = cls(lam, "x2");
    AlgebraElement lift = algebra::psi_inv(x2, uni);
    CHECK(lift == scaled_cls(uni, "x2", NovikovScalar(mono_qt(2, 0), Rational(1))));
  }
  SUBCASE("round trip on every basis class") {
    for (int i = 0; i < lam->basis_count(); ++i) {
      AlgebraElement v = AlgebraElement::basis_element(lam, i);
      CHECK(algebra::psi(algebra::psi_inv(v, uni), lam) == v);
    }
  }
  SUBCASE("non-homogeneous input is rejected") {
    AlgebraElement bad = cls(uni, "x1"); // degree 6, no q
    CHECK_THROWS_AS(algebra::psi(bad, lam), NotHomogeneousError);
  }
  SUBCASE("mode checks") {
    CHECK_THROWS_AS(algebra::psi(cls(lam, "x1"), lam), ModeMismatchError);
    CHECK_THROWS_AS(algebra::psi_inv(cls(lam, "x1"), lam), ModeMismatchError);
  }
}

TEST_CASE("intersection duals in G(2,4)") {
  CHECK(algebra::intersection_dual(g24(), g24()->basis_index("1")) == cls(g24(), "x2^2"));
  CHECK(algebra::intersection_dual(g24(), g24()->basis_index("x1")) == cls(g24(), "x1*x2"));
  // <x1^2, dual> = 1 and <x2, dual> = 0.
  AlgebraElement dual = algebra::intersection_dual(g24(), g24()->basis_index("x1^2"));
  CHECK(dual == cls(g24(), "x1^2") - cls(g24(), "x2"));
}

TEST_CASE("degenerate pairings are rejected") {
  // A descriptor whose middle class pairs with nothing.
  auto ring = std::make_shared<algebra::RingDescriptor>();
  ring->name = "degenerate";
  ring->complex_dim = 1;
  ring->mode = CoeffMode::lambda_only;
  ring->min_chern = 1;
  ring->sphere_classes = {{"S", 1, Rational(1)}};
  ring->basis = {{"p", 0, {}}, {"1", 2, {}}};
  ring->unit_class = 1;
  ring->table.assign(4, {});
  ring->table[0 * 2 + 1] = {{0, NovikovScalar::one()}};
  ring->table[1 * 2 + 0] = {{0, NovikovScalar::one()}};
  ring->table[1 * 2 + 1] = {{1, NovikovScalar::one()}};
  ring->pairing = {{Rational(0), Rational(0)}, {Rational(0), Rational(0)}};
  CHECK_THROWS_AS(algebra::intersection_dual(ring, 0), DegeneratePairingError);
}

TEST_CASE("canonical scaling") {
  AlgebraElement e = (cls(g24(), "x1^2") - cls(g24(), "x2")).times_monomial(mono_qt(0, 6)).scaled(Rational(-3));
  AlgebraElement canon = algebra::canonical_scale(e);
  CHECK(canon == (cls(g24(), "x1^2") - cls(g24(), "x2")).scaled(Rational(3)));
}

TEST_CASE("element rendering") {
  CHECK(algebra::render(AlgebraElement::zero(g24())) == "0");
  CHECK(algebra::render(one_t(8)) == "1*t^8");
  CHECK(algebra::render(cls(g24(), "x1^2") - cls(g24(), "x2").scaled(Rational(2))) ==
        "x1^2 - 2*x2");
  CHECK(algebra::render(multiply(cls(g24(), "x1"), cls(g24(), "x1*x2"))) == "x2^2 + 1*t^4");
}

TEST_CASE("integrality predicate") {
  CHECK(cls(g24(), "x1").is_integral());
  CHECK_FALSE(cls(g24(), "x1").scaled(Rational(1, 2)).is_integral());
}
