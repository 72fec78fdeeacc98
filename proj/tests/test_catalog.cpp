#include <doctest.h>

#include <tuple>
#include <vector>

#include "test_util.hpp"

using namespace qhforge;
using namespace qhtest;
using qhforge::algebra::CoeffMode;
using qhforge::catalog::CatalogId;

namespace {

// One expected term of a structure-constant entry, in lambda mode.
struct Term {
  const char* label;
  Rational coeff;
  Rational t;
};

struct Row {
  const char* left;
  const char* right;
  std::vector<Term> value;
};

// Full G(2,4) table derived by hand from the two relations:
// x1^3 = 2 x1 x2 and x1^2 x2 = x2^2 + t^4, which force
// x1 x2^2 = t^4 x1, x2^3 = t^4 (x1^2 - x2), x1^4 = 2 x2^2 + 2 t^4,
// x1^3 x2 = 2 t^4 x1, x1^2 x2^2 = t^4 x1^2, x1 x2^3 = t^4 x1 x2,
// x2^4 = t^8.
const std::vector<Row> kG24Table = {
    {"x2^2", "x2^2", {{"1", 1, 8}}},
    {"x2^2", "x1*x2", {{"x1*x2", 1, 4}}},
    {"x2^2", "x1^2", {{"x1^2", 1, 4}}},
    {"x2^2", "x2", {{"x1^2", 1, 4}, {"x2", -1, 4}}},
    {"x2^2", "x1", {{"x1", 1, 4}}},
    {"x1*x2", "x1*x2", {{"x1^2", 1, 4}}},
    {"x1*x2", "x1^2", {{"x1", 2, 4}}},
    {"x1*x2", "x2", {{"x1", 1, 4}}},
    {"x1*x2", "x1", {{"x2^2", 1, 0}, {"1", 1, 4}}},
    {"x1^2", "x1^2", {{"x2^2", 2, 0}, {"1", 2, 4}}},
    {"x1^2", "x2", {{"x2^2", 1, 0}, {"1", 1, 4}}},
    {"x1^2", "x1", {{"x1*x2", 2, 0}}},
    {"x2", "x2", {{"x2^2", 1, 0}}},
    {"x2", "x1", {{"x1*x2", 1, 0}}},
    {"x1", "x1", {{"x1^2", 1, 0}}},
};

AlgebraElement expected_element(const RingPtr& ring, const std::vector<Term>& terms) {
  AlgebraElement e = AlgebraElement::zero(ring);
  for (const auto& t : terms)
    e = e + scaled_cls(ring, t.label, sc_t(t.coeff, t.t));
  return e;
}

}  // namespace

TEST_CASE("g24 basis matches the degree table") {
  RingPtr g24 = catalog::make_g24(CoeffMode::lambda_only);
  REQUIRE(g24->basis_count() == 6);
  const std::vector<std::pair<const char*, int>> expect = {
      {"x2^2", 0}, {"x1*x2", 2}, {"x1^2", 4}, {"x2", 4}, {"x1", 6}, {"1", 8}};
  for (int i = 0; i < 6; ++i) {
    CHECK(g24->basis[i].label == expect[i].first);
    CHECK(g24->basis[i].degree == expect[i].second);
  }
  CHECK(g24->complex_dim == 4);
  CHECK(g24->min_chern == 4);
  CHECK(g24->unit_class == g24->basis_index("1"));
}

TEST_CASE("g24 structure constants equal the hand-derived table") {
  RingPtr g24 = catalog::make_g24(CoeffMode::lambda_only);
  for (const auto& row : kG24Table) {
    AlgebraElement got = multiply(cls(g24, row.left), cls(g24, row.right));
    AlgebraElement expect = expected_element(g24, row.value);
    INFO(row.left, " * ", row.right);
    CHECK(got == expect);
    // Commutativity.
    CHECK(multiply(cls(g24, row.right), cls(g24, row.left)) == expect);
  }
  // Identity row.
  for (int j = 0; j < g24->basis_count(); ++j) {
    AlgebraElement b = AlgebraElement::basis_element(g24, j);
    CHECK(multiply(AlgebraElement::unit(g24), b) == b);
  }
}

TEST_CASE("g24 is consistent with both relations") {
  RingPtr g24 = catalog::make_g24(CoeffMode::lambda_only);
  AlgebraElement x1 = cls(g24, "x1");
  AlgebraElement x2 = cls(g24, "x2");
  AlgebraElement lhs1 = power(x1, 3) - multiply(x1, x2).scaled(Rational(2));
  CHECK(lhs1.is_zero());
  AlgebraElement lhs2 = multiply(power(x1, 2), x2) - power(x2, 2);
  CHECK(lhs2 == AlgebraElement::unit(g24).scaled(sc_t(1, 4)));
}

TEST_CASE("g24 intersection pairing") {
  RingPtr g24 = catalog::make_g24(CoeffMode::lambda_only);
  auto pair_of = [&](const char* a, const char* b) {
    return g24->pairing[g24->basis_index(a)][g24->basis_index(b)];
  };
  CHECK(pair_of("1", "x2^2") == 1);
  CHECK(pair_of("x1", "x1*x2") == 1);
  CHECK(pair_of("x1^2", "x1^2") == 2);
  CHECK(pair_of("x1^2", "x2") == 1);
  CHECK(pair_of("x2", "x2") == 1);
  CHECK(pair_of("x1", "x1") == 0);
  CHECK(pair_of("1", "x1") == 0);
}

TEST_CASE("cpn tables") {
  SUBCASE("n = 1") {
    RingPtr cp1 = catalog::make_cpn(1, CoeffMode::lambda_only);
    CHECK(multiply(cls(cp1, "x"), cls(cp1, "x")) ==
          AlgebraElement::unit(cp1).scaled(sc_t(1, 2)));
  }
  SUBCASE("n = 2") {
    RingPtr cp2 = catalog::make_cpn(2, CoeffMode::lambda_only);
    CHECK(multiply(cls(cp2, "x"), cls(cp2, "x")) == cls(cp2, "x^2"));
    CHECK(multiply(cls(cp2, "x^2"), cls(cp2, "x")) ==
          AlgebraElement::unit(cp2).scaled(sc_t(1, 3)));
  }
  SUBCASE("classical regime for n = 4") {
    RingPtr cp4 = catalog::make_cpn(4, CoeffMode::lambda_only);
    auto x_pow = [&](int k) {
      return cls(cp4, k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)));
    };
    for (int k = 0; k <= 4; ++k)
      for (int j = 0; k + j <= 4; ++j)
        CHECK(multiply(x_pow(k), x_pow(j)) == x_pow(k + j));
  }
  SUBCASE("dual of x^k is x^{n-k}") {
    RingPtr cp3 = catalog::make_cpn(3, CoeffMode::lambda_only);
    for (int k = 0; k <= 3; ++k) {
      std::string lab = k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k));
      std::string dual = (3 - k) == 0 ? "1" : ((3 - k) == 1 ? "x" : "x^" + std::to_string(3 - k));
      CHECK(algebra::intersection_dual(cp3, cp3->basis_index(lab)) == cls(cp3, dual));
    }
  }
  CHECK_THROWS_AS(catalog::make_cpn(0, CoeffMode::lambda_only), InvalidDimensionError);
}

TEST_CASE("coefficient modes carry the expected monomials") {
  SUBCASE("universal keeps q") {
    RingPtr g24 = catalog::make_g24(CoeffMode::universal);
    AlgebraElement x2 = cls(g24, "x2");
    AlgebraElement sq = power(x2, 4);
    REQUIRE(sq.is_unit_multiple());
    NovikovScalar lambda = sq.coord(g24->unit_class);
    REQUIRE(lambda.is_monomial());
    CHECK(lambda.terms().begin()->first.q_exp() == 8);
    CHECK(lambda.terms().begin()->first.t_exp() == 8);
  }
  SUBCASE("enriched tags sphere classes") {
    RingPtr g24 = catalog::make_g24(CoeffMode::enriched);
    AlgebraElement x2 = cls(g24, "x2");
    AlgebraElement sq = power(x2, 4);
    REQUIRE(sq.is_unit_multiple());
    NovikovScalar lambda = sq.coord(g24->unit_class);
    REQUIRE(lambda.is_monomial());
    CHECK(lambda.terms().begin()->first.classes() == novikov::ClassVector{2});
    CHECK(lambda.terms().begin()->first.q_exp() == 8);
  }
  SUBCASE("lambda strips q") {
    RingPtr g24 = catalog::make_g24(CoeffMode::lambda_only);
    AlgebraElement sq = power(cls(g24, "x2"), 4);
    NovikovScalar lambda = sq.coord(g24->unit_class);
    CHECK(lambda == sc_t(1, 8));
  }
}

TEST_CASE("kappa scales energies") {
  RingPtr cp1 = catalog::make_cpn(1, CoeffMode::lambda_only, Rational(3, 2));
  AlgebraElement sq = multiply(cls(cp1, "x"), cls(cp1, "x"));
  CHECK(sq == AlgebraElement::unit(cp1).scaled(sc_t(1, 3)));
}

TEST_CASE("products obey the Kunneth rule") {
  RingPtr p11 = catalog::make_ring("prod:cpn:1,cpn:1");
  SUBCASE("factor squares") {
    AlgebraElement a = cls(p11, "a");
    CHECK(multiply(a, a) == AlgebraElement::unit(p11).scaled(sc_t(1, 2)));
  }
  SUBCASE("unit factor") {
    CHECK(multiply(cls(p11, "a"), cls(p11, "b")) == cls(p11, "a*b"));
  }
  SUBCASE("cp1 x cp2 mixed square") {
    RingPtr p12 = catalog::make_ring("prod:cpn:1,cpn:2");
    AlgebraElement ab = cls(p12, "a*b");
    // (x (x) y)^2 = (1 t^2) (x) y^2.
    CHECK(multiply(ab, ab) == scaled_cls(p12, "b^2", sc_t(1, 2)));
  }
  SUBCASE("basis and degrees") {
    CHECK(p11->basis_count() == 4);
    CHECK(p11->complex_dim == 2);
    CHECK(p11->min_chern == 2);
    CHECK(p11->basis_index("a*b") == 0); // degree 0
    CHECK(p11->degree_of(p11->basis_index("a")) == 2);
  }
}

TEST_CASE("product construction is associative up to relabeling") {
  RingPtr flat = catalog::make_ring("prod:cpn:1,cpn:1,cpn:2");
  RingPtr nested = catalog::make_product(
      {catalog::make_ring("prod:cpn:1,cpn:1"), catalog::make_cpn(2, CoeffMode::lambda_only)});
  REQUIRE(flat->basis_count() == nested->basis_count());
  for (int i = 0; i < flat->basis_count(); ++i)
    CHECK(flat->basis[i].label == nested->basis[i].label);
  for (int i = 0; i < flat->basis_count(); ++i) {
    for (int j = 0; j < flat->basis_count(); ++j) {
      CHECK(flat->entry(i, j) == nested->entry(i, j));
    }
  }
}

TEST_CASE("enriched products keep factor H2 labels separate") {
  RingPtr p11 = catalog::make_ring("prod:cpn:1,cpn:1@enriched");
  REQUIRE(p11->sphere_classes.size() == 2);
  CHECK(p11->sphere_classes[0].label == "A");
  CHECK(p11->sphere_classes[1].label == "B");
  AlgebraElement a = cls(p11, "a");
  AlgebraElement b = cls(p11, "b");
  NovikovScalar sa = multiply(a, a).coord(p11->unit_class);
  NovikovScalar sb = multiply(b, b).coord(p11->unit_class);
  REQUIRE(sa.is_monomial());
  REQUIRE(sb.is_monomial());
  CHECK(sa.terms().begin()->first.classes() == novikov::ClassVector{1});
  CHECK(sb.terms().begin()->first.classes() == novikov::ClassVector{0, 1});
  CHECK(sa != sb);
  // Universal mode cannot tell the two lines apart.
  RingPtr u11 = catalog::make_ring("prod:cpn:1,cpn:1@universal");
  CHECK(multiply(cls(u11, "a"), cls(u11, "a")) == multiply(cls(u11, "b"), cls(u11, "b")));
}

TEST_CASE("mode and dimension errors") {
  auto lambda_cp1 = catalog::make_cpn(1, CoeffMode::lambda_only);
  auto enriched_cp1 = catalog::make_cpn(1, CoeffMode::enriched);
  CHECK_THROWS_AS(catalog::make_product({lambda_cp1, enriched_cp1}), ModeMismatchError);
  CHECK_THROWS_AS(catalog::make_product({}), ModeMismatchError);
  auto scaled = catalog::make_cpn(1, CoeffMode::lambda_only, Rational(2));
  CHECK_THROWS_AS(catalog::make_product({lambda_cp1, scaled}), ModeMismatchError);
}

TEST_CASE("catalog id parsing") {
  CatalogId id = CatalogId::parse("prod:cpn:1,cpn:2@enriched");
  CHECK(id.kind == CatalogId::Kind::product);
  REQUIRE(id.factors.size() == 2);
  CHECK(id.factors[0].n == 1);
  CHECK(id.factors[1].n == 2);
  CHECK(id.mode == CoeffMode::enriched);
  CHECK(id.to_string() == "prod:cpn:1,cpn:2@enriched");

  CHECK(CatalogId::parse("g24").mode == CoeffMode::lambda_only);
  CHECK(CatalogId::parse("cpn:3@universal").n == 3);
  CHECK_THROWS_AS(CatalogId::parse("cpn:x"), ParseError);
  CHECK_THROWS_AS(CatalogId::parse("grassmann"), ParseError);
  CHECK_THROWS_AS(CatalogId::parse("g24@real"), ParseError);
  CHECK_THROWS_AS(CatalogId::parse("prod:"), ParseError);
}

TEST_CASE("associativity over all basis triples for small catalog rings") {
  for (const char* id : {"g24", "cpn:3", "prod:cpn:1,cpn:1"}) {
    RingPtr ring = catalog::make_ring(id);
    const int n = ring->basis_count();
    for (int i = 0; i < n; ++i) {
      AlgebraElement bi = AlgebraElement::basis_element(ring, i);
      for (int j = 0; j < n; ++j) {
        AlgebraElement bj = AlgebraElement::basis_element(ring, j);
        for (int k = 0; k < n; ++k) {
          AlgebraElement bk = AlgebraElement::basis_element(ring, k);
          CHECK(multiply(multiply(bi, bj), bk) == multiply(bi, multiply(bj, bk)));
        }
      }
    }
  }
}
