#include <doctest.h>

#include <memory>
#include <set>

#include "qhforge/detail/linalg.hpp"
#include "qhforge/property_d.hpp"
#include "test_util.hpp"

using namespace qhforge;
using namespace qhforge::propd;
using namespace qhtest;
using algebra::AlgebraElement;
using algebra::CoeffMode;
using algebra::RingDescriptor;

namespace {

RingPtr g24() {
  static RingPtr ring = catalog::make_g24(CoeffMode::lambda_only);
  return ring;
}

// A toy descriptor with minimal Chern number 1 whose middle homology is not
// divisor-generated: basis pt, l, A, B, c, 1 with c*c = A, c*A = l, c*l = pt,
// A*A = pt, B*B = -pt and all other non-identity products zero. B spans the
// complement.
RingPtr synthetic_ring() {
  auto ring = std::make_shared<RingDescriptor>();
  ring->id = "";
  ring->name = "synthetic";
  ring->complex_dim = 4;
  ring->mode = CoeffMode::lambda_only;
  ring->kappa = 1;
  ring->min_chern = 1;
  ring->sphere_classes = {{"S", 1, Rational(1)}};
  ring->line_class = 0;
  ring->basis = {{"pt", 0, {}}, {"l", 2, {}}, {"A", 4, {}}, {"B", 4, {}}, {"c", 6, {}}, {"1", 8, {}}};
  ring->unit_class = 5;

  const int n = 6;
  ring->table.assign(n * n, {});
  auto set = [&](int i, int j, std::vector<std::pair<int, Rational>> terms) {
    RingDescriptor::Entry e;
    for (auto& [k, c] : terms) e.emplace_back(k, novikov::NovikovScalar(c));
    ring->table[i * n + j] = e;
    ring->table[j * n + i] = std::move(e);
  };
  for (int j = 0; j < n; ++j) set(5, j, {{j, Rational(1)}});
  set(4, 4, {{2, Rational(1)}});  // c*c = A
  set(4, 2, {{1, Rational(1)}});  // c*A = l
  set(4, 1, {{0, Rational(1)}});  // c*l = pt
  set(2, 2, {{0, Rational(1)}});  // A*A = pt
  set(3, 3, {{0, Rational(-1)}}); // B*B = -pt

  ring->pairing.assign(n, std::vector<Rational>(n, Rational(0)));
  auto pair = [&](int i, int j, Rational v) {
    ring->pairing[i][j] = v;
    ring->pairing[j][i] = v;
  };
  pair(0, 5, Rational(1));
  pair(1, 4, Rational(1));
  pair(2, 2, Rational(1));
  pair(3, 3, Rational(-1));
  return ring;
}

std::set<std::string> renders(const std::vector<AlgebraElement>& v) {
  std::set<std::string> out;
  for (const auto& e : v) out.insert(algebra::render(e));
  return out;
}

}  // namespace

TEST_CASE("divisor subring of G(2,4)") {
  auto basis = divisor_subring(g24());
  CHECK(renders(basis) == std::set<std::string>{"1", "x1", "x1^2", "x1*x2", "x2^2"});
  // Degree-4 part is one-dimensional: only x1^2.
  int degree4 = 0;
  for (const auto& e : basis)
    if (g24()->degree_of(e.coords().begin()->first) == 4) ++degree4;
  CHECK(degree4 == 1);
  // Closed under classical multiplication: x1 * x1^2 lands in the span.
  CHECK(renders(basis).count("x1*x2") == 1);
}

TEST_CASE("divisor subring is closed under classical multiplication") {
  for (const char* id : {"g24", "cpn:2", "prod:cpn:1,cpn:2"}) {
    RingPtr ring = catalog::make_ring(id);
    auto basis = divisor_subring(ring);
    // Collect the span and reduce every pairwise classical product against it.
    qhforge::detail::RowSpan span(ring->basis_count());
    std::vector<std::vector<Rational>> vecs;
    for (const auto& e : basis) {
      std::vector<Rational> v(ring->basis_count(), Rational(0));
      for (const auto& [i, s] : e.coords()) v[i] = s.terms().begin()->second;
      vecs.push_back(v);
      span.add(std::move(v));
    }
    for (const auto& a : vecs) {
      for (const auto& b : vecs) {
        std::vector<Rational> prod(ring->basis_count(), Rational(0));
        for (int i = 0; i < ring->basis_count(); ++i) {
          for (int j = 0; j < ring->basis_count(); ++j) {
            if (a[i] == 0 || b[j] == 0) continue;
            for (const auto& [k, s] : ring->entry(i, j))
              for (const auto& [m, c] : s.terms())
                if (m.is_trivial()) prod[k] += a[i] * b[j] * c;
          }
        }
        CHECK(span.contains(prod));
      }
    }
  }
}

TEST_CASE("divisor subring spans everything for projective factors") {
  for (const char* id : {"cpn:1", "cpn:3", "prod:cpn:1,cpn:1", "prod:cpn:2,cpn:2"}) {
    RingPtr ring = catalog::make_ring(id);
    auto basis = divisor_subring(ring);
    CHECK(static_cast<int>(basis.size()) == ring->basis_count());
    CHECK(choose_complement(ring, basis).empty());
  }
}

TEST_CASE("complement of G(2,4) is spanned by x1^2 - 2 x2") {
  auto dbasis = divisor_subring(g24());
  auto comp = choose_complement(g24(), dbasis);
  REQUIRE(comp.size() == 1);
  CHECK(algebra::render(comp[0]) == "x1^2 - 2*x2");
  // The complement class must involve x2.
  CHECK(comp[0].coords().count(g24()->basis_index("x2")) == 1);
}

TEST_CASE("property D certificate for G(2,4)") {
  PropertyDReport report = check_property_d(g24());
  CHECK(report.status == PropertyDStatus::holds_certificate);
  CHECK(report.pairing_orthogonal);
  CHECK(report.divisor_basis.size() + report.complement_basis.size() == 6);
  bool mult1 = false;
  for (const auto& line : report.evidence) {
    CHECK_FALSE(line.feasible);
    if (line.beta_multiple == 1) {
      mult1 = true;
      CHECK(line.required_sum == 14);
    }
  }
  CHECK(mult1);
}

TEST_CASE("products of projective spaces hold trivially") {
  for (const char* id : {"prod:cpn:1,cpn:1", "prod:cpn:1,cpn:2", "cpn:1"}) {
    PropertyDReport report = check_property_d(catalog::make_ring(id));
    CHECK(report.status == PropertyDStatus::holds_trivially);
  }
}

TEST_CASE("synthetic descriptor with min Chern 1 is inconclusive") {
  RingPtr ring = synthetic_ring();
  PropertyDReport report = check_property_d(ring);
  CHECK(report.status == PropertyDStatus::inconclusive);
  CHECK(renders(report.complement_basis) == std::set<std::string>{"B"});
  bool feasible_line = false;
  for (const auto& line : report.evidence) {
    if (!line.feasible) continue;
    feasible_line = true;
    CHECK(line.codeg_d + line.codeg_v == line.required_sum);
  }
  CHECK(feasible_line);
}

TEST_CASE("vanishing verdicts") {
  SUBCASE("g24 satisfied") {
    VanishingVerdict v = vanishing_verdict(g24(), 5, 8);
    CHECK(v.status == VanishingStatus::satisfied);
    CHECK(v.detail == "I = 0 criteria satisfied");
    CHECK(v.orders.size() == 4);
  }
  SUBCASE("products satisfied") {
    VanishingVerdict v = vanishing_verdict(catalog::make_ring("prod:cpn:1,cpn:2"), 5, 8);
    CHECK(v.status == VanishingStatus::satisfied);
  }
  SUBCASE("synthetic ring fails the conjunction") {
    VanishingVerdict v = vanishing_verdict(synthetic_ring(), 1, 8);
    CHECK(v.status == VanishingStatus::not_established);
    CHECK(v.property_d.status == PropertyDStatus::inconclusive);
    CHECK(v.detail.find("criteria not established") == 0);
  }
}
