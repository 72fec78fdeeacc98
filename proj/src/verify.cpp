#include "qhforge/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "qhforge/catalog.hpp"
#include "qhforge/group_order.hpp"
#include "qhforge/property_d.hpp"
#include "qhforge/unit_analysis.hpp"

namespace qhforge::verify {

using algebra::AlgebraElement;
using algebra::CoeffMode;
using algebra::RingPtr;
using novikov::NovikovMonomial;
using novikov::NovikovScalar;

namespace {

struct Check {
  std::ostringstream failures;
  int failed = 0;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failed;
      if (failed <= 8) failures << what << "; ";
    }
  }
};

NovikovScalar sc_t(Rational coeff, Rational t) {
  return NovikovScalar(NovikovMonomial::from_qt(0, std::move(t)), std::move(coeff));
}

AlgebraElement cls(const RingPtr& ring, const std::string& label) {
  return AlgebraElement::basis_element(ring, ring->basis_index(label));
}

const std::vector<std::string>& structural_ring_ids() {
  static const std::vector<std::string> ids = {
      "cpn:1", "cpn:2", "cpn:3", "cpn:4", "g24", "prod:cpn:1,cpn:1", "prod:cpn:1,cpn:2"};
  return ids;
}

void criterion_g24_identities(Check& c) {
  RingPtr g24 = catalog::make_g24(CoeffMode::lambda_only);
  AlgebraElement x2 = cls(g24, "x2");
  AlgebraElement unit = AlgebraElement::unit(g24);
  AlgebraElement x2sq = multiply(x2, x2);
  c.expect(x2sq == cls(g24, "x2^2"), "x2*x2 != x2^2");
  c.expect(multiply(x2sq, x2sq) == unit.scaled(sc_t(1, 8)), "x2^4 != 1*t^8");
  AlgebraElement sigma11 = cls(g24, "x1^2") - x2;
  c.expect(power(sigma11, 2) == x2sq, "(x1^2 - x2)^2 != x2^2");
  c.expect(multiply(x2, sigma11) == unit.scaled(sc_t(1, 4)), "x2*(x1^2 - x2) != 1*t^4");
}

void criterion_g24_units(Check& c) {
  RingPtr g24 = catalog::make_g24(CoeffMode::lambda_only);
  units::UnitReport report = units::classify_top_units(g24, 5);
  std::set<std::string> got;
  for (const auto& e : report.classes) got.insert(algebra::render(e));
  const std::set<std::string> expected = {"1", "x2", "x1^2 - x2", "x2^2"};
  c.expect(got == expected, "unit classes differ from {1, x2, x1^2 - x2, x2^2}");
  c.expect(report.completeness == units::Completeness::certified_diophantine,
           "completeness not certified for g24");

  std::vector<units::CandidateForm> forms = units::enumerate_forms(g24);
  c.expect(forms.size() == 4, "expected exactly 4 candidate forms");
  if (forms.size() != 4) return;

  // Residue-0 form times itself: a1 + b x2^2 t^4 paired with c1 + d x2^2 t^4;
  // the coefficient equations force ad + bc = 0 and ac + bd = 1 with the
  // only integral solutions {a,b,c,d} in {(+-1,0,+-1,0), (0,+-1,0,+-1)}
  // (matching signs).
  auto sols00 = units::solve_unit_equations(forms[0], forms[0], 5);
  std::set<std::vector<long>> tuples00;
  for (const auto& s : sols00) {
    std::vector<long> t = s.left;
    t.insert(t.end(), s.right.begin(), s.right.end());
    tuples00.insert(t);
    long a = t[0], b = t[1], cc = t[2], d = t[3];
    c.expect(a * d + b * cc == 0, "(ad + bc) != 0 for a residue-0 pair");
    c.expect(a * cc + b * d == 1, "(ac + bd) != 1 for a residue-0 pair");
  }
  const std::set<std::vector<long>> expect00 = {
      {1, 0, 1, 0}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {0, -1, 0, -1}};
  c.expect(tuples00 == expect00, "residue-0 solution set differs");

  // Residue-2 form times itself: a x1^2 + b x2 paired with c x1^2 + d x2;
  // forces (2ac + bc + ad) = -bd = 1.
  auto sols22 = units::solve_unit_equations(forms[2], forms[2], 5);
  std::set<std::vector<long>> tuples22;
  for (const auto& s : sols22) {
    std::vector<long> t = s.left;
    t.insert(t.end(), s.right.begin(), s.right.end());
    tuples22.insert(t);
    long a = t[0], b = t[1], cc = t[2], d = t[3];
    c.expect(2 * a * cc + b * cc + a * d == 1, "(2ac + bc + ad) != 1 for a residue-2 pair");
    c.expect(-(b * d) == 1, "-bd != 1 for a residue-2 pair");
  }
  const std::set<std::vector<long>> expect22 = {
      {0, 1, 1, -1}, {-1, 1, 0, -1}, {0, -1, -1, 1}, {1, -1, 0, 1}};
  c.expect(tuples22 == expect22, "residue-2 solution set differs");

  // x1-form times x1x2-form: ab = 0 and ab = 1 is impossible.
  auto sols13 = units::solve_unit_equations(forms[1], forms[3], 5);
  c.expect(sols13.empty(), "residue-1 x residue-3 should have no solutions");
}

void criterion_g24_orders(Check& c) {
  RingPtr g24 = catalog::make_g24(CoeffMode::lambda_only);
  auto orders = units::finite_order_verdict(g24, 5, 64);
  c.expect(orders.size() == 4, "expected 4 order reports");
  for (const auto& rep : orders) {
    c.expect(rep.finite, "unit order not found within the cap");
    if (!rep.finite) continue;
    c.expect(4 % *rep.order == 0, "order does not divide 4");
    c.expect(rep.scalar && rep.scalar->is_monomial(),
             "a^k is not a single Novikov monomial multiple of the fundamental class");
    // Minimality.
    for (long d = 1; d < *rep.order; ++d)
      c.expect(!power(rep.subject, d).is_unit_multiple(), "reported order is not minimal");
  }
}

void criterion_product_orders(Check& c) {
  const std::vector<std::pair<int, int>> cases = {{1, 1}, {1, 2}, {2, 2}};
  for (auto [m, n] : cases) {
    std::string id = "prod:cpn:" + std::to_string(m) + ",cpn:" + std::to_string(n);
    RingPtr ring = catalog::make_ring(id);
    long k = static_cast<long>(m + 1) * (n + 1);
    for (const AlgebraElement& u : units::monomial_unit_classes(ring)) {
      algebra::OrderReport rep = algebra::element_order(u, 64);
      c.expect(rep.finite && k % *rep.order == 0,
               "monomial unit order does not divide (m+1)(n+1) in " + id);
    }
  }
}

void criterion_group_units(Check& c) {
  using namespace grouporder;
  // Rank 1: the CP^2 group with weight 1/3; rank 2: the CP^1 x CP^1 group
  // with lexicographic weights.
  GroupPtr rank1 = make_ordered_group({"x"}, {{Rational(1, 3)}});
  GroupPtr rank2 =
      make_ordered_group({"a", "b"}, {{Rational(1, 2), 0}, {0, Rational(1, 2)}});
  for (const auto& [group, expected_count] :
       std::vector<std::pair<GroupPtr, std::size_t>>{{rank1, 18}, {rank2, 162}}) {
    GroupUnitReport report = classify_gr_units(group);
    c.expect(report.all_signed_monomials, "a non-monomial unit was found");
    c.expect(report.units.size() == expected_count,
             "unexpected unit count " + std::to_string(report.units.size()));
    for (const auto& u : report.units) {
      c.expect(u.element.is_signed_monomial(), "unit is not +-(group element)");
      c.expect(gr_multiply(u.element, u.inverse).is_identity(), "unit inverse fails");
    }
  }
}

void criterion_g24_certificate(Check& c) {
  propd::PropertyDReport report = propd::check_property_d(catalog::make_g24(CoeffMode::lambda_only));
  c.expect(report.status == propd::PropertyDStatus::holds_certificate,
           "g24 certificate not produced");
  c.expect(report.complement_basis.size() == 1, "complement should be one-dimensional");
  c.expect(report.pairing_orthogonal, "complement is not pairing-orthogonal");
  bool saw_line = false;
  for (const auto& line : report.evidence) {
    c.expect(!line.feasible, "a feasible pairing line exists");
    if (line.beta_multiple == 1) {
      saw_line = true;
      c.expect(line.required_sum == 14, "required codegree sum at beta = line is not 14");
      c.expect(line.codeg_v == 4, "complement codegree is not 4");
      // The divisor factor would need codegree 10 but the space is 8-dim.
      c.expect(line.required_sum - line.codeg_v == 10, "required divisor codegree is not 10");
      c.expect(line.codeg_d <= 8, "divisor codegree exceeds the dimension");
    }
  }
  c.expect(saw_line, "no beta = line evidence recorded");

  for (const char* id : {"prod:cpn:1,cpn:1", "prod:cpn:1,cpn:2", "prod:cpn:2,cpn:2"}) {
    propd::PropertyDReport rp = propd::check_property_d(catalog::make_ring(id));
    c.expect(rp.status == propd::PropertyDStatus::holds_trivially,
             std::string(id) + " should hold trivially");
  }
}

void criterion_structural(Check& c) {
  std::vector<AlgebraElement> canonical_units;
  for (const std::string& id : structural_ring_ids()) {
    RingPtr ring = catalog::make_ring(id);
    const int n = ring->basis_count();
    // Associativity over every basis triple and the identity law.
    for (int i = 0; i < n; ++i) {
      AlgebraElement bi = AlgebraElement::basis_element(ring, i);
      c.expect(multiply(AlgebraElement::unit(ring), bi) == bi, "identity law fails in " + id);
      for (int j = 0; j < n; ++j) {
        AlgebraElement bj = AlgebraElement::basis_element(ring, j);
        AlgebraElement bij = multiply(bi, bj);
        for (int k = 0; k < n; ++k) {
          AlgebraElement bk = AlgebraElement::basis_element(ring, k);
          c.expect(multiply(bij, bk) == multiply(bi, multiply(bj, bk)),
                   "associativity fails in " + id);
        }
      }
    }
    // Degree additivity, checked over the universal variant where q is
    // explicit.
    RingPtr uni = catalog::make_ring(catalog::CatalogId::parse(id).with_mode(CoeffMode::universal));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (const auto& [k, s] : uni->entry(i, j)) {
          for (const auto& [m, coeff] : s.terms()) {
            c.expect(uni->degree_of(k) == uni->degree_of(i) + uni->degree_of(j) -
                                              2 * uni->complex_dim + 2 * m.q_exp(),
                     "degree additivity fails in " + id);
          }
        }
      }
    }
    for (const AlgebraElement& u : units::classify_top_units(ring, 5).classes)
      canonical_units.push_back(u);
  }

  // Inverse round trips for 100 units: the canonical classes and sign and
  // monomial multiples of them.
  std::vector<AlgebraElement> variants;
  for (const AlgebraElement& u : canonical_units) {
    variants.push_back(u);
    variants.push_back((-u).times_monomial(NovikovMonomial::from_qt(0, 2)));
    variants.push_back(u.times_monomial(NovikovMonomial::from_qt(0, Rational(-5, 2))));
    variants.push_back((-u).times_monomial(NovikovMonomial::from_qt(0, 7)));
  }
  int checked = 0;
  for (const AlgebraElement& u : variants) {
    if (checked >= 100) break;
    AlgebraElement inv = algebra::inverse(u);
    AlgebraElement prod = multiply(u, inv);
    c.expect(prod == AlgebraElement::unit(u.ring()), "a*inverse(a) != 1");
    ++checked;
  }
  c.expect(checked >= 100, "fewer than 100 canonical units were available: " +
                               std::to_string(checked));
}

void criterion_map_coherence(Check& c) {
  // phi multiplicativity on all stored class pairs of every catalog ring.
  for (const std::string& id : structural_ring_ids()) {
    RingPtr ring = catalog::make_ring(catalog::CatalogId::parse(id).with_mode(CoeffMode::enriched));
    const auto& classes = ring->sphere_classes;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        for (int a = -2; a <= 2; ++a) {
          for (int b = -2; b <= 2; ++b) {
            novikov::ClassVector va(classes.size(), 0), vb(classes.size(), 0);
            va[i] = a;
            vb[j] += b;
            NovikovMonomial ma = NovikovMonomial::from_classes(va, classes);
            NovikovMonomial mb = NovikovMonomial::from_classes(vb, classes);
            c.expect(novikov::phi(ma * mb, classes) ==
                         novikov::phi(ma, classes) * novikov::phi(mb, classes),
                     "phi is not multiplicative in " + id);
          }
        }
      }
    }

    // psi o psi_inv = identity on every basis class.
    RingPtr lam = catalog::make_ring(catalog::CatalogId::parse(id).with_mode(CoeffMode::lambda_only));
    RingPtr uni = catalog::make_ring(catalog::CatalogId::parse(id).with_mode(CoeffMode::universal));
    for (int i = 0; i < lam->basis_count(); ++i) {
      AlgebraElement v = AlgebraElement::basis_element(lam, i);
      c.expect(algebra::psi(algebra::psi_inv(v, uni), lam) == v,
               "psi o psi_inv != id in " + id);
    }

    // phi_sigma with section data (0, 0) equals phi termwise.
    for (int i = 0; i < ring->basis_count(); ++i) {
      for (int k = 0; k <= 2; ++k) {
        novikov::ClassVector v(classes.size(), 0);
        if (!v.empty()) v[0] = k;
        AlgebraElement e = AlgebraElement::basis_element(
            ring, i, NovikovScalar::monomial(NovikovMonomial::from_classes(v, classes)));
        AlgebraElement via_sigma = units::phi_sigma(e, units::SectionData{0, Rational(0)}, uni);
        AlgebraElement via_phi = AlgebraElement::zero(uni);
        for (const auto& [bi, s] : e.coords()) via_phi.add_term(bi, novikov::phi(s, classes));
        c.expect(via_sigma == via_phi, "phi_sigma(0,0) differs from phi in " + id);
        c.expect(via_sigma.coords().begin()->first == i,
                 "phi_sigma does not restrict to the identity on homology");
      }
    }
  }

  // Valuation additivity on 1000 random nonzero scalar pairs.
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> qe(-3, 3);
  std::uniform_int_distribution<int> tnum(-6, 6);
  std::uniform_int_distribution<int> tden(1, 3);
  auto random_scalar = [&]() {
    NovikovScalar s;
    for (int i = 0; i < 3; ++i)
      s.insert(NovikovMonomial::from_qt(qe(rng), Rational(tnum(rng), tden(rng))),
               Rational(coeff(rng)));
    return s;
  };
  int pairs = 0;
  while (pairs < 1000) {
    NovikovScalar a = random_scalar();
    NovikovScalar b = random_scalar();
    if (a.is_zero() || b.is_zero()) continue;
    c.expect(novikov::valuation(a * b) == novikov::valuation(a) + novikov::valuation(b),
             "valuation additivity fails");
    ++pairs;
  }
}

void criterion_vanishing_verdicts(Check& c) {
  const std::vector<std::string> ids = {"g24", "prod:cpn:1,cpn:1", "prod:cpn:1,cpn:2",
                                        "prod:cpn:2,cpn:2"};
  for (const std::string& id : ids) {
    RingPtr ring = catalog::make_ring(id);
    std::string reference;
    // The whole bound range for g24, sampled endpoints for the larger
    // product searches.
    std::vector<long> bounds = id == "g24" ? std::vector<long>{2, 3, 4, 5, 6, 7, 8, 9, 10}
                                           : std::vector<long>{2, 5, 10};
    std::vector<long> caps = id == "g24" ? std::vector<long>{8, 16, 32, 64}
                                         : std::vector<long>{8, 64};
    for (long bound : bounds) {
      for (long cap : caps) {
        propd::VanishingVerdict v = propd::vanishing_verdict(ring, bound, cap);
        c.expect(v.status == propd::VanishingStatus::satisfied,
                 id + " verdict not satisfied at bound " + std::to_string(bound));
        std::ostringstream snapshot;
        snapshot << propd::to_string(v.property_d.status);
        for (const auto& rep : v.orders)
          snapshot << "|" << algebra::render(rep.subject) << ":" << (rep.finite ? *rep.order : -1);
        if (reference.empty())
          reference = snapshot.str();
        else
          c.expect(reference == snapshot.str(),
                   id + " verdict unstable across bounds/caps");
      }
    }
  }
}

CriterionResult run_criterion(const std::string& name, double budget,
                              const std::function<void(Check&)>& body) {
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  auto stop = std::chrono::steady_clock::now();
  CriterionResult result;
  result.name = name;
  result.seconds = std::chrono::duration<double>(stop - start).count();
  result.budget_seconds = budget;
  result.detail = check.failures.str();
  if (check.failed > 8)
    result.detail += "(+" + std::to_string(check.failed - 8) + " more failures)";
  result.passed = check.failed == 0 && result.seconds < budget;
  if (check.failed == 0 && result.seconds >= budget)
    result.detail = "exceeded the time budget";
  return result;
}

}  // namespace

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> results;
  results.push_back(run_criterion("g24-identities", 1.0, criterion_g24_identities));
  results.push_back(run_criterion("g24-unit-classification", 60.0, criterion_g24_units));
  results.push_back(run_criterion("g24-orders", 1.0, criterion_g24_orders));
  results.push_back(run_criterion("product-orders", 10.0, criterion_product_orders));
  results.push_back(run_criterion("ordered-group-units", 120.0, criterion_group_units));
  results.push_back(run_criterion("g24-divisor-certificate", 1.0, criterion_g24_certificate));
  results.push_back(run_criterion("structural-suite", 60.0, criterion_structural));
  results.push_back(run_criterion("map-coherence", 10.0, criterion_map_coherence));
  results.push_back(run_criterion("vanishing-verdicts", 120.0, criterion_vanishing_verdicts));
  return results;
}

}  // namespace qhforge::verify
