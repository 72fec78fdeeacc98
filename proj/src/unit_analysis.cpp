#include "qhforge/unit_analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qhforge/catalog.hpp"
#include "qhforge/detail/linalg.hpp"

namespace qhforge::units {

using algebra::AlgebraElement;
using algebra::CoeffMode;
using algebra::RingPtr;
using novikov::NovikovMonomial;
using novikov::NovikovScalar;

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::certified_diophantine:
      return "complete (integral Diophantine classification)";
    case Completeness::certified_ordered_group:
      return "complete (ordered group ring has only monomial units)";
    case Completeness::within_bound:
      return "complete within the coefficient bound";
  }
  return "?";
}

AlgebraElement CandidateForm::instantiate(const std::vector<long>& coeffs) const {
  if (coeffs.size() != terms.size())
    throw ConstructionError("coefficient count does not match the form");
  AlgebraElement e = AlgebraElement::zero(ring);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (coeffs[j] == 0) continue;
    e.add_term(terms[j].basis, NovikovScalar(terms[j].monomial, Rational(coeffs[j])));
  }
  return e;
}

std::vector<CandidateForm> enumerate_forms(const RingPtr& ring) {
  if (ring->mode == CoeffMode::enriched)
    throw ModeMismatchError("candidate forms are computed over universal or lambda coefficients");
  if (ring->min_chern < 1) throw ConstructionError("ring needs a positive minimal Chern number");
  const int n = ring->basis_count();
  const int mc = ring->min_chern;

  // e_j = N - deg_j / 2 = -c1vert of the section a class rides on; grouped
  // by residue mod the minimal Chern number.
  std::map<int, std::vector<std::pair<int, int>>> groups; // residue -> (e, basis)
  for (int j = 0; j < n; ++j) {
    int e = ring->complex_dim - ring->degree_of(j) / 2;
    if (e < 0 || e > 2 * ring->complex_dim)
      throw ConstructionError("vertical Chern number outside the allowed window");
    groups[((e % mc) + mc) % mc].emplace_back(e, j);
  }

  std::vector<CandidateForm> forms;
  for (auto& [residue, members] : groups) {
    std::sort(members.begin(), members.end());
    const int e_min = members.front().first;
    CandidateForm form;
    form.ring = ring;
    form.label = "form" + std::to_string(forms.size());
    for (const auto& [e, j] : members) {
      Rational t_offset = ring->kappa * Rational(e - e_min);
      long q_exp = ring->mode == CoeffMode::universal ? e : 0;
      form.terms.push_back(FormTerm{j, NovikovMonomial::from_qt(q_exp, t_offset)});
    }
    forms.push_back(std::move(form));
  }
  return forms;
}

std::vector<UnitSolution> solve_unit_equations(const CandidateForm& f, const CandidateForm& g,
                                               long coeff_bound) {
  if (!algebra::same_ring(f.ring, g.ring)) throw RingMismatchError();
  if (coeff_bound < 1) throw ConstructionError("coefficient bound must be at least 1");
  const RingPtr& ring = f.ring;
  const int unit_idx = ring->unit_class;
  const std::size_t p = f.terms.size();
  const std::size_t q = g.terms.size();

  // Pairwise products of the template terms.
  std::vector<std::vector<AlgebraElement>> pair_product(p, std::vector<AlgebraElement>(q));
  for (std::size_t j = 0; j < p; ++j) {
    AlgebraElement fj =
        AlgebraElement::basis_element(ring, f.terms[j].basis, NovikovScalar::monomial(f.terms[j].monomial));
    for (std::size_t k = 0; k < q; ++k) {
      AlgebraElement gk = AlgebraElement::basis_element(
          ring, g.terms[k].basis, NovikovScalar::monomial(g.terms[k].monomial));
      pair_product[j][k] = multiply(fj, gk);
    }
  }

  std::vector<UnitSolution> solutions;
  std::vector<long> left(p, -coeff_bound);

  while (true) {
    bool all_zero = std::all_of(left.begin(), left.end(), [](long v) { return v == 0; });
    if (!all_zero) {
      // F_k = sum_j left_j * pair_product[j][k]; we need
      // sum_k right_k F_k = 1 (x) (monomial m, coefficient +1).
      std::vector<AlgebraElement> fk(q, AlgebraElement::zero(ring));
      for (std::size_t k = 0; k < q; ++k)
        for (std::size_t j = 0; j < p; ++j)
          if (left[j] != 0) fk[k] = fk[k] + pair_product[j][k].scaled(Rational(left[j]));

      // Row space: every (basis, monomial) seen anywhere in the F_k.
      std::map<std::pair<int, NovikovMonomial>, int> row_of;
      std::set<NovikovMonomial> unit_monomials;
      for (const auto& e : fk) {
        for (const auto& [b, s] : e.coords()) {
          for (const auto& [m, c] : s.terms()) {
            row_of.emplace(std::make_pair(b, m), static_cast<int>(row_of.size()));
            if (b == unit_idx) unit_monomials.insert(m);
          }
        }
      }

      for (const NovikovMonomial& lam : unit_monomials) {
        detail::RMat a(row_of.size(), detail::RVec(q, Rational(0)));
        detail::RVec rhs(row_of.size(), Rational(0));
        for (std::size_t k = 0; k < q; ++k)
          for (const auto& [b, s] : fk[k].coords())
            for (const auto& [m, c] : s.terms())
              a[static_cast<std::size_t>(row_of.at({b, m}))][k] = c;
        rhs[static_cast<std::size_t>(row_of.at({unit_idx, lam}))] = 1;

        detail::LinearSolution sol = detail::solve_rational(a, rhs);
        if (!sol.consistent) continue;
        const std::size_t nu = sol.free_columns.size();
        double space = 1;
        for (std::size_t i = 0; i < nu; ++i) space *= static_cast<double>(2 * coeff_bound + 1);
        if (space > 1e7)
          throw ConstructionError("unit-equation search space too large at this bound");

        std::vector<long> free_vals(nu, -coeff_bound);
        while (true) {
          detail::RVec right = sol.particular;
          for (std::size_t i = 0; i < nu; ++i)
            for (std::size_t k = 0; k < q; ++k)
              right[k] += Rational(free_vals[i]) * sol.nullspace[i][k];
          bool ok = true;
          std::vector<long> right_int(q, 0);
          for (std::size_t k = 0; k < q && ok; ++k) {
            if (!is_integer(right[k])) {
              ok = false;
              break;
            }
            Integer v = to_integer(right[k]);
            if (v > coeff_bound || v < -coeff_bound) {
              ok = false;
              break;
            }
            right_int[k] = static_cast<long>(v);
          }
          if (ok) {
            AlgebraElement check = multiply(f.instantiate(left), g.instantiate(right_int));
            AlgebraElement expect =
                AlgebraElement::unit(ring).times_monomial(lam);
            if (check == expect)
              solutions.push_back(UnitSolution{left, right_int, lam});
          }
          if (nu == 0) break;
          std::size_t i = nu;
          bool done = false;
          while (i > 0) {
            --i;
            if (++free_vals[i] <= coeff_bound) break;
            free_vals[i] = -coeff_bound;
            if (i == 0) done = true;
          }
          if (done) break;
        }
      }
    }

    std::size_t j = p;
    bool done = false;
    while (j > 0) {
      --j;
      if (++left[j] <= coeff_bound) break;
      left[j] = -coeff_bound;
      if (j == 0) done = true;
    }
    if (done || p == 0) break;
  }

  std::sort(solutions.begin(), solutions.end(), [](const UnitSolution& x, const UnitSolution& y) {
    if (x.left != y.left) return x.left < y.left;
    return x.right < y.right;
  });
  return solutions;
}

namespace {

RingPtr lambda_variant(const RingPtr& ring) {
  if (ring->mode != CoeffMode::enriched) return ring;
  if (ring->id.empty())
    throw ModeMismatchError("cannot rebuild a custom enriched ring over lambda coefficients");
  return catalog::make_ring(catalog::CatalogId::parse(ring->id).with_mode(CoeffMode::lambda_only),
                            ring->kappa);
}

}  // namespace

std::vector<AlgebraElement> monomial_unit_classes(const RingPtr& ring) {
  if (!ring->is_product_of_projective_spaces())
    throw NotAProductOfProjectiveSpacesError(
        "monomial unit classes come from the ordered-group embedding");
  RingPtr enriched = catalog::make_ring(
      catalog::CatalogId::parse(ring->id).with_mode(CoeffMode::enriched), ring->kappa);
  grouporder::QenrEmbedding embedding = grouporder::embed_product_qenr(enriched);

  std::vector<AlgebraElement> classes;
  for (int b = 0; b < enriched->basis_count(); ++b) {
    AlgebraElement rep = AlgebraElement::basis_element(enriched, b);
    grouporder::QenrEmbedding::SignedElem img = embedding.to_group(rep);
    grouporder::QenrEmbedding::SignedElem inv_img{img.sign, img.elem};
    for (auto& coord : inv_img.elem) coord = -coord;
    AlgebraElement inv = embedding.from_group(inv_img);
    AlgebraElement prod = multiply(rep, inv);
    if (!prod.is_unit_multiple())
      throw ConstructionError("embedding inverse failed to invert a monomial class");
    // Hand back the class over the caller's ring, canonicalized.
    classes.push_back(
        algebra::canonical_scale(AlgebraElement::basis_element(ring, b)));
  }
  return classes;
}

UnitReport classify_top_units(const RingPtr& input_ring, long coeff_bound) {
  RingPtr ring = lambda_variant(input_ring);
  std::vector<CandidateForm> forms = enumerate_forms(ring);

  std::map<std::string, AlgebraElement> found;
  for (const CandidateForm& f : forms) {
    for (const CandidateForm& g : forms) {
      for (const UnitSolution& sol : solve_unit_equations(f, g, coeff_bound)) {
        AlgebraElement inst = f.instantiate(sol.left);
        if (inst.is_zero()) continue;
        AlgebraElement canon = algebra::canonical_scale(inst);
        found.emplace(algebra::render(canon), canon);
      }
    }
  }

  UnitReport report;
  report.ring = ring;
  report.coeff_bound = coeff_bound;
  for (auto& [key, e] : found) {
    if (!algebra::is_unit(e).unit)
      throw ConstructionError("classified unit failed the invertibility re-check");
    report.classes.push_back(e);
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const AlgebraElement& x, const AlgebraElement& y) {
              int bx = x.coords().begin()->first;
              int by = y.coords().begin()->first;
              if (bx != by) return bx < by;
              return algebra::render(x) < algebra::render(y);
            });

  if (!ring->id.empty() && ring->id == "g24") {
    report.completeness = Completeness::certified_diophantine;
  } else if (ring->is_product_of_projective_spaces()) {
    report.completeness = Completeness::certified_ordered_group;
    // The Diophantine search must agree with the ordered-group route.
    std::vector<AlgebraElement> expected = monomial_unit_classes(ring);
    std::set<std::string> lhs, rhs;
    for (const auto& e : report.classes) lhs.insert(algebra::render(e));
    for (const auto& e : expected) rhs.insert(algebra::render(e));
    if (lhs != rhs)
      throw ConstructionError("form search and group embedding disagree on the unit classes");
  } else {
    report.completeness = Completeness::within_bound;
  }
  return report;
}

std::vector<algebra::OrderReport> finite_order_verdict(const RingPtr& input_ring, long coeff_bound,
                                                       long cap) {
  UnitReport units = classify_top_units(input_ring, coeff_bound);
  long product_order = 1;
  for (int d : units.ring->projective_dims) product_order *= d + 1;

  std::vector<algebra::OrderReport> reports;
  for (const AlgebraElement& u : units.classes) {
    algebra::OrderReport rep = algebra::element_order(u, cap);
    if (units.ring->is_product_of_projective_spaces()) {
      if (!rep.finite || product_order % *rep.order != 0)
        throw ConstructionError("monomial unit order does not divide the factor period");
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

AlgebraElement phi_sigma(const AlgebraElement& enriched, const SectionData& s,
                         RingPtr universal_target) {
  const RingPtr& src = enriched.ring();
  if (src->mode != CoeffMode::enriched)
    throw ModeMismatchError("phi_sigma expects an enriched-mode element");
  if (universal_target->mode != CoeffMode::universal)
    throw ModeMismatchError("phi_sigma target must be the universal ring");
  AlgebraElement out = AlgebraElement::zero(universal_target);
  for (const auto& [i, c] : enriched.coords()) {
    NovikovScalar mapped;
    for (const auto& [m, coeff] : c.terms()) {
      NovikovMonomial faithful = novikov::phi(m, src->sphere_classes);
      mapped.insert(NovikovMonomial::from_qt(faithful.q_exp() - s.c1_vert,
                                             faithful.t_exp() - s.coupling),
                    coeff);
    }
    out.add_term(i, mapped);
  }
  return out;
}

Rational action_maslov_from_section(const SectionData& s, const Rational& kappa) {
  return s.coupling - kappa * Rational(s.c1_vert);
}

}  // namespace qhforge::units
