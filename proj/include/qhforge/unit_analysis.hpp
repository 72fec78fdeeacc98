#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhforge/algebra.hpp"
#include "qhforge/group_order.hpp"

namespace qhforge::units {

// One term of a candidate template: an integer unknown times a basis class
// times a fixed Novikov monomial.
struct FormTerm {
  int basis = 0;
  novikov::NovikovMonomial monomial;
};

// A degree-2N integral candidate shape. Terms are grouped so that all of
// them arise from sections whose vertical Chern numbers agree modulo the
// minimal Chern number; the t-offsets record the energy gaps between those
// sections (the overall t^epsilon is suppressed).
struct CandidateForm {
  algebra::RingPtr ring;
  std::string label;
  std::vector<FormTerm> terms;

  algebra::AlgebraElement instantiate(const std::vector<long>& coeffs) const;
};

// All candidate templates for the ring, one per residue of the vertical
// Chern number mod the minimal Chern number. Every section in range
// 0 >= c1vert >= -2N; the pure-fundamental-class form is always present.
std::vector<CandidateForm> enumerate_forms(const algebra::RingPtr& ring);

struct UnitSolution {
  std::vector<long> left;
  std::vector<long> right;
  novikov::NovikovMonomial lambda; // f * g = 1 (x) lambda, coefficient +1
};

// All integer assignments with |unknown| <= coeff_bound making
// f * g = 1 (x) (single Novikov monomial with coefficient +1), by exact
// arithmetic: the left unknowns are enumerated and the right ones solved
// by rational linear algebra, so no assignment is missed.
std::vector<UnitSolution> solve_unit_equations(const CandidateForm& f, const CandidateForm& g,
                                               long coeff_bound);

enum class Completeness {
  certified_diophantine,   // G(2,4): integral solutions are fully classified
  certified_ordered_group, // products of projective spaces: +-monomials only
  within_bound,            // complete only within the coefficient bound
};

std::string to_string(Completeness c);

struct UnitReport {
  algebra::RingPtr ring;
  long coeff_bound = 5;
  std::vector<algebra::AlgebraElement> classes; // canonical, deduplicated
  Completeness completeness = Completeness::within_bound;
};

// Classifies the degree-2N integral units with inverses of the same shape,
// up to sign and Novikov monomial: every form pair is solved within the
// bound, instances are canonicalized, deduplicated and re-verified by
// is_unit. For products of projective spaces the result is cross-checked
// against the ordered-group embedding, which also certifies completeness.
UnitReport classify_top_units(const algebra::RingPtr& ring, long coeff_bound = 5);

// Order report per unit class; for products of projective spaces the order
// must divide the product of the (n_i + 1).
std::vector<algebra::OrderReport> finite_order_verdict(const algebra::RingPtr& ring,
                                                       long coeff_bound = 5, long cap = 64);

// Vertical Chern number and coupling-class value of a section class.
struct SectionData {
  int c1_vert = 0;
  Rational coupling;
};

// Phi_sigma: sends xi (x) e^{-A} to xi (x) q^{-(c1vert + c1(A))}
// t^{-(coupling + w(A))}; restricts to the identity on homology and equals
// phi termwise when the section data is (0, 0). Input must be enriched; the
// target ring is the universal variant.
algebra::AlgebraElement phi_sigma(const algebra::AlgebraElement& enriched, const SectionData& s,
                                  algebra::RingPtr universal_target);

// coupling - kappa * c1vert: the section's contribution to the
// action-Maslov value.
Rational action_maslov_from_section(const SectionData& s, const Rational& kappa);

// Monomial unit classes of a product of projective spaces read off from its
// ordered-group embedding: one canonical representative per basis class.
std::vector<algebra::AlgebraElement> monomial_unit_classes(const algebra::RingPtr& ring);

}  // namespace qhforge::units
