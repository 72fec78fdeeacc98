#pragma once

#include <string>
#include <vector>

#include "qhforge/algebra.hpp"
#include "qhforge/unit_analysis.hpp"

namespace qhforge::propd {

enum class PropertyDStatus { holds_certificate, holds_trivially, inconclusive };

std::string to_string(PropertyDStatus s);

// One feasibility line of the dimension-formula check: for effective class
// beta = d_mult * line, a divisor-subring codegree and a complement codegree
// can pair nontrivially only if they sum to 2N + 2 c1(beta) - 2.
struct FeasibilityLine {
  int beta_multiple = 0;
  int beta_chern = 0;
  int required_sum = 0; // 2N + 2 c1(beta) - 2
  int codeg_d = 0;
  int codeg_v = 0;
  bool feasible = false;
};

struct PropertyDReport {
  algebra::RingPtr ring;
  std::vector<algebra::AlgebraElement> divisor_basis;    // basis of D, 1 included
  std::vector<algebra::AlgebraElement> complement_basis; // basis of V
  PropertyDStatus status = PropertyDStatus::inconclusive;
  std::vector<FeasibilityLine> evidence; // feasible lines only, plus extremes
  int horizon_chern = 0;                 // enumeration stops at c1(beta) <= horizon
  bool pairing_orthogonal = false;       // <d, v> = 0 for the classical pairing
};

// Linear span of all classical products of degree-(2N-2) basis classes,
// together with the fundamental class. Uses only the q^0 part of the table.
std::vector<algebra::AlgebraElement> divisor_subring(const algebra::RingPtr& ring);

// Deterministic additive complement: in each degree, basis classes outside
// the divisor span, reduced against the divisor subring through the
// intersection pairing where possible.
std::vector<algebra::AlgebraElement> choose_complement(
    const algebra::RingPtr& ring, const std::vector<algebra::AlgebraElement>& divisor_basis);

// Dimension-formula certificate: every pairing of a divisor-subring class
// (other than the fundamental class) with a complement class is infeasible
// for every effective multiple of the line class up to the horizon. The
// criterion is sufficient for vanishing, so failures are inconclusive.
PropertyDReport check_property_d(const algebra::RingPtr& ring);

enum class VanishingStatus { satisfied, not_established };

struct VanishingVerdict {
  algebra::RingPtr ring;
  PropertyDReport property_d;
  std::vector<algebra::OrderReport> orders;
  long coeff_bound = 5;
  long order_cap = 64;
  VanishingStatus status = VanishingStatus::not_established;
  std::string detail;
};

// Conjunction of the two legs: the divisor-pairing certificate and finite
// order of every top-degree integral unit within the bounds. Satisfied
// verdicts mirror the vanishing criteria; failures never claim the
// opposite, only that the criteria were not established.
VanishingVerdict vanishing_verdict(const algebra::RingPtr& ring, long coeff_bound = 5,
                                   long order_cap = 64);

}  // namespace qhforge::propd
