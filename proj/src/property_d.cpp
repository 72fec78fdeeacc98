#include "qhforge/property_d.hpp"

#include <algorithm>
#include <map>

#include "qhforge/detail/linalg.hpp"

namespace qhforge::propd {

using algebra::AlgebraElement;
using algebra::RingPtr;
using detail::RVec;

std::string to_string(PropertyDStatus s) {
  switch (s) {
    case PropertyDStatus::holds_certificate: return "holds-certificate";
    case PropertyDStatus::holds_trivially: return "holds-trivially";
    case PropertyDStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

// Classical (q^0) part of the product of two rational coordinate vectors.
RVec classical_mul(const RingPtr& ring, const RVec& a, const RVec& b) {
  const int n = ring->basis_count();
  RVec out(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[static_cast<std::size_t>(j)] == 0) continue;
      for (const auto& [k, s] : ring->entry(i, j)) {
        for (const auto& [m, c] : s.terms()) {
          if (!m.is_trivial()) continue;
          out[static_cast<std::size_t>(k)] +=
              a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * c;
        }
      }
    }
  }
  return out;
}

AlgebraElement from_vector(const RingPtr& ring, const RVec& v) {
  AlgebraElement e = AlgebraElement::zero(ring);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) e.add_term(static_cast<int>(i), novikov::NovikovScalar(v[i]));
  return e;
}

RVec to_vector(const RingPtr& ring, const AlgebraElement& e) {
  RVec v(static_cast<std::size_t>(ring->basis_count()), Rational(0));
  for (const auto& [i, s] : e.coords()) {
    if (s.term_count() != 1 || !s.terms().begin()->first.is_trivial())
      throw ConstructionError("expected a classical element");
    v[static_cast<std::size_t>(i)] = s.terms().begin()->second;
  }
  return v;
}

int degree_of_vector(const RingPtr& ring, const RVec& v) {
  int deg = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    int d = ring->degree_of(static_cast<int>(i));
    if (deg < 0) deg = d;
    if (d != deg) throw ConstructionError("expected a homogeneous element");
  }
  return deg;
}

// Scale to a primitive integer vector with positive leading entry.
RVec normalize_vector(RVec v) {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  int lead = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (lead < 0) lead = static_cast<int>(i);
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(v[i]));
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(v[i]));
  }
  if (lead < 0) return v;
  Rational scale = Rational(den_lcm, num_gcd);
  if (v[static_cast<std::size_t>(lead)] < 0) scale = -scale;
  for (auto& x : v) x *= scale;
  return v;
}

}  // namespace

std::vector<AlgebraElement> divisor_subring(const RingPtr& ring) {
  const int n = ring->basis_count();
  const int divisor_degree = 2 * ring->complex_dim - 2;

  detail::RowSpan span(static_cast<std::size_t>(n));
  std::vector<RVec> pool;

  auto push = [&](RVec v) {
    if (span.add(v)) pool.push_back(std::move(v));
  };

  RVec unit_vec(static_cast<std::size_t>(n), Rational(0));
  unit_vec[static_cast<std::size_t>(ring->unit_class)] = 1;
  push(unit_vec);

  std::vector<RVec> divisors;
  for (int i = 0; i < n; ++i) {
    if (ring->degree_of(i) != divisor_degree) continue;
    RVec v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    divisors.push_back(v);
    push(std::move(v));
  }

  // Close under classical multiplication by divisors.
  std::size_t next = 0;
  while (next < pool.size()) {
    RVec current = pool[next++];
    for (const RVec& d : divisors) {
      RVec prod = classical_mul(ring, d, current);
      bool nonzero = std::any_of(prod.begin(), prod.end(), [](const Rational& x) { return x != 0; });
      if (nonzero) push(std::move(prod));
    }
  }

  std::vector<AlgebraElement> basis;
  for (const RVec& row : span.rows()) basis.push_back(from_vector(ring, normalize_vector(row)));
  std::sort(basis.begin(), basis.end(), [&](const AlgebraElement& x, const AlgebraElement& y) {
    return x.coords().begin()->first < y.coords().begin()->first;
  });
  return basis;
}

std::vector<AlgebraElement> choose_complement(const RingPtr& ring,
                                              const std::vector<AlgebraElement>& divisor_basis) {
  const int n = ring->basis_count();
  detail::RowSpan dspan(static_cast<std::size_t>(n));
  std::vector<RVec> dvecs;
  for (const auto& e : divisor_basis) {
    RVec v = to_vector(ring, e);
    dvecs.push_back(v);
    dspan.add(std::move(v));
  }

  std::vector<AlgebraElement> complement;
  detail::RowSpan full = dspan; // grows as complement members are chosen
  for (int i = 0; i < n; ++i) {
    RVec v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    if (full.contains(v)) continue;

    const int deg = ring->degree_of(i);
    const int codeg = 2 * ring->complex_dim - deg;
    // Reduce against the divisor subring through the intersection pairing:
    // add a D-member of the same degree so that v pairs to zero with every
    // D-member of complementary degree, when such a correction exists.
    std::vector<RVec> same_degree;
    std::vector<RVec> dual_degree;
    for (const RVec& d : dvecs) {
      int dd = degree_of_vector(ring, d);
      if (dd == deg) same_degree.push_back(d);
      if (dd == codeg) dual_degree.push_back(d);
    }
    auto pair_value = [&](const RVec& x, const RVec& y) {
      Rational out{0};
      for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < y.size(); ++b)
          if (x[a] != 0 && y[b] != 0) out += x[a] * y[b] * ring->pairing[a][b];
      return out;
    };
    if (!same_degree.empty() && !dual_degree.empty()) {
      detail::RMat a(dual_degree.size(), RVec(same_degree.size(), Rational(0)));
      RVec rhs(dual_degree.size(), Rational(0));
      for (std::size_t r = 0; r < dual_degree.size(); ++r) {
        for (std::size_t c = 0; c < same_degree.size(); ++c)
          a[r][c] = pair_value(same_degree[c], dual_degree[r]);
        rhs[r] = -pair_value(v, dual_degree[r]);
      }
      detail::LinearSolution sol = detail::solve_rational(std::move(a), std::move(rhs));
      if (sol.consistent) {
        for (std::size_t c = 0; c < same_degree.size(); ++c)
          for (std::size_t idx = 0; idx < v.size(); ++idx)
            v[idx] += sol.particular[c] * same_degree[c][idx];
      }
    }
    v = normalize_vector(std::move(v));
    full.add(v);
    complement.push_back(from_vector(ring, v));
  }
  return complement;
}

PropertyDReport check_property_d(const RingPtr& ring) {
  PropertyDReport report;
  report.ring = ring;
  report.divisor_basis = divisor_subring(ring);
  report.complement_basis = choose_complement(ring, report.divisor_basis);

  if (static_cast<int>(report.divisor_basis.size() + report.complement_basis.size()) !=
      ring->basis_count())
    throw ConstructionError("divisor subring and complement do not span the even homology");

  if (report.complement_basis.empty()) {
    report.status = PropertyDStatus::holds_trivially;
    report.pairing_orthogonal = true;
    return report;
  }

  // Classical (beta = 0) orthogonality of the chosen complement.
  report.pairing_orthogonal = true;
  for (const auto& d : report.divisor_basis) {
    if (d == AlgebraElement::unit(ring)) continue;
    RVec dv = to_vector(ring, d);
    for (const auto& v : report.complement_basis) {
      RVec vv = to_vector(ring, v);
      Rational pv{0};
      for (std::size_t a = 0; a < dv.size(); ++a)
        for (std::size_t b = 0; b < vv.size(); ++b)
          if (dv[a] != 0 && vv[b] != 0) pv += dv[a] * vv[b] * ring->pairing[a][b];
      if (pv != 0) report.pairing_orthogonal = false;
    }
  }

  const int two_n = 2 * ring->complex_dim;
  const int line_chern = ring->sphere_classes[static_cast<std::size_t>(ring->line_class)].chern;
  report.horizon_chern = 2 * two_n; // beyond this no codegree pair can reach the required sum

  bool any_feasible = false;
  for (int mult = 1; mult * line_chern <= report.horizon_chern; ++mult) {
    const int beta_chern = mult * line_chern;
    const int required = two_n + 2 * beta_chern - 2;
    for (const auto& d : report.divisor_basis) {
      if (d == AlgebraElement::unit(ring)) continue;
      const int codeg_d = two_n - degree_of_vector(ring, to_vector(ring, d));
      for (const auto& v : report.complement_basis) {
        const int codeg_v = two_n - degree_of_vector(ring, to_vector(ring, v));
        FeasibilityLine line;
        line.beta_multiple = mult;
        line.beta_chern = beta_chern;
        line.required_sum = required;
        line.codeg_d = codeg_d;
        line.codeg_v = codeg_v;
        line.feasible = (codeg_d + codeg_v == required);
        if (line.feasible) {
          any_feasible = true;
          report.evidence.push_back(line);
        } else if (mult == 1) {
          // Keep the beta = line lines as the certificate arithmetic.
          report.evidence.push_back(line);
        }
      }
    }
  }
  report.status = any_feasible ? PropertyDStatus::inconclusive : PropertyDStatus::holds_certificate;
  return report;
}

VanishingVerdict vanishing_verdict(const RingPtr& ring, long coeff_bound, long order_cap) {
  VanishingVerdict verdict;
  verdict.ring = ring;
  verdict.coeff_bound = coeff_bound;
  verdict.order_cap = order_cap;
  verdict.property_d = check_property_d(ring);
  verdict.orders = units::finite_order_verdict(ring, coeff_bound, order_cap);

  const bool propd_ok = verdict.property_d.status != PropertyDStatus::inconclusive;
  const bool orders_ok = std::all_of(verdict.orders.begin(), verdict.orders.end(),
                                     [](const algebra::OrderReport& r) { return r.finite; });
  if (propd_ok && orders_ok) {
    verdict.status = VanishingStatus::satisfied;
    verdict.detail = "I = 0 criteria satisfied";
  } else {
    verdict.status = VanishingStatus::not_established;
    verdict.detail = std::string("criteria not established: ") +
                     (propd_ok ? "" : "divisor-pairing certificate inconclusive") +
                     (!propd_ok && !orders_ok ? "; " : "") +
                     (orders_ok ? "" : "some unit order not established within the cap");
  }
  return verdict;
}

}  // namespace qhforge::propd
