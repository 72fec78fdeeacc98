#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhforge/algebra.hpp"

namespace qhforge::catalog {

// Ring identifier grammar (CLI): `cpn:<n>`, `prod:<id>,<id>[,...]`, `g24`,
// with an optional coefficient-mode suffix `@enriched|@universal|@lambda`.
// The default mode is lambda (q stripped), the convention the concrete
// computations are carried out in; enriched coefficients are opted into
// where the ordered-group structure is needed.
struct CatalogId {
  enum class Kind { cpn, product, g24 };

  Kind kind = Kind::g24;
  int n = 0;                      // cpn only
  std::vector<CatalogId> factors; // product only
  algebra::CoeffMode mode = algebra::CoeffMode::lambda_only;

  static CatalogId parse(std::string_view text);
  std::string base_string() const; // id without the mode suffix
  std::string to_string() const;   // id with the mode suffix

  CatalogId with_mode(algebra::CoeffMode m) const {
    CatalogId copy = *this;
    copy.mode = m;
    for (auto& f : copy.factors) f = f.with_mode(m);
    return copy;
  }
};

algebra::RingPtr make_ring(const CatalogId& id, const Rational& kappa = Rational(1));
algebra::RingPtr make_ring(std::string_view id, const Rational& kappa = Rational(1));

// QH(CP^n): basis 1, x, ..., x^n with deg(x^k) = 2n - 2k and the relation
// x^{n+1} = (quantum monomial of the line class), c1 = n + 1.
algebra::RingPtr make_cpn(int n, algebra::CoeffMode mode, const Rational& kappa = Rational(1));

// Tensor product with the quantum Kunneth rule (a' (x) a'')*(b' (x) b'') =
// (a'*b') (x) (a''*b''); H_2 splits over the factors, whose sphere classes
// are stored side by side.
algebra::RingPtr make_product(std::vector<algebra::RingPtr> factors);

// QH(G(2,4)) from the Siebert-Tian presentation
// x1^3 = 2 x1 x2, x1^2 x2 = x2^2 + t^4; N = 4, minimal Chern number 4.
algebra::RingPtr make_g24(algebra::CoeffMode mode, const Rational& kappa = Rational(1));

}  // namespace qhforge::catalog
