#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhforge/novikov.hpp"

namespace qhforge::algebra {

enum class CoeffMode { enriched, universal, lambda_only };

std::string to_string(CoeffMode mode);

struct Generator {
  std::string name;
  int degree = 0;       // homology degree of the dual class
  int basis_index = -1; // every generator of a catalog ring is a basis class
};

struct BasisClass {
  std::string label;
  int degree = 0;             // homology degree
  std::vector<int> exponents; // word in the ring's generators
};

// A finitely presented graded algebra realized by a complete multiplication
// table over Novikov scalars. Descriptors are immutable after construction
// and shared by pointer; all operations on elements are pure.
struct RingDescriptor {
  std::string id;   // canonical catalog id ("g24@lambda"), empty for custom rings
  std::string name; // display name
  int complex_dim = 0; // N; real dimension of the manifold is 2N
  CoeffMode mode = CoeffMode::lambda_only;
  Rational kappa{1};
  int min_chern = 0;

  std::vector<Generator> generators;
  std::vector<BasisClass> basis; // ascending homology degree, then input order
  std::vector<novikov::SphereClass> sphere_classes;
  int line_class = 0;  // index into sphere_classes
  int unit_class = -1; // basis index of the fundamental class
  std::vector<std::string> relations; // display strings

  // Structure constants: entry(i,j) lists (basis index, scalar) pairs sorted
  // by basis index. Symmetric in (i,j): all classes in scope have even degree.
  using Entry = std::vector<std::pair<int, novikov::NovikovScalar>>;
  std::vector<Entry> table;

  // Intersection numbers on complementary-degree basis pairs.
  std::vector<std::vector<Rational>> pairing;

  // Product-ring metadata (empty for non-products).
  std::vector<std::shared_ptr<const RingDescriptor>> factors;
  std::vector<int> factor_offsets; // sphere-class offset of each factor

  // If the ring is CP^n or a finite product of CP^{n_i}: the list of n_i.
  std::vector<int> projective_dims;

  int basis_count() const { return static_cast<int>(basis.size()); }
  const Entry& entry(int i, int j) const { return table[static_cast<std::size_t>(i) * basis.size() + j]; }
  int basis_index(std::string_view label) const;
  int generator_index(std::string_view gen_name) const;
  int degree_of(int basis_idx) const { return basis[basis_idx].degree; }
  bool is_product_of_projective_spaces() const { return !projective_dims.empty(); }
};

using RingPtr = std::shared_ptr<const RingDescriptor>;

bool same_ring(const RingPtr& a, const RingPtr& b);

// A Novikov-scalar-weighted combination of basis classes of one ring; the
// value type of every ring computation. Coordinates with zero scalar are
// never stored, so equality is exact structural equality.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero(RingPtr ring);
  static AlgebraElement unit(RingPtr ring);
  static AlgebraElement basis_element(RingPtr ring, int index,
                                      novikov::NovikovScalar coeff = novikov::NovikovScalar::one());

  const RingPtr& ring() const noexcept { return ring_; }
  const std::map<int, novikov::NovikovScalar>& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept { return coords_.empty(); }
  // Single coordinate on the fundamental class.
  bool is_unit_multiple() const;
  // All coefficients in Z (membership in Q(X) / Q_enr(X)).
  bool is_integral() const;

  const novikov::NovikovScalar& coord(int basis_idx) const;

  void add_term(int basis_idx, const novikov::NovikovScalar& coeff);

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator-() const;
  AlgebraElement scaled(const novikov::NovikovScalar& c) const;
  AlgebraElement scaled(const Rational& c) const;
  AlgebraElement times_monomial(const novikov::NovikovMonomial& m) const;

  bool operator==(const AlgebraElement& other) const;

 private:
  RingPtr ring_;
  std::map<int, novikov::NovikovScalar> coords_;

  explicit AlgebraElement(RingPtr ring) : ring_(std::move(ring)) {}
};

// Quantum product: bilinear extension of the structure-constant table.
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// power(a, 0) = 1; square-and-multiply otherwise.
AlgebraElement power(const AlgebraElement& a, long k);

// Maximal t-exponent over all nonzero terms. Throws ZeroElement on zero.
Rational valuation(const AlgebraElement& x);

struct UnitCheck {
  bool unit = false;
  // For non-units: a nonzero w with a*w = 0, verified before returning.
  std::optional<AlgebraElement> witness;
};

// True iff the multiplication-by-a matrix is invertible over the scalar
// field. Throws ZeroElement on zero input.
UnitCheck is_unit(const AlgebraElement& a);

struct NotAUnitError : Error {
  NotAUnitError(std::string message, AlgebraElement witness_elem)
      : Error("NotAUnit", message), witness(std::move(witness_elem)) {}
  AlgebraElement witness;
};

// Exact inverse: a * inverse(a) = 1. Throws NotAUnit (with kernel witness)
// for non-units and InexactInverse when the inverse exists only as an
// infinite series.
AlgebraElement inverse(const AlgebraElement& a);

struct OrderReport {
  AlgebraElement subject;
  bool finite = false;
  std::optional<long> order;                    // minimal k with a^k = 1 (x) lambda
  std::optional<novikov::NovikovScalar> scalar; // the lambda
  long search_cap = 64;
};

// Minimal k <= cap with a^k proportional to the fundamental class. finite =
// false at the cap is inconclusive, not a proof of infinite order.
OrderReport element_order(const AlgebraElement& a, long cap = 64);

// psi: identifies the degree-2N part over the universal ring with the full
// even ring over Lambda by stripping q. Requires every term homogeneous of
// total degree 2N; target must be the lambda-mode variant of the same ring.
AlgebraElement psi(const AlgebraElement& x, RingPtr lambda_target);

// psi_inv(a) = a q^{N - deg(a)/2}; target must be the universal-mode variant.
AlgebraElement psi_inv(const AlgebraElement& x, RingPtr universal_target);

// Dual basis combination: the unique xi* with <xi_i, xi*> = delta.
AlgebraElement intersection_dual(RingPtr ring, int basis_idx);

// Scale by a sign and a Novikov monomial so the lowest-degree nonzero
// coordinate has positive leading coefficient and trivial leading monomial.
// Deduplication of units "up to sign and Novikov monomial" compares these.
AlgebraElement canonical_scale(const AlgebraElement& x);

// Display form. Terms are ordered by descending homology degree; exponents
// render per the options (see novikov::RenderOptions).
std::string render(const AlgebraElement& x, const novikov::RenderOptions& opts = {});

}  // namespace qhforge::algebra
