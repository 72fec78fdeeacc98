#include "qhforge/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "qhforge/detail/linalg.hpp"

namespace qhforge::algebra {

using novikov::NovikovMonomial;
using novikov::NovikovScalar;

std::string to_string(CoeffMode mode) {
  switch (mode) {
    case CoeffMode::enriched: return "enriched";
    case CoeffMode::universal: return "universal";
    case CoeffMode::lambda_only: return "lambda";
  }
  return "?";
}

int RingDescriptor::basis_index(std::string_view label) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].label == label) return static_cast<int>(i);
  return -1;
}

int RingDescriptor::generator_index(std::string_view gen_name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == gen_name) return static_cast<int>(i);
  return -1;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return !a->id.empty() && a->id == b->id && a->mode == b->mode;
}

AlgebraElement AlgebraElement::zero(RingPtr ring) { return AlgebraElement(std::move(ring)); }

AlgebraElement AlgebraElement::unit(RingPtr ring) {
  int idx = ring->unit_class;
  return basis_element(std::move(ring), idx);
}

AlgebraElement AlgebraElement::basis_element(RingPtr ring, int index, NovikovScalar coeff) {
  AlgebraElement e(std::move(ring));
  if (index < 0 || index >= e.ring_->basis_count())
    throw ConstructionError("basis index out of range");
  if (!coeff.is_zero()) e.coords_.emplace(index, std::move(coeff));
  return e;
}

bool AlgebraElement::is_unit_multiple() const {
  return coords_.size() == 1 && coords_.begin()->first == ring_->unit_class;
}

bool AlgebraElement::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const auto& c) { return c.second.is_integral(); });
}

const NovikovScalar& AlgebraElement::coord(int basis_idx) const {
  static const NovikovScalar kZero;
  auto it = coords_.find(basis_idx);
  return it == coords_.end() ? kZero : it->second;
}

void AlgebraElement::add_term(int basis_idx, const NovikovScalar& coeff) {
  if (coeff.is_zero()) return;
  auto it = coords_.find(basis_idx);
  if (it == coords_.end()) {
    coords_.emplace(basis_idx, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatchError();
  AlgebraElement out = *this;
  for (const auto& [i, c] : other.coords_) out.add_term(i, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& other) const {
  return *this + (-other);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(ring_);
  for (const auto& [i, c] : coords_) out.coords_.emplace(i, -c);
  return out;
}

AlgebraElement AlgebraElement::scaled(const NovikovScalar& c) const {
  AlgebraElement out(ring_);
  for (const auto& [i, coeff] : coords_) {
    NovikovScalar s = coeff * c;
    if (!s.is_zero()) out.coords_.emplace(i, std::move(s));
  }
  return out;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
  AlgebraElement out(ring_);
  if (c == 0) return out;
  for (const auto& [i, coeff] : coords_) out.coords_.emplace(i, coeff.scaled(c));
  return out;
}

AlgebraElement AlgebraElement::times_monomial(const NovikovMonomial& m) const {
  AlgebraElement out(ring_);
  for (const auto& [i, coeff] : coords_) out.coords_.emplace(i, coeff.times_monomial(m));
  return out;
}

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  return same_ring(ring_, other.ring_) && coords_ == other.coords_;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatchError();
  AlgebraElement out = AlgebraElement::zero(a.ring());
  const RingDescriptor& ring = *a.ring();
  for (const auto& [i, ci] : a.coords()) {
    for (const auto& [j, cj] : b.coords()) {
      NovikovScalar w = ci * cj;
      for (const auto& [k, s] : ring.entry(i, j)) out.add_term(k, s * w);
    }
  }
  return out;
}

AlgebraElement power(const AlgebraElement& a, long k) {
  if (k < 0) throw ConstructionError("power expects a nonnegative exponent");
  AlgebraElement acc = AlgebraElement::unit(a.ring());
  AlgebraElement base = a;
  long e = k;
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return acc;
}

Rational valuation(const AlgebraElement& x) {
  if (x.is_zero()) throw ZeroElementError("valuation of the zero element");
  bool first = true;
  Rational best{0};
  for (const auto& [i, c] : x.coords()) {
    Rational v = c.valuation();
    if (first || v > best) {
      best = v;
      first = false;
    }
  }
  return best;
}

namespace {

// Multiplication-by-a matrix: column j holds the coordinates of a * xi_j.
std::vector<std::vector<NovikovScalar>> mult_matrix(const AlgebraElement& a) {
  const int n = a.ring()->basis_count();
  std::vector<std::vector<NovikovScalar>> m(static_cast<std::size_t>(n),
                                            std::vector<NovikovScalar>(static_cast<std::size_t>(n)));
  for (int j = 0; j < n; ++j) {
    AlgebraElement col = multiply(a, AlgebraElement::basis_element(a.ring(), j));
    for (const auto& [i, c] : col.coords()) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
  }
  return m;
}

// Exact determinant by column-expansion over row subsets; entries live in an
// integral domain so no division is needed.
NovikovScalar det_subset_dp(const std::vector<std::vector<NovikovScalar>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return NovikovScalar::one();
  std::vector<NovikovScalar> dp(std::size_t{1} << n);
  dp[0] = NovikovScalar::one();
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    const int col = __builtin_popcountll(mask) - 1;
    // Laplace expansion along the last column of the rows-in-mask submatrix.
    NovikovScalar acc;
    int parity = 0;
    for (std::size_t row = 0; row < n; ++row) {
      if (!(mask >> row & 1)) continue;
      const NovikovScalar& entry = m[row][static_cast<std::size_t>(col)];
      if (!entry.is_zero() && !dp[mask ^ (std::size_t{1} << row)].is_zero()) {
        NovikovScalar term = entry * dp[mask ^ (std::size_t{1} << row)];
        acc += ((parity + col) % 2 == 0) ? term : -term;
      }
      ++parity;
    }
    dp[mask] = std::move(acc);
  }
  return dp.back();
}

std::vector<std::vector<NovikovScalar>> submatrix(const std::vector<std::vector<NovikovScalar>>& m,
                                                  const std::vector<int>& rows,
                                                  const std::vector<int>& cols) {
  std::vector<std::vector<NovikovScalar>> out(rows.size(), std::vector<NovikovScalar>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out[i][j] = m[static_cast<std::size_t>(rows[i])][static_cast<std::size_t>(cols[j])];
  return out;
}

struct Elimination {
  int rank = 0;
  std::vector<int> pivot_cols;
  std::vector<int> pivot_rows;  // original row indices
  int first_free_col = -1;
};

// Division-free column elimination, used only for the pivot structure.
Elimination eliminate(std::vector<std::vector<NovikovScalar>> m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  Elimination res;
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i) {
      if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) {
      if (res.first_free_col < 0) res.first_free_col = col;
      continue;
    }
    std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(row)]);
    std::swap(perm[static_cast<std::size_t>(sel)], perm[static_cast<std::size_t>(row)]);
    const std::vector<NovikovScalar>& prow = m[static_cast<std::size_t>(row)];
    const NovikovScalar piv = prow[static_cast<std::size_t>(col)];
    for (int i = row + 1; i < n; ++i) {
      NovikovScalar f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      // Cross-multiplied update keeps entries in the polynomial ring.
      for (int j = col; j < n; ++j) {
        std::size_t jj = static_cast<std::size_t>(j);
        m[static_cast<std::size_t>(i)][jj] =
            m[static_cast<std::size_t>(i)][jj] * piv - prow[jj] * f;
      }
    }
    res.pivot_cols.push_back(col);
    res.pivot_rows.push_back(perm[static_cast<std::size_t>(row)]);
    ++row;
  }
  res.rank = row;
  return res;
}

}  // namespace

UnitCheck is_unit(const AlgebraElement& a) {
  if (a.is_zero()) throw ZeroElementError("unit test on the zero element");
  auto m = mult_matrix(a);
  Elimination elim = eliminate(m);
  const int n = a.ring()->basis_count();
  if (elim.rank == n) return UnitCheck{true, std::nullopt};

  // Build a kernel vector from maximal minors over the pivot rows and the
  // first free column: w_{s_k} = (-1)^k det(M[R, S \ {s_k}]).
  std::vector<int> s_cols = elim.pivot_cols;
  s_cols.push_back(elim.first_free_col);
  std::sort(s_cols.begin(), s_cols.end());
  std::vector<int> rows = elim.pivot_rows;
  std::sort(rows.begin(), rows.end());

  AlgebraElement witness = AlgebraElement::zero(a.ring());
  for (std::size_t k = 0; k < s_cols.size(); ++k) {
    std::vector<int> cols;
    for (std::size_t j = 0; j < s_cols.size(); ++j)
      if (j != k) cols.push_back(s_cols[j]);
    NovikovScalar d = det_subset_dp(submatrix(m, rows, cols));
    if (k % 2 == 1) d = -d;
    witness.add_term(s_cols[k], d);
  }
  witness = canonical_scale(witness);
  if (witness.is_zero() || !multiply(a, witness).is_zero())
    throw ConstructionError("kernel witness verification failed");
  return UnitCheck{false, witness};
}

AlgebraElement inverse(const AlgebraElement& a) {
  UnitCheck check = is_unit(a);
  if (!check.unit)
    throw NotAUnitError("element is not a unit; see witness", *check.witness);
  auto m = mult_matrix(a);
  const int n = a.ring()->basis_count();
  NovikovScalar det = det_subset_dp(m);
  AlgebraElement out = AlgebraElement::zero(a.ring());
  const int unit_idx = a.ring()->unit_class;
  for (int j = 0; j < n; ++j) {
    // Cramer: replace column j by the unit coordinate vector.
    auto mj = m;
    for (int i = 0; i < n; ++i)
      mj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (i == unit_idx) ? NovikovScalar::one() : NovikovScalar::zero();
    NovikovScalar num = det_subset_dp(mj);
    if (num.is_zero()) continue;
    auto q = novikov::divide_exact(num, det);
    if (!q)
      throw InexactInverseError(
          "the inverse exists over the Novikov field but is not a finite sum");
    out.add_term(j, *q);
  }
  AlgebraElement product = multiply(a, out);
  if (!product.is_unit_multiple() || !product.coord(a.ring()->unit_class).is_one())
    throw ConstructionError("inverse verification failed");
  return out;
}

OrderReport element_order(const AlgebraElement& a, long cap) {
  UnitCheck check = is_unit(a);
  if (!check.unit)
    throw NotAUnitError("order is defined for units only; see witness", *check.witness);
  OrderReport report;
  report.subject = a;
  report.search_cap = cap;
  AlgebraElement p = a;
  for (long k = 1; k <= cap; ++k) {
    if (p.is_unit_multiple()) {
      report.finite = true;
      report.order = k;
      report.scalar = p.coord(a.ring()->unit_class);
      return report;
    }
    if (k < cap) p = multiply(p, a);
  }
  report.finite = false;
  return report;
}

AlgebraElement psi(const AlgebraElement& x, RingPtr lambda_target) {
  const RingDescriptor& src = *x.ring();
  if (src.mode != CoeffMode::universal)
    throw ModeMismatchError("psi expects an element over the universal ring");
  if (lambda_target->mode != CoeffMode::lambda_only)
    throw ModeMismatchError("psi target must be the lambda-mode ring");
  const int two_n = 2 * src.complex_dim;
  AlgebraElement out = AlgebraElement::zero(lambda_target);
  for (const auto& [i, c] : x.coords()) {
    const int deg = src.degree_of(i);
    NovikovScalar mapped;
    for (const auto& [m, coeff] : c.terms()) {
      if (deg + 2 * m.q_exp() != two_n)
        throw NotHomogeneousError("term of degree " + std::to_string(deg + 2 * m.q_exp()) +
                                  " in a degree-" + std::to_string(two_n) + " map");
      mapped.insert(m.t_only(), coeff);
    }
    out.add_term(i, mapped);
  }
  return out;
}

AlgebraElement psi_inv(const AlgebraElement& x, RingPtr universal_target) {
  const RingDescriptor& src = *x.ring();
  if (src.mode != CoeffMode::lambda_only)
    throw ModeMismatchError("psi_inv expects an element over the lambda-mode ring");
  if (universal_target->mode != CoeffMode::universal)
    throw ModeMismatchError("psi_inv target must be the universal ring");
  AlgebraElement out = AlgebraElement::zero(universal_target);
  for (const auto& [i, c] : x.coords()) {
    const long shift = src.complex_dim - src.degree_of(i) / 2;
    NovikovScalar mapped;
    for (const auto& [m, coeff] : c.terms())
      mapped.insert(NovikovMonomial::from_qt(m.q_exp() + shift, m.t_exp()), coeff);
    out.add_term(i, mapped);
  }
  return out;
}

AlgebraElement intersection_dual(RingPtr ring, int basis_idx) {
  const int n = ring->basis_count();
  detail::RMat a(static_cast<std::size_t>(n), detail::RVec(static_cast<std::size_t>(n), Rational(0)));
  detail::RVec b(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ring->pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(i)] = (i == basis_idx) ? 1 : 0;
  }
  detail::LinearSolution sol = detail::solve_rational(std::move(a), std::move(b));
  if (!sol.consistent || !sol.free_columns.empty())
    throw DegeneratePairingError("intersection pairing is degenerate");
  AlgebraElement out = AlgebraElement::zero(ring);
  for (int j = 0; j < n; ++j) {
    const Rational& c = sol.particular[static_cast<std::size_t>(j)];
    if (c != 0) out.add_term(j, NovikovScalar(c));
  }
  return out;
}

AlgebraElement canonical_scale(const AlgebraElement& x) {
  if (x.is_zero()) return x;
  // Lowest-degree nonzero coordinate (basis order is ascending degree).
  const auto& [idx, scalar] = *x.coords().begin();
  const auto& lead = scalar.leading_term();
  NovikovScalar divisor = NovikovScalar::monomial(lead.first.inverse());
  if (lead.second < 0) divisor = -divisor;
  return x.scaled(divisor);
}

std::string render(const AlgebraElement& x, const novikov::RenderOptions& opts) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, scalar] : x.coords()) {
    const std::string& label = x.ring()->basis[static_cast<std::size_t>(i)].label;
    for (const auto& [m, c] : scalar.terms()) {
      Rational coeff = c;
      if (first) {
        if (coeff < 0) {
          os << '-';
          coeff = -coeff;
        }
      } else {
        os << (coeff < 0 ? " - " : " + ");
        if (coeff < 0) coeff = -coeff;
      }
      if (coeff != 1) os << qhforge::to_string(coeff) << '*';
      os << label;
      std::string mono = novikov::render(m, opts);
      if (mono != "1") os << '*' << mono;
      first = false;
    }
  }
  return os.str();
}

}  // namespace qhforge::algebra
