#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qhforge/errors.hpp"
#include "qhforge/rational.hpp"

namespace qhforge::novikov {

// A spherical homology class: its label, Chern number c1(A) and symplectic
// area w(A). For a monotone ring, energy = kappa * chern.
struct SphereClass {
  std::string label;
  int chern = 0;
  Rational energy;
};

// Exponent vector over a ring's stored sphere classes. Kept trimmed of
// trailing zeros so that equal monomials compare equal across rings with
// different class counts.
using ClassVector = std::vector<int>;

// Formal symbol q^a t^b, optionally tagged with the sphere-class exponents it
// was produced from (enriched coefficient mode). Multiplication adds all
// exponents componentwise. deg(q) = 2; t carries no degree.
//
// Quantum corrections are stored with the positive exponents used by the ring
// presentations ("x^{n+1} = t^{n+1}"); rendering can negate them to match the
// e^{-A} |-> q^{-c1(A)} t^{-w(A)} normalization (see render flags).
class NovikovMonomial {
 public:
  NovikovMonomial() = default;

  static NovikovMonomial from_qt(long q, Rational t) {
    NovikovMonomial m;
    m.q_exp_ = q;
    m.t_exp_ = std::move(t);
    return m;
  }

  // Monomial of the correction prod_i e^{-v_i A_i}, displayed with positive
  // exponents: q^{sum v_i c1(A_i)} t^{sum v_i w(A_i)}.
  static NovikovMonomial from_classes(ClassVector v, std::span<const SphereClass> classes);

  long q_exp() const noexcept { return q_exp_; }
  const Rational& t_exp() const noexcept { return t_exp_; }
  const ClassVector& classes() const noexcept { return classes_; }

  bool is_trivial() const noexcept {
    return q_exp_ == 0 && t_exp_ == 0 && classes_.empty();
  }

  bool has_classes() const noexcept { return !classes_.empty(); }

  NovikovMonomial operator*(const NovikovMonomial& other) const;
  NovikovMonomial inverse() const;
  NovikovMonomial pow(long k) const;

  // Keep only (q, t): the image under the enriched -> universal projection of
  // the stored data, exponents unchanged.
  NovikovMonomial without_classes() const { return from_qt(q_exp_, t_exp_); }

  // Keep only t: the psi picture, where q has been stripped.
  NovikovMonomial t_only() const { return from_qt(0, t_exp_); }

  bool operator==(const NovikovMonomial& other) const = default;

  // Total order: t-exponent first so that the maximal key of a scalar's term
  // map realizes the valuation, then q, then classes lexicographically.
  std::strong_ordering operator<=>(const NovikovMonomial& other) const {
    if (auto c = t_exp_.compare(other.t_exp_); c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = q_exp_ <=> other.q_exp_; c != std::strong_ordering::equal) return c;
    return classes_ <=> other.classes_;
  }

 private:
  long q_exp_ = 0;
  Rational t_exp_{0};
  ClassVector classes_;

  void trim() {
    while (!classes_.empty() && classes_.back() == 0) classes_.pop_back();
  }
};

// A finite rational-coefficient sum of Novikov monomials; the coefficient
// object of every ring in the library. Zero-coefficient terms are pruned so
// zero is the empty map and equality is structural.
class NovikovScalar {
 public:
  using TermMap = std::map<NovikovMonomial, Rational>;

  NovikovScalar() = default;
  explicit NovikovScalar(Rational constant) { insert(NovikovMonomial{}, std::move(constant)); }
  NovikovScalar(NovikovMonomial m, Rational coeff) { insert(std::move(m), std::move(coeff)); }

  static NovikovScalar zero() { return NovikovScalar{}; }
  static NovikovScalar one() { return NovikovScalar{Rational(1)}; }
  static NovikovScalar monomial(NovikovMonomial m) { return NovikovScalar{std::move(m), Rational(1)}; }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  // All coefficients in Z (membership in the integral subring).
  bool is_integral() const;

  std::size_t term_count() const noexcept { return terms_.size(); }

  void insert(NovikovMonomial m, Rational coeff);

  NovikovScalar operator+(const NovikovScalar& other) const;
  NovikovScalar operator-(const NovikovScalar& other) const;
  NovikovScalar operator-() const;
  NovikovScalar operator*(const NovikovScalar& other) const;
  NovikovScalar& operator+=(const NovikovScalar& other);

  NovikovScalar scaled(const Rational& c) const;
  NovikovScalar times_monomial(const NovikovMonomial& m) const;

  bool operator==(const NovikovScalar& other) const = default;

  // Largest term in the monomial order (highest t-exponent).
  const std::pair<const NovikovMonomial, Rational>& leading_term() const;

  // Maximal t-exponent over the support. Throws ZeroElement on zero.
  Rational valuation() const;

 private:
  TermMap terms_;
};

inline NovikovScalar scalar_mul(const NovikovScalar& a, const NovikovScalar& b) { return a * b; }

// Exact division in the Laurent ring: returns a/b when the quotient is again
// a finite sum, nullopt otherwise. b must be nonzero.
std::optional<NovikovScalar> divide_exact(const NovikovScalar& a, const NovikovScalar& b);

// phi(e^{-A}) = q^{-c1(A)} t^{-w(A)}, extended multiplicatively over the
// class exponents of the monomial. The result carries no class tags.
NovikovMonomial phi(const NovikovMonomial& enriched, std::span<const SphereClass> classes);
NovikovScalar phi(const NovikovScalar& enriched, std::span<const SphereClass> classes);

Rational valuation(const NovikovScalar& s);

// Rendering. By default exponents print as stored (the presentation
// convention); phi_faithful negates them.
struct RenderOptions {
  bool phi_faithful = false;
};

std::string render(const NovikovMonomial& m, const RenderOptions& opts = {});
std::string render(const NovikovScalar& s, const RenderOptions& opts = {});

}  // namespace qhforge::novikov
