#include "qhforge/novikov.hpp"

#include <algorithm>
#include <sstream>

namespace qhforge::novikov {

NovikovMonomial NovikovMonomial::from_classes(ClassVector v, std::span<const SphereClass> classes) {
  NovikovMonomial m;
  m.classes_ = std::move(v);
  m.trim();
  if (m.classes_.size() > classes.size())
    throw ConstructionError("class exponent vector longer than the ring's sphere-class list");
  long q = 0;
  Rational t{0};
  for (std::size_t i = 0; i < m.classes_.size(); ++i) {
    q += static_cast<long>(m.classes_[i]) * classes[i].chern;
    t += Rational(m.classes_[i]) * classes[i].energy;
  }
  m.q_exp_ = q;
  m.t_exp_ = std::move(t);
  return m;
}

NovikovMonomial NovikovMonomial::operator*(const NovikovMonomial& other) const {
  NovikovMonomial m;
  m.q_exp_ = q_exp_ + other.q_exp_;
  m.t_exp_ = t_exp_ + other.t_exp_;
  m.classes_.resize(std::max(classes_.size(), other.classes_.size()), 0);
  for (std::size_t i = 0; i < classes_.size(); ++i) m.classes_[i] += classes_[i];
  for (std::size_t i = 0; i < other.classes_.size(); ++i) m.classes_[i] += other.classes_[i];
  m.trim();
  return m;
}

NovikovMonomial NovikovMonomial::inverse() const {
  NovikovMonomial m;
  m.q_exp_ = -q_exp_;
  m.t_exp_ = -t_exp_;
  m.classes_ = classes_;
  for (auto& e : m.classes_) e = -e;
  return m;
}

NovikovMonomial NovikovMonomial::pow(long k) const {
  NovikovMonomial m;
  m.q_exp_ = q_exp_ * k;
  m.t_exp_ = t_exp_ * Rational(k);
  m.classes_ = classes_;
  for (auto& e : m.classes_) e = static_cast<int>(e * k);
  m.trim();
  return m;
}

bool NovikovScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_trivial() && terms_.begin()->second == 1;
}

bool NovikovScalar::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

void NovikovScalar::insert(NovikovMonomial m, Rational coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(coeff));
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

NovikovScalar NovikovScalar::operator+(const NovikovScalar& other) const {
  NovikovScalar out = *this;
  out += other;
  return out;
}

NovikovScalar& NovikovScalar::operator+=(const NovikovScalar& other) {
  for (const auto& [m, c] : other.terms_) insert(m, c);
  return *this;
}

NovikovScalar NovikovScalar::operator-(const NovikovScalar& other) const {
  NovikovScalar out = *this;
  for (const auto& [m, c] : other.terms_) out.insert(m, -c);
  return out;
}

NovikovScalar NovikovScalar::operator-() const {
  NovikovScalar out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

NovikovScalar NovikovScalar::operator*(const NovikovScalar& other) const {
  NovikovScalar out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out.insert(m1 * m2, c1 * c2);
  return out;
}

NovikovScalar NovikovScalar::scaled(const Rational& c) const {
  NovikovScalar out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

NovikovScalar NovikovScalar::times_monomial(const NovikovMonomial& m) const {
  NovikovScalar out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono * m, coeff);
  return out;
}

const std::pair<const NovikovMonomial, Rational>& NovikovScalar::leading_term() const {
  if (terms_.empty()) throw ZeroElementError("leading term of the zero scalar");
  return *terms_.rbegin();
}

Rational NovikovScalar::valuation() const {
  if (terms_.empty()) throw ZeroElementError("valuation of the zero scalar");
  return terms_.rbegin()->first.t_exp();
}

std::optional<NovikovScalar> divide_exact(const NovikovScalar& a, const NovikovScalar& b) {
  if (b.is_zero()) throw ZeroElementError("division by the zero scalar");
  NovikovScalar quotient;
  NovikovScalar rem = a;
  const auto& blead = b.leading_term();
  // If the quotient exists, each of its monomials mu satisfies
  // mu * lead(b) <= lead(rem) and mu * trail(b) >= trail(a); the second bound
  // detects inexact division instead of descending forever.
  const NovikovMonomial trail_bound =
      a.is_zero() ? NovikovMonomial{} : a.terms().begin()->first * b.terms().begin()->first.inverse();
  while (!rem.is_zero()) {
    const auto& rlead = rem.leading_term();
    NovikovMonomial mu = rlead.first * blead.first.inverse();
    if (mu < trail_bound) return std::nullopt;
    Rational coeff = rlead.second / blead.second;
    quotient.insert(mu, coeff);
    NovikovScalar piece = b.times_monomial(mu).scaled(coeff);
    rem = rem - piece;
  }
  return quotient;
}

NovikovMonomial phi(const NovikovMonomial& enriched, std::span<const SphereClass> classes) {
  if (enriched.classes().size() > classes.size())
    throw ConstructionError("monomial refers to sphere classes the ring does not store");
  long q = 0;
  Rational t{0};
  for (std::size_t i = 0; i < enriched.classes().size(); ++i) {
    q -= static_cast<long>(enriched.classes()[i]) * classes[i].chern;
    t -= Rational(enriched.classes()[i]) * classes[i].energy;
  }
  return NovikovMonomial::from_qt(q, std::move(t));
}

NovikovScalar phi(const NovikovScalar& enriched, std::span<const SphereClass> classes) {
  NovikovScalar out;
  for (const auto& [m, c] : enriched.terms()) out.insert(phi(m, classes), c);
  return out;
}

Rational valuation(const NovikovScalar& s) { return s.valuation(); }

namespace {

void append_exponent(std::ostringstream& os, const char* symbol, const std::string& exp) {
  os << symbol;
  if (exp != "1") os << '^' << exp;
}

}  // namespace

std::string render(const NovikovMonomial& m, const RenderOptions& opts) {
  long q = opts.phi_faithful ? -m.q_exp() : m.q_exp();
  Rational t = opts.phi_faithful ? Rational(-m.t_exp()) : m.t_exp();
  if (q == 0 && t == 0) return "1";
  std::ostringstream os;
  bool first = true;
  if (q != 0) {
    append_exponent(os, "q", std::to_string(q));
    first = false;
  }
  if (t != 0) {
    if (!first) os << '*';
    append_exponent(os, "t", to_string(t));
  }
  return os.str();
}

std::string render(const NovikovScalar& s, const RenderOptions& opts) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
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
    std::string mono = render(m, opts);
    if (mono == "1") {
      os << to_string(coeff);
    } else {
      if (coeff != 1) os << to_string(coeff) << '*';
      os << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace qhforge::novikov
