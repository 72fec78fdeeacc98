#include "qhforge/group_order.hpp"

#include <algorithm>
#include <cstdlib>

#include "qhforge/detail/linalg.hpp"

namespace qhforge::grouporder {

using algebra::AlgebraElement;
using novikov::NovikovMonomial;
using novikov::NovikovScalar;

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->generator_names == b->generator_names && a->weights == b->weights;
}

}  // namespace

GroupPtr make_ordered_group(std::vector<std::string> generator_names,
                            std::vector<std::vector<Rational>> weights) {
  const std::size_t rank = generator_names.size();
  for (const auto& w : weights)
    if (w.size() != rank)
      throw ConstructionError("weight vector length does not match the group rank");
  detail::RMat m;
  for (const auto& w : weights) m.push_back(w);
  if (detail::rank_rational(m) != static_cast<int>(rank))
    throw ConstructionError("weight vectors do not give a total order (not injective)");
  auto g = std::make_shared<OrderedGroup>();
  g->generator_names = std::move(generator_names);
  g->weights = std::move(weights);
  return g;
}

Cmp compare(const OrderedGroup& group, const GroupElem& g, const GroupElem& h) {
  if (g.size() != group.generator_names.size() || h.size() != group.generator_names.size())
    throw GroupMismatchError("element rank does not match the group");
  for (const auto& w : group.weights) {
    Rational s{0};
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * Rational(g[i] - h[i]);
    if (s < 0) return Cmp::less;
    if (s > 0) return Cmp::greater;
  }
  return Cmp::equal;
}

GroupRingElement GroupRingElement::identity(GroupPtr group) {
  GroupRingElement e(group);
  e.insert(GroupElem(static_cast<std::size_t>(group->rank()), 0), 1);
  return e;
}

GroupRingElement GroupRingElement::monomial(GroupPtr group, GroupElem g, long long coeff) {
  GroupRingElement e(std::move(group));
  e.insert(std::move(g), coeff);
  return e;
}

bool GroupRingElement::is_identity() const {
  if (terms_.size() != 1) return false;
  const auto& [g, c] = *terms_.begin();
  return c == 1 && std::all_of(g.begin(), g.end(), [](long x) { return x == 0; });
}

bool GroupRingElement::is_signed_monomial() const {
  if (terms_.size() != 1) return false;
  long long c = terms_.begin()->second;
  return c == 1 || c == -1;
}

void GroupRingElement::insert(GroupElem g, long long coeff) {
  if (coeff == 0) return;
  if (g.size() != static_cast<std::size_t>(group_->rank()))
    throw GroupMismatchError("element rank does not match the group");
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(std::move(g), coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& other) const {
  if (!same_group(group_, other.group_)) throw GroupMismatchError();
  GroupRingElement out = *this;
  for (const auto& [g, c] : other.terms_) out.insert(g, c);
  return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& other) const {
  if (!same_group(group_, other.group_)) throw GroupMismatchError();
  GroupRingElement out = *this;
  for (const auto& [g, c] : other.terms_) out.insert(g, -c);
  return out;
}

bool GroupRingElement::operator==(const GroupRingElement& other) const {
  return same_group(group_, other.group_) && terms_ == other.terms_;
}

GroupRingElement gr_multiply(const GroupRingElement& p, const GroupRingElement& r) {
  if (!same_group(p.group(), r.group())) throw GroupMismatchError();
  GroupRingElement out(p.group());
  for (const auto& [g, cg] : p.terms()) {
    for (const auto& [h, ch] : r.terms()) {
      GroupElem sum(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) sum[i] = g[i] + h[i];
      out.insert(std::move(sum), cg * ch);
    }
  }
  return out;
}

namespace {

// Attempts to reconstruct x with p * x = identity, generating x term by term
// from the coordinate-lexicographic minimum of the residual. Lexicographic
// order on Z^rank is translation invariant, so the minimum of a product is
// the product of the minima and the reconstruction is complete: if any
// inverse exists in the group ring, this finds it; bounds are then checked
// against the search box.
struct BoundedInverseSearch {
  const UnitSearchParams& params;

  std::optional<std::vector<std::pair<GroupElem, long long>>> run(
      const std::vector<std::pair<GroupElem, long long>>& p) const {
    const auto& lm = p.front(); // p sorted ascending, so front is the lex-min
    std::map<GroupElem, long long> residual;
    residual.emplace(GroupElem(lm.first.size(), 0), 1);
    std::vector<std::pair<GroupElem, long long>> x;
    while (!residual.empty()) {
      const GroupElem m = residual.begin()->first;
      const long long mc = residual.begin()->second;
      if (mc % lm.second != 0) return std::nullopt;
      long long qc = mc / lm.second;
      if (qc == 0 || std::llabs(qc) > params.coeff_bound) return std::nullopt;
      GroupElem qe(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) {
        qe[i] = m[i] - lm.first[i];
        if (std::labs(qe[i]) > params.exponent_bound) return std::nullopt;
      }
      if (static_cast<int>(x.size()) == params.support_bound) return std::nullopt;
      x.emplace_back(qe, qc);
      for (const auto& [g, c] : p) {
        GroupElem sum(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) sum[i] = g[i] + qe[i];
        auto it = residual.find(sum);
        long long next = (it == residual.end() ? 0 : it->second) - c * qc;
        if (it == residual.end()) {
          if (next != 0) residual.emplace(std::move(sum), next);
        } else if (next == 0) {
          residual.erase(it);
        } else {
          it->second = next;
        }
      }
    }
    return x;
  }
};

}  // namespace

GroupUnitReport classify_gr_units(GroupPtr group, const UnitSearchParams& params) {
  if (params.support_bound < 1 || params.coeff_bound < 1)
    throw ConstructionError("unit search bounds must be at least 1");
  const int rank = group->rank();

  // All group elements in the exponent box, ascending lexicographically.
  std::vector<GroupElem> box;
  GroupElem cur(static_cast<std::size_t>(rank), -params.exponent_bound);
  while (true) {
    box.push_back(cur);
    int k = rank - 1;
    while (k >= 0) {
      if (++cur[static_cast<std::size_t>(k)] <= params.exponent_bound) break;
      cur[static_cast<std::size_t>(k)] = -params.exponent_bound;
      --k;
    }
    if (k < 0) break;
  }

  std::vector<long long> coeff_values;
  for (long long c = -params.coeff_bound; c <= params.coeff_bound; ++c)
    if (c != 0) coeff_values.push_back(c);

  GroupUnitReport report;
  report.group = group;
  report.params = params;
  report.all_signed_monomials = true;

  BoundedInverseSearch search{params};
  std::vector<std::pair<GroupElem, long long>> candidate;
  std::vector<int> support;

  auto try_candidate = [&]() {
    long long augmentation = 0;
    for (const auto& [g, c] : candidate) augmentation += c;
    if (augmentation != 1 && augmentation != -1) return;
    auto inv = search.run(candidate);
    if (!inv) return;
    GroupRingElement p(group);
    for (const auto& [g, c] : candidate) p.insert(g, c);
    GroupRingElement r(group);
    for (const auto& [g, c] : *inv) r.insert(g, c);
    if (!gr_multiply(p, r).is_identity())
      throw ConstructionError("bounded inverse failed re-verification");
    if (!p.is_signed_monomial()) report.all_signed_monomials = false;
    report.units.push_back(GroupUnit{std::move(p), std::move(r)});
  };

  // Enumerate supports of each size with ascending box indices; candidate
  // terms are then already sorted lexicographically.
  auto enumerate = [&](auto&& self, std::size_t start, int remaining) -> void {
    if (!support.empty()) {
      // Assign coefficients to the chosen support by an odometer.
      std::vector<std::size_t> idx(support.size(), 0);
      while (true) {
        candidate.clear();
        for (std::size_t i = 0; i < support.size(); ++i)
          candidate.emplace_back(box[static_cast<std::size_t>(support[i])], coeff_values[idx[i]]);
        try_candidate();
        std::size_t k = support.size();
        while (k > 0) {
          --k;
          if (++idx[k] < coeff_values.size()) break;
          idx[k] = 0;
          if (k == 0) {
            k = SIZE_MAX;
            break;
          }
        }
        if (k == SIZE_MAX) break;
      }
    }
    if (remaining == 0) return;
    for (std::size_t i = start; i < box.size(); ++i) {
      support.push_back(static_cast<int>(i));
      self(self, i + 1, remaining - 1);
      support.pop_back();
    }
  };
  enumerate(enumerate, 0, params.support_bound);
  return report;
}

QenrEmbedding::QenrEmbedding(algebra::RingPtr ring, GroupPtr group, std::vector<int> dims)
    : ring_(std::move(ring)), group_(std::move(group)), dims_(std::move(dims)) {}

QenrEmbedding::SignedElem QenrEmbedding::to_group(const AlgebraElement& e) const {
  if (e.coords().size() != 1)
    throw ConstructionError("embedding is defined on monomial elements (one basis class)");
  const auto& [idx, scalar] = *e.coords().begin();
  if (!scalar.is_monomial())
    throw ConstructionError("embedding is defined on single-monomial coefficients");
  const auto& [mono, coeff] = *scalar.terms().begin();
  if (coeff != 1 && coeff != -1)
    throw ConstructionError("embedding is defined on +-1 integral elements");
  NovikovMonomial expect = NovikovMonomial::from_classes(mono.classes(), ring_->sphere_classes);
  if (expect.q_exp() != mono.q_exp() || expect.t_exp() != mono.t_exp())
    throw ConstructionError("monomial exponents do not lie in the enriched class lattice");

  const auto& exps = ring_->basis[static_cast<std::size_t>(idx)].exponents;
  GroupElem g(dims_.size(), 0);
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    long v = i < mono.classes().size() ? mono.classes()[i] : 0;
    g[i] = exps[i] + static_cast<long>(dims_[i] + 1) * v;
  }
  return SignedElem{coeff > 0 ? 1 : -1, std::move(g)};
}

AlgebraElement QenrEmbedding::from_group(const SignedElem& s) const {
  novikov::ClassVector v(dims_.size(), 0);
  std::vector<int> exps(dims_.size(), 0);
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    long period = dims_[i] + 1;
    long k = ((s.elem[i] % period) + period) % period;
    exps[i] = static_cast<int>(k);
    v[i] = static_cast<int>((s.elem[i] - k) / period);
  }
  int idx = -1;
  for (int b = 0; b < ring_->basis_count(); ++b)
    if (ring_->basis[static_cast<std::size_t>(b)].exponents == exps) idx = b;
  if (idx < 0) throw ConstructionError("group element does not correspond to a basis class");
  NovikovScalar c(NovikovMonomial::from_classes(std::move(v), ring_->sphere_classes),
                  Rational(s.sign));
  return AlgebraElement::basis_element(ring_, idx, std::move(c));
}

AlgebraElement QenrEmbedding::from_group(const GroupElem& g) const {
  return from_group(SignedElem{1, g});
}

QenrEmbedding embed_product_qenr(algebra::RingPtr enriched_ring) {
  if (enriched_ring->mode != algebra::CoeffMode::enriched)
    throw ModeMismatchError("the group embedding needs enriched coefficients");
  if (!enriched_ring->is_product_of_projective_spaces())
    throw NotAProductOfProjectiveSpacesError(
        "the group embedding is defined for products of projective spaces");
  const auto& dims = enriched_ring->projective_dims;
  if (dims.size() != enriched_ring->generators.size() ||
      dims.size() != enriched_ring->sphere_classes.size())
    throw ConstructionError("projective factor data is inconsistent");

  std::vector<std::string> names;
  std::vector<std::vector<Rational>> weights;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    names.push_back(enriched_ring->generators[i].name);
    std::vector<Rational> w(dims.size(), Rational(0));
    w[i] = Rational(1, dims[i] + 1);
    weights.push_back(std::move(w));
  }
  GroupPtr group = make_ordered_group(std::move(names), std::move(weights));
  return QenrEmbedding(enriched_ring, group, dims);
}

}  // namespace qhforge::grouporder
