#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qhforge/algebra.hpp"

namespace qhforge::grouporder {

// Free abelian group Z^rank with a translation-invariant total order: a list
// of rational weight vectors compared lexicographically. The weight matrix
// must be injective on Z^rank for the order to be total; construction checks
// this.
struct OrderedGroup {
  std::vector<std::string> generator_names;
  std::vector<std::vector<Rational>> weights;

  int rank() const { return static_cast<int>(generator_names.size()); }
};

using GroupPtr = std::shared_ptr<const OrderedGroup>;

GroupPtr make_ordered_group(std::vector<std::string> generator_names,
                            std::vector<std::vector<Rational>> weights);

using GroupElem = std::vector<long>;

enum class Cmp { less, equal, greater };

Cmp compare(const OrderedGroup& group, const GroupElem& g, const GroupElem& h);

// Finitely supported integer combination of group elements.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(GroupPtr group) : group_(std::move(group)) {}

  static GroupRingElement identity(GroupPtr group);
  static GroupRingElement monomial(GroupPtr group, GroupElem g, long long coeff = 1);

  const GroupPtr& group() const noexcept { return group_; }
  const std::map<GroupElem, long long>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_identity() const;
  // +-(single group element)?
  bool is_signed_monomial() const;

  void insert(GroupElem g, long long coeff);

  GroupRingElement operator+(const GroupRingElement& other) const;
  GroupRingElement operator-(const GroupRingElement& other) const;

  bool operator==(const GroupRingElement& other) const;

 private:
  GroupPtr group_;
  std::map<GroupElem, long long> terms_;
};

// Convolution product with integer coefficients; zero terms pruned.
GroupRingElement gr_multiply(const GroupRingElement& p, const GroupRingElement& r);

struct UnitSearchParams {
  int support_bound = 3;
  long long coeff_bound = 2;
  long exponent_bound = 4; // exponents searched in [-bound, bound]
};

struct GroupUnit {
  GroupRingElement element;
  GroupRingElement inverse;
};

struct GroupUnitReport {
  GroupPtr group;
  UnitSearchParams params;
  std::vector<GroupUnit> units;
  bool all_signed_monomials = false;
};

// Exhaustive search over all elements within the bounds whose product with
// some equally bounded element is the identity. Inverses are reconstructed
// by extremal-term division, which is complete for any box of candidates,
// and re-verified by gr_multiply.
GroupUnitReport classify_gr_units(GroupPtr group, const UnitSearchParams& params = {});

// The multiplicative bijection between integral monomial elements of an
// enriched product of projective spaces and the elements of its ordered
// group: x^k e^{-vA} on factor i maps to k + (n_i + 1) v in coordinate i.
class QenrEmbedding {
 public:
  QenrEmbedding(algebra::RingPtr ring, GroupPtr group, std::vector<int> dims);

  const GroupPtr& group() const noexcept { return group_; }
  const algebra::RingPtr& ring() const noexcept { return ring_; }

  struct SignedElem {
    int sign = 1;
    GroupElem elem;
  };

  // Requires a +-1 integral single-class single-monomial element whose
  // stored (q, t) agree with its class exponents.
  SignedElem to_group(const algebra::AlgebraElement& monomial_element) const;

  algebra::AlgebraElement from_group(const SignedElem& s) const;
  algebra::AlgebraElement from_group(const GroupElem& g) const;

 private:
  algebra::RingPtr ring_;
  GroupPtr group_;
  std::vector<int> dims_; // n_i per factor coordinate
};

QenrEmbedding embed_product_qenr(algebra::RingPtr enriched_ring);

}  // namespace qhforge::grouporder
