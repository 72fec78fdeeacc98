#include "qhforge/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "qhforge/detail/linalg.hpp"

namespace qhforge::catalog {

using algebra::CoeffMode;
using algebra::RingDescriptor;
using algebra::RingPtr;
using novikov::NovikovMonomial;
using novikov::NovikovScalar;
using novikov::SphereClass;

namespace {

std::string word_label(const std::vector<int>& exps, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t g = 0; g < exps.size(); ++g) {
    if (exps[g] == 0) continue;
    if (!first) os << '*';
    os << names[g];
    if (exps[g] > 1) os << '^' << exps[g];
    first = false;
  }
  return first ? std::string("1") : os.str();
}

struct RelTerm {
  std::vector<int> word;
  int u_pow = 0;
  Rational coeff;
};

// A finite presentation with one effective line class; the quotient must be a
// free module over the basis words (checked during derivation).
struct Presentation {
  std::string base_id;
  int N = 0;
  Rational kappa{1};
  int min_chern = 0;
  SphereClass line;
  std::vector<std::string> gen_names;
  std::vector<int> gen_degrees; // homology degrees
  std::vector<std::vector<int>> basis_words;
  std::vector<std::vector<RelTerm>> relations;
  std::vector<std::string> relation_display;
};

int codeg_of_word(const Presentation& p, const std::vector<int>& word) {
  int c = 0;
  for (std::size_t g = 0; g < word.size(); ++g) c += word[g] * (2 * p.N - p.gen_degrees[g]);
  return c;
}

using Key = std::pair<std::vector<int>, int>; // (generator word, u power)

// All monomials x^a u^c of the given codegree.
void enumerate_monomials(const Presentation& p, int codeg_u, int target, std::size_t gen,
                         std::vector<int>& word, int used, std::vector<Key>& out) {
  if (gen == p.gen_names.size()) {
    int rest = target - used;
    if (rest >= 0 && rest % codeg_u == 0) out.emplace_back(word, rest / codeg_u);
    return;
  }
  const int cg = 2 * p.N - p.gen_degrees[gen];
  for (int e = 0; used + e * cg <= target; ++e) {
    word[gen] = e;
    enumerate_monomials(p, codeg_u, target, gen + 1, word, used + e * cg, out);
  }
  word[gen] = 0;
}

NovikovMonomial quantum_monomial(const Presentation& p, CoeffMode mode, int u_pow) {
  switch (mode) {
    case CoeffMode::enriched:
      return NovikovMonomial::from_classes({u_pow}, std::span<const SphereClass>(&p.line, 1));
    case CoeffMode::universal:
      return NovikovMonomial::from_qt(static_cast<long>(u_pow) * p.line.chern,
                                      Rational(u_pow) * p.line.energy);
    case CoeffMode::lambda_only:
      return NovikovMonomial::from_qt(0, Rational(u_pow) * p.line.energy);
  }
  return {};
}

// Expresses a generator word in the basis, working degree by degree: the
// word's codegree graded piece is spanned by basis words times u powers
// modulo the span of relation multiples, and the coordinates are found by
// one rational linear solve.
RingDescriptor::Entry reduce_word(const Presentation& p, CoeffMode mode,
                                  const std::vector<std::vector<int>>& basis_words,
                                  const std::vector<int>& word) {
  for (std::size_t k = 0; k < basis_words.size(); ++k) {
    if (basis_words[k] == word)
      return {{static_cast<int>(k), NovikovScalar::one()}};
  }
  const int codeg_u = 2 * p.line.chern;
  const int d = codeg_of_word(p, word);

  std::vector<Key> monomials;
  std::vector<int> scratch(p.gen_names.size(), 0);
  enumerate_monomials(p, codeg_u, d, 0, scratch, 0, monomials);
  std::map<Key, int> row_of;
  for (std::size_t r = 0; r < monomials.size(); ++r) row_of[monomials[r]] = static_cast<int>(r);

  // Columns: first the allowed images (basis word, u power), then one column
  // per relation multiple of codegree d.
  std::vector<std::pair<int, int>> allowed; // (basis index, u power)
  for (std::size_t k = 0; k < basis_words.size(); ++k) {
    int rest = d - codeg_of_word(p, basis_words[k]);
    if (rest >= 0 && rest % codeg_u == 0) allowed.emplace_back(static_cast<int>(k), rest / codeg_u);
  }

  detail::RMat a;
  const std::size_t rows = monomials.size();
  auto col_from_terms = [&](const std::vector<std::pair<Key, Rational>>& terms) {
    detail::RVec col(rows, Rational(0));
    for (const auto& [key, c] : terms) {
      auto it = row_of.find(key);
      if (it == row_of.end()) throw ConstructionError("relation multiple leaves the graded piece");
      col[static_cast<std::size_t>(it->second)] += c;
    }
    return col;
  };

  std::vector<detail::RVec> columns;
  for (const auto& [k, u] : allowed)
    columns.push_back(col_from_terms({{Key(basis_words[static_cast<std::size_t>(k)], u), Rational(1)}}));

  for (const auto& rel : p.relations) {
    int rel_codeg = -1;
    for (const auto& t : rel) {
      int c = codeg_of_word(p, t.word) + t.u_pow * codeg_u;
      if (rel_codeg < 0) rel_codeg = c;
      if (c != rel_codeg) throw ConstructionError("relation is not homogeneous");
    }
    if (rel_codeg < 0 || rel_codeg > d) continue;
    std::vector<Key> shifts;
    enumerate_monomials(p, codeg_u, d - rel_codeg, 0, scratch, 0, shifts);
    for (const auto& [sword, su] : shifts) {
      std::vector<std::pair<Key, Rational>> terms;
      for (const auto& t : rel) {
        std::vector<int> w = t.word;
        for (std::size_t g = 0; g < w.size(); ++g) w[g] += sword[g];
        terms.emplace_back(Key(std::move(w), t.u_pow + su), t.coeff);
      }
      columns.push_back(col_from_terms(terms));
    }
  }

  // Transpose columns into the row-major system and solve.
  a.assign(rows, detail::RVec(columns.size(), Rational(0)));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) a[r][c] = columns[c][r];
  detail::RVec rhs(rows, Rational(0));
  rhs[static_cast<std::size_t>(row_of.at(Key(word, 0)))] = 1;

  detail::LinearSolution sol = detail::solve_rational(a, rhs);
  if (!sol.consistent)
    throw ConstructionError("word does not reduce to the basis: " + word_label(word, p.gen_names));
  for (const auto& nv : sol.nullspace)
    for (std::size_t c = 0; c < allowed.size(); ++c)
      if (nv[c] != 0)
        throw ConstructionError("presentation does not define a free module on the stated basis");

  RingDescriptor::Entry entry;
  for (std::size_t c = 0; c < allowed.size(); ++c) {
    const Rational& coeff = sol.particular[c];
    if (coeff == 0) continue;
    entry.emplace_back(allowed[c].first,
                       NovikovScalar(quantum_monomial(p, mode, allowed[c].second), coeff));
  }
  std::sort(entry.begin(), entry.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  // Merge duplicate basis indices (distinct u powers of the same class).
  RingDescriptor::Entry merged;
  for (auto& [k, s] : entry) {
    if (!merged.empty() && merged.back().first == k)
      merged.back().second += s;
    else
      merged.emplace_back(k, std::move(s));
  }
  return merged;
}

void validate_descriptor(const RingDescriptor& ring) {
  const int n = ring.basis_count();
  // Identity row/column.
  for (int j = 0; j < n; ++j) {
    const auto& e = ring.entry(ring.unit_class, j);
    if (e.size() != 1 || e[0].first != j || !e[0].second.is_one())
      throw ConstructionError("fundamental class does not act as the identity");
  }
  // Symmetry and the degree rule deg(k) = deg(i) + deg(j) - 2N + 2 q.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (ring.entry(i, j) != ring.entry(j, i))
        throw ConstructionError("multiplication table is not commutative");
      for (const auto& [k, s] : ring.entry(i, j)) {
        for (const auto& [m, c] : s.terms()) {
          Rational q_equiv;
          if (ring.mode == CoeffMode::lambda_only) {
            q_equiv = m.t_exp() / ring.kappa;
          } else {
            q_equiv = m.q_exp();
          }
          Rational expect = Rational(ring.degree_of(i) + ring.degree_of(j) - 2 * ring.complex_dim) +
                            Rational(2) * q_equiv;
          if (Rational(ring.degree_of(k)) != expect)
            throw ConstructionError("degree bookkeeping violated in the multiplication table");
        }
      }
    }
  }
}

void finish_pairing_and_ids(RingDescriptor& ring) {
  const int n = ring.basis_count();
  int unit = -1;
  int point = -1;
  for (int i = 0; i < n; ++i) {
    if (ring.basis[static_cast<std::size_t>(i)].degree == 2 * ring.complex_dim)
      unit = (unit < 0) ? i : throw ConstructionError("fundamental class is not unique");
    if (ring.basis[static_cast<std::size_t>(i)].degree == 0)
      point = (point < 0) ? i : throw ConstructionError("point class is not unique");
  }
  if (unit < 0 || point < 0) throw ConstructionError("basis lacks a fundamental or point class");
  ring.unit_class = unit;

  ring.pairing.assign(static_cast<std::size_t>(n), detail::RVec(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (ring.degree_of(i) + ring.degree_of(j) != 2 * ring.complex_dim) continue;
      for (const auto& [k, s] : ring.entry(i, j)) {
        if (k != point) continue;
        for (const auto& [m, c] : s.terms())
          if (m.is_trivial()) ring.pairing[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c;
      }
    }
  }
}

RingPtr build_from_presentation(const Presentation& p, CoeffMode mode) {
  auto ring = std::make_shared<RingDescriptor>();
  ring->id = p.base_id;
  ring->name = p.base_id + "@" + algebra::to_string(mode);
  ring->complex_dim = p.N;
  ring->mode = mode;
  ring->kappa = p.kappa;
  ring->min_chern = p.min_chern;
  ring->sphere_classes = {p.line};
  ring->line_class = 0;
  ring->relations = p.relation_display;

  // Basis in ascending homology degree, stable within a degree.
  std::vector<std::vector<int>> words = p.basis_words;
  std::stable_sort(words.begin(), words.end(), [&](const auto& x, const auto& y) {
    return codeg_of_word(p, x) > codeg_of_word(p, y);
  });
  for (const auto& w : words) {
    algebra::BasisClass b;
    b.label = word_label(w, p.gen_names);
    b.degree = 2 * p.N - codeg_of_word(p, w);
    b.exponents = w;
    ring->basis.push_back(std::move(b));
  }

  for (std::size_t g = 0; g < p.gen_names.size(); ++g) {
    std::vector<int> e(p.gen_names.size(), 0);
    e[g] = 1;
    int idx = -1;
    for (std::size_t k = 0; k < words.size(); ++k)
      if (words[k] == e) idx = static_cast<int>(k);
    if (idx < 0) throw ConstructionError("every generator must be a basis class");
    ring->generators.push_back({p.gen_names[g], p.gen_degrees[g], idx});
  }

  const int n = static_cast<int>(words.size());
  ring->table.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::vector<int> word(p.gen_names.size(), 0);
      for (std::size_t g = 0; g < word.size(); ++g)
        word[g] = words[static_cast<std::size_t>(i)][g] + words[static_cast<std::size_t>(j)][g];
      RingDescriptor::Entry e = reduce_word(p, mode, words, word);
      ring->table[static_cast<std::size_t>(i) * n + j] = e;
      ring->table[static_cast<std::size_t>(j) * n + i] = std::move(e);
    }
  }

  finish_pairing_and_ids(*ring);
  validate_descriptor(*ring);
  return ring;
}

NovikovScalar shift_scalar(const NovikovScalar& s, int offset,
                           std::span<const SphereClass> all_classes) {
  NovikovScalar out;
  for (const auto& [m, c] : s.terms()) {
    if (m.classes().empty()) {
      out.insert(m, c);
    } else {
      novikov::ClassVector v(static_cast<std::size_t>(offset), 0);
      v.insert(v.end(), m.classes().begin(), m.classes().end());
      out.insert(NovikovMonomial::from_classes(std::move(v), all_classes), c);
    }
  }
  return out;
}

}  // namespace

CatalogId CatalogId::parse(std::string_view text) {
  std::string s(text);
  CatalogId id;
  auto at = s.rfind('@');
  if (at != std::string::npos) {
    std::string mode = s.substr(at + 1);
    if (mode == "enriched")
      id.mode = CoeffMode::enriched;
    else if (mode == "universal")
      id.mode = CoeffMode::universal;
    else if (mode == "lambda")
      id.mode = CoeffMode::lambda_only;
    else
      throw ParseError("unknown coefficient mode '" + mode + "'", at + 1);
    s = s.substr(0, at);
  }
  auto parse_base = [](std::string_view b, std::size_t offset) {
    CatalogId out;
    if (b == "g24") {
      out.kind = Kind::g24;
      return out;
    }
    if (b.substr(0, 4) == "cpn:") {
      out.kind = Kind::cpn;
      try {
        out.n = std::stoi(std::string(b.substr(4)));
      } catch (const std::exception&) {
        throw ParseError("expected an integer after 'cpn:'", offset + 4);
      }
      return out;
    }
    throw ParseError("unknown ring id '" + std::string(b) + "'", offset);
  };
  if (s.substr(0, 5) == "prod:") {
    id.kind = Kind::product;
    std::string rest = s.substr(5);
    std::size_t pos = 0;
    if (rest.empty()) throw ParseError("empty product factor list", 5);
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      std::string factor = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      // `cpn:<n>` contains no comma, so a flat split is unambiguous.
      if (factor.empty()) throw ParseError("empty product factor", 5 + pos);
      CatalogId f = parse_base(factor, 5 + pos);
      f.mode = id.mode;
      id.factors.push_back(std::move(f));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    CatalogId base = parse_base(s, 0);
    base.mode = id.mode;
    base.factors = {};
    id.kind = base.kind;
    id.n = base.n;
  }
  return id;
}

std::string CatalogId::base_string() const {
  switch (kind) {
    case Kind::g24:
      return "g24";
    case Kind::cpn:
      return "cpn:" + std::to_string(n);
    case Kind::product: {
      std::string out = "prod:";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += ',';
        std::string f = factors[i].base_string();
        if (factors[i].kind == Kind::product) f = "(" + f + ")";
        out += f;
      }
      return out;
    }
  }
  return "?";
}

std::string CatalogId::to_string() const {
  return base_string() + "@" + algebra::to_string(mode);
}

RingPtr make_cpn(int n, CoeffMode mode, const Rational& kappa) {
  if (n < 1) throw InvalidDimensionError("cpn requires n >= 1");
  Presentation p;
  p.base_id = "cpn:" + std::to_string(n);
  p.N = n;
  p.kappa = kappa;
  p.min_chern = n + 1;
  p.line = SphereClass{"A", n + 1, kappa * Rational(n + 1)};
  p.gen_names = {"x"};
  p.gen_degrees = {2 * n - 2};
  for (int k = n; k >= 0; --k) p.basis_words.push_back({k});
  p.relations.push_back({RelTerm{{n + 1}, 0, Rational(1)}, RelTerm{{0}, 1, Rational(-1)}});
  p.relation_display.push_back(
      "x^" + std::to_string(n + 1) + " = " +
      novikov::render(NovikovMonomial::from_qt(0, kappa * Rational(n + 1))));
  RingPtr ring = build_from_presentation(p, mode);
  const_cast<RingDescriptor&>(*ring).projective_dims = {n};
  return ring;
}

RingPtr make_g24(CoeffMode mode, const Rational& kappa) {
  Presentation p;
  p.base_id = "g24";
  p.N = 4;
  p.kappa = kappa;
  p.min_chern = 4;
  p.line = SphereClass{"L", 4, kappa * Rational(4)};
  p.gen_names = {"x1", "x2"};
  p.gen_degrees = {6, 4};
  p.basis_words = {{0, 2}, {1, 1}, {2, 0}, {0, 1}, {1, 0}, {0, 0}};
  p.relations.push_back({RelTerm{{3, 0}, 0, Rational(1)}, RelTerm{{1, 1}, 0, Rational(-2)}});
  p.relations.push_back(
      {RelTerm{{2, 1}, 0, Rational(1)}, RelTerm{{0, 2}, 0, Rational(-1)}, RelTerm{{0, 0}, 1, Rational(-1)}});
  p.relation_display.push_back("x1^3 = 2*x1*x2");
  p.relation_display.push_back(
      "x1^2*x2 = x2^2 + " +
      novikov::render(NovikovMonomial::from_qt(0, kappa * Rational(4))));
  return build_from_presentation(p, mode);
}

RingPtr make_product(std::vector<RingPtr> factors) {
  if (factors.empty()) throw ModeMismatchError("a product needs at least one factor");
  const CoeffMode mode = factors[0]->mode;
  const Rational kappa = factors[0]->kappa;
  for (const auto& f : factors) {
    if (f->mode != mode)
      throw ModeMismatchError("product factors must share one coefficient mode");
    if (f->kappa != kappa)
      throw ModeMismatchError("product factors must share the monotonicity constant");
  }

  auto ring = std::make_shared<RingDescriptor>();
  ring->mode = mode;
  ring->kappa = kappa;
  ring->factors = factors;

  bool all_proj = std::all_of(factors.begin(), factors.end(),
                              [](const RingPtr& f) { return f->is_product_of_projective_spaces(); });
  std::size_t total_gens = 0;
  for (const auto& f : factors) total_gens += f->generators.size();
  if (all_proj && total_gens > 26) all_proj = false;

  std::string base = "prod:";
  int N = 0;
  int min_chern = 0;
  std::vector<std::string> gen_names;
  std::vector<int> gen_degrees;
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const RingDescriptor& f = *factors[fi];
    if (fi > 0) base += ',';
    const bool nested = f.id.rfind("prod:", 0) == 0;
    base += nested ? ("(" + f.id + ")") : f.id;
    N += f.complex_dim;
    min_chern = (fi == 0) ? f.min_chern : std::min(min_chern, f.min_chern);
    ring->factor_offsets.push_back(static_cast<int>(ring->sphere_classes.size()));
    for (const auto& sc : f.sphere_classes) {
      SphereClass copy = sc;
      copy.label = all_proj ? std::string(1, static_cast<char>('A' + ring->sphere_classes.size()))
                            : ("f" + std::to_string(fi) + "." + sc.label);
      ring->sphere_classes.push_back(std::move(copy));
    }
    for (const auto& g : f.generators) {
      gen_names.push_back(all_proj ? std::string(1, static_cast<char>('a' + gen_names.size()))
                                   : ("f" + std::to_string(fi) + "_" + g.name));
      gen_degrees.push_back(g.degree);
    }
    if (f.is_product_of_projective_spaces())
      ring->projective_dims.insert(ring->projective_dims.end(), f.projective_dims.begin(),
                                   f.projective_dims.end());
    for (const auto& r : f.relations)
      ring->relations.push_back("[factor " + std::to_string(fi) + "] " + r);
  }
  if (!all_proj) ring->projective_dims.clear();
  ring->id = base;
  ring->name = base + "@" + algebra::to_string(mode);
  ring->complex_dim = N;
  ring->min_chern = min_chern;
  ring->line_class = 0;

  // Basis tuples: leftmost factor slowest, then a stable sort by degree.
  std::vector<std::vector<int>> tuples;
  {
    std::vector<int> cur(factors.size(), 0);
    while (true) {
      tuples.push_back(cur);
      int k = static_cast<int>(factors.size()) - 1;
      while (k >= 0) {
        if (++cur[static_cast<std::size_t>(k)] <
            factors[static_cast<std::size_t>(k)]->basis_count())
          break;
        cur[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  auto tuple_degree = [&](const std::vector<int>& t) {
    int d = 0;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) d += factors[fi]->degree_of(t[fi]);
    return d;
  };
  std::stable_sort(tuples.begin(), tuples.end(), [&](const auto& x, const auto& y) {
    return tuple_degree(x) < tuple_degree(y);
  });

  std::map<std::vector<int>, int> index_of;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    algebra::BasisClass b;
    b.degree = tuple_degree(tuples[t]);
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
      const auto& fb = factors[fi]->basis[static_cast<std::size_t>(tuples[t][fi])];
      b.exponents.insert(b.exponents.end(), fb.exponents.begin(), fb.exponents.end());
    }
    b.label = word_label(b.exponents, gen_names);
    index_of[tuples[t]] = static_cast<int>(t);
    ring->basis.push_back(std::move(b));
  }

  for (std::size_t g = 0; g < gen_names.size(); ++g) {
    std::vector<int> e(gen_names.size(), 0);
    e[g] = 1;
    int idx = -1;
    for (std::size_t k = 0; k < ring->basis.size(); ++k)
      if (ring->basis[k].exponents == e) idx = static_cast<int>(k);
    if (idx < 0) throw ConstructionError("factor generator missing from the product basis");
    ring->generators.push_back({gen_names[g], gen_degrees[g], idx});
  }

  const int n = static_cast<int>(tuples.size());
  std::span<const SphereClass> all_classes(ring->sphere_classes);
  ring->table.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      // Cartesian combination of the factor entries.
      std::vector<std::pair<std::vector<int>, NovikovScalar>> acc;
      acc.emplace_back(std::vector<int>{}, NovikovScalar::one());
      for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        const auto& ent = factors[fi]->entry(tuples[static_cast<std::size_t>(i)][fi],
                                             tuples[static_cast<std::size_t>(j)][fi]);
        std::vector<std::pair<std::vector<int>, NovikovScalar>> next;
        for (const auto& [prefix, s] : acc) {
          for (const auto& [k, sk] : ent) {
            std::vector<int> tup = prefix;
            tup.push_back(k);
            next.emplace_back(std::move(tup),
                              s * shift_scalar(sk, ring->factor_offsets[fi], all_classes));
          }
        }
        acc = std::move(next);
      }
      RingDescriptor::Entry entry;
      for (auto& [tup, s] : acc) {
        if (s.is_zero()) continue;
        entry.emplace_back(index_of.at(tup), std::move(s));
      }
      std::sort(entry.begin(), entry.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      RingDescriptor::Entry merged;
      for (auto& [k, s] : entry) {
        if (!merged.empty() && merged.back().first == k)
          merged.back().second += s;
        else
          merged.emplace_back(k, std::move(s));
      }
      ring->table[static_cast<std::size_t>(i) * n + j] = merged;
      ring->table[static_cast<std::size_t>(j) * n + i] = std::move(merged);
    }
  }

  finish_pairing_and_ids(*ring);
  validate_descriptor(*ring);
  return ring;
}

RingPtr make_ring(const CatalogId& id, const Rational& kappa) {
  switch (id.kind) {
    case CatalogId::Kind::cpn:
      return make_cpn(id.n, id.mode, kappa);
    case CatalogId::Kind::g24:
      return make_g24(id.mode, kappa);
    case CatalogId::Kind::product: {
      std::vector<RingPtr> factors;
      factors.reserve(id.factors.size());
      for (const auto& f : id.factors) factors.push_back(make_ring(f.with_mode(id.mode), kappa));
      return make_product(std::move(factors));
    }
  }
  throw ConstructionError("unhandled catalog id");
}

RingPtr make_ring(std::string_view id, const Rational& kappa) {
  return make_ring(CatalogId::parse(id), kappa);
}

}  // namespace qhforge::catalog
