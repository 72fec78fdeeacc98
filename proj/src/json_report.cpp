#include "qhforge/json_report.hpp"

namespace qhforge::io {

json to_json(const Rational& r) { return qhforge::to_string(r); }

json to_json(const novikov::NovikovMonomial& m, const algebra::RingPtr& ring,
             const novikov::RenderOptions& opts) {
  long q = opts.phi_faithful ? -m.q_exp() : m.q_exp();
  Rational t = opts.phi_faithful ? Rational(-m.t_exp()) : m.t_exp();
  json j{{"q", q}, {"t", to_json(t)}};
  if (m.has_classes()) {
    json classes = json::object();
    for (std::size_t i = 0; i < m.classes().size(); ++i) {
      if (m.classes()[i] == 0) continue;
      std::string label = ring && i < ring->sphere_classes.size() ? ring->sphere_classes[i].label
                                                                  : ("#" + std::to_string(i));
      classes[label] = m.classes()[i];
    }
    j["classes"] = std::move(classes);
  }
  return j;
}

json to_json(const novikov::NovikovScalar& s, const algebra::RingPtr& ring,
             const novikov::RenderOptions& opts) {
  json terms = json::array();
  for (const auto& [m, c] : s.terms())
    terms.push_back(json{{"coeff", to_json(c)}, {"monomial", to_json(m, ring, opts)}});
  return json{{"terms", std::move(terms)}, {"text", novikov::render(s, opts)}};
}

json to_json(const algebra::AlgebraElement& e, const novikov::RenderOptions& opts) {
  json terms = json::array();
  for (const auto& [i, s] : e.coords()) {
    for (const auto& [m, c] : s.terms()) {
      terms.push_back(json{{"basis", e.ring()->basis[static_cast<std::size_t>(i)].label},
                           {"coeff", to_json(c)},
                           {"monomial", to_json(m, e.ring(), opts)}});
    }
  }
  return json{{"terms", std::move(terms)}, {"text", algebra::render(e, opts)}};
}

json ring_info_json(const algebra::RingPtr& ring) {
  json basis = json::array();
  for (const auto& b : ring->basis)
    basis.push_back(json{{"label", b.label}, {"degree", b.degree}});
  json gens = json::array();
  for (const auto& g : ring->generators)
    gens.push_back(json{{"name", g.name}, {"degree", g.degree}});
  json classes = json::array();
  for (const auto& sc : ring->sphere_classes)
    classes.push_back(
        json{{"label", sc.label}, {"chern", sc.chern}, {"energy", to_json(sc.energy)}});
  return json{{"ring", ring->name},
              {"complex_dim", ring->complex_dim},
              {"mode", algebra::to_string(ring->mode)},
              {"kappa", to_json(ring->kappa)},
              {"min_chern", ring->min_chern},
              {"generators", std::move(gens)},
              {"basis", std::move(basis)},
              {"sphere_classes", std::move(classes)},
              {"relations", ring->relations}};
}

json table_json(const algebra::RingPtr& ring, const novikov::RenderOptions& opts) {
  json rows = json::array();
  const int n = ring->basis_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      json value = json::array();
      for (const auto& [k, s] : ring->entry(i, j))
        value.push_back(json{{"basis", ring->basis[static_cast<std::size_t>(k)].label},
                             {"scalar", to_json(s, ring, opts)}});
      rows.push_back(json{{"left", ring->basis[static_cast<std::size_t>(i)].label},
                          {"right", ring->basis[static_cast<std::size_t>(j)].label},
                          {"value", std::move(value)}});
    }
  }
  json info = ring_info_json(ring);
  info["table"] = std::move(rows);
  return info;
}

json order_report_json(const algebra::OrderReport& r, const novikov::RenderOptions& opts) {
  json j{{"subject", algebra::render(r.subject, opts)},
         {"finite", r.finite},
         {"search_cap", r.search_cap}};
  if (r.order) j["order"] = *r.order;
  if (r.scalar) j["scalar"] = to_json(*r.scalar, r.subject.ring(), opts);
  return j;
}

json unit_report_json(const units::UnitReport& r, const novikov::RenderOptions& opts) {
  json classes = json::array();
  for (const auto& e : r.classes) classes.push_back(to_json(e, opts));
  return json{{"ring", r.ring->name},
              {"coeff_bound", r.coeff_bound},
              {"kappa", to_json(r.ring->kappa)},
              {"classes", std::move(classes)},
              {"completeness", units::to_string(r.completeness)}};
}

json group_unit_report_json(const grouporder::GroupUnitReport& r) {
  json units = json::array();
  for (const auto& u : r.units) {
    const auto& [g, c] = *u.element.terms().begin();
    if (u.element.is_signed_monomial()) {
      units.push_back(json{{"sign", c > 0 ? 1 : -1}, {"element", g}});
    } else {
      json terms = json::array();
      for (const auto& [ge, ce] : u.element.terms())
        terms.push_back(json{{"element", ge}, {"coeff", ce}});
      units.push_back(json{{"terms", std::move(terms)}});
    }
  }
  return json{{"generators", r.group->generator_names},
              {"support_bound", r.params.support_bound},
              {"coeff_bound", r.params.coeff_bound},
              {"exponent_bound", r.params.exponent_bound},
              {"units", std::move(units)},
              {"all_signed_monomials", r.all_signed_monomials}};
}

json property_d_json(const propd::PropertyDReport& r, const novikov::RenderOptions& opts) {
  json dbasis = json::array();
  for (const auto& e : r.divisor_basis) dbasis.push_back(algebra::render(e, opts));
  json vbasis = json::array();
  for (const auto& e : r.complement_basis) vbasis.push_back(algebra::render(e, opts));
  json evidence = json::array();
  for (const auto& line : r.evidence)
    evidence.push_back(json{{"beta_multiple", line.beta_multiple},
                            {"beta_chern", line.beta_chern},
                            {"required_codegree_sum", line.required_sum},
                            {"codeg_d", line.codeg_d},
                            {"codeg_v", line.codeg_v},
                            {"feasible", line.feasible}});
  return json{{"ring", r.ring->name},
              {"kappa", to_json(r.ring->kappa)},
              {"status", propd::to_string(r.status)},
              {"divisor_basis", std::move(dbasis)},
              {"complement_basis", std::move(vbasis)},
              {"pairing_orthogonal", r.pairing_orthogonal},
              {"horizon_chern", r.horizon_chern},
              {"evidence", std::move(evidence)}};
}

json verdict_json(const propd::VanishingVerdict& v, const novikov::RenderOptions& opts) {
  json orders = json::array();
  for (const auto& r : v.orders) orders.push_back(order_report_json(r, opts));
  return json{{"ring", v.ring->name},
              {"kappa", to_json(v.ring->kappa)},
              {"coeff_bound", v.coeff_bound},
              {"order_cap", v.order_cap},
              {"property_d", property_d_json(v.property_d, opts)},
              {"orders", std::move(orders)},
              {"status", v.status == propd::VanishingStatus::satisfied ? "satisfied"
                                                                       : "not-established"},
              {"detail", v.detail}};
}

json envelope(const std::string& command, json payload) {
  json j{{"schema_version", kSchemaVersion}, {"command", command}};
  j["report"] = std::move(payload);
  return j;
}

}  // namespace qhforge::io
