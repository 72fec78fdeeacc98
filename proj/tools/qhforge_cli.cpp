// qhforge: exact quantum-homology rings, unit classification and vanishing
// certificates from the command line.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qhforge/catalog.hpp"
#include "qhforge/expr.hpp"
#include "qhforge/json_report.hpp"
#include "qhforge/verify.hpp"

namespace {

using namespace qhforge;
using algebra::AlgebraElement;
using algebra::RingPtr;
using io::json;

struct Options {
  std::string format = "text";
  bool phi_exponents = false;

  bool json_mode() const { return format == "json"; }
  novikov::RenderOptions render() const { return novikov::RenderOptions{phi_exponents}; }
};

long default_bound() {
  if (const char* env = std::getenv("QHFORGE_DEFAULT_BOUND")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw Error("Usage", "QHFORGE_DEFAULT_BOUND must be a positive integer");
  }
  return 5;
}

void emit(const Options& opts, const std::string& command, const json& payload,
          const std::string& text) {
  if (opts.json_mode())
    std::cout << io::envelope(command, payload).dump(2) << "\n";
  else
    std::cout << text;
}

std::string order_line(const algebra::OrderReport& rep, const novikov::RenderOptions& render) {
  std::string line = algebra::render(rep.subject, render) + ": ";
  if (rep.finite) {
    line += "order " + std::to_string(*rep.order) + ", scalar " +
            novikov::render(*rep.scalar, render);
  } else {
    line += "no order found up to cap " + std::to_string(rep.search_cap) + " (inconclusive)";
  }
  return line + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact quantum homology rings, Novikov coefficients, unit classification"};
  app.require_subcommand(1);
  Options opts;
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--phi-exponents", opts.phi_exponents,
               "render Novikov exponents in the e^{-A} |-> q^{-c1} t^{-w} convention");

  std::string ring_id, lhs, rhs, elem_expr, dump_path;
  long pow_exp = 0;
  long bound = -1;
  long cap = 64;
  int support = 3;
  long long coeff = 2;
  long exp_bound = 4;
  int c1vert = 0;
  std::string coupling = "0";

  auto add_ring_opt = [&](CLI::App* cmd) {
    cmd->add_option("--ring", ring_id, "ring id, e.g. g24, cpn:2, prod:cpn:1,cpn:2[@mode]")
        ->required();
  };

  // ring info|mul|pow|invert
  CLI::App* ring_cmd = app.add_subcommand("ring", "ring construction and arithmetic");
  ring_cmd->require_subcommand(1);
  CLI::App* ring_info = ring_cmd->add_subcommand("info", "basis, degrees and relations");
  add_ring_opt(ring_info);
  ring_info->add_option("--dump-table", dump_path, "write the full multiplication table as JSON");
  CLI::App* ring_mul = ring_cmd->add_subcommand("mul", "quantum product of two expressions");
  add_ring_opt(ring_mul);
  ring_mul->add_option("a", lhs, "left factor")->required();
  ring_mul->add_option("b", rhs, "right factor")->required();
  CLI::App* ring_pow = ring_cmd->add_subcommand("pow", "power of an expression");
  add_ring_opt(ring_pow);
  ring_pow->add_option("expr", elem_expr, "base expression")->required();
  ring_pow->add_option("k", pow_exp, "nonnegative exponent")->required();
  CLI::App* ring_invert = ring_cmd->add_subcommand("invert", "exact inverse of a unit");
  add_ring_opt(ring_invert);
  ring_invert->add_option("expr", elem_expr, "expression to invert")->required();

  // units classify|order
  CLI::App* units_cmd = app.add_subcommand("units", "top-degree integral unit analysis");
  units_cmd->require_subcommand(1);
  CLI::App* units_classify = units_cmd->add_subcommand("classify", "classify unit classes");
  add_ring_opt(units_classify);
  units_classify->add_option("--bound,-b", bound, "coefficient bound (default 5)");
  CLI::App* units_order = units_cmd->add_subcommand("order", "orders of the unit classes");
  add_ring_opt(units_order);
  units_order->add_option("--bound,-b", bound, "coefficient bound (default 5)");
  units_order->add_option("--cap", cap, "order search cap")->capture_default_str();

  // group units
  CLI::App* group_cmd = app.add_subcommand("group", "ordered group ring computations");
  group_cmd->require_subcommand(1);
  CLI::App* group_units = group_cmd->add_subcommand(
      "units", "exhaustive bounded unit search in the embedded group ring");
  add_ring_opt(group_units);
  group_units->add_option("--support", support, "maximal support size")->capture_default_str();
  group_units->add_option("--coeff", coeff, "coefficient bound")->capture_default_str();
  group_units->add_option("--exp-bound", exp_bound, "exponent box half-width")
      ->capture_default_str();

  // propd check
  CLI::App* propd_cmd = app.add_subcommand("propd", "divisor-pairing vanishing certificates");
  propd_cmd->require_subcommand(1);
  CLI::App* propd_check = propd_cmd->add_subcommand("check", "divisor subring and certificate");
  add_ring_opt(propd_check);

  // verdict
  CLI::App* verdict_cmd =
      app.add_subcommand("verdict", "combined vanishing-criteria verdict for a ring");
  add_ring_opt(verdict_cmd);
  verdict_cmd->add_option("--bound,-b", bound, "coefficient bound (default 5)");
  verdict_cmd->add_option("--cap", cap, "order search cap")->capture_default_str();

  // seidel phi-sigma
  CLI::App* seidel_cmd = app.add_subcommand("seidel", "section-class bookkeeping");
  seidel_cmd->require_subcommand(1);
  CLI::App* phi_sigma_cmd = seidel_cmd->add_subcommand(
      "phi-sigma", "apply the section-twisted coefficient map to an enriched element");
  add_ring_opt(phi_sigma_cmd);
  phi_sigma_cmd->add_option("--c1vert", c1vert, "vertical Chern number of the section")
      ->required();
  phi_sigma_cmd->add_option("--coupling", coupling, "coupling-class value (rational)")
      ->required();
  phi_sigma_cmd->add_option("--elem", elem_expr, "enriched element expression")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "run the full verification suite of catalog identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const novikov::RenderOptions render = opts.render();
  try {
    if (ring_info->parsed()) {
      RingPtr ring = catalog::make_ring(ring_id);
      if (!dump_path.empty()) {
        std::ofstream out(dump_path);
        if (!out) throw Error("Io", "cannot write " + dump_path);
        out << io::table_json(ring, render).dump(2) << "\n";
      }
      std::string text = "ring: " + ring->name + "\n";
      text += "complex dimension: " + std::to_string(ring->complex_dim) + "\n";
      text += "minimal Chern number: " + std::to_string(ring->min_chern) + "\n";
      text += "kappa: " + to_string(ring->kappa) + "\n";
      text += "basis (label, degree):\n";
      for (const auto& b : ring->basis)
        text += "  " + b.label + "  " + std::to_string(b.degree) + "\n";
      text += "relations:\n";
      for (const auto& r : ring->relations) text += "  " + r + "\n";
      if (!dump_path.empty()) text += "table written to " + dump_path + "\n";
      emit(opts, "ring info", io::ring_info_json(ring), text);
      return 0;
    }
    if (ring_mul->parsed()) {
      RingPtr ring = catalog::make_ring(ring_id);
      AlgebraElement prod =
          multiply(expr::parse_element(ring, lhs), expr::parse_element(ring, rhs));
      emit(opts, "ring mul", io::to_json(prod, render), algebra::render(prod, render) + "\n");
      return 0;
    }
    if (ring_pow->parsed()) {
      RingPtr ring = catalog::make_ring(ring_id);
      AlgebraElement result = power(expr::parse_element(ring, elem_expr), pow_exp);
      emit(opts, "ring pow", io::to_json(result, render), algebra::render(result, render) + "\n");
      return 0;
    }
    if (ring_invert->parsed()) {
      RingPtr ring = catalog::make_ring(ring_id);
      AlgebraElement elem = expr::parse_element(ring, elem_expr);
      try {
        AlgebraElement inv = algebra::inverse(elem);
        emit(opts, "ring invert", io::to_json(inv, render), algebra::render(inv, render) + "\n");
        return 0;
      } catch (const algebra::NotAUnitError& e) {
        json payload{{"error", e.code()},
                     {"message", e.what()},
                     {"witness", io::to_json(e.witness, render)}};
        emit(opts, "ring invert", payload,
             std::string("not a unit\nwitness: ") + algebra::render(e.witness, render) + "\n");
        return 1;
      }
    }
    if (units_classify->parsed()) {
      RingPtr ring = catalog::make_ring(ring_id);
      units::UnitReport report =
          units::classify_top_units(ring, bound > 0 ? bound : default_bound());
      std::string text = "ring: " + report.ring->name + "\n";
      text += "coefficient bound: " + std::to_string(report.coeff_bound) + "\n";
      for (const auto& e : report.classes) text += "unit: " + algebra::render(e, render) + "\n";
      text += "completeness: " + units::to_string(report.completeness) + "\n";
      emit(opts, "units classify", io::unit_report_json(report, render), text);
      return 0;
    }
    if (units_order->parsed()) {
      RingPtr ring = catalog::make_ring(ring_id);
      long used_bound = bound > 0 ? bound : default_bound();
      units::UnitReport report = units::classify_top_units(ring, used_bound);
      auto orders = units::finite_order_verdict(ring, used_bound, cap);
      json order_list = json::array();
      std::string text;
      for (const auto& rep : orders) {
        order_list.push_back(io::order_report_json(rep, render));
        text += order_line(rep, render);
      }
      json payload{{"ring", report.ring->name},
                   {"coeff_bound", used_bound},
                   {"order_cap", cap},
                   {"completeness", units::to_string(report.completeness)},
                   {"orders", std::move(order_list)}};
      emit(opts, "units order", payload, text);
      return 0;
    }
    if (group_units->parsed()) {
      catalog::CatalogId id = catalog::CatalogId::parse(ring_id);
      RingPtr ring = catalog::make_ring(id.with_mode(algebra::CoeffMode::enriched));
      grouporder::QenrEmbedding embedding = grouporder::embed_product_qenr(ring);
      grouporder::UnitSearchParams params;
      params.support_bound = support;
      params.coeff_bound = coeff;
      params.exponent_bound = exp_bound;
      grouporder::GroupUnitReport report = grouporder::classify_gr_units(embedding.group(), params);
      std::string text = "group rank: " + std::to_string(report.group->rank()) + "\n";
      text += "units found: " + std::to_string(report.units.size()) + "\n";
      text += std::string("all signed monomials: ") +
              (report.all_signed_monomials ? "yes" : "no") + "\n";
      emit(opts, "group units", io::group_unit_report_json(report), text);
      return 0;
    }
    if (propd_check->parsed()) {
      RingPtr ring = catalog::make_ring(ring_id);
      propd::PropertyDReport report = propd::check_property_d(ring);
      std::string text = "ring: " + report.ring->name + "\n";
      text += "status: " + propd::to_string(report.status) + "\n";
      text += "divisor subring basis:";
      for (const auto& e : report.divisor_basis) text += " " + algebra::render(e, render) + ";";
      text += "\ncomplement basis:";
      if (report.complement_basis.empty()) text += " (empty)";
      for (const auto& e : report.complement_basis) text += " " + algebra::render(e, render) + ";";
      text += "\n";
      for (const auto& line : report.evidence) {
        if (line.beta_multiple != 1) continue;
        text += "beta = 1*line: required codegree sum " + std::to_string(line.required_sum) +
                ", pair (" + std::to_string(line.codeg_d) + ", " + std::to_string(line.codeg_v) +
                ") " + (line.feasible ? "feasible" : "infeasible") + "\n";
      }
      emit(opts, "propd check", io::property_d_json(report, render), text);
      return 0;
    }
    if (verdict_cmd->parsed()) {
      RingPtr ring = catalog::make_ring(ring_id);
      propd::VanishingVerdict verdict =
          propd::vanishing_verdict(ring, bound > 0 ? bound : default_bound(), cap);
      std::string text = "ring: " + verdict.ring->name + "\n";
      text += "property D: " + propd::to_string(verdict.property_d.status) + "\n";
      for (const auto& rep : verdict.orders) text += order_line(rep, render);
      text += "verdict: " + verdict.detail + "\n";
      emit(opts, "verdict", io::verdict_json(verdict, render), text);
      return 0;
    }
    if (phi_sigma_cmd->parsed()) {
      catalog::CatalogId id = catalog::CatalogId::parse(ring_id);
      RingPtr enriched = catalog::make_ring(id.with_mode(algebra::CoeffMode::enriched));
      RingPtr universal = catalog::make_ring(id.with_mode(algebra::CoeffMode::universal));
      AlgebraElement elem = expr::parse_element(enriched, elem_expr);
      units::SectionData section{c1vert, expr::parse_rational(coupling)};
      AlgebraElement image = units::phi_sigma(elem, section, universal);
      emit(opts, "seidel phi-sigma", io::to_json(image, render),
           algebra::render(image, render) + "\n");
      return 0;
    }
    if (verify_cmd->parsed()) {
      auto results = qhforge::verify::run_all();
      bool all_passed = true;
      json payload = json::array();
      std::string text;
      for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        payload.push_back(json{{"name", r.name},
                               {"passed", r.passed},
                               {"seconds", r.seconds},
                               {"detail", r.detail}});
        text += std::string(r.passed ? "PASS " : "FAIL ") + r.name +
                (r.detail.empty() ? "" : ": " + r.detail) + "\n";
        std::cerr << r.name << ": " << r.seconds << "s\n";
      }
      emit(opts, "verify-paper", payload, text);
      return all_passed ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (opts.json_mode()) {
      std::cout << io::envelope("error", json{{"error", e.code()}, {"message", e.what()}}).dump(2)
                << "\n";
    } else {
      std::cerr << "error[" << e.code() << "]: " << e.what() << "\n";
    }
    return 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
