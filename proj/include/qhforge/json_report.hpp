#pragma once

#include <json.hpp>

#include "qhforge/algebra.hpp"
#include "qhforge/group_order.hpp"
#include "qhforge/property_d.hpp"
#include "qhforge/unit_analysis.hpp"

namespace qhforge::io {

inline constexpr int kSchemaVersion = 1;

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const novikov::NovikovMonomial& m, const algebra::RingPtr& ring = nullptr,
             const novikov::RenderOptions& opts = {});
json to_json(const novikov::NovikovScalar& s, const algebra::RingPtr& ring = nullptr,
             const novikov::RenderOptions& opts = {});
json to_json(const algebra::AlgebraElement& e, const novikov::RenderOptions& opts = {});

json ring_info_json(const algebra::RingPtr& ring);
json table_json(const algebra::RingPtr& ring, const novikov::RenderOptions& opts = {});

json order_report_json(const algebra::OrderReport& r, const novikov::RenderOptions& opts = {});
json unit_report_json(const units::UnitReport& r, const novikov::RenderOptions& opts = {});
json group_unit_report_json(const grouporder::GroupUnitReport& r);
json property_d_json(const propd::PropertyDReport& r, const novikov::RenderOptions& opts = {});
json verdict_json(const propd::VanishingVerdict& v, const novikov::RenderOptions& opts = {});

// Wraps a payload with the schema version and command name.
json envelope(const std::string& command, json payload);

}  // namespace qhforge::io
