#include "maml/core/element.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "maml/core/schema.hpp"

namespace maml {
namespace {

constexpr std::array<std::string_view, kElementKindCount> kTypeNames = {
    "text", "shape", "text-field", "button", "dropdown", "img", "carousel", "video", "script",
};

std::optional<PropertyValue> to_value(const nlohmann::json& j) {
  if (j.is_boolean()) return PropertyValue{j.get<bool>()};
  if (j.is_number()) return PropertyValue{j.get<double>()};
  if (j.is_string()) return PropertyValue{j.get<std::string>()};
  if (j.is_array()) {
    StringList list;
    list.reserve(j.size());
    for (const auto& item : j) {
      if (!item.is_string()) return std::nullopt;
      list.push_back(item.get<std::string>());
    }
    return PropertyValue{std::move(list)};
  }
  return std::nullopt;
}

double require_number(const nlohmann::json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ModelError(ModelErrc::MissingMandatoryProperty, name, "missing");
  if (!it->is_number()) throw ModelError(ModelErrc::BadValue, name, "expected a number");
  double v = it->get<double>();
  if (!std::isfinite(v)) throw ModelError(ModelErrc::BadValue, name, "expected a finite number");
  return v;
}

}  // namespace

std::string_view type_name(ElementKind kind) { return kTypeNames[static_cast<std::size_t>(kind)]; }

std::optional<ElementKind> kind_from_type(std::string_view type) {
  if (type == "image") return ElementKind::Image;
  for (std::size_t i = 0; i < kTypeNames.size(); ++i) {
    if (kTypeNames[i] == type) return static_cast<ElementKind>(i);
  }
  return std::nullopt;
}

std::string_view to_string(ModelErrc code) {
  switch (code) {
    case ModelErrc::UnknownKind: return "UnknownKind";
    case ModelErrc::MissingMandatoryProperty: return "MissingMandatoryProperty";
    case ModelErrc::IllegalProperty: return "IllegalProperty";
    case ModelErrc::BadValue: return "BadValue";
  }
  return "ModelError";
}

ModelError::ModelError(ModelErrc code, std::string property, const std::string& reason)
    : std::runtime_error(property.empty() ? reason : "property \"" + property + "\": " + reason),
      code_(code),
      property_(std::move(property)) {}

std::optional<std::string_view> Element::id() const {
  if (const auto* s = string_prop("id")) return std::string_view(*s);
  return std::nullopt;
}

const std::string* Element::string_prop(std::string_view name) const {
  auto it = props_.find(std::string(name));
  return it == props_.end() ? nullptr : std::get_if<std::string>(&it->second);
}

const StringList* Element::list_prop(std::string_view name) const {
  auto it = props_.find(std::string(name));
  return it == props_.end() ? nullptr : std::get_if<StringList>(&it->second);
}

std::optional<double> Element::number_prop(std::string_view name) const {
  auto it = props_.find(std::string(name));
  if (it == props_.end()) return std::nullopt;
  if (const auto* d = std::get_if<double>(&it->second)) return *d;
  return std::nullopt;
}

Element make_element(const nlohmann::json& props, ValidationMode mode, std::vector<Diagnostic>* warnings) {
  if (!props.is_object()) throw ModelError(ModelErrc::BadValue, "", "element must be a JSON object");

  auto type_it = props.find("type");
  if (type_it == props.end()) throw ModelError(ModelErrc::MissingMandatoryProperty, "type", "missing");
  if (!type_it->is_string()) throw ModelError(ModelErrc::BadValue, "type", "expected a string");
  auto kind = kind_from_type(type_it->get_ref<const std::string&>());
  if (!kind) {
    throw ModelError(ModelErrc::UnknownKind, "type",
                     "unknown element type \"" + type_it->get<std::string>() + "\"");
  }

  const PropertySchema& schema = schema_for(*kind);
  Element el;
  el.kind_ = *kind;

  if (schema.has_geometry) {
    el.geometry_.x = require_number(props, "x");
    el.geometry_.y = require_number(props, "y");
    el.geometry_.w = require_number(props, "w");
    el.geometry_.h = require_number(props, "h");
    double z = require_number(props, "z");
    if (z != std::floor(z) || std::fabs(z) > 9.0e15)
      throw ModelError(ModelErrc::BadValue, "z", "expected an integer");
    el.geometry_.z = static_cast<std::int64_t>(z);
    if (el.geometry_.x < 0) throw ModelError(ModelErrc::BadValue, "x", "must be >= 0");
    if (el.geometry_.y < 0) throw ModelError(ModelErrc::BadValue, "y", "must be >= 0");
    if (el.geometry_.w <= 0) throw ModelError(ModelErrc::BadValue, "w", "must be > 0");
    if (el.geometry_.h <= 0) throw ModelError(ModelErrc::BadValue, "h", "must be > 0");

    // Absent display means visible.
    if (auto it = props.find("display"); it != props.end()) {
      if (!it->is_boolean()) throw ModelError(ModelErrc::BadValue, "display", "expected true or false");
      el.display_ = it->get<bool>();
    }
  }

  for (const auto& [key, raw] : props.items()) {
    if (key == "type") continue;
    if (schema.has_geometry && is_mandatory_property(key)) continue;

    std::string name = key;
    if (*kind == ElementKind::Image && key == "objectFit") {
      name = "fit";
      auto other = props.find("fit");
      if (other != props.end() && *other != raw)
        throw ModelError(ModelErrc::BadValue, "fit", "\"fit\" and \"objectFit\" disagree");
    }

    const PropertySpec* spec = schema.find(name);
    if (spec == nullptr) {
      if (mode == ValidationMode::Strict)
        throw ModelError(ModelErrc::IllegalProperty, key,
                         "not allowed on " + std::string(type_name(*kind)) + " elements");
      if (warnings) {
        Diagnostic d = make_warning("DroppedProperty", "dropped unknown property \"" + key + "\"");
        d.property = key;
        warnings->push_back(std::move(d));
      }
      continue;
    }

    auto value = to_value(raw);
    if (!value) throw ModelError(ModelErrc::BadValue, name, "unsupported JSON value");
    if (std::string reason = check_domain(spec->domain, *value); !reason.empty())
      throw ModelError(ModelErrc::BadValue, name, reason);
    el.props_.insert_or_assign(std::move(name), std::move(*value));
  }

  for (const auto& spec : schema.props) {
    if (spec.required && !el.props_.contains(std::string(spec.name)))
      throw ModelError(ModelErrc::MissingMandatoryProperty, std::string(spec.name), "missing");
  }
  return el;
}

std::optional<PropertyValue> get_prop(const Element& el, std::string_view name) {
  if (name == "type") return PropertyValue{std::string(type_name(el.kind()))};
  if (el.kind() != ElementKind::Script && name.size() <= 7) {
    const Geometry& g = el.geometry();
    if (name == "x") return PropertyValue{g.x};
    if (name == "y") return PropertyValue{g.y};
    if (name == "z") return PropertyValue{static_cast<double>(g.z)};
    if (name == "w") return PropertyValue{g.w};
    if (name == "h") return PropertyValue{g.h};
    if (name == "display") return PropertyValue{el.displayed()};
  }
  if (el.kind() == ElementKind::Image && name == "objectFit") name = "fit";
  auto it = el.properties().find(std::string(name));
  if (it == el.properties().end()) return std::nullopt;
  return it->second;
}

}  // namespace maml
