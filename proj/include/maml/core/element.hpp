#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <json.hpp>

#include "maml/core/diagnostic.hpp"

namespace maml {

enum class ElementKind : std::uint8_t {
  Text,
  Shape,
  TextField,
  Button,
  Dropdown,
  Image,
  Carousel,
  Video,
  Script,
};

inline constexpr std::size_t kElementKindCount = 9;

// The `type` token used in .maml files. Image is spelled "img".
std::string_view type_name(ElementKind kind);

// Accepts every canonical type token plus the alias "image".
std::optional<ElementKind> kind_from_type(std::string_view type);

using StringList = std::vector<std::string>;

// Numbers are always held as double; integral values serialize without a
// fractional part.
using PropertyValue = std::variant<bool, double, std::string, StringList>;
using PropertyMap = std::unordered_map<std::string, PropertyValue>;

struct Geometry {
  double x = 0;
  double y = 0;
  std::int64_t z = 0;
  double w = 0;
  double h = 0;

  bool operator==(const Geometry&) const = default;
};

enum class ValidationMode { Strict, Lenient };

enum class ModelErrc {
  UnknownKind,
  MissingMandatoryProperty,
  IllegalProperty,
  BadValue,
};

std::string_view to_string(ModelErrc code);

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrc code, std::string property, const std::string& reason);

  ModelErrc code() const noexcept { return code_; }
  const std::string& property() const noexcept { return property_; }

 private:
  ModelErrc code_;
  std::string property_;
};

class Element {
 public:
  ElementKind kind() const noexcept { return kind_; }
  const Geometry& geometry() const noexcept { return geometry_; }
  bool displayed() const noexcept { return display_; }

  // Kind-specific properties only; mandatory ones are exposed above.
  const PropertyMap& properties() const noexcept { return props_; }

  std::optional<std::string_view> id() const;
  const std::string* string_prop(std::string_view name) const;
  const StringList* list_prop(std::string_view name) const;
  std::optional<double> number_prop(std::string_view name) const;

  bool operator==(const Element&) const = default;

 private:
  friend Element make_element(const nlohmann::json&, ValidationMode, std::vector<Diagnostic>*);

  ElementKind kind_ = ElementKind::Shape;
  Geometry geometry_;
  bool display_ = true;
  PropertyMap props_;
};

// Builds a validated element from one flat JSON object. Throws ModelError.
// In lenient mode unknown keys are dropped and reported through `warnings`.
Element make_element(const nlohmann::json& props, ValidationMode mode = ValidationMode::Strict,
                     std::vector<Diagnostic>* warnings = nullptr);

// Constant-time lookup over mandatory and kind-specific properties.
// Absent for legal-but-unset optionals and for names the kind does not carry.
std::optional<PropertyValue> get_prop(const Element& el, std::string_view name);

// Rendering defaults for optional properties.
namespace defaults {
inline constexpr std::string_view kFit = "fill";
inline constexpr std::string_view kTextColor = "#000000";
inline constexpr std::string_view kBackgroundColor = "transparent";
inline constexpr double kFontSize = 16;
inline constexpr std::string_view kFontFamily = "sans-serif";
}  // namespace defaults

}  // namespace maml
