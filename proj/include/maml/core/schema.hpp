#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "maml/core/element.hpp"

namespace maml {

// Value domain of a property.
enum class Domain {
  Text,            // any string
  Identifier,      // non-empty string without whitespace
  Url,             // non-empty string
  Color,           // #RRGGBB or #RRGGBBAA
  PositiveNumber,  // > 0
  NonNegativeNumber,
  FontStyle,       // normal | italic | oblique
  FontWeight,      // normal | bold | lighter | bolder | 1..1000
  TextAlign,       // left | right | center | justify
  Fit,             // fill | contain | cover
  Options,         // non-empty list of strings
  UrlList,         // non-empty list of non-empty strings
};

struct PropertySpec {
  std::string_view name;
  Domain domain;
  bool required;
};

struct PropertySchema {
  ElementKind kind;
  bool has_geometry;  // false only for script
  std::span<const PropertySpec> props;

  const PropertySpec* find(std::string_view name) const;

  // Mandatory set plus the kind's required extras.
  std::vector<std::string_view> required() const;
  std::vector<std::string_view> optional() const;
};

// Properties every renderable element carries.
inline constexpr std::string_view kMandatoryProperties[] = {"type", "x", "y", "z", "w", "h", "display"};

bool is_mandatory_property(std::string_view name);

const PropertySchema& schema_for(ElementKind kind);
std::span<const PropertySchema> all_schemas();

// Returns an empty string when `value` is in the domain, else the reason.
std::string check_domain(Domain domain, const PropertyValue& value);

}  // namespace maml
