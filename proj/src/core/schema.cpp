#include "maml/core/schema.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

namespace maml {
namespace {

constexpr PropertySpec kTextProps[] = {
    {"color", Domain::Color, false},         {"fontFamily", Domain::Text, false},
    {"fontSize", Domain::PositiveNumber, false}, {"fontStyle", Domain::FontStyle, false},
    {"fontWeight", Domain::FontWeight, false}, {"id", Domain::Identifier, false},
    {"text", Domain::Text, true},            {"textAlign", Domain::TextAlign, false},
};
constexpr PropertySpec kShapeProps[] = {
    {"backgroundColor", Domain::Color, false},
    {"borderRadius", Domain::NonNegativeNumber, false},
    {"id", Domain::Identifier, false},
};
constexpr PropertySpec kTextFieldProps[] = {
    {"backgroundColor", Domain::Color, false},
    {"id", Domain::Identifier, false},
    {"placeholder", Domain::Text, false},
};
constexpr PropertySpec kButtonProps[] = {
    {"id", Domain::Identifier, false},
    {"text", Domain::Text, true},
};
constexpr PropertySpec kDropdownProps[] = {
    {"id", Domain::Identifier, false},
    {"options", Domain::Options, true},
};
constexpr PropertySpec kImageProps[] = {
    {"alt", Domain::Text, false},
    {"fit", Domain::Fit, false},
    {"id", Domain::Identifier, false},
    {"src", Domain::Url, true},
};
constexpr PropertySpec kCarouselProps[] = {
    {"id", Domain::Identifier, false},
    {"srcs", Domain::UrlList, true},
};
constexpr PropertySpec kVideoProps[] = {
    {"id", Domain::Identifier, false},
    {"src", Domain::Url, true},
};
constexpr PropertySpec kScriptProps[] = {
    {"code", Domain::Text, true},
};

const std::array<PropertySchema, kElementKindCount> kSchemas = {{
    {ElementKind::Text, true, kTextProps},
    {ElementKind::Shape, true, kShapeProps},
    {ElementKind::TextField, true, kTextFieldProps},
    {ElementKind::Button, true, kButtonProps},
    {ElementKind::Dropdown, true, kDropdownProps},
    {ElementKind::Image, true, kImageProps},
    {ElementKind::Carousel, true, kCarouselProps},
    {ElementKind::Video, true, kVideoProps},
    {ElementKind::Script, false, kScriptProps},
}};

bool is_hex(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isxdigit(c) != 0; });
}

bool one_of(std::string_view value, std::initializer_list<std::string_view> allowed) {
  return std::find(allowed.begin(), allowed.end(), value) != allowed.end();
}

}  // namespace

const PropertySpec* PropertySchema::find(std::string_view name) const {
  for (const auto& spec : props) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

std::vector<std::string_view> PropertySchema::required() const {
  std::vector<std::string_view> out;
  if (has_geometry) {
    out.assign(std::begin(kMandatoryProperties), std::end(kMandatoryProperties));
  } else {
    out.push_back("type");
  }
  for (const auto& spec : props) {
    if (spec.required) out.push_back(spec.name);
  }
  return out;
}

std::vector<std::string_view> PropertySchema::optional() const {
  std::vector<std::string_view> out;
  for (const auto& spec : props) {
    if (!spec.required) out.push_back(spec.name);
  }
  return out;
}

bool is_mandatory_property(std::string_view name) {
  return std::find(std::begin(kMandatoryProperties), std::end(kMandatoryProperties), name) !=
         std::end(kMandatoryProperties);
}

const PropertySchema& schema_for(ElementKind kind) { return kSchemas[static_cast<std::size_t>(kind)]; }

std::span<const PropertySchema> all_schemas() { return kSchemas; }

std::string check_domain(Domain domain, const PropertyValue& value) {
  const auto* str = std::get_if<std::string>(&value);
  const auto* num = std::get_if<double>(&value);
  const auto* list = std::get_if<StringList>(&value);

  switch (domain) {
    case Domain::Text:
      return str ? "" : "expected a string";
    case Domain::Identifier:
      if (!str || str->empty()) return "expected a non-empty string";
      if (std::any_of(str->begin(), str->end(), [](unsigned char c) { return std::isspace(c) != 0; }))
        return "identifiers may not contain whitespace";
      return "";
    case Domain::Url:
      return str && !str->empty() ? "" : "expected a non-empty URL string";
    case Domain::Color:
      if (str && (str->size() == 7 || str->size() == 9) && (*str)[0] == '#' &&
          is_hex(std::string_view(*str).substr(1)))
        return "";
      return "expected #RRGGBB or #RRGGBBAA";
    case Domain::PositiveNumber:
      return num && std::isfinite(*num) && *num > 0 ? "" : "expected a number > 0";
    case Domain::NonNegativeNumber:
      return num && std::isfinite(*num) && *num >= 0 ? "" : "expected a number >= 0";
    case Domain::FontStyle:
      return str && one_of(*str, {"normal", "italic", "oblique"}) ? "" : "expected normal, italic or oblique";
    case Domain::FontWeight:
      if (str && one_of(*str, {"normal", "bold", "lighter", "bolder"})) return "";
      if (num && *num >= 1 && *num <= 1000) return "";
      return "expected normal, bold, lighter, bolder or a weight in 1..1000";
    case Domain::TextAlign:
      return str && one_of(*str, {"left", "right", "center", "justify"})
                 ? ""
                 : "expected left, right, center or justify";
    case Domain::Fit:
      return str && one_of(*str, {"fill", "contain", "cover"}) ? "" : "expected fill, contain or cover";
    case Domain::Options:
      return list && !list->empty() ? "" : "expected a non-empty list of strings";
    case Domain::UrlList:
      if (!list || list->empty()) return "expected a non-empty list of URLs";
      if (std::any_of(list->begin(), list->end(), [](const std::string& s) { return s.empty(); }))
        return "URLs may not be empty";
      return "";
  }
  return "unknown domain";
}

}  // namespace maml
