#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace maml::translate {

inline constexpr int kSnapshotSchemaVersion = 1;

struct Rect {
  double x = 0;
  double y = 0;
  double w = 0;
  double h = 0;

  bool operator==(const Rect&) const = default;
};

// One DOM element as captured by the page extractor. Style holds the computed
// subset {backgroundColor, borderRadius, color, fontFamily, fontSize,
// fontStyle, fontWeight, textAlign, zIndex, displayKind, visibility,
// objectFit} as strings; text is the element's own (direct) text only.
struct SnapshotNode {
  std::string tag;
  std::map<std::string, std::string> attrs;
  Rect rect;
  std::map<std::string, std::string> style;
  std::string text;
  std::vector<SnapshotNode> children;
  std::int64_t paint_index = 0;
  std::string warning;  // set by the extractor for opaque nodes such as cross-origin frames

  const std::string* attr(std::string_view name) const;
  std::string_view style_value(std::string_view name) const;  // "" when absent

  bool operator==(const SnapshotNode&) const = default;
};

struct LayoutSnapshot {
  std::int64_t viewport_width = 0;
  std::int64_t viewport_height = 0;
  SnapshotNode root;

  bool operator==(const LayoutSnapshot&) const = default;
};

enum class SnapshotErrc { Malformed, SchemaMismatch, Invalid };

class SnapshotError : public std::runtime_error {
 public:
  SnapshotError(SnapshotErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  SnapshotErrc code() const noexcept { return code_; }

 private:
  SnapshotErrc code_;
};

// Reads {"schema":1,"viewport":{"width":W,"height":H},"root":node}.
// Throws SnapshotError: Malformed for bad JSON/shape, SchemaMismatch for any
// schema other than 1, Invalid when viewport.width <= 0 or paint_index does
// not strictly increase in depth-first order.
LayoutSnapshot parse_snapshot(std::string_view text);
LayoutSnapshot snapshot_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LayoutSnapshot& snap);

}  // namespace maml::translate
