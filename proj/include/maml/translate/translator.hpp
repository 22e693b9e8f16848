#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "maml/core/diagnostic.hpp"
#include "maml/core/document.hpp"
#include "maml/translate/snapshot.hpp"

namespace maml::translate {

// Element kind a captured node maps to, or nullopt when the node contributes
// nothing itself (its children are still visited):
//   img -> image; text-like input -> text-field; button, input[button|submit]
//   -> button; select -> dropdown; video -> video; own text -> text;
//   visible background with area -> shape.
// Visibility (display none, visibility hidden, zero area) is not considered
// here; translate_snapshot filters on it.
std::optional<ElementKind> classify_node(const SnapshotNode& node);

// True when the node paints a non-transparent background over a non-zero area.
bool has_visible_background(const SnapshotNode& node);

// Stacking order for classified nodes listed in depth-first order. Explicit
// z-index values are kept; every other node gets its position in the list,
// so auto-stacked nodes keep their relative paint order.
std::vector<std::int64_t> assign_z(std::span<const std::optional<std::int64_t>> explicit_z);

// Parses a computed CSS color ("rgb(...)", "rgba(...)", "#rgb", "#rrggbb",
// "#rrggbbaa", "transparent") to #rrggbb or #rrggbbaa; nullopt when fully
// transparent or unparseable.
std::optional<std::string> css_color_to_hex(std::string_view css);

struct TranslateResult {
  Document document;
  std::vector<Diagnostic> warnings;
};

// Depth-first conversion of a captured page into a MAML document with
// viewport_width = snapshot viewport width. Elements keep their source rect
// exactly; ids are preserved when usable, otherwise "el<paint_index>".
// A node with both own text and a visible background yields a shape followed
// by a text element on the same rect. Never emits a script element.
TranslateResult translate_snapshot(const LayoutSnapshot& snap);

}  // namespace maml::translate
