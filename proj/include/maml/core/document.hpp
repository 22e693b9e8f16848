#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "maml/core/diagnostic.hpp"
#include "maml/core/element.hpp"

namespace maml {

struct Document {
  std::int64_t viewport_width = 0;
  std::vector<Element> elements;

  // The script element, when present. Valid documents hold it last.
  const Element* script() const;
  std::optional<std::string_view> script_code() const;

  // Finds a non-script element by id, or nullptr.
  const Element* find(std::string_view id) const;

  bool operator==(const Document&) const = default;
};

// Checks document-level invariants (viewport, script placement, id uniqueness)
// and resolves every script reference. Diagnostics come out in document order.
std::vector<Diagnostic> validate_document(const Document& doc);

}  // namespace maml
