#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maml/core/document.hpp"
#include "maml/script/wiring.hpp"

namespace maml::transpile {

struct HtmlPage {
  std::string text;
  // Remote media URLs (images, carousel frames, videos), first-use order, unique.
  std::vector<std::string> asset_manifest;
};

// One self-contained HTML5 page: every element becomes one absolutely
// positioned child of <body> in document order, with inline styles only,
// followed by the runtime <script>. Expects a validated document and wiring
// lowered from its checked script.
HtmlPage transpile_document(const Document& doc, const script::EventWiring& wiring);

// Parses, checks and lowers the document's own script, then transpiles.
// Throws std::invalid_argument if the script does not check cleanly.
HtmlPage transpile_document(const Document& doc);

// Markup for one element; empty for script elements.
std::string render_element(const Element& el);

// Inline style declaration for one element (no trailing semicolon).
std::string element_style(const Element& el);

std::string manifest_json(const HtmlPage& page);

// Escapes &, <, >, " and ' for text and attribute contexts.
std::string escape_html(std::string_view text);

}  // namespace maml::transpile
