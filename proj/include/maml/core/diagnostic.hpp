#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace maml {

enum class Severity { Warning, Error };

std::string_view to_string(Severity severity);

// A located finding. `element_index` is the position in Document::elements;
// `line` is filled in by the file parser when the source text is known.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::optional<std::size_t> element_index;
  std::string property;
  std::string subject;
  std::optional<std::size_t> line;

  bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_error(std::string code, std::string message);
Diagnostic make_warning(std::string code, std::string message);

bool has_errors(std::span<const Diagnostic> diagnostics);

// "file:line: severity: code: message"; line 0 when unknown.
std::string format_diagnostic(std::string_view file, const Diagnostic& d);

}  // namespace maml
