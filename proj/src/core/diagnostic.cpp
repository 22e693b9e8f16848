#include "maml/core/diagnostic.hpp"

#include <algorithm>

namespace maml {

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

Diagnostic make_error(std::string code, std::string message) {
  Diagnostic d;
  d.severity = Severity::Error;
  d.code = std::move(code);
  d.message = std::move(message);
  return d;
}

Diagnostic make_warning(std::string code, std::string message) {
  Diagnostic d = make_error(std::move(code), std::move(message));
  d.severity = Severity::Warning;
  return d;
}

bool has_errors(std::span<const Diagnostic> diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string format_diagnostic(std::string_view file, const Diagnostic& d) {
  std::string out(file);
  out += ':';
  out += std::to_string(d.line.value_or(0));
  out += ": ";
  out += to_string(d.severity);
  out += ": ";
  out += d.code;
  out += ": ";
  out += d.message;
  return out;
}

}  // namespace maml
