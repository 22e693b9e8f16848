#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "maml/core/diagnostic.hpp"
#include "maml/core/document.hpp"

namespace maml {

// .maml files: UTF-8 without BOM, line 1 is {"viewport_width":N}, each
// following non-empty line is one element object.

struct ParseOptions {
  ValidationMode mode = ValidationMode::Strict;
  std::size_t max_bytes = 16u << 20;
};

enum class ParseErrc {
  TooLarge,
  MalformedHeader,
  MalformedLine,
  InvalidElements,  // one or more element lines failed make_element
  InvalidDocument,  // validate_document reported errors (strict mode)
};

std::string_view to_string(ParseErrc code);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrc code, std::vector<Diagnostic> issues);

  ParseErrc code() const noexcept { return code_; }
  // Every problem found, each carrying its 1-based source line.
  const std::vector<Diagnostic>& issues() const noexcept { return issues_; }
  std::size_t line() const noexcept;

 private:
  ParseErrc code_;
  std::vector<Diagnostic> issues_;
};

struct ParsedDocument {
  Document document;
  // Warnings (and, in lenient mode, errors that did not stop parsing).
  std::vector<Diagnostic> diagnostics;
  // 1-based source line of each element in document.elements.
  std::vector<std::size_t> element_lines;
};

// Strict mode throws on the first malformed line's pass, aggregating every
// element error; lenient mode drops bad lines and unknown keys and reports
// them as diagnostics. A malformed header always throws.
ParsedDocument parse_document(std::string_view source, const ParseOptions& options = {});

// Canonical form: header first; one element per line with keys ordered
// type, x, y, z, w, h, display, then the kind's own keys alphabetically;
// no whitespace; trailing newline.
std::string serialize_document(const Document& doc);
std::string serialize_element(const Element& el);

// serialize_document(parse_document(source)).
std::string format_document(std::string_view source, const ParseOptions& options = {});

}  // namespace maml
