#include "maml/format/maml_file.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "maml/format/json_text.hpp"

namespace maml {
namespace {

struct SourceLine {
  std::size_t number;
  std::string_view text;
};

std::vector<SourceLine> split_lines(std::string_view source) {
  std::vector<SourceLine> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view text = source.substr(start, end - start);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    bool blank = std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c) != 0; });
    if (!blank) lines.push_back({number, text});
    if (end == source.size()) break;
    start = end + 1;
    ++number;
  }
  return lines;
}

Diagnostic at_line(Diagnostic d, std::size_t line) {
  d.line = line;
  return d;
}

[[noreturn]] void header_error(std::size_t line, std::string message) {
  throw ParseError(ParseErrc::MalformedHeader, {at_line(make_error("MalformedHeader", std::move(message)), line)});
}

std::int64_t parse_header(const SourceLine& line, ValidationMode mode, std::vector<Diagnostic>& warnings) {
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line.text);
  } catch (const nlohmann::json::exception& e) {
    header_error(line.number, std::string("header is not valid JSON: ") + e.what());
  }
  if (!header.is_object()) header_error(line.number, "header must be a JSON object");
  auto it = header.find("viewport_width");
  if (it == header.end()) header_error(line.number, "header lacks viewport_width");
  if (!it->is_number_integer() || it->get<std::int64_t>() <= 0)
    header_error(line.number, "viewport_width must be a positive integer");
  for (const auto& [key, value] : header.items()) {
    if (key == "viewport_width") continue;
    if (mode == ValidationMode::Strict) header_error(line.number, "unknown header key \"" + key + "\"");
    Diagnostic d = make_warning("DroppedProperty", "dropped unknown header key \"" + key + "\"");
    d.property = key;
    warnings.push_back(at_line(std::move(d), line.number));
  }
  return it->get<std::int64_t>();
}

void append_value(std::string& out, const PropertyValue& value) {
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          out += v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          json_text::append_number(out, v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          json_text::append_string(out, v);
        } else {
          out += '[';
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ',';
            json_text::append_string(out, v[i]);
          }
          out += ']';
        }
      },
      value);
}

}  // namespace

std::string_view to_string(ParseErrc code) {
  switch (code) {
    case ParseErrc::TooLarge: return "TooLarge";
    case ParseErrc::MalformedHeader: return "MalformedHeader";
    case ParseErrc::MalformedLine: return "MalformedLine";
    case ParseErrc::InvalidElements: return "InvalidElements";
    case ParseErrc::InvalidDocument: return "InvalidDocument";
  }
  return "ParseError";
}

namespace {
std::string summarize(ParseErrc code, const std::vector<Diagnostic>& issues) {
  std::string msg(to_string(code));
  if (!issues.empty()) {
    msg += ": line " + std::to_string(issues.front().line.value_or(0)) + ": " + issues.front().message;
    if (issues.size() > 1) msg += " (+" + std::to_string(issues.size() - 1) + " more)";
  }
  return msg;
}
}  // namespace

ParseError::ParseError(ParseErrc code, std::vector<Diagnostic> issues)
    : std::runtime_error(summarize(code, issues)), code_(code), issues_(std::move(issues)) {}

std::size_t ParseError::line() const noexcept {
  return issues_.empty() ? 0 : issues_.front().line.value_or(0);
}

ParsedDocument parse_document(std::string_view source, const ParseOptions& options) {
  if (source.size() > options.max_bytes) {
    throw ParseError(ParseErrc::TooLarge,
                     {make_error("TooLarge", "document exceeds " + std::to_string(options.max_bytes) + " bytes")});
  }
  if (source.starts_with("\xEF\xBB\xBF")) header_error(1, "byte order mark is not permitted");

  ParsedDocument result;
  auto lines = split_lines(source);
  if (lines.empty()) header_error(1, "missing header line");

  result.document.viewport_width = parse_header(lines.front(), options.mode, result.diagnostics);

  std::vector<Diagnostic> errors;
  bool malformed = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const SourceLine& line = lines[i];
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line.text);
    } catch (const nlohmann::json::exception& e) {
      errors.push_back(at_line(make_error("MalformedLine", std::string("invalid JSON: ") + e.what()), line.number));
      malformed = true;
      continue;
    }
    if (!obj.is_object()) {
      errors.push_back(at_line(make_error("MalformedLine", "expected a JSON object"), line.number));
      malformed = true;
      continue;
    }
    std::vector<Diagnostic> warnings;
    try {
      Element el = make_element(obj, options.mode, &warnings);
      for (auto& w : warnings) {
        w.element_index = result.document.elements.size();
        result.diagnostics.push_back(at_line(std::move(w), line.number));
      }
      result.document.elements.push_back(std::move(el));
      result.element_lines.push_back(line.number);
    } catch (const ModelError& e) {
      Diagnostic d = make_error(std::string(to_string(e.code())), e.what());
      d.property = e.property();
      errors.push_back(at_line(std::move(d), line.number));
    }
  }

  if (!errors.empty()) {
    if (options.mode == ValidationMode::Strict)
      throw ParseError(malformed ? ParseErrc::MalformedLine : ParseErrc::InvalidElements, std::move(errors));
    result.diagnostics.insert(result.diagnostics.end(), errors.begin(), errors.end());
  }

  auto validation = validate_document(result.document);
  for (auto& d : validation) {
    if (d.element_index && *d.element_index < result.element_lines.size())
      d.line = result.element_lines[*d.element_index];
    else
      d.line = lines.front().number;
  }
  if (options.mode == ValidationMode::Strict && has_errors(validation))
    throw ParseError(ParseErrc::InvalidDocument, std::move(validation));
  result.diagnostics.insert(result.diagnostics.end(), validation.begin(), validation.end());

  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  return result;
}

std::string serialize_element(const Element& el) {
  std::string out = "{\"type\":";
  json_text::append_string(out, type_name(el.kind()));
  if (el.kind() != ElementKind::Script) {
    const Geometry& g = el.geometry();
    out += ",\"x\":";
    json_text::append_number(out, g.x);
    out += ",\"y\":";
    json_text::append_number(out, g.y);
    out += ",\"z\":";
    out += std::to_string(g.z);
    out += ",\"w\":";
    json_text::append_number(out, g.w);
    out += ",\"h\":";
    json_text::append_number(out, g.h);
    out += ",\"display\":";
    out += el.displayed() ? "true" : "false";
  }
  std::vector<const std::pair<const std::string, PropertyValue>*> props;
  props.reserve(el.properties().size());
  for (const auto& entry : el.properties()) props.push_back(&entry);
  std::sort(props.begin(), props.end(), [](const auto* a, const auto* b) { return a->first < b->first; });
  for (const auto* entry : props) {
    out += ',';
    json_text::append_string(out, entry->first);
    out += ':';
    append_value(out, entry->second);
  }
  out += '}';
  return out;
}

std::string serialize_document(const Document& doc) {
  std::string out = "{\"viewport_width\":" + std::to_string(doc.viewport_width) + "}\n";
  for (const auto& el : doc.elements) {
    out += serialize_element(el);
    out += '\n';
  }
  return out;
}

std::string format_document(std::string_view source, const ParseOptions& options) {
  return serialize_document(parse_document(source, options).document);
}

}  // namespace maml
