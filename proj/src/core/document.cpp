#include "maml/core/document.hpp"

#include <unordered_map>

#include "maml/script/checker.hpp"
#include "maml/script/parser.hpp"

namespace maml {

const Element* Document::script() const {
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) {
    if (it->kind() == ElementKind::Script) return &*it;
  }
  return nullptr;
}

std::optional<std::string_view> Document::script_code() const {
  const Element* s = script();
  if (!s) return std::nullopt;
  const std::string* code = s->string_prop("code");
  return code ? std::optional<std::string_view>(*code) : std::nullopt;
}

const Element* Document::find(std::string_view id) const {
  for (const auto& el : elements) {
    if (el.kind() != ElementKind::Script && el.id() == id) return &el;
  }
  return nullptr;
}

std::vector<Diagnostic> validate_document(const Document& doc) {
  std::vector<Diagnostic> out;

  if (doc.viewport_width <= 0) {
    Diagnostic d = make_error("BadViewport", "viewport_width must be a positive integer");
    d.property = "viewport_width";
    out.push_back(std::move(d));
  }

  std::unordered_map<std::string_view, std::size_t> first_seen;
  std::size_t script_count = 0;
  std::optional<std::size_t> script_index;

  for (std::size_t i = 0; i < doc.elements.size(); ++i) {
    const Element& el = doc.elements[i];
    if (el.kind() == ElementKind::Script) {
      ++script_count;
      if (script_count > 1) {
        Diagnostic d = make_error("MultipleScripts", "a document may hold at most one script element");
        d.element_index = i;
        out.push_back(std::move(d));
      } else {
        script_index = i;
      }
      if (i + 1 != doc.elements.size()) {
        Diagnostic d = make_error("ScriptNotLast", "the script element must be the final element");
        d.element_index = i;
        out.push_back(std::move(d));
      }
      continue;
    }
    if (auto id = el.id()) {
      auto [it, inserted] = first_seen.emplace(*id, i);
      if (!inserted) {
        Diagnostic d = make_error("DuplicateId", "duplicate id \"" + std::string(*id) + "\" (first used by element " +
                                                     std::to_string(it->second + 1) + ")");
        d.element_index = i;
        d.property = "id";
        d.subject = std::string(*id);
        out.push_back(std::move(d));
      }
    }
  }

  if (script_index) {
    const std::string* code = doc.elements[*script_index].string_prop("code");
    try {
      auto ast = script::parse_script(code ? *code : std::string());
      for (auto& d : script::check_script(ast, doc)) {
        d.element_index = *script_index;
        out.push_back(std::move(d));
      }
    } catch (const script::ScriptError& e) {
      Diagnostic d = make_error(std::string(script::to_string(e.code())), e.what());
      d.element_index = *script_index;
      d.property = "code";
      d.subject = e.detail();
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace maml
