#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maml::analyze {

// A forgiving HTML element tree: void elements, raw-text elements (script,
// style), RCDATA (textarea, title) and the common implied end tags (p, li,
// option, dt/dd, tr, td/th) are handled; unmatched end tags are ignored and
// open elements are closed at end of input. No html/head/body synthesis: the
// tree holds exactly the elements written in the source.
struct HtmlNode {
  std::string tag;  // lower case
  std::vector<std::pair<std::string, std::string>> attrs;  // names lower case, values entity-decoded
  std::string text;  // own character data (raw text for script/style)
  std::vector<HtmlNode> children;

  const std::string* attr(std::string_view name) const;
  bool has_attr(std::string_view name) const { return attr(name) != nullptr; }
};

struct HtmlTree {
  std::vector<HtmlNode> roots;

  // Depth-first pre-order visit; depth 1 for roots.
  void visit(const std::function<void(const HtmlNode&, std::size_t depth)>& fn) const;
  std::size_t element_count() const;
  std::size_t max_depth() const;
};

class MalformedHtml : public std::runtime_error {
 public:
  MalformedHtml(std::size_t offset, const std::string& what);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Throws MalformedHtml on unterminated comments, tags, quoted attribute
// values or raw-text elements, and on input holding no element at all.
HtmlTree parse_html(std::string_view source);

std::string decode_entities(std::string_view text);

}  // namespace maml::analyze
