#include "maml/analyze/html_tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace maml::analyze {
namespace {

constexpr std::string_view kVoid[] = {"area", "base", "br", "col", "embed", "hr", "img", "input",
                                      "link", "meta", "param", "source", "track", "wbr"};
constexpr std::string_view kClosesP[] = {
    "address", "article", "aside", "blockquote", "details", "div", "dl", "fieldset", "figcaption", "figure",
    "footer",  "form",    "h1",    "h2",         "h3",      "h4",  "h5", "h6",       "header",     "hr",
    "main",    "nav",     "ol",    "p",          "pre",     "section", "table", "ul"};

template <std::size_t N>
bool in(const std::string_view (&set)[N], std::string_view s) {
  return std::find(std::begin(set), std::end(set), s) != std::end(set);
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool ieq_prefix(std::string_view haystack, std::size_t at, std::string_view needle) {
  if (at + needle.size() > haystack.size()) return false;
  for (std::size_t i = 0; i < needle.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(haystack[at + i])) != needle[i]) return false;
  }
  return true;
}

// Whether an open `top` element is implicitly closed by a new `incoming` start tag.
bool implicitly_closed(std::string_view top, std::string_view incoming) {
  if (top == "p") return in(kClosesP, incoming);
  if (top == "li") return incoming == "li";
  if (top == "option") return incoming == "option" || incoming == "optgroup";
  if (top == "dt" || top == "dd") return incoming == "dt" || incoming == "dd";
  if (top == "td" || top == "th") return incoming == "td" || incoming == "th" || incoming == "tr";
  if (top == "tr") return incoming == "tr";
  return false;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF) || cp == 0) cp = 0xFFFD;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class TreeBuilder {
 public:
  explicit TreeBuilder(std::string_view src) : src_(src) {}

  HtmlTree run() {
    while (pos_ < src_.size()) {
      if (src_[pos_] == '<' && pos_ + 1 < src_.size()) {
        char next = src_[pos_ + 1];
        if (src_.compare(pos_, 4, "<!--") == 0) {
          comment();
          continue;
        }
        if (next == '!' || next == '?') {
          declaration();
          continue;
        }
        if (next == '/' && pos_ + 2 < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_ + 2]))) {
          end_tag();
          continue;
        }
        if (std::isalpha(static_cast<unsigned char>(next))) {
          start_tag();
          continue;
        }
      }
      text();
    }
    while (!open_.empty()) pop();
    if (tree_.roots.empty()) throw MalformedHtml(src_.size(), "no elements");
    return std::move(tree_);
  }

 private:
  void comment() {
    std::size_t end = src_.find("-->", pos_ + 4);
    if (end == std::string_view::npos) throw MalformedHtml(pos_, "unterminated comment");
    pos_ = end + 3;
  }

  void declaration() {
    std::size_t end = src_.find('>', pos_);
    if (end == std::string_view::npos) throw MalformedHtml(pos_, "unterminated declaration");
    pos_ = end + 1;
  }

  void text() {
    std::size_t end = src_.find('<', pos_ + 1);
    if (end == std::string_view::npos) end = src_.size();
    if (!open_.empty()) open_.back().text += decode_entities(src_.substr(pos_, end - pos_));
    pos_ = end;
  }

  std::string name_at() {
    std::size_t start = pos_;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '>' || c == '/') break;
      ++pos_;
    }
    return lower(src_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  void end_tag() {
    std::size_t at = pos_;
    pos_ += 2;
    std::string name = name_at();
    std::size_t end = src_.find('>', pos_);
    if (end == std::string_view::npos) throw MalformedHtml(at, "unterminated end tag");
    pos_ = end + 1;
    for (std::size_t i = open_.size(); i-- > 0;) {
      if (open_[i].tag == name) {
        while (open_.size() > i) pop();
        return;
      }
    }
  }

  void start_tag() {
    std::size_t at = pos_;
    ++pos_;
    HtmlNode node;
    node.tag = name_at();
    bool self_closing = false;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) throw MalformedHtml(at, "unterminated tag <" + node.tag + ">");
      char c = src_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '/') {
        ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '>') {
          self_closing = true;
          ++pos_;
          break;
        }
        continue;
      }
      std::size_t name_start = pos_;
      while (pos_ < src_.size()) {
        char a = src_[pos_];
        if (std::isspace(static_cast<unsigned char>(a)) || a == '>' || a == '/' || a == '=') break;
        ++pos_;
      }
      std::string attr_name = lower(src_.substr(name_start, pos_ - name_start));
      if (attr_name.empty()) {
        ++pos_;  // stray character such as a lone quote
        continue;
      }
      skip_space();
      std::string value;
      if (pos_ < src_.size() && src_[pos_] == '=') {
        ++pos_;
        skip_space();
        if (pos_ >= src_.size()) throw MalformedHtml(at, "unterminated tag <" + node.tag + ">");
        char q = src_[pos_];
        if (q == '"' || q == '\'') {
          std::size_t close = src_.find(q, pos_ + 1);
          if (close == std::string_view::npos) throw MalformedHtml(pos_, "unterminated attribute value");
          value = decode_entities(src_.substr(pos_ + 1, close - pos_ - 1));
          pos_ = close + 1;
        } else {
          std::size_t start = pos_;
          while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) && src_[pos_] != '>')
            ++pos_;
          value = decode_entities(src_.substr(start, pos_ - start));
        }
      }
      node.attrs.emplace_back(std::move(attr_name), std::move(value));
    }

    while (!open_.empty() && implicitly_closed(open_.back().tag, node.tag)) pop();

    if (in(kVoid, node.tag) || self_closing) {
      attach(std::move(node));
      return;
    }
    if (node.tag == "script" || node.tag == "style" || node.tag == "textarea" || node.tag == "title") {
      std::string closing = "</" + node.tag;
      std::size_t end = pos_;
      for (;;) {
        end = src_.find("</", end);
        if (end == std::string_view::npos) throw MalformedHtml(at, "unterminated <" + node.tag + ">");
        if (ieq_prefix(src_, end, closing)) break;
        end += 2;
      }
      std::string_view body = src_.substr(pos_, end - pos_);
      node.text = (node.tag == "script" || node.tag == "style") ? std::string(body) : decode_entities(body);
      std::size_t gt = src_.find('>', end);
      if (gt == std::string_view::npos) throw MalformedHtml(end, "unterminated end tag");
      pos_ = gt + 1;
      attach(std::move(node));
      return;
    }
    open_.push_back(std::move(node));
  }

  void attach(HtmlNode node) {
    if (open_.empty()) {
      tree_.roots.push_back(std::move(node));
    } else {
      open_.back().children.push_back(std::move(node));
    }
  }

  void pop() {
    HtmlNode node = std::move(open_.back());
    open_.pop_back();
    attach(std::move(node));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::vector<HtmlNode> open_;
  HtmlTree tree_;
};

void visit_node(const HtmlNode& node, std::size_t depth,
                const std::function<void(const HtmlNode&, std::size_t)>& fn) {
  fn(node, depth);
  for (const auto& child : node.children) visit_node(child, depth + 1, fn);
}

}  // namespace

const std::string* HtmlNode::attr(std::string_view name) const {
  for (const auto& [k, v] : attrs) {
    if (k == name) return &v;
  }
  return nullptr;
}

void HtmlTree::visit(const std::function<void(const HtmlNode&, std::size_t)>& fn) const {
  for (const auto& root : roots) visit_node(root, 1, fn);
}

std::size_t HtmlTree::element_count() const {
  std::size_t n = 0;
  visit([&n](const HtmlNode&, std::size_t) { ++n; });
  return n;
}

std::size_t HtmlTree::max_depth() const {
  std::size_t d = 0;
  visit([&d](const HtmlNode&, std::size_t depth) { d = std::max(d, depth); });
  return d;
}

MalformedHtml::MalformedHtml(std::size_t offset, const std::string& what)
    : std::runtime_error("malformed HTML at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

HtmlTree parse_html(std::string_view source) { return TreeBuilder(source).run(); }

std::string decode_entities(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '&') {
      out += text[i];
      continue;
    }
    std::size_t semi = text.find(';', i);
    if (semi == std::string_view::npos || semi - i > 10) {
      out += '&';
      continue;
    }
    std::string_view name = text.substr(i + 1, semi - i - 1);
    if (name == "amp") out += '&';
    else if (name == "lt") out += '<';
    else if (name == "gt") out += '>';
    else if (name == "quot") out += '"';
    else if (name == "apos") out += '\'';
    else if (name == "nbsp") out += "\xC2\xA0";
    else if (!name.empty() && name[0] == '#') {
      unsigned long cp = 0;
      bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
      std::string_view digits = name.substr(hex ? 2 : 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, hex ? 16 : 10);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        out += '&';
        continue;
      }
      append_utf8(out, cp);
    } else {
      out += '&';
      continue;
    }
    i = semi;
  }
  return out;
}

}  // namespace maml::analyze
