#include "maml/translate/translator.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <unordered_set>

#include <json.hpp>

namespace maml::translate {
namespace {

constexpr std::string_view kNonRendered[] = {"head", "script", "style", "meta", "link", "title",
                                             "noscript", "template", "base", "br", "wbr"};
// Controls and media whose descendants are part of the element itself.
constexpr std::string_view kLeafTags[] = {"img", "video", "select", "button", "input", "textarea",
                                          "iframe", "svg", "canvas", "audio", "picture"};
constexpr std::string_view kTextInputTypes[] = {"", "text", "search", "email", "url", "tel", "password", "number"};

template <std::size_t N>
bool in(const std::string_view (&set)[N], std::string_view s) {
  return std::find(std::begin(set), std::end(set), s) != std::end(set);
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

// "16px" -> 16. Other units are rejected (computed styles resolve to px).
std::optional<double> parse_px(std::string_view s) {
  s = trim(s);
  if (s.ends_with("px")) s.remove_suffix(2);
  return parse_number(s);
}

std::string input_type(const SnapshotNode& node) {
  const std::string* t = node.attr("type");
  return t ? lower(trim(*t)) : std::string();
}

bool is_text_input(const SnapshotNode& node) { return in(kTextInputTypes, input_type(node)); }

bool is_button_input(const SnapshotNode& node) {
  std::string t = input_type(node);
  return t == "button" || t == "submit" || t == "reset";
}

std::string_view own_text(const SnapshotNode& node) { return trim(node.text); }

void collect_text(const SnapshotNode& node, std::string& out) {
  std::string_view t = own_text(node);
  if (!t.empty()) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  for (const auto& child : node.children) collect_text(child, out);
}

std::optional<std::int64_t> explicit_z(const SnapshotNode& node) {
  std::string_view z = trim(node.style_value("zIndex"));
  if (z.empty() || z == "auto") return std::nullopt;
  auto v = parse_number(z);
  if (!v || *v != std::floor(*v)) return std::nullopt;
  return static_cast<std::int64_t>(*v);
}

std::string media_source(const SnapshotNode& node) {
  for (const char* name : {"currentSrc", "src"}) {
    if (const auto* v = node.attr(name); v && !trim(*v).empty()) return std::string(trim(*v));
  }
  for (const auto& child : node.children) {
    if (child.tag == "source") {
      if (const auto* v = child.attr("src"); v && !trim(*v).empty()) return std::string(trim(*v));
    }
  }
  return {};
}

void collect_options(const SnapshotNode& node, std::vector<std::string>& out) {
  for (const auto& child : node.children) {
    std::string tag = lower(child.tag);
    if (tag == "option") {
      std::string text;
      collect_text(child, text);
      out.push_back(std::move(text));
    } else if (tag == "optgroup") {
      collect_options(child, out);
    }
  }
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::string to_hex(int r, int g, int b, int a) {
  char buf[16];
  if (a >= 255) {
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  } else {
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x%02x", r, g, b, a);
  }
  return buf;
}

struct Pending {
  const SnapshotNode* node;
  nlohmann::json props;
  std::optional<std::int64_t> z;
  std::string id_suffix;
};

class Translator {
 public:
  explicit Translator(TranslateResult& result) : result_(result) {}

  void visit(const SnapshotNode& node) {
    std::string tag = lower(node.tag);
    if (in(kNonRendered, tag)) return;
    if (trim(node.style_value("displayKind")) == "none") return;

    if (!node.warning.empty()) warn("OpaqueNode", node, node.warning);

    std::string_view visibility = trim(node.style_value("visibility"));
    bool hidden = visibility == "hidden" || visibility == "collapse";
    bool zero_area = !(node.rect.w > 0) || !(node.rect.h > 0);

    if (!hidden && !zero_area) {
      if (auto kind = classify_node(node)) emit(node, tag, *kind);
    }
    if (!in(kLeafTags, tag)) {
      for (const auto& child : node.children) visit(child);
    }
  }

  std::vector<Pending>& pending() { return pending_; }

 private:
  void warn(std::string code, const SnapshotNode& node, const std::string& message) {
    Diagnostic d = make_warning(std::move(code), "<" + node.tag + "> #" + std::to_string(node.paint_index) + ": " +
                                                     message);
    d.subject = std::to_string(node.paint_index);
    result_.warnings.push_back(std::move(d));
  }

  nlohmann::json base(const SnapshotNode& node, ElementKind kind) {
    return {{"type", type_name(kind)}, {"x", node.rect.x},   {"y", node.rect.y},
            {"w", node.rect.w},        {"h", node.rect.h},   {"z", 0},
            {"display", true}};
  }

  void emit(const SnapshotNode& node, const std::string& tag, ElementKind kind) {
    if (node.rect.x < 0 || node.rect.y < 0) {
      warn("OffCanvas", node, "lies partly above or left of the page origin; skipped");
      return;
    }
    auto z = explicit_z(node);
    nlohmann::json props = base(node, kind);

    switch (kind) {
      case ElementKind::Image: {
        std::string src = media_source(node);
        if (src.empty()) return warn("MissingSource", node, "image without a source; skipped");
        props["src"] = src;
        if (const auto* alt = node.attr("alt"); alt && !trim(*alt).empty()) props["alt"] = std::string(trim(*alt));
        std::string fit = lower(trim(node.style_value("objectFit")));
        if (fit == "contain" || fit == "cover") props["fit"] = fit;
        break;
      }
      case ElementKind::Video: {
        std::string src = media_source(node);
        if (src.empty()) return warn("MissingSource", node, "video without a source; skipped");
        props["src"] = src;
        break;
      }
      case ElementKind::Dropdown: {
        std::vector<std::string> options;
        collect_options(node, options);
        if (options.empty()) return warn("EmptyDropdown", node, "select without options; skipped");
        props["options"] = options;
        break;
      }
      case ElementKind::TextField:
        if (const auto* ph = node.attr("placeholder"); ph && !ph->empty()) props["placeholder"] = *ph;
        if (auto bg = css_color_to_hex(node.style_value("backgroundColor"))) props["backgroundColor"] = *bg;
        break;
      case ElementKind::Button: {
        std::string label(own_text(node));
        if (label.empty() && tag == "input") {
          if (const auto* v = node.attr("value")) label = std::string(trim(*v));
        }
        if (label.empty()) collect_text(node, label);
        props["text"] = label;
        break;
      }
      case ElementKind::Text: {
        if (has_visible_background(node)) {
          nlohmann::json bg = base(node, ElementKind::Shape);
          add_shape_style(node, bg);
          pending_.push_back({&node, std::move(bg), z, "-bg"});
        }
        props["text"] = std::string(own_text(node));
        add_text_style(node, props);
        if (tag == "a" && node.attr("href")) warn("LinkDropped", node, "link target dropped");
        break;
      }
      case ElementKind::Shape:
        add_shape_style(node, props);
        break;
      case ElementKind::Carousel:
      case ElementKind::Script:
        return;
    }
    pending_.push_back({&node, std::move(props), z, ""});
  }

  static void add_shape_style(const SnapshotNode& node, nlohmann::json& props) {
    if (auto bg = css_color_to_hex(node.style_value("backgroundColor"))) props["backgroundColor"] = *bg;
    std::string_view radius = trim(node.style_value("borderRadius"));
    radius = radius.substr(0, radius.find(' '));
    std::optional<double> r;
    if (radius.ends_with("%")) {
      if (auto pct = parse_number(radius.substr(0, radius.size() - 1)))
        r = *pct / 100.0 * std::min(node.rect.w, node.rect.h);
    } else {
      r = parse_px(radius);
    }
    if (r && *r > 0) props["borderRadius"] = *r;
  }

  static void add_text_style(const SnapshotNode& node, nlohmann::json& props) {
    if (auto family = trim(node.style_value("fontFamily")); !family.empty()) props["fontFamily"] = family;
    if (auto size = parse_px(node.style_value("fontSize")); size && *size > 0 && *size != 16)
      props["fontSize"] = *size;
    if (auto color = css_color_to_hex(node.style_value("color")); color && *color != "#000000")
      props["color"] = *color;
    std::string style = lower(trim(node.style_value("fontStyle")));
    if (style == "italic" || style == "oblique") props["fontStyle"] = style;
    std::string weight = lower(trim(node.style_value("fontWeight")));
    if (auto w = parse_number(weight); w && *w >= 1 && *w <= 1000) {
      if (*w != 400) props["fontWeight"] = *w;
    } else if (weight == "bold" || weight == "lighter" || weight == "bolder") {
      props["fontWeight"] = weight;
    }
    std::string align = lower(trim(node.style_value("textAlign")));
    if (align == "end") align = "right";
    if (align == "-webkit-center" || align == "-moz-center") align = "center";
    if (align == "right" || align == "center" || align == "justify") props["textAlign"] = align;
  }

  TranslateResult& result_;
  std::vector<Pending> pending_;
};

bool usable_id(std::string_view id) {
  return !id.empty() &&
         std::none_of(id.begin(), id.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

bool has_visible_background(const SnapshotNode& node) {
  return node.rect.w > 0 && node.rect.h > 0 && css_color_to_hex(node.style_value("backgroundColor")).has_value();
}

std::optional<ElementKind> classify_node(const SnapshotNode& node) {
  std::string tag = lower(node.tag);
  if (tag == "img") return ElementKind::Image;
  if (tag == "video") return ElementKind::Video;
  if (tag == "select") return ElementKind::Dropdown;
  if (tag == "button") return ElementKind::Button;
  if (tag == "input") {
    if (is_button_input(node)) return ElementKind::Button;
    if (is_text_input(node)) return ElementKind::TextField;
    return std::nullopt;
  }
  if (in(kNonRendered, tag)) return std::nullopt;
  if (!own_text(node).empty()) return ElementKind::Text;
  if (has_visible_background(node)) return ElementKind::Shape;
  return std::nullopt;
}

std::vector<std::int64_t> assign_z(std::span<const std::optional<std::int64_t>> explicit_z) {
  std::vector<std::int64_t> z;
  z.reserve(explicit_z.size());
  for (std::size_t i = 0; i < explicit_z.size(); ++i)
    z.push_back(explicit_z[i] ? *explicit_z[i] : static_cast<std::int64_t>(i));
  return z;
}

std::optional<std::string> css_color_to_hex(std::string_view css) {
  std::string s = lower(trim(css));
  if (s.empty() || s == "transparent") return std::nullopt;

  if (s[0] == '#') {
    std::string_view hex = std::string_view(s).substr(1);
    if (std::any_of(hex.begin(), hex.end(), [](char c) { return hex_digit(c) < 0; })) return std::nullopt;
    int r, g, b, a = 255;
    if (hex.size() == 3 || hex.size() == 4) {
      r = hex_digit(hex[0]) * 17;
      g = hex_digit(hex[1]) * 17;
      b = hex_digit(hex[2]) * 17;
      if (hex.size() == 4) a = hex_digit(hex[3]) * 17;
    } else if (hex.size() == 6 || hex.size() == 8) {
      r = hex_digit(hex[0]) * 16 + hex_digit(hex[1]);
      g = hex_digit(hex[2]) * 16 + hex_digit(hex[3]);
      b = hex_digit(hex[4]) * 16 + hex_digit(hex[5]);
      if (hex.size() == 8) a = hex_digit(hex[6]) * 16 + hex_digit(hex[7]);
    } else {
      return std::nullopt;
    }
    if (a == 0) return std::nullopt;
    return to_hex(r, g, b, a);
  }

  if (!(s.starts_with("rgb(") || s.starts_with("rgba(")) || s.back() != ')') return std::nullopt;
  std::string inner = s.substr(s.find('(') + 1);
  inner.pop_back();
  for (auto& c : inner) {
    if (c == ',' || c == '/') c = ' ';
  }
  std::vector<double> parts;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    while (pos < inner.size() && inner[pos] == ' ') ++pos;
    if (pos >= inner.size()) break;
    std::size_t end = inner.find(' ', pos);
    if (end == std::string::npos) end = inner.size();
    std::string_view token = std::string_view(inner).substr(pos, end - pos);
    bool pct = token.ends_with("%");
    if (pct) token.remove_suffix(1);
    auto v = parse_number(token);
    if (!v) return std::nullopt;
    // Percent alpha maps to 0..1; percent channels map to 0..255.
    double value = pct ? (parts.size() == 3 ? *v / 100.0 : *v * 2.55) : *v;
    parts.push_back(value);
    pos = end;
  }
  if (parts.size() != 3 && parts.size() != 4) return std::nullopt;
  auto channel = [](double v) { return static_cast<int>(std::lround(std::clamp(v, 0.0, 255.0))); };
  double alpha = parts.size() == 4 ? std::clamp(parts[3], 0.0, 1.0) : 1.0;
  int a = static_cast<int>(std::lround(alpha * 255));
  if (a == 0) return std::nullopt;
  return to_hex(channel(parts[0]), channel(parts[1]), channel(parts[2]), a);
}

TranslateResult translate_snapshot(const LayoutSnapshot& snap) {
  TranslateResult result;
  result.document.viewport_width = snap.viewport_width;

  Translator translator(result);
  translator.visit(snap.root);
  auto& pending = translator.pending();

  std::vector<std::optional<std::int64_t>> explicit_z;
  explicit_z.reserve(pending.size());
  for (const auto& p : pending) explicit_z.push_back(p.z);
  auto z = assign_z(explicit_z);

  std::unordered_set<std::string> used;
  for (const auto& p : pending) {
    if (const auto* id = p.node->attr("id"); id && usable_id(*id)) used.insert(*id + p.id_suffix);
  }
  std::unordered_set<std::string> taken;
  auto claim = [&](const std::string& base) {
    std::string id = base;
    for (int n = 2; taken.contains(id); ++n) id = base + "-" + std::to_string(n);
    taken.insert(id);
    return id;
  };

  for (std::size_t i = 0; i < pending.size(); ++i) {
    Pending& p = pending[i];
    const std::string* source_id = p.node->attr("id");
    std::string base = source_id && usable_id(*source_id)
                           ? *source_id + p.id_suffix
                           : "el" + std::to_string(p.node->paint_index) + p.id_suffix;
    // Synthesized ids yield to ids the page itself uses.
    if (!(source_id && usable_id(*source_id)) && used.contains(base)) base += "-s";
    p.props["id"] = claim(base);
    p.props["z"] = z[i];
    result.document.elements.push_back(make_element(p.props));
  }

  if (result.document.elements.empty())
    result.warnings.push_back(make_warning("EmptySnapshot", "snapshot contains no renderable nodes"));
  return result;
}

}  // namespace maml::translate
