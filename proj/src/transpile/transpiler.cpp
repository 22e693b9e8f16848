#include "maml/transpile/transpiler.hpp"

#include <stdexcept>
#include <unordered_set>

#include "maml/format/json_text.hpp"
#include "maml/script/checker.hpp"
#include "maml/script/parser.hpp"
#include "maml/transpile/runtime.hpp"
#include "maml/transpile/scale.hpp"

namespace maml::transpile {
namespace {

using json_text::number;

void append_px(std::string& style, std::string_view property, double value) {
  style += ';';
  style += property;
  style += ':';
  style += number(value);
  style += "px";
}

void append_decl(std::string& style, std::string_view property, std::string_view value) {
  style += ';';
  style += property;
  style += ':';
  style += value;
}

std::string font_weight(const Element& el) {
  auto v = get_prop(el, "fontWeight");
  if (!v) return {};
  if (const auto* s = std::get_if<std::string>(&*v)) return *s;
  return number(std::get<double>(*v));
}

void append_attr(std::string& out, std::string_view name, std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += escape_html(value);
  out += '"';
}

void append_id(std::string& out, const Element& el) {
  if (auto id = el.id()) append_attr(out, "id", *id);
}

void append_style(std::string& out, const Element& el) {
  out += " style=\"";
  out += escape_html(element_style(el));
  out += '"';
}

}  // namespace

std::string escape_html(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string element_style(const Element& el) {
  const Geometry& g = el.geometry();
  std::string style = "position:absolute";
  append_px(style, "left", g.x);
  append_px(style, "top", g.y);
  append_decl(style, "z-index", std::to_string(g.z));
  append_px(style, "width", g.w);
  append_px(style, "height", g.h);

  switch (el.kind()) {
    case ElementKind::Text: {
      const std::string* family = el.string_prop("fontFamily");
      append_decl(style, "font-family", family ? std::string_view(*family) : defaults::kFontFamily);
      if (auto size = el.number_prop("fontSize")) append_px(style, "font-size", *size);
      if (const auto* color = el.string_prop("color")) append_decl(style, "color", *color);
      if (const auto* align = el.string_prop("textAlign")) append_decl(style, "text-align", *align);
      if (const auto* fs = el.string_prop("fontStyle")) append_decl(style, "font-style", *fs);
      if (auto fw = font_weight(el); !fw.empty()) append_decl(style, "font-weight", fw);
      if (const auto* text = el.string_prop("text"); text && text->find('\n') != std::string::npos)
        append_decl(style, "white-space", "pre-wrap");
      break;
    }
    case ElementKind::Shape:
      if (const auto* bg = el.string_prop("backgroundColor")) append_decl(style, "background-color", *bg);
      if (auto r = el.number_prop("borderRadius")) append_px(style, "border-radius", *r);
      break;
    case ElementKind::TextField:
      append_decl(style, "box-sizing", "border-box");
      if (const auto* bg = el.string_prop("backgroundColor")) append_decl(style, "background-color", *bg);
      break;
    case ElementKind::Button:
    case ElementKind::Dropdown:
      append_decl(style, "box-sizing", "border-box");
      break;
    case ElementKind::Image:
      if (const auto* fit = el.string_prop("fit")) append_decl(style, "object-fit", *fit);
      break;
    case ElementKind::Carousel:
      append_decl(style, "overflow", "hidden");
      break;
    case ElementKind::Video:
    case ElementKind::Script:
      break;
  }
  if (!el.displayed()) append_decl(style, "display", "none");
  return style;
}

std::string render_element(const Element& el) {
  std::string out;
  switch (el.kind()) {
    case ElementKind::Script:
      return out;
    case ElementKind::Text:
    case ElementKind::Shape:
      out = "<div";
      append_id(out, el);
      append_style(out, el);
      out += '>';
      if (const auto* text = el.string_prop("text")) out += escape_html(*text);
      out += "</div>";
      return out;
    case ElementKind::TextField:
      out = "<input";
      append_id(out, el);
      out += " type=\"text\"";
      if (const auto* ph = el.string_prop("placeholder")) append_attr(out, "placeholder", *ph);
      append_style(out, el);
      out += '>';
      return out;
    case ElementKind::Button:
      out = "<button";
      append_id(out, el);
      append_style(out, el);
      out += '>';
      out += escape_html(*el.string_prop("text"));
      out += "</button>";
      return out;
    case ElementKind::Dropdown:
      out = "<select";
      append_id(out, el);
      append_style(out, el);
      out += '>';
      for (const auto& option : *el.list_prop("options")) {
        out += "<option>";
        out += escape_html(option);
        out += "</option>";
      }
      out += "</select>";
      return out;
    case ElementKind::Image:
      out = "<img";
      append_id(out, el);
      append_attr(out, "src", *el.string_prop("src"));
      if (const auto* alt = el.string_prop("alt")) append_attr(out, "alt", *alt);
      append_style(out, el);
      out += '>';
      return out;
    case ElementKind::Carousel: {
      out = "<div";
      append_id(out, el);
      out += " data-carousel";
      append_style(out, el);
      out += '>';
      const auto& srcs = *el.list_prop("srcs");
      for (std::size_t i = 0; i < srcs.size(); ++i) {
        out += "<img";
        append_attr(out, "src", srcs[i]);
        out += " alt=\"\" style=\"position:absolute;left:0;top:0;width:100%;height:100%;object-fit:cover";
        if (i > 0) out += ";display:none";
        out += "\">";
      }
      out += "<button style=\"position:absolute;left:0;top:45%\">&#8249;</button>";
      out += "<button style=\"position:absolute;right:0;top:45%\">&#8250;</button>";
      out += "</div>";
      return out;
    }
    case ElementKind::Video:
      out = "<video";
      append_id(out, el);
      append_attr(out, "src", *el.string_prop("src"));
      out += " controls";
      append_style(out, el);
      out += "></video>";
      return out;
  }
  return out;
}

HtmlPage transpile_document(const Document& doc, const script::EventWiring& wiring) {
  HtmlPage page;
  std::string& out = page.text;
  out =
      "<!DOCTYPE html>\n"
      "<html><head><meta charset=\"utf-8\">"
      "<meta name=\"viewport\" content=\"width=device-width,initial-scale=1\"></head>\n"
      "<body style=\"margin:0\">\n";

  std::unordered_set<std::string> seen;
  auto add_asset = [&](const std::string& url) {
    if (seen.insert(url).second) page.asset_manifest.push_back(url);
  };

  for (const auto& el : doc.elements) {
    if (el.kind() == ElementKind::Script) continue;
    out += render_element(el);
    out += '\n';
    if (el.kind() == ElementKind::Image || el.kind() == ElementKind::Video) add_asset(*el.string_prop("src"));
    if (el.kind() == ElementKind::Carousel)
      for (const auto& src : *el.list_prop("srcs")) add_asset(src);
  }

  out += "<script>";
  out += render_runtime(ScaleModel::from_document(doc), wiring);
  out += "</script>\n</body></html>\n";
  return page;
}

HtmlPage transpile_document(const Document& doc) {
  script::EventWiring wiring;
  if (auto code = doc.script_code()) {
    auto ast = script::parse_script(*code);
    auto problems = script::check_script(ast, doc);
    if (has_errors(problems)) throw std::invalid_argument("script does not check: " + problems.front().message);
    wiring = script::lower_script(ast);
  }
  return transpile_document(doc, wiring);
}

std::string manifest_json(const HtmlPage& page) {
  std::string out = "[";
  for (std::size_t i = 0; i < page.asset_manifest.size(); ++i) {
    if (i) out += ',';
    json_text::append_string(out, page.asset_manifest[i]);
  }
  out += "]\n";
  return out;
}

}  // namespace maml::transpile
