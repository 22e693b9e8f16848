#include "maml/analyze/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "maml/analyze/html_tree.hpp"

namespace maml::analyze {
namespace {

bool is_external(const std::string& url) {
  if (url.empty()) return false;
  std::string head = url.substr(0, 5);
  std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::tolower(c); });
  return head != "data:" && url[0] != '#' && head.rfind("javas", 0) != 0;
}

bool rel_has(const HtmlNode& node, std::string_view token) {
  const std::string* rel = node.attr("rel");
  if (!rel) return false;
  std::istringstream in(*rel);
  std::string word;
  while (in >> word) {
    std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) { return std::tolower(c); });
    if (word == token) return true;
  }
  return false;
}

}  // namespace

nlohmann::json PageReport::to_json() const {
  return {
      {"element_count", element_count},
      {"max_dom_depth", max_dom_depth},
      {"bytes", {{"html", bytes_html}, {"css", bytes_css}, {"script", bytes_script}}},
      {"external_requests", external_request_count},
  };
}

PageReport report_page(std::string_view html) {
  HtmlTree tree = parse_html(html);
  PageReport r;
  std::set<std::string> scripts, sheets, media;

  tree.visit([&](const HtmlNode& node, std::size_t depth) {
    ++r.element_count;
    r.max_dom_depth = std::max<std::int64_t>(r.max_dom_depth, static_cast<std::int64_t>(depth));

    for (const auto& [name, value] : node.attrs) {
      if (name == "style") r.bytes_css += static_cast<std::int64_t>(value.size());
      if (name.size() > 2 && name.starts_with("on")) r.bytes_script += static_cast<std::int64_t>(value.size());
    }
    if (node.tag == "style") r.bytes_css += static_cast<std::int64_t>(node.text.size());

    if (node.tag == "script") {
      if (const auto* src = node.attr("src"); src && is_external(*src)) {
        scripts.insert(*src);
      } else {
        r.bytes_script += static_cast<std::int64_t>(node.text.size());
      }
    } else if (node.tag == "link") {
      const std::string* href = node.attr("href");
      if (href && is_external(*href)) {
        if (rel_has(node, "stylesheet")) sheets.insert(*href);
        else if (rel_has(node, "modulepreload")) scripts.insert(*href);
        else if (rel_has(node, "preload") || rel_has(node, "icon")) media.insert(*href);
      }
    } else if (node.tag == "img" || node.tag == "video" || node.tag == "audio" || node.tag == "source" ||
               node.tag == "iframe" || node.tag == "embed" || node.tag == "track") {
      if (const auto* src = node.attr("src"); src && is_external(*src)) media.insert(*src);
      if (node.tag == "video") {
        if (const auto* poster = node.attr("poster"); poster && is_external(*poster)) media.insert(*poster);
      }
    } else if (node.tag == "object") {
      if (const auto* data = node.attr("data"); data && is_external(*data)) media.insert(*data);
    }
  });

  r.external_script_count = static_cast<std::int64_t>(scripts.size());
  r.external_stylesheet_count = static_cast<std::int64_t>(sheets.size());
  r.external_media_count = static_cast<std::int64_t>(media.size());
  std::set<std::string> all = scripts;
  all.insert(sheets.begin(), sheets.end());
  all.insert(media.begin(), media.end());
  r.external_request_count = static_cast<std::int64_t>(all.size());

  r.bytes_html = std::max<std::int64_t>(0, static_cast<std::int64_t>(html.size()) - r.bytes_css - r.bytes_script);
  return r;
}

DeltaReport compare(const PageReport& original, const PageReport& maml) {
  DeltaReport d;
  d.original = original;
  d.maml = maml;
  const std::pair<std::string, std::pair<std::int64_t, std::int64_t>> metrics[] = {
      {"element_count", {original.element_count, maml.element_count}},
      {"max_dom_depth", {original.max_dom_depth, maml.max_dom_depth}},
      {"bytes_html", {original.bytes_html, maml.bytes_html}},
      {"bytes_css", {original.bytes_css, maml.bytes_css}},
      {"bytes_script", {original.bytes_script, maml.bytes_script}},
      {"bytes_total", {original.bytes_total(), maml.bytes_total()}},
      {"external_requests", {original.external_request_count, maml.external_request_count}},
  };
  for (const auto& [name, values] : metrics) {
    std::int64_t delta = values.first - values.second;
    d.delta.emplace_back(name, delta);
    d.pct.emplace_back(name, values.first == 0 ? 0.0 : 100.0 * static_cast<double>(delta) / values.first);
  }
  return d;
}

double DeltaReport::pct_of(std::string_view metric) const {
  for (const auto& [name, value] : pct) {
    if (name == metric) return value;
  }
  return 0.0;
}

nlohmann::json DeltaReport::to_json() const {
  nlohmann::json delta_json = nlohmann::json::object();
  nlohmann::json pct_json = nlohmann::json::object();
  for (const auto& [name, value] : delta) delta_json[name] = value;
  for (const auto& [name, value] : pct) pct_json[name] = std::round(value * 100.0) / 100.0;
  return {{"original", original.to_json()}, {"maml", maml.to_json()}, {"delta", delta_json}, {"pct", pct_json}};
}

std::string DeltaReport::to_table() const {
  auto value_of = [](const PageReport& r, std::string_view name) -> std::int64_t {
    if (name == "element_count") return r.element_count;
    if (name == "max_dom_depth") return r.max_dom_depth;
    if (name == "bytes_html") return r.bytes_html;
    if (name == "bytes_css") return r.bytes_css;
    if (name == "bytes_script") return r.bytes_script;
    if (name == "bytes_total") return r.bytes_total();
    return r.external_request_count;
  };
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-18s %12s %12s %12s %9s\n", "metric", "original", "maml", "delta", "pct");
  out += line;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const std::string& name = delta[i].first;
    std::snprintf(line, sizeof line, "%-18s %12lld %12lld %12lld %8.2f%%\n", name.c_str(),
                  static_cast<long long>(value_of(original, name)), static_cast<long long>(value_of(maml, name)),
                  static_cast<long long>(delta[i].second), pct[i].second);
    out += line;
  }
  return out;
}

}  // namespace maml::analyze
