#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace maml::analyze {

// Structural and byte-size profile of one HTML page. Byte counts are of the
// UTF-8 source, uncompressed. External assets are counted by reference and
// never fetched, so bytes_media_referenced is zero for offline reports.
struct PageReport {
  std::int64_t element_count = 0;
  std::int64_t max_dom_depth = 0;  // root element has depth 1
  std::int64_t bytes_html = 0;     // source bytes not attributed to CSS or script
  std::int64_t bytes_css = 0;      // style attributes + <style> contents
  std::int64_t bytes_script = 0;   // inline <script> contents + on* handler attributes
  std::int64_t bytes_media_referenced = 0;
  std::int64_t external_request_count = 0;  // distinct external URLs
  std::int64_t external_script_count = 0;
  std::int64_t external_stylesheet_count = 0;
  std::int64_t external_media_count = 0;

  std::int64_t bytes_total() const { return bytes_html + bytes_css + bytes_script + bytes_media_referenced; }

  // {"element_count","max_dom_depth","bytes":{"html","css","script"},"external_requests"}
  nlohmann::json to_json() const;

  bool operator==(const PageReport&) const = default;
};

// Throws MalformedHtml.
PageReport report_page(std::string_view html);

struct DeltaReport {
  PageReport original;
  PageReport maml;
  // (metric, original - maml) and (metric, reduction percent of original),
  // in a fixed metric order.
  std::vector<std::pair<std::string, std::int64_t>> delta;
  std::vector<std::pair<std::string, double>> pct;

  double pct_of(std::string_view metric) const;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

DeltaReport compare(const PageReport& original, const PageReport& maml);

}  // namespace maml::analyze
